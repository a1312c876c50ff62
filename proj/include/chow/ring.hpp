#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace chow {

// Variable layout: geometric variables first, auxiliary (Rabinowitsch t,
// exclusion T_sigma, ...) appended after. `geometric` counts the prefix.
struct Ring {
    std::vector<std::string> vars;
    std::size_t geometric = 0;

    std::size_t size() const { return vars.size(); }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        throw std::invalid_argument("no variable named " + name);
    }

    bool has(const std::string& name) const {
        for (const auto& v : vars)
            if (v == name) return true;
        return false;
    }

    bool operator==(const Ring& o) const { return vars == o.vars && geometric == o.geometric; }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    auto r = std::make_shared<Ring>();
    r->geometric = vars.size();
    r->vars = std::move(vars);
    for (std::size_t i = 0; i < r->vars.size(); ++i)
        for (std::size_t j = i + 1; j < r->vars.size(); ++j)
            if (r->vars[i] == r->vars[j])
                throw std::invalid_argument("duplicate variable " + r->vars[i]);
    return r;
}

inline std::string fresh_var_name(const Ring& ring, const std::string& base) {
    if (!ring.has(base)) return base;
    for (int k = 0;; ++k) {
        std::string c = base + std::to_string(k);
        if (!ring.has(c)) return c;
    }
}

// New ring with auxiliary variables appended; geometric prefix unchanged.
inline RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& aux) {
    auto r = std::make_shared<Ring>(*ring);
    for (const auto& name : aux) {
        if (r->has(name)) throw std::invalid_argument("variable collision: " + name);
        r->vars.push_back(name);
    }
    return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

}  // namespace chow
