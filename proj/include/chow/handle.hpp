#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace chow {

// Generators plus shared lazily-filled caches (one Groebner basis per order).
// Copies share state; the handle is cheap to pass around.
class IdealHandle {
  public:
    IdealHandle() = default;

    IdealHandle(RingPtr ring, std::vector<Polynomial> gens) : st_(std::make_shared<State>()) {
        st_->ring = std::move(ring);
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (!same_ring(g.ring(), st_->ring)) throw std::invalid_argument("generator ring mismatch");
            st_->gens.push_back(std::move(g));
        }
    }

    static IdealHandle zero(RingPtr ring) { return IdealHandle(std::move(ring), {}); }

    const RingPtr& ring() const { return st_->ring; }
    const std::vector<Polynomial>& gens() const { return st_->gens; }
    bool is_zero_ideal() const { return st_->gens.empty(); }

    const std::vector<Polynomial>& groebner(const MonomialOrder& ord = grevlex_order()) const {
        auto key = ord.key();
        auto it = st_->gb.find(key);
        if (it == st_->gb.end()) it = st_->gb.emplace(key, groebner_basis(st_->gens, ord)).first;
        return it->second;
    }

    Polynomial normal_form(const Polynomial& f, const MonomialOrder& ord = grevlex_order()) const {
        return chow::normal_form(f, groebner(ord), ord);
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    bool is_unit() const {
        const auto& g = groebner();
        return g.size() == 1 && g.front().is_constant() && !g.front().is_zero();
    }

    // Leading monomials of the reduced grevlex basis, minimal generating set.
    std::vector<Monomial> leading_monomials() const {
        MonomialOrder ord = grevlex_order();
        std::vector<Monomial> lm;
        for (const auto& g : groebner(ord)) {
            const Monomial* best = nullptr;
            for (const auto& [m, c] : g.terms())
                if (!best || ord.less(*best, m)) best = &m;
            if (best) lm.push_back(*best);
        }
        return lm;
    }

    bool dimension_cached(long& out) const {
        if (!st_->dim) return false;
        out = *st_->dim;
        return true;
    }
    void cache_dimension(long d) const { st_->dim = d; }

  private:
    struct State {
        RingPtr ring;
        std::vector<Polynomial> gens;
        mutable std::map<std::string, std::vector<Polynomial>> gb;
        mutable std::optional<long> dim;
    };
    std::shared_ptr<State> st_;
};

inline IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
    std::vector<Polynomial> gens = a.gens();
    for (const auto& g : b.gens()) gens.push_back(g);
    return IdealHandle(a.ring(), std::move(gens));
}

inline IdealHandle ideal_plus(const IdealHandle& a, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> gens = a.gens();
    for (const auto& g : extra) gens.push_back(g);
    return IdealHandle(a.ring(), std::move(gens));
}

// Same generators re-expressed in an extended ring (prefix-compatible).
inline IdealHandle pad_ideal(const IdealHandle& I, const RingPtr& bigger) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.pad_to(bigger));
    return IdealHandle(bigger, std::move(gens));
}

}  // namespace chow
