#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "numeric.hpp"
#include "order.hpp"
#include "ring.hpp"

namespace chow {

// Sparse multivariate polynomial over Q. Terms are kept in a canonical map
// (grevlex-ascending), so equal polynomials compare equal structurally and
// printing is deterministic.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rat, CanonicalMonoLess>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, const Rat& c) {
        Polynomial p(std::move(ring));
        if (c != 0) p.terms_[Monomial(p.ring_->size(), 0)] = c;
        return p;
    }

    static Polynomial variable(RingPtr ring, std::size_t i) {
        Polynomial p(std::move(ring));
        Monomial m(p.ring_->size(), 0);
        m.at(i) = 1;
        p.terms_[m] = 1;
        return p;
    }

    static Polynomial term(RingPtr ring, Monomial m, const Rat& c) {
        Polynomial p(std::move(ring));
        if (m.size() != p.ring_->size()) throw std::invalid_argument("term: arity mismatch");
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial.
    long degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, (long)total_degree(m));
        return d;
    }

    bool is_homogeneous() const {
        long d = -1;
        for (const auto& [m, c] : terms_) {
            long t = (long)total_degree(m);
            if (d == -1) d = t;
            if (t != d) return false;
        }
        return true;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_one(terms_.begin()->first));
    }

    bool uses_var(std::size_t i) const {
        for (const auto& [m, c] : terms_)
            if (m[i]) return true;
        return false;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rat& c, Polynomial p) {
        if (c == 0) return Polynomial(p.ring_);
        for (auto& [m, v] : p.terms_) v *= c;
        return p;
    }

    Polynomial pow(unsigned long e) const {
        Polynomial r = constant(ring_, 1);
        Polynomial b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    Polynomial derivative(std::size_t i) const {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) {
            if (!m[i]) continue;
            Monomial n = m;
            --n[i];
            r.add_term(n, c * (long)m[i]);
        }
        return r;
    }

    // Replace variable i by a polynomial of the same ring.
    Polynomial substitute(std::size_t i, const Polynomial& value) const {
        check_ring(value);
        std::vector<Polynomial> powers{constant(ring_, 1)};
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) {
            unsigned e = m[i];
            while (powers.size() <= e) powers.push_back(powers.back() * value);
            Monomial rest = m;
            rest[i] = 0;
            r += term(ring_, rest, c) * powers[e];
        }
        return r;
    }

    Rat eval(const std::vector<Rat>& point) const {
        if (point.size() != ring_->size()) throw std::invalid_argument("eval: arity mismatch");
        Rat total = 0;
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
            total += t;
        }
        return total;
    }

    // Re-express in an extended ring that has this ring's variables as a prefix.
    Polynomial pad_to(const RingPtr& bigger) const {
        if (bigger->size() < ring_->size()) throw std::invalid_argument("pad_to: ring too small");
        for (std::size_t i = 0; i < ring_->size(); ++i)
            if (bigger->vars[i] != ring_->vars[i])
                throw std::invalid_argument("pad_to: variable prefix mismatch");
        Polynomial r(bigger);
        for (const auto& [m, c] : terms_) {
            Monomial n = m;
            n.resize(bigger->size(), 0);
            r.terms_.emplace(std::move(n), c);
        }
        return r;
    }

    // Inverse of pad_to; requires the dropped variables to be absent.
    Polynomial contract_to(const RingPtr& smaller) const {
        if (smaller->size() > ring_->size()) throw std::invalid_argument("contract_to: ring too big");
        for (std::size_t i = 0; i < smaller->size(); ++i)
            if (smaller->vars[i] != ring_->vars[i])
                throw std::invalid_argument("contract_to: variable prefix mismatch");
        Polynomial r(smaller);
        for (const auto& [m, c] : terms_) {
            for (std::size_t i = smaller->size(); i < m.size(); ++i)
                if (m[i]) throw std::invalid_argument("contract_to: dropped variable occurs");
            Monomial n(m.begin(), m.begin() + smaller->size());
            r.terms_.emplace(std::move(n), c);
        }
        return r;
    }

    // Scale to primitive integer coefficients with positive leading
    // (grevlex-largest) coefficient. Controls coefficient blowup after reductions.
    void make_primitive() {
        if (terms_.empty()) return;
        Int den_lcm = 1, num_gcd = 0;
        for (const auto& [m, c] : terms_) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        }
        Rat scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (terms_.rbegin()->second < 0) scale = -scale;
        if (scale != 1)
            for (auto& [m, c] : terms_) c *= scale;
    }

    bool operator==(const Polynomial& o) const {
        return same_ring(ring_, o.ring_) && terms_ == o.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rat a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool trivial_mono = is_one(m);
            if (a != 1 || trivial_mono) {
                out << a.get_str();
                if (!trivial_mono) out << "*";
            }
            bool first_var = true;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (!m[i]) continue;
                if (!first_var) out << "*";
                first_var = false;
                out << ring_->vars[i];
                if (m[i] > 1) out << "^" << m[i];
            }
        }
        return out.str();
    }

  private:
    void check_ring(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("ring mismatch");
    }

    RingPtr ring_;
    TermMap terms_;
};

inline Polynomial operator*(const Polynomial& p, const Rat& c) { return c * p; }

}  // namespace chow
