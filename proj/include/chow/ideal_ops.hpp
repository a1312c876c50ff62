#pragma once

#include <map>
#include <string>
#include <vector>

#include "dimension.hpp"
#include "handle.hpp"
#include "scalars.hpp"

namespace chow {

namespace detail {

// p / f for exact multiples only.
inline Polynomial exact_quotient(Polynomial p, const Polynomial& f) {
    MonomialOrder ord = grevlex_order();
    OrdPoly den = to_ord(f, ord);
    if (den.zero()) throw std::invalid_argument("exact_quotient: division by zero");
    OrdPoly num = to_ord(p, ord);
    Polynomial q(p.ring());
    while (!num.zero()) {
        if (!mono_divides(den.lm(), num.lm()))
            throw consistency_error("exact_quotient: division is not exact");
        Rat c = num.lc() / den.lc();
        Monomial shift = mono_div(num.lm(), den.lm());
        q.add_term(shift, c);
        axpy(num, c, shift, den, ord);
    }
    return q;
}

}  // namespace detail

inline IdealHandle unit_ideal(const RingPtr& ring) {
    return IdealHandle(ring, {Polynomial::constant(ring, 1)});
}

inline IdealHandle irrelevant_ideal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->geometric; ++i) gens.push_back(Polynomial::variable(ring, i));
    return IdealHandle(ring, std::move(gens));
}

// I restricted to the polynomials free of the masked variables.
inline IdealHandle eliminate(const IdealHandle& I, const std::vector<char>& vars) {
    if (vars.size() != I.ring()->size()) throw std::invalid_argument("eliminate: mask arity");
    const auto& gb = I.groebner(elim_order(vars));
    std::vector<Polynomial> kept;
    for (const auto& g : gb) {
        bool free = true;
        for (std::size_t i = 0; i < vars.size() && free; ++i)
            if (vars[i] && g.uses_var(i)) free = false;
        if (free) kept.push_back(g);
    }
    return IdealHandle(I.ring(), std::move(kept));
}

inline IdealHandle intersect(const IdealHandle& I, const IdealHandle& J) {
    if (!same_ring(I.ring(), J.ring())) throw std::invalid_argument("intersect: ring mismatch");
    ++work().intersections;
    const RingPtr& ring = I.ring();
    RingPtr ext = extend_ring(ring, {fresh_var_name(*ring, "t")});
    std::size_t ti = ext->size() - 1;
    Polynomial t = Polynomial::variable(ext, ti);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(t * g.pad_to(ext));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * g.pad_to(ext));
    std::vector<char> mask(ext->size(), 0);
    mask[ti] = 1;
    IdealHandle elim = eliminate(IdealHandle(ext, std::move(gens)), mask);
    std::vector<Polynomial> back;
    for (const auto& g : elim.gens()) back.push_back(g.contract_to(ring));
    return IdealHandle(ring, std::move(back));
}

// I : f = (I cap <f>) / f.
inline IdealHandle colon(const IdealHandle& I, const Polynomial& f) {
    if (f.is_zero()) return unit_ideal(I.ring());
    ++work().colon_calls;
    IdealHandle cap = intersect(I, IdealHandle(I.ring(), {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : cap.gens()) gens.push_back(detail::exact_quotient(g, f));
    return IdealHandle(I.ring(), std::move(gens));
}

inline IdealHandle colon(const IdealHandle& I, const IdealHandle& J) {
    if (!same_ring(I.ring(), J.ring())) throw std::invalid_argument("colon: ring mismatch");
    if (J.is_zero_ideal()) return unit_ideal(I.ring());
    IdealHandle acc;
    bool first = true;
    for (const auto& g : J.gens()) {
        IdealHandle c = colon(I, g);
        acc = first ? c : intersect(acc, c);
        first = false;
    }
    return acc;
}

namespace detail {

// Saturation body without the counter bump: decomposition plumbing calls this
// so the `saturations` counter keeps meaning "pipeline-level saturations".
inline IdealHandle saturate_quiet(const IdealHandle& I, const IdealHandle& J) {
    IdealHandle cur = I;
    for (;;) {
        IdealHandle next = colon(cur, J);
        if (next.groebner() == cur.groebner()) return cur;
        cur = next;
    }
}

}  // namespace detail

// I : J^infty, iterated colon; stabilization detected by reduced-basis equality.
inline IdealHandle saturate(const IdealHandle& I, const IdealHandle& J) {
    ++work().saturations;
    return detail::saturate_quiet(I, J);
}

inline bool same_ideal(const IdealHandle& A, const IdealHandle& B) {
    return same_ring(A.ring(), B.ring()) && A.groebner() == B.groebner();
}

// Replace each generator of degree e < d by the n+1 products with the
// (d-e)-th powers of one shared batch of generic linear forms; common zero of
// a full batch is empty in P^n, so the cut scheme is unchanged up to
// irrelevant saturation.
inline IdealHandle equalize_generator_degrees(const IdealHandle& I, long d,
                                              const GenericScalarSource& src) {
    for (const auto& g : I.gens())
        if (g.degree() > d) throw std::invalid_argument("equalize_generator_degrees: d too small");
    std::map<long, std::vector<Polynomial>> batch;  // deficit -> n+1 generic forms
    std::vector<Polynomial> out;
    for (const auto& g : I.gens()) {
        long k = d - g.degree();
        if (k == 0) {
            out.push_back(g);
            continue;
        }
        auto it = batch.find(k);
        if (it == batch.end()) {
            GenericScalarSource forked = src.fork("equalize", (std::uint64_t)k);
            std::vector<Polynomial> forms;
            for (std::size_t j = 0; j < I.ring()->geometric; ++j)
                forms.push_back(random_linear_form(I.ring(), forked));
            it = batch.emplace(k, std::move(forms)).first;
        }
        for (const auto& l : it->second) out.push_back(g * l.pow((unsigned long)k));
    }
    return IdealHandle(I.ring(), std::move(out));
}

// J = I + all c x c minors of the Jacobian of I's generators (rows = generators,
// columns = geometric variables).
inline IdealHandle jacobian_minors_ideal(const IdealHandle& I, long c) {
    std::size_t r = I.gens().size(), m = I.ring()->geometric;
    if (c < 1 || (std::size_t)c > r || (std::size_t)c > m)
        throw std::invalid_argument("jacobian_minors_ideal: c out of range");
    std::vector<std::vector<Polynomial>> jac(r, std::vector<Polynomial>(m));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m; ++j) jac[i][j] = I.gens()[i].derivative(j);

    std::vector<Polynomial> gens = I.gens();
    std::vector<std::size_t> rows((std::size_t)c), cols((std::size_t)c);
    auto det = [&](auto&& self, std::vector<std::size_t> rs, std::vector<std::size_t> cs) -> Polynomial {
        if (rs.size() == 1) return jac[rs[0]][cs[0]];
        Polynomial acc(I.ring());
        std::vector<std::size_t> sub_rs(rs.begin() + 1, rs.end());
        for (std::size_t k = 0; k < cs.size(); ++k) {
            std::vector<std::size_t> sub_cs;
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (j != k) sub_cs.push_back(cs[j]);
            Polynomial minor = self(self, sub_rs, sub_cs);
            Polynomial tp = jac[rs[0]][cs[k]] * minor;
            acc += (k % 2) ? -tp : tp;
        }
        return acc;
    };
    auto choose = [&](auto&& self, std::size_t from, std::size_t left, std::size_t total,
                      std::vector<std::size_t>& buf, auto&& done) -> void {
        if (left == 0) {
            done();
            return;
        }
        for (std::size_t v = from; v + left <= total; ++v) {
            buf.push_back(v);
            self(self, v + 1, left - 1, total, buf, done);
            buf.pop_back();
        }
    };
    std::vector<std::size_t> rbuf, cbuf;
    choose(choose, 0, (std::size_t)c, r, rbuf, [&]() {
        choose(choose, 0, (std::size_t)c, m, cbuf, [&]() {
            Polynomial d = det(det, rbuf, cbuf);
            if (!d.is_zero()) gens.push_back(std::move(d));
        });
    });
    return IdealHandle(I.ring(), std::move(gens));
}

// Generic affine chart of a homogeneous ideal: I + <l0 - 1>, same variables.
struct Chart {
    IdealHandle ideal;
    Polynomial ell0;
};

inline Chart dehomogenize_generic(const IdealHandle& I, const GenericScalarSource& src) {
    for (const auto& g : I.gens())
        if (!g.is_homogeneous()) throw std::invalid_argument("dehomogenize_generic: not homogeneous");
    GenericScalarSource forked = src.fork("chart");
    Polynomial l0 = random_linear_form(I.ring(), forked);
    std::vector<Polynomial> gens = I.gens();
    gens.push_back(l0 - Polynomial::constant(I.ring(), 1));
    return {IdealHandle(I.ring(), std::move(gens)), l0};
}

}  // namespace chow
