#pragma once

#include <map>
#include <vector>

#include "equidim.hpp"
#include "scalars.hpp"

namespace chow {

// Rabinowitsch exclusion 1 - T * (generic combination of K's generators): on
// the vanishing set it pins T to 1/g away from V(K) and is unsolvable on
// V(K), so adjoining it removes that locus without adding dimension.
inline Polynomial exclusion_polynomial(const std::vector<Polynomial>& gens, std::size_t tvar,
                                       GenericScalarSource& src) {
    Polynomial combo = random_combination(gens, src);
    const RingPtr& ring = combo.ring();
    return Polynomial::constant(ring, Rat(1)) - Polynomial::variable(ring, tvar) * combo;
}

// Shared counting core: slice an affine system with mu generic hyperplanes,
// remove each excluded locus with its own Rabinowitsch variable, and count the
// quotient dimension. The generators may already live in an extension of the
// chart ring (extra non-geometric variables are left alone by the slicing
// forms); exclusion ideals only need a prefix-compatible ring.
inline long deg_mu_core(const RingPtr& ring, const std::vector<Polynomial>& base_gens,
                        const std::vector<IdealHandle>& exclusions, long mu,
                        GenericScalarSource& src) {
    std::vector<std::string> aux;
    for (std::size_t k = 0; k < exclusions.size(); ++k)
        aux.push_back(fresh_var_name(*ring, "t" + std::to_string(k)));
    RingPtr ext = aux.empty() ? ring : extend_ring(ring, aux);

    std::vector<Polynomial> padded;
    for (const auto& g : base_gens) padded.push_back(g.pad_to(ext));
    std::vector<std::vector<Polynomial>> exgens(exclusions.size());
    for (std::size_t k = 0; k < exclusions.size(); ++k)
        for (const auto& g : exclusions[k].gens()) exgens[k].push_back(g.pad_to(ext));

    for (int attempt = 0;; ++attempt) {
        std::vector<Polynomial> gens = padded;
        std::uint64_t salt = ((std::uint64_t)mu << 8) | (unsigned)attempt;
        GenericScalarSource slice_src = src.fork("slice", salt);
        for (long j = 0; j < mu; ++j) gens.push_back(random_linear_form(ext, slice_src, true));
        for (std::size_t k = 0; k < exclusions.size(); ++k) {
            GenericScalarSource ex_src = src.fork("exclude", (k << 8) | (unsigned)attempt);
            gens.push_back(exclusion_polynomial(exgens[k], ring->size() + k, ex_src));
        }
        try {
            return (long)quotient_vs_dimension(IdealHandle(ext, gens));
        } catch (const dimension_error&) {
            if (attempt >= src.max_retries) throw;
        }
    }
}

// Degree of the mu-dimensional isolated part of an affine chart scheme: slice
// with mu generic affine hyperplanes, exclude every higher-dimensional piece,
// and count the quotient dimension. Lower-dimensional pieces fall off the
// slice on their own; embedded structure inside excluded pieces goes with
// them, so only the dim-mu components contribute, multiplicity included.
inline long deg_mu_affine(const IdealHandle& chart, const EquidimDecomposition& dec, long mu,
                          GenericScalarSource& src) {
    if (chart.is_unit()) return 0;
    std::vector<IdealHandle> excluded;
    for (const auto& p : dec.pieces)
        if (p.dim > mu) excluded.push_back(p.ideal);
    return deg_mu_core(chart.ring(), chart.gens(), excluded, mu, src);
}

// Projective scheme degree in dimension mu: isolated dim-mu part of V(I),
// counted with its scheme multiplicity, 0 when there is none.
inline long deg_mu(const IdealHandle& I, long mu, GenericScalarSource& src) {
    Chart chart = dehomogenize_generic(I, src);
    EquidimDecomposition dec = equidimensional_decomposition(chart.ideal);
    return deg_mu_affine(chart.ideal, dec, mu, src);
}

// The whole profile, mu = 0 .. projective dimension of V(I).
inline std::map<long, long> deg_mu_table(const IdealHandle& I, GenericScalarSource& src) {
    std::map<long, long> table;
    Chart chart = dehomogenize_generic(I, src);
    if (chart.ideal.is_unit()) return table;
    EquidimDecomposition dec = equidimensional_decomposition(chart.ideal);
    long top = krull_dimension(chart.ideal);
    for (long mu = 0; mu <= top; ++mu) table[mu] = deg_mu_affine(chart.ideal, dec, mu, src);
    return table;
}

// Degree of the top-dimensional part of the projective scheme V(I); 0 for an
// empty scheme (chart of an irrelevant-supported ideal).
inline long scheme_degree(const IdealHandle& I, GenericScalarSource& src) {
    Chart chart = dehomogenize_generic(I, src);
    if (chart.ideal.is_unit()) return 0;
    EquidimDecomposition dec = equidimensional_decomposition(chart.ideal);
    return deg_mu_affine(chart.ideal, dec, dec.top_dim(), src);
}

}  // namespace chow
