#pragma once

#include <vector>

#include "projdeg.hpp"
#include "rur.hpp"
#include "segre.hpp"

namespace chow {

// Dimension-dim(X) coefficient of s(X, Y): d^(dimY-dimX) deg(Y) - pd[dimX].
// Zero when X fails to reach a top-dimensional component of Y (then the
// generic count on the right cancels the Bezout bound exactly).
inline long segre_top_component(const IdealHandle& I_X, const IdealHandle& I_Y,
                                GenericScalarSource& src) {
    long dimX = krull_dimension(I_X) - 1;
    GenericScalarSource s = src.fork("topseg");
    long degY = scheme_degree(I_Y, s);
    ProjectiveDegrees pd = projective_degrees(I_X, I_Y, s);
    long dimY = (long)pd.d.size() - 1;
    Int top = int_pow(Int(pd.form_degree), (unsigned long)(dimY - dimX)) * degY -
              pd.d[(std::size_t)dimX];
    return to_long(top);
}

// Hilbert-Samuel multiplicity of Y along X: the top Segre coefficient divided
// by deg(X). A non-integer ratio means a degenerate scalar draw; redraw.
inline long multiplicity(const IdealHandle& I_X, const IdealHandle& I_Y,
                         GenericScalarSource& src) {
    long dimX = krull_dimension(I_X) - 1;
    for (int attempt = 0; attempt <= src.max_retries; ++attempt) {
        GenericScalarSource s = src.fork("mult", (std::uint64_t)attempt);
        long degY = scheme_degree(I_Y, s);
        long degX = scheme_degree(I_X, s);
        ProjectiveDegrees pd = projective_degrees(I_X, I_Y, s);
        long dimY = (long)pd.d.size() - 1;
        Int num = int_pow(Int(pd.form_degree), (unsigned long)(dimY - dimX)) * degY -
                  pd.d[(std::size_t)dimX];
        if (num == 0)
            throw std::invalid_argument(
                "multiplicity: X misses the top-dimensional components of Y");
        if (degX > 0 && num % degX == 0 && num > 0) return to_long(Int(num / degX));
    }
    throw genericity_error("multiplicity: no draw produced an integral ratio");
}

// Multiplicity of X inside the dimension-nu isolated part W_nu of Y, via the
// auxiliary system: chart of Y, (nu - dimX) generic combinations of X's
// degree-equalized generators, and a Rabinowitsch factor removing X itself.
// The dim-dimX count of that system runs with every piece of dimension > nu
// excluded, so junk from slicing higher pieces never enters. Returns 0 when X
// does not lie on W_nu.
inline long mult_in_component(const IdealHandle& I_X, const IdealHandle& I_Y, long nu,
                              GenericScalarSource& src, const Chart* chartY = nullptr,
                              const EquidimDecomposition* decY = nullptr) {
    long dimX = krull_dimension(I_X) - 1;
    if (nu < dimX) throw std::invalid_argument("mult_in_component: nu below dim X");
    for (int attempt = 0; attempt <= src.max_retries; ++attempt) {
        GenericScalarSource s = src.fork("multcomp", (std::uint64_t)attempt);
        Chart owned_chart;
        if (!chartY) owned_chart = dehomogenize_generic(I_Y, s);
        const Chart& ch = chartY ? *chartY : owned_chart;
        EquidimDecomposition owned_dec;
        if (!decY) owned_dec = equidimensional_decomposition(ch.ideal);
        const EquidimDecomposition& dc = decY ? *decY : owned_dec;

        GenericScalarSource degnu_src = s.fork("degnu");
        long degnuY = deg_mu_affine(ch.ideal, dc, nu, degnu_src);

        long d = 0;
        for (const auto& g : I_X.gens()) d = std::max(d, g.degree());
        IdealHandle eq = equalize_generator_degrees(I_X, d, s);
        const RingPtr& base = ch.ideal.ring();
        RingPtr ext = extend_ring(base, {fresh_var_name(*base, "t")});
        std::size_t tvar = ext->size() - 1;
        std::vector<Polynomial> gens;
        for (const auto& g : ch.ideal.gens()) gens.push_back(g.pad_to(ext));
        std::vector<Polynomial> eqg;
        for (const auto& g : eq.gens()) eqg.push_back(g.pad_to(ext));
        GenericScalarSource cs = s.fork("combos");
        for (long j = 0; j < nu - dimX; ++j) gens.push_back(random_combination(eqg, cs));
        Polynomial F = random_combination(eqg, cs);
        gens.push_back(Polynomial::constant(ext, Rat(1)) - Polynomial::variable(ext, tvar) * F);

        std::vector<IdealHandle> excl;
        for (const auto& p : dc.pieces)
            if (p.dim > nu) excl.push_back(p.ideal);

        long degI;
        GenericScalarSource deg_src = s.fork("degI");
        try {
            degI = deg_mu_core(ext, gens, excl, dimX, deg_src);
        } catch (const dimension_error&) {
            continue;
        }
        Int num = Int(degnuY) * int_pow(Int(d), (unsigned long)(nu - dimX)) - degI;
        if (num == 0) return 0;
        GenericScalarSource degx_src = s.fork("degX");
        long degX = scheme_degree(I_X, degx_src);
        if (degX > 0 && num > 0 && num % degX == 0) return to_long(Int(num / degX));
    }
    throw genericity_error("mult_in_component: no draw produced an integral ratio");
}

// Dimension-0 Segre coefficient of a sampled cluster inside the dim-nu part
// of an affine chart scheme: deg_nu(Y) * deg(R)^nu minus the count of the
// residual points left after cutting with nu degree-deg(R) forms through the
// cluster and excluding both the cluster and every piece of dimension > nu.
// Equals the sum of the cluster points' multiplicities in W_nu, and 0 if the
// cluster lies off W_nu entirely.
//
// The slicing forms are interpolated, not combined from the RUR generators:
// every degree-D element of the span of {R(l), R'(l)x_i - A_i(l)} has its
// top-degree part divisible by l's linear part, so for nu >= 2 those closures
// would all meet the chart's hyperplane at infinity in a common divisor and
// the Bezout count degY * D^nu would leak there. Instead each form is L^D
// minus the unique deg < D univariate correction c(l) matching L^D on the
// cluster (c = (L under x_i -> A_i/R')^D * (R'^D)^-1 mod R), which vanishes
// on the cluster, keeps the generic top (L_lin)^D, and is smooth at each
// cluster point, so each point contributes exactly its multiplicity.
inline long affine_segre_dim0(const RURPoints& rur, const IdealHandle& chart_Y, long nu,
                              const EquidimDecomposition& dec, GenericScalarSource& src) {
    if (!same_ring(rur.ring, chart_Y.ring()))
        throw std::invalid_argument("affine_segre_dim0: cluster ring differs from chart ring");
    GenericScalarSource s0 = src.fork("affseg", (std::uint64_t)nu);
    GenericScalarSource degnu_src = s0.fork("degnu");
    long degnuY = deg_mu_affine(chart_Y, dec, nu, degnu_src);
    long D = (long)rur.point_count();

    std::vector<Polynomial> cluster = cluster_generators(rur);
    const RingPtr& base = chart_Y.ring();
    RingPtr ext = extend_ring(base, {fresh_var_name(*base, "t")});
    std::size_t tvar = ext->size() - 1;

    auto pow_mod = [&](const UniPoly& b, long e) {
        UniPoly acc{Rat(1)};
        UniPoly bb = uni_mod(b, rur.R);
        for (long k = 0; k < e; ++k) acc = uni_mod(uni_mul(acc, bb), rur.R);
        return acc;
    };
    UniPoly rp_inv = uni_invmod(pow_mod(rur.Rprime, D), rur.R);

    for (int attempt = 0; attempt <= src.max_retries; ++attempt) {
        GenericScalarSource s = s0.fork("try", (std::uint64_t)attempt);
        std::vector<Polynomial> gens;
        for (const auto& g : chart_Y.gens()) gens.push_back(g.pad_to(ext));
        for (long j = 0; j < nu; ++j) {
            Polynomial L = Polynomial::constant(base, Rat(0));
            UniPoly l;
            for (std::size_t i = 0; i < rur.A.size(); ++i) {
                Rat a = s.next_scalar();
                L = L + a * Polynomial::variable(base, i);
                l = uni_add(l, uni_scale(rur.A[i], a));
            }
            Rat a0 = s.next_scalar();
            L = L + Polynomial::constant(base, a0);
            l = uni_add(l, uni_scale(rur.Rprime, a0));
            UniPoly c = uni_mod(uni_mul(pow_mod(l, D), rp_inv), rur.R);
            Polynomial Lpow = Polynomial::constant(base, Rat(1));
            for (long k = 0; k < D; ++k) Lpow = Lpow * L;
            gens.push_back((Lpow - compose_uni(c, rur.separating)).pad_to(ext));
        }
        Polynomial F = random_combination(cluster, s);
        gens.push_back(Polynomial::constant(ext, Rat(1)) -
                       Polynomial::variable(ext, tvar) * F.pad_to(ext));

        std::vector<IdealHandle> excl;
        for (const auto& p : dec.pieces)
            if (p.dim > nu) excl.push_back(p.ideal);
        GenericScalarSource deg_src = s.fork("deg0");
        long deg0;
        try {
            deg0 = deg_mu_core(ext, gens, excl, 0, deg_src);
        } catch (const dimension_error&) {
            continue;
        }
        Int sigma = Int(degnuY) * int_pow(Int(D), (unsigned long)nu) - deg0;
        return to_long(sigma);
    }
    throw genericity_error("affine_segre_dim0: slicing forms never reached a finite residual");
}

// Prop-style reducedness check at a cluster: the dim-0 Segre count equals the
// number of points exactly when the scheme is reduced along all of them.
inline bool aggregate_reducedness_test(const RURPoints& rur, const IdealHandle& chart_Y, long nu,
                                       const EquidimDecomposition& dec, GenericScalarSource& src) {
    long sigma = affine_segre_dim0(rur, chart_Y, nu, dec, src);
    long D = (long)rur.point_count();
    if (sigma < D)
        throw genericity_error("aggregate_reducedness_test: count fell below the point count");
    return sigma == D;
}

}  // namespace chow
