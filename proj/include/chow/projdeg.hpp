#pragma once

#include <vector>

#include "degmu.hpp"

namespace chow {

// Projective degrees of the rational map Y -> P^N cut out by the degree-d
// forms spanning I_X: d[i] counts the points of Y meeting i generic
// hyperplanes and dimY - i generic members of the linear system, with the
// base locus X removed. d[dim Y] recovers deg Y.
struct ProjectiveDegrees {
    std::vector<long> d;
    long form_degree = 0;

    bool operator==(const ProjectiveDegrees& o) const {
        return d == o.d && form_degree == o.form_degree;
    }
};

// force_degree raises the linear system's degree above the natural maximum of
// I_X's generators (used to put two centers on a common degree).
inline ProjectiveDegrees projective_degrees(const IdealHandle& I_X, const IdealHandle& I_Y,
                                            GenericScalarSource& src, long force_degree = -1) {
    if (!same_ring(I_X.ring(), I_Y.ring()))
        throw std::invalid_argument("projective_degrees: mismatched rings");
    if (I_X.is_zero_ideal() || I_X.is_unit())
        throw std::invalid_argument("projective_degrees: center must be proper and nonzero");
    if (I_Y.is_unit()) throw std::invalid_argument("projective_degrees: empty ambient");
    for (const auto& g : I_Y.gens())
        if (!g.is_homogeneous()) throw std::invalid_argument("projective_degrees: ambient not homogeneous");

    const RingPtr& base = I_X.ring();
    long dimY = krull_dimension(I_Y) - 1;  // cone dimension -> projective
    long d = 0;
    for (const auto& g : I_X.gens()) d = std::max(d, g.degree());
    if (force_degree > 0) {
        if (force_degree < d)
            throw std::invalid_argument("projective_degrees: forced degree below generator degree");
        d = force_degree;
    }
    IdealHandle eq = equalize_generator_degrees(I_X, d, src);
    RingPtr ext = extend_ring(base, {fresh_var_name(*base, "t")});
    std::size_t tvar = ext->size() - 1;
    std::vector<Polynomial> eqgens;
    for (const auto& g : eq.gens()) eqgens.push_back(g.pad_to(ext));
    std::vector<Polynomial> ygens;
    for (const auto& g : I_Y.gens()) ygens.push_back(g.pad_to(ext));

    ProjectiveDegrees out;
    out.form_degree = d;
    for (long i = 0; i <= dimY; ++i) {
        for (int attempt = 0;; ++attempt) {
            GenericScalarSource cs = src.fork("projdeg", ((std::uint64_t)i << 8) | (unsigned)attempt);
            std::vector<Polynomial> gens = ygens;
            for (long j = 0; j < dimY - i; ++j) gens.push_back(random_combination(eqgens, cs));
            for (long j = 0; j < i; ++j) gens.push_back(random_linear_form(ext, cs));
            gens.push_back(random_linear_form(ext, cs) - Polynomial::constant(ext, Rat(1)));
            Polynomial F = random_combination(eqgens, cs);
            gens.push_back(Polynomial::constant(ext, Rat(1)) - Polynomial::variable(ext, tvar) * F);
            try {
                out.d.push_back((long)quotient_vs_dimension(IdealHandle(ext, gens)));
                break;
            } catch (const dimension_error&) {
                if (attempt >= src.max_retries) throw;
            }
        }
    }
    return out;
}

}  // namespace chow
