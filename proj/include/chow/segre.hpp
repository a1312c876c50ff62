#pragma once

#include <string>
#include <vector>

#include "projdeg.hpp"

namespace chow {

// Element of Z[H]/(H^(n+1)): coeff[i] multiplies H^i. Prints ascending, so a
// conic in P^2 reads "2H - 4H^2".
struct ChowClass {
    long n = 0;
    std::vector<Int> coeff;  // size n+1, index = power of H

    bool operator==(const ChowClass& o) const { return n == o.n && coeff == o.coeff; }

    std::string to_string() const {
        std::string out;
        for (long i = 0; i <= n; ++i) {
            const Int& c = coeff[(std::size_t)i];
            if (c == 0) continue;
            bool neg = c < 0;
            Int a = neg ? Int(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (a != 1 || i == 0) out += a.get_str();
            if (i >= 1) out += "H";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }
};

// Converts a projective-degree tuple into the Segre class pushed to the
// ambient P^n. With M = dim Y, d the common generator degree, and sigma_m the
// dimension-m coefficient (multiplying H^(n-m)), the counts peel off as
//   sigma_(M-k) = d^k deg(Y) - pd[M-k] - sum_(j=1..k-1) C(k,j) d^(k-j) sigma_(M-j)
// because slicing k of the combination hypersurfaces down to dimension M-k
// picks up the already-extracted higher Segre pieces with binomial weights.
inline ChowClass segre_from_projective_degrees(const ProjectiveDegrees& pd, long degY, long dimY,
                                               long n) {
    if ((long)pd.d.size() != dimY + 1)
        throw std::invalid_argument("segre_from_projective_degrees: tuple length");
    ChowClass out;
    out.n = n;
    out.coeff.assign((std::size_t)n + 1, Int(0));
    std::vector<Int> sigma((std::size_t)dimY + 1, Int(0));
    Int d(pd.form_degree);
    for (long k = 1; k <= dimY; ++k) {
        Int s = int_pow(d, (unsigned long)k) * degY - pd.d[(std::size_t)(dimY - k)];
        for (long j = 1; j < k; ++j)
            s -= binomial((unsigned long)k, (unsigned long)j) * int_pow(d, (unsigned long)(k - j)) *
                 sigma[(std::size_t)(dimY - j)];
        sigma[(std::size_t)(dimY - k)] = s;
        out.coeff[(std::size_t)(n - (dimY - k))] = s;
    }
    return out;
}

// Segre class s(X, P^n) of the subscheme cut out by a homogeneous proper
// nonzero ideal, ambient fixed to the full projective space of the ring.
inline ChowClass segre_class(const IdealHandle& I_X, GenericScalarSource& src) {
    for (const auto& g : I_X.gens())
        if (!g.is_homogeneous()) throw std::invalid_argument("segre_class: not homogeneous");
    const RingPtr& ring = I_X.ring();
    long n = (long)ring->geometric - 1;
    IdealHandle ambient = IdealHandle::zero(ring);
    ProjectiveDegrees pd = projective_degrees(I_X, ambient, src);
    if (pd.d[(std::size_t)n] != 1)
        throw consistency_error("segre_class: ambient projective space came out with degree != 1");
    return segre_from_projective_degrees(pd, 1, n, n);
}

struct SegreComparison {
    bool equal = false;
    ProjectiveDegrees pd_A, pd_B;  // at the common forced degree
    ChowClass class_A, class_B;    // at each ideal's own natural degree
};

// Decides s(A, P^n) = s(B, P^n) by putting both linear systems on a common
// generator degree and comparing the projective-degree tuples directly; the
// full classes are recomputed at natural degrees as a redundant cross-check.
inline SegreComparison segre_classes_compare(const IdealHandle& I_A, const IdealHandle& I_B,
                                             GenericScalarSource& src) {
    if (!same_ring(I_A.ring(), I_B.ring()))
        throw std::invalid_argument("segre_classes_compare: ring mismatch");
    long d = 0;
    for (const auto& g : I_A.gens()) d = std::max(d, g.degree());
    for (const auto& g : I_B.gens()) d = std::max(d, g.degree());
    const RingPtr& ring = I_A.ring();
    long n = (long)ring->geometric - 1;
    IdealHandle ambient = IdealHandle::zero(ring);

    SegreComparison cmp;
    GenericScalarSource sa = src.fork("forcedA");
    GenericScalarSource sb = src.fork("forcedB");
    cmp.pd_A = projective_degrees(I_A, ambient, sa, d);
    cmp.pd_B = projective_degrees(I_B, ambient, sb, d);
    cmp.equal = cmp.pd_A == cmp.pd_B;

    GenericScalarSource ca = src.fork("naturalA");
    GenericScalarSource cb = src.fork("naturalB");
    cmp.class_A = segre_class(I_A, ca);
    cmp.class_B = segre_class(I_B, cb);
    if ((cmp.class_A == cmp.class_B) != cmp.equal)
        throw consistency_error(
            "segre_classes_compare: forced-degree tuples disagree with natural-degree classes");
    return cmp;
}

inline bool segre_classes_equal(const IdealHandle& I_A, const IdealHandle& I_B,
                                GenericScalarSource& src) {
    return segre_classes_compare(I_A, I_B, src).equal;
}

}  // namespace chow
