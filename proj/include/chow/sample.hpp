#pragma once

#include <vector>

#include "mult.hpp"

namespace chow {

// One batch of generic points per component dimension of an affine scheme:
// slice the dim-nu equidimensional piece with nu generic affine hyperplanes,
// radicalize, build the univariate representation, and split it into
// conjugation-uniform clusters tagged with nu. Every cluster is checked
// against the original generators by exact residue evaluation; a cluster that
// fails is discarded, and a slice yielding nothing usable is redrawn.
inline std::vector<RURPoints> sample_component_points(const IdealHandle& chart,
                                                      GenericScalarSource& src,
                                                      const EquidimDecomposition* dec_in = nullptr) {
    std::vector<RURPoints> out;
    if (chart.is_unit()) return out;
    EquidimDecomposition owned;
    if (!dec_in) {
        owned = equidimensional_decomposition(chart);
        dec_in = &owned;
    }
    for (const auto& piece : dec_in->pieces) {
        long nu = piece.dim;
        GenericScalarSource level = src.fork("sample", (std::uint64_t)nu);
        for (int attempt = 0;; ++attempt) {
            GenericScalarSource s = level.fork("slice", (std::uint64_t)attempt);
            std::vector<Polynomial> gens = piece.ideal.gens();
            for (long j = 0; j < nu; ++j) gens.push_back(random_linear_form(chart.ring(), s, true));
            try {
                IdealHandle reduced = radical_zero_dim(IdealHandle(chart.ring(), gens));
                RURPoints rur = rur_construct(reduced, s);
                rur.dimension_tag = nu;
                std::vector<RURPoints> clusters = split_rur(rur);
                std::size_t kept = 0;
                for (auto& c : clusters) {
                    bool on_scheme = true;
                    for (const auto& g : chart.gens())
                        if (uni_deg(evaluate_mod_univariate(g, c)) >= 0) {
                            on_scheme = false;
                            break;
                        }
                    if (!on_scheme) continue;
                    out.push_back(std::move(c));
                    ++kept;
                }
                if (kept == 0) throw genericity_error("every sampled cluster failed evaluation");
                break;
            } catch (const std::invalid_argument&) {
                // slice came out positive-dimensional or empty; redraw
                if (attempt >= src.max_retries)
                    throw genericity_error("sampling: slice never reached a finite point set");
            } catch (const genericity_error&) {
                if (attempt >= src.max_retries) throw;
            }
        }
    }
    return out;
}

}  // namespace chow
