#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "sample.hpp"

namespace chow {

struct RadicalityOptions {
    std::uint64_t seed = 0;
    long coeff_bound = 32003;
    int max_retries = 3;
    bool wall_times = false;  // work counters are always recorded; wall time is opt-in
};

struct StageWork {
    WorkCounters work;
    double wall_ms = -1.0;
};

struct RadicalityWitness {
    bool present = false;
    RURPoints rur;
    long nu = -1;        // component dimension the cluster was tested against
    long sigma = -1;     // dim-0 Segre count at the cluster
    long expected = -1;  // deg R = number of points in the cluster
};

struct RadicalityReport {
    bool verdict = false;
    std::string stage;  // isolated-nonreduced | embedded-outside-singular | segre-mismatch |
                        // radical | stage1-pass | stage2-pass
    std::uint64_t seed = 0;
    RadicalityWitness witness;
    std::map<long, long> deg_table;  // mu -> degree of the dim-mu isolated part
    long projective_dimension = -1;
    bool jacobian_covers_top = false;
    bool same_ideal_shortcut = false;
    bool has_segre = false;
    SegreComparison segre;  // populated when stage 3 actually compares classes
    std::string note;
    std::vector<StageWork> stages;  // indices 0..3
};

namespace detail {

struct StageClock {
    WorkCounters base;
    std::chrono::steady_clock::time_point t0;
    bool timed;
    explicit StageClock(bool timed_) : base(work()), t0(std::chrono::steady_clock::now()), timed(timed_) {}
    StageWork close() const {
        StageWork sw;
        sw.work = work() - base;
        if (timed)
            sw.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
        return sw;
    }
};

}  // namespace detail

// Three-stage radicality decision for a homogeneous ideal, up to saturation
// by the irrelevant ideal. last_stage < 3 stops after that stage passes (the
// stage-level entry points below); a false verdict always returns
// immediately with its witness.
inline RadicalityReport radicality_pipeline(const IdealHandle& I, const RadicalityOptions& opt,
                                            int last_stage) {
    for (const auto& g : I.gens())
        if (!g.is_homogeneous()) throw std::invalid_argument("is_radical: input not homogeneous");

    RadicalityReport rep;
    rep.seed = opt.seed;
    rep.stages.assign(4, StageWork{});
    GenericScalarSource root =
        GenericScalarSource::seeded(opt.seed, opt.coeff_bound, opt.max_retries);

    // Stage 0: chart, decomposition, component degrees.
    detail::StageClock clock0(opt.wall_times);
    if (I.is_zero_ideal()) {
        rep.verdict = true;
        rep.stage = "radical";
        rep.note = "zero ideal: the whole projective space is reduced";
        rep.stages[0] = clock0.close();
        return rep;
    }
    Chart chart = dehomogenize_generic(I, root);
    if (chart.ideal.is_unit()) {
        rep.verdict = true;
        rep.stage = "radical";
        rep.note = "empty scheme: ideal is supported on the irrelevant ideal";
        rep.stages[0] = clock0.close();
        return rep;
    }
    EquidimDecomposition dec = equidimensional_decomposition(chart.ideal);
    rep.projective_dimension = dec.top_dim();
    for (long mu = 0; mu <= dec.top_dim(); ++mu) rep.deg_table[mu] = 0;
    for (const auto& p : dec.pieces) {
        GenericScalarSource s = root.fork("degnu", (std::uint64_t)p.dim);
        rep.deg_table[p.dim] = deg_mu_affine(chart.ideal, dec, p.dim, s);
    }
    rep.stages[0] = clock0.close();

    // Stage 1: generic points of every component must be reduced.
    detail::StageClock clock1(opt.wall_times);
    GenericScalarSource s1 = root.fork("stage1");
    std::vector<RURPoints> clusters = sample_component_points(chart.ideal, s1, &dec);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        GenericScalarSource ts = s1.fork("test", (std::uint64_t)i);
        long sigma = affine_segre_dim0(clusters[i], chart.ideal, clusters[i].dimension_tag, dec, ts);
        long D = (long)clusters[i].point_count();
        if (sigma < D)
            throw genericity_error("stage 1: Segre count fell below the cluster size");
        if (sigma > D) {
            rep.verdict = false;
            rep.stage = "isolated-nonreduced";
            rep.witness = {true, clusters[i], clusters[i].dimension_tag, sigma, D};
            rep.stages[1] = clock1.close();
            return rep;
        }
    }
    rep.stages[1] = clock1.close();
    if (last_stage == 1) {
        rep.verdict = true;
        rep.stage = "stage1-pass";
        return rep;
    }

    // Stage 2: singular-locus points must not carry smooth-looking clusters
    // unless they sit on a lower-dimensional component (a true intersection
    // point). A smooth-looking cluster in V(J) off every other component can
    // only come from an embedded prime outside the singular locus.
    detail::StageClock clock2(opt.wall_times);
    long n = (long)I.ring()->geometric - 1;
    long c = n - rep.projective_dimension;
    IdealHandle J = jacobian_minors_ideal(I, c);
    IdealHandle Jhat =
        ideal_plus(J, {chart.ell0 - Polynomial::constant(I.ring(), Rat(1))});
    if (!Jhat.is_unit()) {
        rep.jacobian_covers_top = krull_dimension(Jhat) == rep.projective_dimension;
        GenericScalarSource s2 = root.fork("stage2");
        std::vector<RURPoints> sing = sample_component_points(Jhat, s2);
        for (std::size_t qi = 0; qi < sing.size(); ++qi) {
            const RURPoints& q = sing[qi];
            long D = (long)q.point_count();
            for (const auto& piece : dec.pieces) {
                GenericScalarSource ts =
                    s2.fork("test", ((std::uint64_t)qi << 8) | (std::uint64_t)piece.dim);
                long sigma = affine_segre_dim0(q, chart.ideal, piece.dim, dec, ts);
                if (sigma == 0) continue;  // cluster off this dimension's components
                if (sigma == D) {
                    bool on_lower = false;
                    for (const auto& lower : dec.pieces)
                        if (lower.dim < piece.dim && vanishes_on_cluster(lower.ideal, q)) {
                            on_lower = true;
                            break;
                        }
                    if (on_lower) break;  // intersection point of components: genuinely singular
                    rep.verdict = false;
                    rep.stage = "embedded-outside-singular";
                    rep.witness = {true, q, piece.dim, sigma, D};
                    rep.stages[2] = clock2.close();
                    return rep;
                }
                if (sigma % D != 0)
                    throw consistency_error("stage 2: count not a multiple of the cluster size");
                break;  // multiplicity >= 2: an honest singular point of this part
            }
        }
    }
    rep.stages[2] = clock2.close();
    if (last_stage == 2) {
        rep.verdict = true;
        rep.stage = "stage2-pass";
        return rep;
    }

    // Stage 3: the single saturation, then class comparison.
    detail::StageClock clock3(opt.wall_times);
    IdealHandle K = saturate(I, J);
    if (same_ideal(K, I)) {
        rep.same_ideal_shortcut = true;
        rep.verdict = true;
        rep.stage = "radical";
    } else {
        GenericScalarSource s3 = root.fork("stage3");
        rep.segre = segre_classes_compare(K, I, s3);
        rep.has_segre = true;
        rep.verdict = rep.segre.equal;
        rep.stage = rep.verdict ? "radical" : "segre-mismatch";
    }
    rep.stages[3] = clock3.close();
    return rep;
}

inline RadicalityReport is_radical(const IdealHandle& I, const RadicalityOptions& opt = {}) {
    return radicality_pipeline(I, opt, 3);
}

inline RadicalityReport run_stage1(const IdealHandle& I, const RadicalityOptions& opt = {}) {
    return radicality_pipeline(I, opt, 1);
}

inline RadicalityReport run_stage2(const IdealHandle& I, const RadicalityOptions& opt = {}) {
    return radicality_pipeline(I, opt, 2);
}

inline RadicalityReport run_stage3(const IdealHandle& I, const RadicalityOptions& opt = {}) {
    return radicality_pipeline(I, opt, 3);
}

}  // namespace chow
