#pragma once

#include <cstdint>

#include "errors.hpp"

namespace chow {

// Deterministic work counters; these feed the report's per-stage table, so they
// must depend only on (input, seed), never on wall time.
struct WorkCounters {
    std::uint64_t groebner_calls = 0;
    std::uint64_t reduction_steps = 0;
    std::uint64_t colon_calls = 0;
    // Counts saturate() calls only; the equidimensional splitter's internal
    // component stripping is uncounted plumbing (its colon work still shows),
    // so a radical run shows exactly the one stage-3 saturation.
    std::uint64_t saturations = 0;
    std::uint64_t intersections = 0;
    std::uint64_t rur_builds = 0;

    WorkCounters operator-(const WorkCounters& o) const {
        return {groebner_calls - o.groebner_calls, reduction_steps - o.reduction_steps,
                colon_calls - o.colon_calls,       saturations - o.saturations,
                intersections - o.intersections,   rur_builds - o.rur_builds};
    }
};

inline WorkCounters& work() {
    thread_local WorkCounters w;
    return w;
}

inline std::uint64_t& budget_limit() {
    thread_local std::uint64_t limit = 10'000'000ULL;
    return limit;
}

inline std::uint64_t& budget_used() {
    thread_local std::uint64_t used = 0;
    return used;
}

// One unit = one reduction step in the Groebner engine.
inline void charge_reduction_step() {
    ++work().reduction_steps;
    if (++budget_used() > budget_limit())
        throw budget_error("reduction-step budget exceeded (" + std::to_string(budget_limit()) +
                           " steps)");
}

struct BudgetScope {
    std::uint64_t saved_limit;
    std::uint64_t saved_used;
    explicit BudgetScope(std::uint64_t limit) : saved_limit(budget_limit()), saved_used(budget_used()) {
        budget_limit() = limit;
        budget_used() = 0;
    }
    ~BudgetScope() {
        budget_limit() = saved_limit;
        budget_used() = saved_used;
    }
    BudgetScope(const BudgetScope&) = delete;
    BudgetScope& operator=(const BudgetScope&) = delete;
};

}  // namespace chow
