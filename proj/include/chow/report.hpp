#pragma once

#include <json.hpp>

#include "radical.hpp"

namespace chow {

using json = nlohmann::ordered_json;

inline json rur_to_json(const RURPoints& rur) {
    json j;
    j["separating_form"] = rur.separating.to_string();
    j["R"] = uni_to_string(rur.R, "u");
    json a = json::array();
    for (const auto& ai : rur.A) a.push_back(uni_to_string(ai, "u"));
    j["A"] = a;
    j["dimension_tag"] = rur.dimension_tag;
    return j;
}

inline json work_to_json(const WorkCounters& w) {
    json j;
    j["groebner_calls"] = w.groebner_calls;
    j["reduction_steps"] = w.reduction_steps;
    j["colon_calls"] = w.colon_calls;
    j["saturations"] = w.saturations;
    j["intersections"] = w.intersections;
    j["rur_builds"] = w.rur_builds;
    return j;
}

inline json projective_degrees_to_json(const ProjectiveDegrees& pd) {
    json j;
    j["d"] = pd.d;
    j["form_degree"] = pd.form_degree;
    return j;
}

inline json report_to_json(const RadicalityReport& rep) {
    json j;
    j["verdict"] = rep.verdict;
    j["stage"] = rep.stage;
    j["seed"] = rep.seed;
    if (rep.witness.present) {
        json w = rur_to_json(rep.witness.rur);
        w["tested_dimension"] = rep.witness.nu;
        w["sigma"] = rep.witness.sigma;
        w["expected"] = rep.witness.expected;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    json inter;
    json table = json::object();
    for (const auto& [mu, v] : rep.deg_table) table[std::to_string(mu)] = v;
    inter["deg_mu_table"] = table;
    inter["projective_dimension"] = rep.projective_dimension;
    if (rep.has_segre) {
        inter["projective_degrees"] = {{"saturated", projective_degrees_to_json(rep.segre.pd_A)},
                                       {"original", projective_degrees_to_json(rep.segre.pd_B)}};
        inter["segre_classes"] = {{"saturated", rep.segre.class_A.to_string()},
                                  {"original", rep.segre.class_B.to_string()}};
    } else {
        inter["projective_degrees"] = nullptr;
        inter["segre_classes"] = nullptr;
    }
    inter["flags"] = {{"jacobian_covers_top_component", rep.jacobian_covers_top},
                      {"stage3_same_ideal_shortcut", rep.same_ideal_shortcut}};
    j["intermediates"] = inter;
    json stages = json::object();
    const char* names[4] = {"stage0", "stage1", "stage2", "stage3"};
    for (int k = 0; k < 4; ++k) stages[names[k]] = work_to_json(rep.stages[(std::size_t)k].work);
    j["work"] = stages;
    bool timed = false;
    for (const auto& s : rep.stages) timed = timed || s.wall_ms >= 0;
    if (timed) {
        json t = json::object();
        for (int k = 0; k < 4; ++k) t[names[k]] = rep.stages[(std::size_t)k].wall_ms;
        j["timings_ms"] = t;
    } else {
        j["timings_ms"] = nullptr;
    }
    j["note"] = rep.note;
    return j;
}

}  // namespace chow
