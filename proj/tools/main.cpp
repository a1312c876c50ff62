// Command-line front end. Each subcommand dispatches to one library
// operation; --json switches the human-readable text to machine output.
// Exit codes: 0 done, 1 false verdict under --strict, 2 inconclusive
// (genericity/budget) or invalid input, 3 unreadable or unparsable file.

#include <CLI11.hpp>

#include <chow/chow.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace chow;

struct file_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t seed = 0;
    long coeff_bound = 32003;
    int max_retries = 3;
    std::string order = "grevlex";
    bool as_json = false;
    std::uint64_t budget = 10'000'000ULL;
    bool strict = false;
    bool wall_times = false;

    std::string file;
    std::string ambient_file;
    std::string by_file;
    long mu = -1;  // -1 = print the whole table
    int stage = 3;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw file_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IdealFile load_ideal(const std::string& path) { return parse_ideal_file(read_file(path)); }

// Rebuilds the file's generators inside `ring` (they may have been parsed
// into a ring inferred from a different variable set).
IdealHandle in_ring(const IdealFile& f, const RingPtr& ring) {
    if (f.ring == ring) return IdealHandle(ring, f.gens);
    std::vector<Polynomial> gens;
    gens.reserve(f.gens.size());
    for (const auto& g : f.gens) gens.push_back(parse_polynomial(g.to_string(), ring));
    return IdealHandle(ring, gens);
}

// Two-file subcommands put both ideals in one ring: the first file's
// variables in order, then any extra variables of the second.
std::pair<IdealHandle, IdealHandle> load_pair(const std::string& fx, const std::string& fy) {
    IdealFile a = load_ideal(fx);
    IdealFile b = load_ideal(fy);
    RingPtr ring = a.ring;
    if (!same_ring(a.ring, b.ring)) {
        std::vector<std::string> names = a.ring->vars;
        for (const auto& v : b.ring->vars)
            if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
        ring = make_ring(names);
    }
    return {in_ring(a, ring), in_ring(b, ring)};
}

GenericScalarSource make_src(const Options& o) {
    return GenericScalarSource::seeded(o.seed, o.coeff_bound, o.max_retries);
}

MonomialOrder order_of(const Options& o) {
    return o.order == "lex" ? lex_order() : grevlex_order();
}

void print_polys(const std::vector<Polynomial>& gens, const std::string& indent) {
    for (const auto& g : gens) std::cout << indent << g.to_string() << "\n";
}

json polys_to_json(const std::vector<Polynomial>& gens) {
    json arr = json::array();
    for (const auto& g : gens) arr.push_back(g.to_string());
    return arr;
}

void print_rur_text(const RURPoints& r, const std::string& indent) {
    std::cout << indent << "dimension tag: " << r.dimension_tag << "\n";
    std::cout << indent << "points: " << r.point_count() << "\n";
    std::cout << indent << "separating form: " << r.separating.to_string() << "\n";
    std::cout << indent << "R(u) = " << uni_to_string(r.R, "u") << "\n";
    for (std::size_t i = 0; i < r.A.size(); ++i)
        std::cout << indent << "A_" << r.ring->vars[i] << "(u) = " << uni_to_string(r.A[i], "u")
                  << "\n";
}

void print_work_line(const char* name, const StageWork& sw) {
    const WorkCounters& w = sw.work;
    std::cout << "  " << name << ": groebner_calls=" << w.groebner_calls
              << " reduction_steps=" << w.reduction_steps << " colon_calls=" << w.colon_calls
              << " saturations=" << w.saturations << " intersections=" << w.intersections
              << " rur_builds=" << w.rur_builds;
    if (sw.wall_ms >= 0) std::cout << " wall_ms=" << sw.wall_ms;
    std::cout << "\n";
}

void print_report_text(const RadicalityReport& rep) {
    std::cout << "verdict: " << (rep.verdict ? "true" : "false") << "\n";
    std::cout << "stage: " << rep.stage << "\n";
    std::cout << "seed: " << rep.seed << "\n";
    if (!rep.deg_table.empty()) {
        std::cout << "deg_mu:";
        bool first = true;
        for (const auto& [mu, v] : rep.deg_table) {
            std::cout << (first ? " " : ", ") << "deg_" << mu << " = " << v;
            first = false;
        }
        std::cout << "\n";
    }
    if (rep.projective_dimension >= 0)
        std::cout << "projective dimension: " << rep.projective_dimension << "\n";
    if (rep.witness.present) {
        std::cout << "witness:\n";
        std::cout << "  tested dimension: " << rep.witness.nu << "\n";
        std::cout << "  sigma: " << rep.witness.sigma << " (expected " << rep.witness.expected
                  << ")\n";
        print_rur_text(rep.witness.rur, "  ");
    }
    if (rep.has_segre)
        std::cout << "segre classes: saturated = " << rep.segre.class_A.to_string()
                  << ", original = " << rep.segre.class_B.to_string() << "\n";
    std::cout << "work:\n";
    const char* names[4] = {"stage0", "stage1", "stage2", "stage3"};
    for (int k = 0; k < 4; ++k) print_work_line(names[k], rep.stages[(std::size_t)k]);
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
}

int cmd_is_radical(const Options& o) {
    IdealFile f = load_ideal(o.file);
    IdealHandle I(f.ring, f.gens);
    RadicalityOptions ro;
    ro.seed = o.seed;
    ro.coeff_bound = o.coeff_bound;
    ro.max_retries = o.max_retries;
    ro.wall_times = o.wall_times;
    RadicalityReport rep = radicality_pipeline(I, ro, o.stage);
    if (o.as_json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        print_report_text(rep);
    return o.strict && !rep.verdict ? 1 : 0;
}

int cmd_segre(const Options& o) {
    IdealFile f = load_ideal(o.file);
    IdealHandle I(f.ring, f.gens);
    GenericScalarSource src = make_src(o);
    ChowClass c = segre_class(I, src);
    if (o.as_json) {
        json j;
        j["class"] = c.to_string();
        json coeffs = json::array();
        for (const auto& z : c.coeff) coeffs.push_back(z.get_str());
        j["coefficients"] = coeffs;
        j["ambient_dimension"] = c.n;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << c.to_string() << "\n";
    }
    return 0;
}

int cmd_projective_degrees(const Options& o) {
    IdealHandle X, Y;
    if (o.ambient_file.empty()) {
        IdealFile f = load_ideal(o.file);
        X = IdealHandle(f.ring, f.gens);
        Y = IdealHandle::zero(f.ring);
    } else {
        std::tie(X, Y) = load_pair(o.file, o.ambient_file);
    }
    GenericScalarSource src = make_src(o);
    ProjectiveDegrees pd = projective_degrees(X, Y, src);
    if (o.as_json) {
        std::cout << projective_degrees_to_json(pd).dump(2) << "\n";
    } else {
        std::cout << "(";
        for (std::size_t i = 0; i < pd.d.size(); ++i)
            std::cout << (i ? ", " : "") << pd.d[i];
        std::cout << ")\n";
        std::cout << "form degree: " << pd.form_degree << "\n";
    }
    return 0;
}

int cmd_multiplicity(const Options& o) {
    auto [X, Y] = load_pair(o.file, o.ambient_file);
    GenericScalarSource src = make_src(o);
    long e = multiplicity(X, Y, src);
    if (o.as_json) {
        json j;
        j["multiplicity"] = e;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << e << "\n";
    }
    return 0;
}

int cmd_deg_mu(const Options& o) {
    IdealFile f = load_ideal(o.file);
    IdealHandle I(f.ring, f.gens);
    GenericScalarSource src = make_src(o);
    if (o.mu >= 0) {
        long v = deg_mu(I, o.mu, src);
        if (o.as_json) {
            json j;
            j["mu"] = o.mu;
            j["deg"] = v;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << v << "\n";
        }
    } else {
        std::map<long, long> table = deg_mu_table(I, src);
        if (o.as_json) {
            json j = json::object();
            for (const auto& [mu, v] : table) j[std::to_string(mu)] = v;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& [mu, v] : table) std::cout << "deg_" << mu << " = " << v << "\n";
        }
    }
    return 0;
}

int cmd_sample(const Options& o) {
    IdealFile f = load_ideal(o.file);
    IdealHandle I(f.ring, f.gens);
    GenericScalarSource src = make_src(o);
    Chart chart = dehomogenize_generic(I, src);
    std::vector<RURPoints> clusters = sample_component_points(chart.ideal, src);
    if (o.as_json) {
        json arr = json::array();
        for (const auto& r : clusters) arr.push_back(rur_to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "clusters: " << clusters.size() << "\n";
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            std::cout << "cluster " << i + 1 << ":\n";
            print_rur_text(clusters[i], "  ");
        }
    }
    return 0;
}

int cmd_rur(const Options& o) {
    IdealFile f = load_ideal(o.file);
    IdealHandle I(f.ring, f.gens);
    if (!is_zero_dimensional(I))
        throw std::invalid_argument("rur: input is not zero-dimensional as an affine ideal");
    GenericScalarSource src = make_src(o);
    RURPoints r = rur_construct(radical_zero_dim(I), src);
    r.dimension_tag = 0;
    if (o.as_json)
        std::cout << rur_to_json(r).dump(2) << "\n";
    else
        print_rur_text(r, "");
    return 0;
}

int cmd_equidim(const Options& o) {
    IdealFile f = load_ideal(o.file);
    IdealHandle I(f.ring, f.gens);
    EquidimDecomposition dec = equidimensional_decomposition(I);
    MonomialOrder ord = order_of(o);
    if (o.as_json) {
        json arr = json::array();
        for (const auto& p : dec.pieces) {
            json j;
            j["dimension"] = p.dim;
            j["generators"] = polys_to_json(p.ideal.groebner(ord));
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& p : dec.pieces) {
            std::cout << "dimension " << p.dim << ":\n";
            print_polys(p.ideal.groebner(ord), "  ");
        }
    }
    return 0;
}

int cmd_saturate(const Options& o) {
    IdealHandle I, J;
    if (o.by_file.empty()) {
        IdealFile f = load_ideal(o.file);
        I = IdealHandle(f.ring, f.gens);
        J = irrelevant_ideal(f.ring);
    } else {
        std::tie(I, J) = load_pair(o.file, o.by_file);
    }
    IdealHandle K = saturate(I, J);
    MonomialOrder ord = order_of(o);
    if (o.as_json) {
        json j;
        j["generators"] = polys_to_json(K.groebner(ord));
        std::cout << j.dump(2) << "\n";
    } else {
        print_polys(K.groebner(ord), "");
    }
    return 0;
}

int dispatch(const Options& o, const std::string& cmd) {
    BudgetScope scope(o.budget);
    if (cmd == "is-radical") return cmd_is_radical(o);
    if (cmd == "segre") return cmd_segre(o);
    if (cmd == "projective-degrees") return cmd_projective_degrees(o);
    if (cmd == "multiplicity") return cmd_multiplicity(o);
    if (cmd == "deg-mu") return cmd_deg_mu(o);
    if (cmd == "sample") return cmd_sample(o);
    if (cmd == "rur") return cmd_rur(o);
    if (cmd == "equidim") return cmd_equidim(o);
    return cmd_saturate(o);
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--seed", o.seed, "seed for all generic scalar choices")
        ->capture_default_str();
    cmd->add_option("--coeff-bound", o.coeff_bound, "bound for random nonzero coefficients")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-retries", o.max_retries, "retries before a genericity failure")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--order", o.order, "monomial order for printed Groebner bases")
        ->check(CLI::IsMember({"grevlex", "lex"}))
        ->capture_default_str();
    cmd->add_flag("--json", o.as_json, "machine-readable JSON output");
    cmd->add_option("--budget", o.budget, "reduction-step budget before giving up")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--strict", o.strict, "exit 1 when the verdict is false");
    cmd->add_flag("--wall-times", o.wall_times,
                  "include wall-clock stage timings (output no longer byte-stable)");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"exact radicality and Segre-class toolkit for homogeneous ideals over Q"};
    app.require_subcommand(1);
    add_common(&app, o);

    auto* c_isr = app.add_subcommand(
        "is-radical", "decide whether the saturation by the irrelevant ideal is radical");
    c_isr->add_option("file", o.file, "ideal file")->required();
    c_isr->add_option("--stage", o.stage, "stop after this pipeline stage")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();

    auto* c_segre = app.add_subcommand("segre", "Segre class of the scheme in its projective space");
    c_segre->add_option("file", o.file, "ideal file")->required();

    auto* c_pd = app.add_subcommand("projective-degrees",
                                    "projective-degree tuple of the map cut out by the ideal");
    c_pd->add_option("file", o.file, "ideal file")->required();
    c_pd->add_option("--ambient", o.ambient_file, "ambient ideal file (default: projective space)");

    auto* c_mult = app.add_subcommand("multiplicity",
                                      "Hilbert-Samuel multiplicity of the ambient scheme along X");
    c_mult->add_option("file", o.file, "ideal file of the center X")->required();
    c_mult->add_option("--ambient", o.ambient_file, "ideal file of the ambient scheme Y")
        ->required();

    auto* c_degmu = app.add_subcommand(
        "deg-mu", "degree of the dimension-mu isolated part (table without --mu)");
    c_degmu->add_option("file", o.file, "ideal file")->required();
    c_degmu->add_option("--mu", o.mu, "component dimension")->check(CLI::NonNegativeNumber);

    auto* c_sample = app.add_subcommand("sample",
                                        "generic points on every irreducible component, as RURs");
    c_sample->add_option("file", o.file, "ideal file (homogeneous)")->required();

    auto* c_rur = app.add_subcommand(
        "rur", "rational univariate representation of a zero-dimensional affine ideal");
    c_rur->add_option("file", o.file, "ideal file (affine, finitely many points)")->required();

    auto* c_eq = app.add_subcommand("equidim",
                                    "set-theoretic equidimensional pieces, one reduced basis each");
    c_eq->add_option("file", o.file, "ideal file")->required();

    auto* c_sat = app.add_subcommand("saturate", "saturation I : J^infinity");
    c_sat->add_option("file", o.file, "ideal file for I")->required();
    c_sat->add_option("--by", o.by_file, "ideal file for J (default: the irrelevant ideal)");

    for (auto* sub : {c_isr, c_segre, c_pd, c_mult, c_degmu, c_sample, c_rur, c_eq, c_sat})
        add_common(sub, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(o, cmd);
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const file_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const genericity_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const dimension_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
}
