#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "swdual/centralizer.hpp"
#include "swdual/hecke.hpp"
#include "swdual/json_io.hpp"
#include "swdual/qsuper.hpp"
#include "swdual/superspace.hpp"

namespace {

using namespace swdual;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    int m = 1;
    int n = 1;
    int r = 3;
    std::string t;
    std::string format = "text";
    std::size_t exact_threshold = 32;
    std::uint64_t seed = SolveOptions{}.seed;
    bool no_fallback = false;

    SolveOptions solve_options() const {
        SolveOptions opts;
        opts.exact_threshold = exact_threshold;
        opts.seed = seed;
        if (no_fallback) opts.fallback = SolveOptions::Fallback::Error;
        return opts;
    }
};

struct CommandResult {
    json results;
    bool pass = false;
};

void print_relation_report(const RelationReport& report) {
    for (const auto& c : report.checks) {
        std::cout << "  " << c.relation << " [";
        for (std::size_t i = 0; i < c.indices.size(); ++i)
            std::cout << (i ? "," : "") << c.indices[i];
        std::cout << "] residual " << (c.zero ? "zero" : "NONZERO");
        if (c.witness)
            std::cout << " at (" << c.witness->row << "," << c.witness->col
                      << ") = " << c.witness->value;
        std::cout << "\n";
    }
    if (report.checks.empty()) std::cout << "  (no relation instances at this size)\n";
}

std::string dim_str(const DimValue& v) {
    if (!v.computed) return "not computed";
    std::string s = std::to_string(v.dim);
    if (v.probabilistic) s += " (probabilistic)";
    return s;
}

CommandResult run_relations(const RunConfig& cfg) {
    const auto report = check_hecke_relations({{cfg.m, cfg.n}, cfg.r});
    if (cfg.format == "text") print_relation_report(report);
    return {json{{"checks", to_json(report)}}, report.all_zero()};
}

CommandResult run_qrelations(const RunConfig& cfg) {
    const auto defining = check_qsuper_relations({cfg.m, cfg.n}, cfg.r);
    const auto tables = check_two_site_tables({cfg.m, cfg.n});
    if (cfg.format == "text") {
        std::cout << "defining relations:\n";
        print_relation_report(defining);
        std::cout << "two-site case tables:\n";
        print_relation_report(tables);
    }
    return {json{{"defining", to_json(defining)}, {"two_site_tables", to_json(tables)}},
            defining.all_zero() && tables.all_zero()};
}

CommandResult run_commute(const RunConfig& cfg) {
    const auto report = verify_commutation(cfg.m, cfg.n, cfg.r);
    if (cfg.format == "text") {
        std::cout << "  generator pairs checked: " << report.pairs_checked << "\n";
        std::cout << "  all pairs commute: " << (report.all_commute ? "yes" : "NO") << "\n";
        if (report.failing_pair)
            std::cout << "  first failing pair: (" << report.failing_pair->first << ","
                      << report.failing_pair->second << ")\n";
    }
    return {to_json(report), report.all_commute};
}

bool duality_pass(const DualityReport& report) {
    return report.double_centralizer && report.hecke_dim_matches_hooks &&
           (!report.mutual_commutation_checked || report.mutual_commutation);
}

CommandResult run_duality(const RunConfig& cfg) {
    const auto report = verify_double_centralizer(cfg.m, cfg.n, cfg.r, cfg.solve_options());
    if (cfg.format == "text") {
        std::cout << "  dim of Hecke image:          " << dim_str(report.hecke_image) << "\n";
        std::cout << "  dim of superalgebra image:   " << dim_str(report.super_image) << "\n";
        std::cout << "  dim of commutant of Hecke:   " << dim_str(report.commutant_of_hecke) << "\n";
        std::cout << "  dim of commutant of super:   " << dim_str(report.commutant_of_super) << "\n";
        std::cout << "  hook sums (f^2, d^2, f*d):   " << report.hook_sum_f2.get_str() << ", "
                  << report.hook_sum_d2.get_str() << ", " << report.hook_sum_fd.get_str() << "\n";
        if (report.mutual_commutation_checked)
            std::cout << "  mutual commutation:          "
                      << (report.mutual_commutation ? "yes" : "NO") << "\n";
        std::cout << "  double centralizer verdict:  "
                  << (report.double_centralizer ? "pass" : "FAIL") << "\n";
        std::cout << "  hook dimension verdict:      "
                  << (report.hecke_dim_matches_hooks ? "pass" : "FAIL") << "\n";
    }
    return {to_json(report), duality_pass(report)};
}

CommandResult run_hook(const RunConfig& cfg) {
    const auto report = verify_hook_decomposition(cfg.m, cfg.n, cfg.r, cfg.solve_options());
    if (cfg.format == "text") {
        std::cout << "  tensor space dimension:      " << report.tensor_dim.get_str() << "\n";
        std::cout << "  sum of f*d over hooks:       " << report.hook_sum_fd.get_str() << "\n";
        std::cout << "  dim of Hecke image:          " << dim_str(report.hecke_image)
                  << " (hook sum " << report.hook_sum_f2.get_str() << ")\n";
        std::cout << "  dim of superalgebra image:   " << dim_str(report.super_image)
                  << " (hook sum " << report.hook_sum_d2.get_str() << ")\n";
        std::cout << "  counting identity:           "
                  << (report.counting_identity ? "pass" : "FAIL") << "\n";
        std::cout << "  Hecke dimension verdict:     "
                  << (report.hecke_dim_matches ? "pass" : "FAIL") << "\n";
        if (report.super_dim_checked)
            std::cout << "  super dimension verdict:     "
                      << (report.super_dim_matches ? "pass" : "FAIL") << "\n";
    }
    return {to_json(report), report.passes()};
}

CommandResult run_specialize(const RunConfig& cfg) {
    const BigRat t = parse_rational(cfg.t);
    const auto report = specialization_probe(cfg.m, cfg.n, cfg.r, t, cfg.solve_options());
    if (cfg.format == "text") {
        for (const auto& pair : report.dims) {
            std::cout << "  " << pair.name << ": exact " << dim_str(pair.exact);
            if (pair.specialized_computed)
                std::cout << ", at t " << pair.specialized
                          << (pair.equal ? " (equal)" : pair.leq ? " (dropped)" : " (EXCEEDS)");
            else
                std::cout << ", not compared";
            std::cout << "\n";
        }
        std::cout << "  specialized dims <= exact:   " << (report.all_leq ? "pass" : "FAIL")
                  << "\n";
        std::cout << "  t behaved generically:       " << (report.all_equal ? "yes" : "no")
                  << "\n";
    }
    return {to_json(report), report.all_leq};
}

CommandResult run_all(const RunConfig& cfg) {
    json results;
    bool pass = true;
    const struct {
        const char* name;
        CommandResult (*fn)(const RunConfig&);
    } steps[] = {{"relations", run_relations},
                 {"qrelations", run_qrelations},
                 {"commute", run_commute},
                 {"duality", run_duality},
                 {"hook", run_hook}};
    for (const auto& step : steps) {
        if (cfg.format == "text") std::cout << step.name << ":\n";
        CommandResult r = step.fn(cfg);
        results[step.name] = std::move(r.results);
        pass = pass && r.pass;
    }
    return {std::move(results), pass};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifies the commuting Hecke-algebra and quantum-superalgebra actions on the"
                 " graded tensor space, the double-centralizer dimensions, and the hook-indexed"
                 " decomposition, in exact arithmetic over Q(q)"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--m", cfg.m, "number of even basis vectors")->capture_default_str();
    app.add_option("--n", cfg.n, "number of odd basis vectors")->capture_default_str();
    app.add_option("--r", cfg.r, "tensor power")->capture_default_str();
    app.add_option("--t", cfg.t, "specialization point, a rational p/q");
    app.add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--exact-threshold", cfg.exact_threshold,
                   "largest tensor-space dimension solved exactly over Q(q)")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for the probabilistic fallback points")
        ->capture_default_str();
    app.add_flag("--no-fallback", cfg.no_fallback,
                 "fail with a resource error instead of falling back to specializations");

    const char* descriptions[][2] = {
        {"relations", "verify the quadratic, braid and commutation relations of the Hecke action"},
        {"qrelations", "verify the quantum-superalgebra relations and the two-site case tables"},
        {"commute", "verify that every Hecke generator commutes with every superalgebra generator"},
        {"duality", "compute image and commutant dimensions and check the double-centralizer equalities"},
        {"hook", "check the hook-indexed dimension sums against the computed image dimensions"},
        {"specialize", "compare exact dimensions with their specializations at q = t"},
        {"all", "run relations, qrelations, commute, duality and hook"},
    };
    for (const auto& d : descriptions) app.add_subcommand(d[0], d[1])->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    if (cfg.m < 0 || cfg.n < 0 || cfg.m + cfg.n < 1) {
        std::cerr << "error: need m, n >= 0 and m + n >= 1\n";
        return kExitUsage;
    }
    if (cfg.r < 1) {
        std::cerr << "error: need r >= 1\n";
        return kExitUsage;
    }
    if (command == "specialize" && cfg.t.empty()) {
        std::cerr << "error: specialize requires --t\n";
        return kExitUsage;
    }

    try {
        if (cfg.format == "text")
            std::cout << command << " (m=" << cfg.m << ", n=" << cfg.n << ", r=" << cfg.r
                      << ")\n";
        CommandResult result;
        if (command == "relations") result = run_relations(cfg);
        else if (command == "qrelations") result = run_qrelations(cfg);
        else if (command == "commute") result = run_commute(cfg);
        else if (command == "duality") result = run_duality(cfg);
        else if (command == "hook") result = run_hook(cfg);
        else if (command == "specialize") result = run_specialize(cfg);
        else result = run_all(cfg);

        if (cfg.format == "json") {
            json doc{{"schema", 1},
                     {"command", command},
                     {"config",
                      {{"m", cfg.m},
                       {"n", cfg.n},
                       {"r", cfg.r},
                       {"exact_threshold", cfg.exact_threshold},
                       {"seed", cfg.seed}}},
                     {"results", std::move(result.results)},
                     {"pass", result.pass}};
            if (!cfg.t.empty()) doc["config"]["t"] = cfg.t;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << (result.pass ? "PASS" : "FAIL") << "\n";
        }
        return result.pass ? kExitPass : kExitFail;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
