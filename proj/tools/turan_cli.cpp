// turan: exact covering solver, constructions, density bounds, and the
// verification harness behind one command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource limit (including budget-truncated solves).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "turan/bounds.hpp"
#include "turan/cache.hpp"
#include "turan/constructions.hpp"
#include "turan/io.hpp"
#include "turan/oracle.hpp"
#include "turan/solver.hpp"
#include "turan/verify.hpp"
#include "turan/version.hpp"

using namespace turan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct SolveArgs {
    std::string family;
    int n = 0, r = 0;
    int k = -1, components = -1, alpha = -1;
    std::string sequence;
    bool naive = false;
    bool enumerate_all = false;
    bool at_most = false;
    int threads = 1;
    std::uint64_t node_budget = 0;
    double time_budget = 0;
    std::string cache_path;
    bool require_optimal = false;
    std::string output = "table";
};

struct ConstructArgs {
    std::string type;
    int n = 0, r = 3, k = 0, components = 2;
    std::string sizes;
    std::string output = "text";
};

struct BoundsArgs {
    std::string kind;
    int r = 3, k = 0, components = -1;
    std::string output = "table";
};

struct AlphaArgs {
    std::string file;
    std::string output = "table";
};

struct VerifyArgs {
    std::string suite;
    int max_n = -1, n = -1, max_l = -1, count = -1;
    unsigned seed = 12345;
    bool extended = false;
    int threads = 1;
    std::uint64_t node_budget = 0;
    double time_budget = 0;
};

std::optional<std::string> cache_path_or_env(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("TURAN_CACHE"); env && *env) return std::string(env);
    return std::nullopt;
}

void print_certificate_table(std::ostream& out, const Certificate& cert) {
    const SolveSpec& spec = cert.spec;
    out << "problem:  " << spec.cache_key() << "\n";
    if (cert.infeasible) {
        out << "result:   infeasible\n";
    } else if (cert.value) {
        out << "result:   " << *cert.value << (cert.optimal ? " (proven optimal)" : " (bound only)")
            << "\n";
    } else {
        out << "result:   unresolved (budget exceeded); proven >= " << cert.stats.lower_bound_used
            << "\n";
    }
    if (cert.witness) {
        out << "witness:\n";
        std::ostringstream w;
        write_hypergraph_text(w, *cert.witness);
        std::istringstream lines(w.str());
        std::string line;
        while (std::getline(lines, line)) out << "  " << line << "\n";
    }
    if (cert.all_witnesses) out << "optima:   " << cert.all_witnesses->size() << " witnesses\n";
    out << "stats:    nodes=" << cert.stats.nodes_expanded << " elapsed_ms=" << cert.stats.elapsed_ms
        << " lower_bound=" << cert.stats.lower_bound_used << " threads=" << cert.stats.threads
        << "\n";
}

int emit_certificate(const Certificate& cert, const std::string& output) {
    if (output == "json") {
        std::cout << cert.to_json().dump(2) << "\n";
    } else {
        print_certificate_table(std::cout, cert);
    }
    return cert.optimal ? kExitOk : kExitResourceLimit;
}

Certificate solve_with_cache(const SolveSpec& spec, const SolveOptions& opts,
                             const std::optional<std::string>& cache_path, bool require_optimal,
                             bool naive) {
    if (naive) return naive_oracle(spec);
    std::optional<CertificateCache> cache;
    if (cache_path) cache.emplace(*cache_path);
    if (cache) {
        if (auto hit = cache->lookup(spec.cache_key(), require_optimal)) return *hit;
    }
    Certificate cert = solve(spec, opts);
    std::string why;
    if (!validate_certificate(cert, &why)) {
        throw std::logic_error("internal error: certificate failed re-validation: " + why);
    }
    if (cache && cert.optimal) cache->store(spec.cache_key(), cert);
    return cert;
}

int run_solve(const SolveArgs& args) {
    SolveSpec spec;
    if (args.family == "t") {
        spec.family = Family::T;
        spec.k = args.k;
    } else if (args.family == "tm") {
        spec.family = Family::TComponents;
        spec.k = args.k;
        spec.m = args.components;
    } else if (args.family == "tilde") {
        spec.family = Family::TildeT;
        if (args.sequence.empty()) throw std::invalid_argument("--sequence is required for tilde");
        spec.sequence = IndependenceSequence::parse(args.sequence);
    } else if (args.family == "conn-alpha") {
        spec.family = Family::ConnAlpha;
        spec.alpha_budget = args.alpha;
    } else {
        throw std::invalid_argument("unknown family: " + args.family +
                                    " (expected t|tm|tilde|conn-alpha)");
    }
    spec.n = args.n;
    spec.r = args.r;
    spec.enumerate_all = args.enumerate_all;
    spec.validate();

    SolveOptions opts;
    opts.threads = args.threads;
    opts.node_budget = args.node_budget;
    opts.time_budget_s = args.time_budget;
    auto cache_path = cache_path_or_env(args.cache_path);

    if (args.at_most) {
        if (spec.family != Family::TComponents) {
            throw std::invalid_argument("--at-most only applies to --family tm");
        }
        // smallest value over component counts 1..m
        std::optional<Certificate> best;
        for (int mm = 1; mm <= args.components; ++mm) {
            SolveSpec sub = spec;
            sub.m = mm;
            Certificate cert =
                solve_with_cache(sub, opts, cache_path, args.require_optimal, args.naive);
            if (cert.infeasible || !cert.value) continue;
            if (!best || *cert.value < *best->value) best = cert;
        }
        if (!best) {
            Certificate inf;
            inf.spec = spec;
            inf.infeasible = true;
            inf.toolkit_version = kToolkitVersion;
            return emit_certificate(inf, args.output);
        }
        return emit_certificate(*best, args.output);
    }

    Certificate cert = solve_with_cache(spec, opts, cache_path, args.require_optimal, args.naive);
    return emit_certificate(cert, args.output);
}

int run_construct(const ConstructArgs& args) {
    std::optional<Hypergraph> h;
    if (args.type == "turan") {
        h = turan_graph(args.n, args.k);
    } else if (args.type == "union") {
        if (args.sizes.empty()) throw std::invalid_argument("--sizes is required for union");
        std::vector<int> sizes;
        std::stringstream ss(args.sizes);
        std::string tok;
        while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
        h = disjoint_complete(args.r, sizes);
    } else if (args.type == "balanced") {
        h = balanced_complete_union(args.n, args.r, args.components);
    } else if (args.type == "thm-max") {
        h = thm_max_witness(args.n);
    } else {
        throw std::invalid_argument("unknown construction: " + args.type +
                                    " (expected turan|union|balanced|thm-max)");
    }
    if (args.output == "json") {
        std::cout << hypergraph_to_json(*h).dump(2) << "\n";
    } else {
        write_hypergraph_text(std::cout, *h);
    }
    return kExitOk;
}

int run_bounds(const BoundsArgs& args) {
    auto print_report = [&](const BoundReport& rep) {
        if (args.output == "json") {
            std::cout << rep.to_json().dump(2) << "\n";
        } else {
            std::cout << rep.quantity << " = " << rep.interval.to_string() << "\n";
            if (!rep.minimizers.empty()) {
                std::cout << "minimizers:";
                for (const auto& m : rep.minimizers) std::cout << " {" << m.to_string() << "}";
                std::cout << "\n";
            }
            for (const auto& step : rep.derivation) {
                std::cout << "  " << step.rule << ": " << step.citation;
                for (const auto& in : step.inputs) std::cout << " | " << in;
                std::cout << "\n";
            }
        }
    };

    if (args.kind == "interval") {
        DensityInterval iv = t_interval(args.r, args.k);
        if (args.output == "json") {
            std::cout << nlohmann::json{{"lo", rational_to_string(iv.lo)},
                                        {"hi", rational_to_string(iv.hi)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << iv.to_string() << "\n";
        }
        return kExitOk;
    }
    if (args.kind == "t") {
        print_report(t_interval_report(args.r, args.k));
        return kExitOk;
    }
    if (args.kind == "t-components") {
        if (args.components < 1) throw std::invalid_argument("--components is required");
        print_report(t_limit_components(args.r, args.k, args.components,
                                        default_density_table(args.r, args.k - 1)));
        return kExitOk;
    }
    if (args.kind == "report") {
        BoundReport rep = args.components >= 1
                              ? t_limit_components(args.r, args.k, args.components,
                                                   default_density_table(args.r, args.k - 1))
                              : t_interval_report(args.r, args.k);
        std::cout << rep.to_json().dump(2) << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown bounds kind: " + args.kind +
                                " (expected t|t-components|interval|report)");
}

int run_alpha(const AlphaArgs& args) {
    std::optional<Hypergraph> h;
    if (args.file == "-") {
        h = read_hypergraph_any(std::cin);
    } else {
        std::ifstream in(args.file);
        if (!in) throw ParseError("cannot open " + args.file);
        h = read_hypergraph_any(in);
    }
    int alpha = independence_number(*h);
    IndependenceSequence seq = independence_sequence(*h);
    if (args.output == "json") {
        nlohmann::json j;
        j["n"] = h->n();
        j["r"] = h->r();
        j["edges"] = h->edge_count();
        j["alpha"] = alpha;
        j["components"] = seq.size();
        j["sequence"] = seq.entries();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n=" << h->n() << " r=" << h->r() << " edges=" << h->edge_count()
                  << " alpha=" << alpha << " components=" << seq.size() << " S={"
                  << seq.to_string() << "}\n";
    }
    return kExitOk;
}

int run_verify(const VerifyArgs& args) {
    VerifyParams params;
    params.max_n = args.max_n;
    params.n = args.n;
    params.max_l = args.max_l;
    params.count = args.count;
    params.seed = args.seed;
    params.extended = args.extended;
    params.solve.threads = args.threads;
    params.solve.node_budget = args.node_budget;
    params.solve.time_budget_s = args.time_budget;

    SuiteReport report = run_suite(args.suite, params);
    print_report(std::cout, report);
    return report.all_pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dual Turan numbers: covering solver, constructions, and density bounds"};
    app.set_version_flag("--version", std::string(kToolkitVersion));
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "solve T, T with components, Ttilde, or a connected kernel");
    solve_cmd->add_option("--family", solve_args.family, "t|tm|tilde|conn-alpha")->required();
    solve_cmd->add_option("--n", solve_args.n, "vertex count")->required();
    solve_cmd->add_option("--r", solve_args.r, "uniformity")->required();
    solve_cmd->add_option("--k", solve_args.k, "clique parameter (t, tm)");
    solve_cmd->add_option("--components", solve_args.components, "component count (tm)");
    solve_cmd->add_option("--sequence", solve_args.sequence, "independence sequence, e.g. 2,2,3 (tilde)");
    solve_cmd->add_option("--alpha", solve_args.alpha, "independence budget (conn-alpha)");
    solve_cmd->add_flag("--naive", solve_args.naive, "use the exhaustive oracle instead of the solver");
    solve_cmd->add_flag("--enumerate-all", solve_args.enumerate_all, "collect every optimal witness");
    solve_cmd->add_flag("--at-most", solve_args.at_most, "minimize over component counts 1..m (tm)");
    solve_cmd->add_option("--threads", solve_args.threads, "worker threads");
    solve_cmd->add_option("--node-budget", solve_args.node_budget, "abort after this many search nodes");
    solve_cmd->add_option("--time-budget", solve_args.time_budget, "abort after this many seconds");
    solve_cmd->add_option("--cache", solve_args.cache_path, "certificate cache file (default $TURAN_CACHE)");
    solve_cmd->add_flag("--require-optimal", solve_args.require_optimal,
                        "ignore budget-limited cache entries");
    solve_cmd->add_option("--output", solve_args.output, "json|table");

    ConstructArgs construct_args;
    auto* construct_cmd = app.add_subcommand("construct", "emit a closed-form witness");
    construct_cmd->add_option("type", construct_args.type, "turan|union|balanced|thm-max")->required();
    construct_cmd->add_option("--n", construct_args.n, "vertex count");
    construct_cmd->add_option("--r", construct_args.r, "uniformity");
    construct_cmd->add_option("--k", construct_args.k, "class count (turan)");
    construct_cmd->add_option("--sizes", construct_args.sizes, "part sizes, e.g. 3,4 (union)");
    construct_cmd->add_option("--components", construct_args.components, "part count (balanced)");
    construct_cmd->add_option("--output", construct_args.output, "text|json");

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "asymptotic density intervals");
    bounds_cmd->add_option("kind", bounds_args.kind, "t|t-components|interval|report")->required();
    bounds_cmd->add_option("--r", bounds_args.r, "uniformity")->required();
    bounds_cmd->add_option("--k", bounds_args.k, "clique parameter")->required();
    bounds_cmd->add_option("--components", bounds_args.components, "component count");
    bounds_cmd->add_option("--output", bounds_args.output, "json|table");

    AlphaArgs alpha_args;
    auto* alpha_cmd = app.add_subcommand("alpha", "independence number and sequence of a hypergraph file");
    alpha_cmd->add_option("file", alpha_args.file, "hypergraph file, '-' for stdin")->required();
    alpha_cmd->add_option("--output", alpha_args.output, "json|table");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    std::string suites;
    for (const auto& s : suite_names()) suites += (suites.empty() ? "" : "|") + s;
    verify_cmd->add_option("suite", verify_args.suite, suites)->required();
    verify_cmd->add_option("--max-n", verify_args.max_n, "largest n (thm-max)");
    verify_cmd->add_option("--n", verify_args.n, "n (lem-components)");
    verify_cmd->add_option("--max-l", verify_args.max_l, "largest l (sandwich, average-lemma)");
    verify_cmd->add_option("--count", verify_args.count, "random instances (jensen)");
    verify_cmd->add_option("--seed", verify_args.seed, "random seed");
    verify_cmd->add_flag("--extended", verify_args.extended, "include long non-gating instances");
    verify_cmd->add_option("--threads", verify_args.threads, "worker threads");
    verify_cmd->add_option("--node-budget", verify_args.node_budget, "search node budget");
    verify_cmd->add_option("--time-budget", verify_args.time_budget, "search time budget (seconds)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_args);
        if (construct_cmd->parsed()) return run_construct(construct_args);
        if (bounds_cmd->parsed()) return run_bounds(bounds_args);
        if (alpha_cmd->parsed()) return run_alpha(alpha_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
