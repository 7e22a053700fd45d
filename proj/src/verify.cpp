#include "turan/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "turan/bounds.hpp"
#include "turan/oracle.hpp"
#include "turan/rational.hpp"

namespace turan {

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

void SuiteReport::add(std::string label, bool pass, std::string detail) {
    checks.push_back({std::move(label), pass, std::move(detail)});
}

void print_report(std::ostream& out, const SuiteReport& report) {
    for (const auto& c : report.checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << report.suite << ": " << c.label;
        if (!c.detail.empty()) out << "  [" << c.detail << "]";
        out << "\n";
    }
    out << (report.all_pass() ? "PASS  " : "FAIL  ") << report.suite << " ("
        << report.checks.size() << " checks)\n";
}

namespace {

std::string fmt_ms(std::int64_t ms) { return std::to_string(ms) + " ms"; }

SuiteReport suite_thm_max(const VerifyParams& params) {
    SuiteReport report{"thm-max", {}};
    int max_n = params.max_n > 0 ? params.max_n : (params.extended ? 10 : 8);
    for (int n = 6; n <= max_n; ++n) {
        Certificate cert = min_cover_components(n, 5, 3, 2, params.solve);
        std::int64_t expect = thm_max_value(n);
        bool ok = cert.optimal && cert.value && *cert.value == expect;
        std::string why;
        if (ok && !validate_certificate(cert, &why)) {
            ok = false;
        }
        report.add("T(" + std::to_string(n) + ",5,3;2) = " + std::to_string(expect), ok,
                   "got " + (cert.value ? std::to_string(*cert.value) : std::string("-")) + ", " +
                       fmt_ms(cert.stats.elapsed_ms) + why);
    }
    return report;
}

// Exhaustive scan of the 2^20 labeled 3-graphs on 6 vertices: every graph
// with alpha <= 4 and at least two components matches the structure theorem.
SuiteReport suite_lem_components(const VerifyParams& params) {
    SuiteReport report{"lem-components", {}};
    int n = params.n > 0 ? params.n : 6;
    if (n != 6) {
        report.add("exhaustive scan", false, "only n = 6 is supported");
        return report;
    }
    const std::vector<Mask> triples = all_rsubsets(6, 3);  // 20 edges
    const int edge_count = static_cast<int>(triples.size());

    // edges fully inside each vertex subset
    std::array<std::uint32_t, 64> edges_inside{};
    for (Mask s = 0; s < 64; ++s) {
        for (int e = 0; e < edge_count; ++e) {
            if ((triples[e] & ~s) == 0) edges_inside[s] |= 1u << e;
        }
    }
    std::vector<Mask> five_sets = all_rsubsets(6, 5);
    std::vector<Mask> four_sets = all_rsubsets(6, 4);

    std::uint64_t scanned = 0, in_scope = 0, three_comp = 0, two_complete = 0, two_isolated = 0;
    std::uint64_t violations = 0;

    std::array<int, 6> parent{};
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };

    for (std::uint32_t g = 0; g < (1u << edge_count); ++g) {
        ++scanned;
        // alpha <= 4 iff every 5-subset contains an edge
        bool covered = true;
        for (Mask fs : five_sets) {
            if ((g & edges_inside[fs]) == 0) {
                covered = false;
                break;
            }
        }
        if (!covered) continue;

        std::iota(parent.begin(), parent.end(), 0);
        for (std::uint32_t bits = g; bits; bits &= bits - 1) {
            Mask e = triples[std::countr_zero(bits)];
            int head = std::countr_zero(e);
            for (Mask m = e & (e - 1); m; m &= m - 1) {
                int a = find(std::countr_zero(m)), b = find(head);
                if (a != b) parent[a] = b;
            }
        }
        std::array<Mask, 6> comp_of{};
        for (int v = 0; v < 6; ++v) comp_of[find(v)] |= vertex_bit(v);
        std::vector<Mask> comps;
        for (Mask c : comp_of) {
            if (c) comps.push_back(c);
        }
        if (comps.size() < 2) continue;
        ++in_scope;

        bool ok = true;
        if (comps.size() > 3) {
            ok = false;
        } else if (comps.size() == 3) {
            ++three_comp;
            // two isolated vertices plus a complete 3-graph on the rest
            std::sort(comps.begin(), comps.end(),
                      [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
            ok = std::popcount(comps[0]) == 1 && std::popcount(comps[1]) == 1 &&
                 std::popcount(comps[2]) == 4 &&
                 (g & edges_inside[comps[2]]) == edges_inside[comps[2]];
        } else {
            std::sort(comps.begin(), comps.end(),
                      [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
            int s0 = std::popcount(comps[0]), s1 = std::popcount(comps[1]);
            if (s0 == 1 && s1 == 5) {
                ++two_isolated;
                // the big part keeps alpha <= 3: every 4-subset has an edge
                for (Mask fs : four_sets) {
                    if ((fs & ~comps[1]) == 0 && (g & edges_inside[fs]) == 0) {
                        ok = false;
                        break;
                    }
                }
            } else if (s0 == 3 && s1 == 3) {
                ++two_complete;
                ok = (g & edges_inside[comps[0]]) == edges_inside[comps[0]] &&
                     (g & edges_inside[comps[1]]) == edges_inside[comps[1]];
            } else {
                ok = false;  // a component of size 2 cannot exist
            }
        }
        if (!ok) ++violations;
    }

    std::ostringstream detail;
    detail << scanned << " graphs, " << in_scope << " with alpha<=4 and >=2 components ("
           << three_comp << " three-component, " << two_complete << " two-complete, "
           << two_isolated << " with isolated vertex), " << violations << " violations";
    report.add("trichotomy over all 3-graphs on 6 vertices", violations == 0 && in_scope > 0,
               detail.str());
    return report;
}

struct EnumeratedInstance {
    int n, k, r;
    Certificate cert;
};

std::vector<EnumeratedInstance> enumerate_instances(const VerifyParams& params) {
    std::vector<std::tuple<int, int, int>> instances{{5, 4, 3}, {6, 4, 3}};
    if (params.extended) instances.emplace_back(8, 5, 3);
    std::vector<EnumeratedInstance> out;
    for (auto [n, k, r] : instances) {
        out.push_back({n, k, r, min_cover(n, k, r, params.solve, /*enumerate_all=*/true)});
    }
    return out;
}

SuiteReport suite_isolated(const VerifyParams& params) {
    SuiteReport report{"isolated", {}};
    for (const auto& inst : enumerate_instances(params)) {
        const auto& cert = inst.cert;
        bool ok = cert.optimal && cert.all_witnesses.has_value();
        std::size_t count = 0;
        if (ok) {
            Mask full = (Mask{1} << inst.n) - 1;
            count = cert.all_witnesses->size();
            for (const auto& w : *cert.all_witnesses) {
                Mask touched = 0;
                for (Mask e : w.edges()) touched |= e;
                if (touched != full) {
                    ok = false;
                    break;
                }
            }
        }
        report.add("min degree >= 1 in every optimal witness of T(" + std::to_string(inst.n) +
                       "," + std::to_string(inst.k) + "," + std::to_string(inst.r) + ")",
                   ok, std::to_string(count) + " witnesses, " + fmt_ms(cert.stats.elapsed_ms));
    }
    return report;
}

SuiteReport suite_component_cap(const VerifyParams& params) {
    SuiteReport report{"component-cap", {}};
    for (const auto& inst : enumerate_instances(params)) {
        const auto& cert = inst.cert;
        int cap = max_components(inst.k, inst.r);
        bool ok = cert.optimal && cert.all_witnesses.has_value();
        std::size_t count = 0;
        if (ok) {
            count = cert.all_witnesses->size();
            for (const auto& w : *cert.all_witnesses) {
                if (static_cast<int>(connected_components(w).size()) > cap) {
                    ok = false;
                    break;
                }
            }
        }
        report.add("<= " + std::to_string(cap) + " components in every optimal witness of T(" +
                       std::to_string(inst.n) + "," + std::to_string(inst.k) + "," +
                       std::to_string(inst.r) + ")",
                   ok, std::to_string(count) + " witnesses, " + fmt_ms(cert.stats.elapsed_ms));
    }
    return report;
}

SuiteReport suite_jensen(const VerifyParams& params) {
    SuiteReport report{"jensen", {}};
    int count = params.count > 0 ? params.count : 1000;
    std::mt19937 rng(params.seed);
    std::uniform_int_distribution<int> pick_r(2, 4);
    std::uniform_int_distribution<int> pick_m(1, 6);
    std::uniform_real_distribution<double> log_t(-2.3, 2.3);
    std::uniform_real_distribution<double> unit(1e-6, 1.0);

    int bad_ineq = 0, bad_eq = 0;
    for (int i = 0; i < count; ++i) {
        int r = pick_r(rng), m = pick_m(rng);
        std::vector<double> t(m), p(m);
        double psum = 0;
        for (int j = 0; j < m; ++j) {
            t[j] = std::exp(log_t(rng));
            p[j] = -std::log(unit(rng));  // exponential -> uniform on the simplex
            psum += p[j];
        }
        for (int j = 0; j < m; ++j) p[j] /= psum;
        JensenReport rep = jensen_check(t, p, r);
        if (!rep.holds) ++bad_ineq;
        JensenReport eq = jensen_check(t, rep.p_star, r);
        if (std::abs(eq.lhs - eq.rhs) > 1e-9) ++bad_eq;
    }
    report.add("weighted power-mean inequality on " + std::to_string(count) + " random instances",
               bad_ineq == 0, std::to_string(bad_ineq) + " failures");
    report.add("equality at the optimal weights within 1e-9", bad_eq == 0,
               std::to_string(bad_eq) + " failures");
    return report;
}

SuiteReport suite_binom(const VerifyParams&) {
    SuiteReport report{"binom", {}};
    std::uint64_t checked = 0, failures = 0;
    for (int r = 2; r < 60; ++r) {
        for (int a = r + 1; a <= 60; ++a) {
            for (int b = a; b <= 60; ++b) {
                ++checked;
                if (!binom_shift_compare(a, b, r)) ++failures;
            }
        }
    }
    report.add("C(a,r)+C(b,r) < C(a-1,r)+C(b+1,r) on the grid 2 <= r < a <= b <= 60",
               failures == 0, std::to_string(checked) + " triples, " +
                                  std::to_string(failures) + " failures");
    return report;
}

SuiteReport suite_sandwich(const VerifyParams& params) {
    SuiteReport report{"sandwich", {}};
    int max_l = params.max_l > 0 ? params.max_l : 1000;
    int failures = 0;
    for (int l = 2; l <= max_l; ++l) {
        if (!(de_caen_lower(3, l) <= sidorenko_upper(3, l).value)) ++failures;
    }
    report.add("1/C(l,2) <= 4/l^2 for l = 2.." + std::to_string(max_l), failures == 0,
               std::to_string(failures) + " failures");
    return report;
}

SuiteReport suite_average_lemma(const VerifyParams& params) {
    SuiteReport report{"average-lemma", {}};
    int max_l = params.max_l > 0 ? params.max_l : 50;
    int failures = 0;
    for (int l = 2; l <= max_l; ++l) {
        if (!average_lemma_check(l).pass) ++failures;
    }
    report.add("both strict inequalities for l = 2.." + std::to_string(max_l), failures == 0,
               std::to_string(failures) + " failures");
    return report;
}

SuiteReport suite_oracle(const VerifyParams& params) {
    SuiteReport report{"oracle", {}};
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 4}, {5, 5}, {6, 4}, {6, 5}}) {
        Certificate fast = min_cover(n, k, 3, params.solve);
        SolveSpec spec;
        spec.family = Family::T;
        spec.n = n;
        spec.r = 3;
        spec.k = k;
        Certificate slow = naive_oracle(spec);
        bool ok = fast.optimal && fast.value && slow.value && *fast.value == *slow.value;
        report.add("T(" + std::to_string(n) + "," + std::to_string(k) + ",3)", ok,
                   "solver " + (fast.value ? std::to_string(*fast.value) : std::string("-")) +
                       " vs oracle " + (slow.value ? std::to_string(*slow.value) : std::string("-")));
    }
    for (int m : {2, 3}) {
        Certificate fast = min_cover_components(6, 5, 3, m, params.solve);
        SolveSpec spec;
        spec.family = Family::TComponents;
        spec.n = 6;
        spec.r = 3;
        spec.k = 5;
        spec.m = m;
        Certificate slow = naive_oracle(spec);
        bool ok = fast.infeasible == slow.infeasible &&
                  (fast.infeasible || (fast.value && slow.value && *fast.value == *slow.value));
        report.add("T(6,5,3;" + std::to_string(m) + ")", ok,
                   "solver " + (fast.value ? std::to_string(*fast.value) : std::string("inf")) +
                       " vs oracle " + (slow.value ? std::to_string(*slow.value) : std::string("inf")));
    }
    {
        IndependenceSequence seq(std::vector<int>{2, 2});
        Certificate fast = tilde_T(6, 3, seq, params.solve);
        SolveSpec spec;
        spec.family = Family::TildeT;
        spec.n = 6;
        spec.r = 3;
        spec.sequence = seq;
        Certificate slow = naive_oracle(spec);
        bool ok = fast.value && slow.value && *fast.value == *slow.value;
        report.add("Ttilde(6,3;{2,2})", ok,
                   "solver " + (fast.value ? std::to_string(*fast.value) : std::string("inf")) +
                       " vs oracle " + (slow.value ? std::to_string(*slow.value) : std::string("inf")));
    }
    return report;
}

SuiteReport suite_density_monotone(const VerifyParams& params) {
    SuiteReport report{"density-monotone", {}};
    Rational prev(-1);
    bool ok = true;
    std::string seq;
    for (int n = 5; n <= 8; ++n) {
        Certificate cert = min_cover(n, 5, 3, params.solve);
        Rational density(Int(*cert.value), binomial_int(n, 3));
        if (!seq.empty()) seq += ", ";
        seq += std::to_string(*cert.value) + "/" + binomial_int(n, 3).str();
        if (density < prev) ok = false;
        prev = density;
    }
    report.add("T(n,5,3)/C(n,3) non-decreasing for n = 5..8", ok, seq);
    return report;
}

SuiteReport suite_decompose_convergence(const VerifyParams& params) {
    SuiteReport report{"decompose-convergence", {}};
    for (int m : {2, 3}) {
        int n = 6 * m;
        IndependenceSequence seq(std::vector<int>(m, 2));
        Certificate cert = tilde_T(n, 3, seq, params.solve);
        Rational density(Int(*cert.value), binomial_int(n, 3));
        Rational limit(1, Int(m) * m);
        Rational upper = limit * Rational(115, 100);
        bool ok = limit <= density && density <= upper;
        report.add("Ttilde(" + std::to_string(n) + ",3;" + std::to_string(m) +
                       "*{2})/C(n,3) within [1/m^2, 1.15/m^2]",
                   ok, "density " + rational_to_string(density) + " vs [" +
                           rational_to_string(limit) + ", " + rational_to_string(upper) + "]");
    }
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "thm-max",      "lem-components", "isolated",       "component-cap",
        "jensen",       "binom",          "sandwich",       "average-lemma",
        "oracle",       "density-monotone", "decompose-convergence"};
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyParams& params) {
    if (name == "thm-max") return suite_thm_max(params);
    if (name == "lem-components") return suite_lem_components(params);
    if (name == "isolated") return suite_isolated(params);
    if (name == "component-cap") return suite_component_cap(params);
    if (name == "jensen") return suite_jensen(params);
    if (name == "binom") return suite_binom(params);
    if (name == "sandwich") return suite_sandwich(params);
    if (name == "average-lemma") return suite_average_lemma(params);
    if (name == "oracle") return suite_oracle(params);
    if (name == "density-monotone") return suite_density_monotone(params);
    if (name == "decompose-convergence") return suite_decompose_convergence(params);
    throw std::invalid_argument("unknown verify suite: " + name);
}

}
