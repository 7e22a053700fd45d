#include "turan/bounds.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace turan {

namespace {

const char* kDecompositionCite = "component decomposition: (sum_i x_i^(-1/(r-1)))^(-(r-1))";
const char* kDeCaenCite = "de Caen: t(r,l+1) >= 1/C(l,r-1)";
const char* kSidorenkoCite = "Sidorenko: tdot_r(l) <= (r-1)^2/l^2";
const char* kRazborovCite = "Razborov (flag algebras): pi(3,4) <= 0.561666";
const char* kConstructionCite = "iterated constructions: pi(3,4) >= 5/9";

Rational pow_rational(const Rational& x, int e) {
    Rational acc = 1;
    for (int i = 0; i < e; ++i) acc *= x;
    return acc;
}

}

DensityInterval combine_sequence(const std::vector<DensityInterval>& intervals, int r) {
    if (r < 3) throw std::invalid_argument("combine_sequence requires r >= 3");
    if (intervals.empty()) throw std::invalid_argument("combine_sequence requires at least one interval");
    for (const auto& iv : intervals) {
        if (iv.lo <= 0) throw std::invalid_argument("combine_sequence requires positive lower endpoints");
    }
    if (intervals.size() == 1) return intervals.front();

    int k = r - 1;
    // Increasing in each argument: evaluate at all-lo for lo, all-hi for hi.
    // x^(-1/k) is decreasing, so the lo endpoint needs the roots rounded up
    // and the hi endpoint needs them rounded down.
    Rational sum_up = 0, sum_down = 0;
    for (const auto& iv : intervals) {
        sum_up += kth_root_enclosure(Rational(1) / iv.lo, k).second;
        sum_down += kth_root_enclosure(Rational(1) / iv.hi, k).first;
    }
    return DensityInterval(Rational(1) / pow_rational(sum_up, k),
                           Rational(1) / pow_rational(sum_down, k));
}

DensityInterval point_t3_of_2() {
    return DensityInterval::point(1);
}

Rational de_caen_lower(int r, int l) {
    if (r < 2 || l < r - 1) throw std::invalid_argument("de_caen_lower requires l >= r-1 >= 1");
    return Rational(1) / Rational(binomial_int(l, r - 1));
}

SidorenkoBound sidorenko_upper(int r, int l) {
    if (r < 2 || l < r - 1) throw std::invalid_argument("sidorenko_upper requires l >= r-1 >= 1");
    Rational v(Int(r - 1) * (r - 1), Int(l) * l);
    return {v, l % (r - 1) == 0};
}

DensityInterval t_interval(int r, int k) {
    if (k < r) throw std::invalid_argument("t_interval requires k >= r");
    if (r == 3 && k == 4) {
        return DensityInterval(Rational(438334, 1000000), Rational(4, 9));
    }
    return DensityInterval(de_caen_lower(r, k - 1), sidorenko_upper(r, k - 1).value);
}

BoundReport t_interval_report(int r, int k) {
    BoundReport report("t(" + std::to_string(r) + "," + std::to_string(k) + ")",
                       t_interval(r, k));
    if (r == 3 && k == 4) {
        report.derivation.push_back({"cited_upper", kRazborovCite, {"lo = 1 - 0.561666"}});
        report.derivation.push_back({"cited_lower", kConstructionCite, {"hi = 1 - 5/9 = 4/9"}});
    } else {
        auto sid = sidorenko_upper(r, k - 1);
        report.derivation.push_back(
            {"de_caen_lower", kDeCaenCite, {"lo = " + rational_to_string(report.interval.lo)}});
        report.derivation.push_back(
            {"sidorenko_upper",
             std::string(kSidorenkoCite) +
                 (sid.constructive ? " (realized by a balanced complete union)" : " (cited)"),
             {"hi = " + rational_to_string(report.interval.hi)}});
    }
    return report;
}

Rational t3_limit_odd(int m) {
    if (m < 1) throw std::invalid_argument("t3_limit_odd requires m >= 1");
    return Rational(1, Int(m) * m);
}

DensityInterval t3_limit_even(int m, const DensityInterval& t34) {
    if (m < 1) throw std::invalid_argument("t3_limit_even requires m >= 1");
    if (t34.lo <= 0) throw std::invalid_argument("t3_limit_even requires t34.lo > 0");
    if (m == 1) return t34;
    // (m-1 + t34^(-1/2))^(-2), increasing in t34
    Rational u_up = kth_root_enclosure(Rational(1) / t34.lo, 2).second;
    Rational u_down = kth_root_enclosure(Rational(1) / t34.hi, 2).first;
    Rational lo = Rational(1) / pow_rational(Rational(m - 1) + u_up, 2);
    Rational hi = Rational(1) / pow_rational(Rational(m - 1) + u_down, 2);
    return DensityInterval(lo, hi);
}

std::map<int, DensityInterval> default_density_table(int r, int max_s) {
    std::map<int, DensityInterval> table;
    for (int s = r - 1; s <= max_s; ++s) {
        table.emplace(s, s == r - 1 ? DensityInterval::point(1) : t_interval(r, s + 1));
    }
    return table;
}

namespace {

// Multisets of m positive integers summing to total, entries ascending.
void enumerate_multisets(int m, int total, int min_entry, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (m == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int s = min_entry; s * m <= total; ++s) {
        cur.push_back(s);
        enumerate_multisets(m - 1, total - s, s, cur, out);
        cur.pop_back();
    }
}

}

BoundReport t_limit_components(int r, int k, int m,
                               const std::map<int, DensityInterval>& table) {
    if (r < 3) throw std::invalid_argument("t_limit_components requires r >= 3");
    if (m < 1 || m > k - 1) throw std::invalid_argument("t_limit_components requires 1 <= m <= k-1");

    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    enumerate_multisets(m, k - 1, 1, cur, multisets);

    struct Candidate {
        IndependenceSequence seq;
        DensityInterval interval;
    };
    std::vector<Candidate> candidates;
    std::vector<DerivationStep> steps;
    steps.push_back({"enumerate_multisets", "candidates S with |S| = m, ||S|| = k-1",
                     {std::to_string(multisets.size()) + " multisets"}});

    for (const auto& ms : multisets) {
        std::vector<DensityInterval> parts;
        bool feasible = true;
        for (int s : ms) {
            if (s == 1) continue;  // vanishing singleton components
            if (s <= r - 2) {      // no connected component has 2 <= alpha <= r-2
                feasible = false;
                break;
            }
            auto it = table.find(s);
            if (it == table.end()) {
                throw std::invalid_argument("t_limit_components: table missing entry for s=" +
                                            std::to_string(s));
            }
            parts.push_back(it->second);
        }
        if (!feasible || parts.empty()) continue;
        DensityInterval combined = parts.size() == 1 ? parts.front() : combine_sequence(parts, r);
        IndependenceSequence seq{std::vector<int>(ms)};
        steps.push_back({"combine_sequence", kDecompositionCite,
                         {"S={" + seq.to_string() + "}", combined.to_string()}});
        candidates.push_back({std::move(seq), std::move(combined)});
    }

    if (candidates.empty()) {
        throw std::invalid_argument("t_limit_components: no feasible multiset for these parameters");
    }

    Rational lo_min = candidates.front().interval.lo;
    Rational hi_min = candidates.front().interval.hi;
    for (const auto& c : candidates) {
        lo_min = std::min(lo_min, c.interval.lo);
        hi_min = std::min(hi_min, c.interval.hi);
    }

    BoundReport report("t(" + std::to_string(r) + "," + std::to_string(k) + ";" +
                           std::to_string(m) + ")",
                       DensityInterval(lo_min, hi_min));
    report.derivation = std::move(steps);
    for (const auto& c : candidates) {
        if (c.interval.lo <= hi_min) report.minimizers.push_back(c.seq);
    }
    std::sort(report.minimizers.begin(), report.minimizers.end());
    report.derivation.push_back(
        {"interval_min", "pointwise minimum over candidate multisets",
         {report.interval.to_string(), std::to_string(report.minimizers.size()) + " candidate minimizer(s)"}});
    return report;
}

BoundReport average_lemma_check(int l) {
    if (l < 2) throw std::invalid_argument("average_lemma_check requires l >= 2");

    // tdot_3({l+1} + (l-1)*{1}) = tdot_3(l+1) >= 1/C(l+1,2)  vs  tdot_3(l*{2}) = 1/l^2
    Rational left1 = de_caen_lower(3, l + 1);
    Rational right1 = t3_limit_odd(l);
    bool pass1 = left1 > right1;

    // tdot_3({l+2} + (l-1)*{1}) >= 1/C(l+2,2)  vs
    // tdot_3({3} + (l-1)*{2}) = (l-1 + tdot_3(3)^(-1/2))^(-2) <= ((2l+1)/2)^(-2)
    Rational left2 = de_caen_lower(3, l + 2);
    Rational t33_upper = sidorenko_upper(3, 3).value;  // 4/9, a perfect square
    Rational right2 = t3_limit_even(l, DensityInterval::point(t33_upper)).hi;
    bool pass2 = left2 > right2;

    BoundReport report("average_lemma(" + std::to_string(l) + ")",
                       DensityInterval(0, 1));
    report.pass = pass1 && pass2;
    report.derivation.push_back({"de_caen_lower", kDeCaenCite,
                                 {"l+1: " + rational_to_string(left1), "l+2: " + rational_to_string(left2)}});
    report.derivation.push_back({"strict_compare_1", "1/C(l+1,2) > 1/l^2",
                                 {rational_to_string(left1) + " > " + rational_to_string(right1),
                                  pass1 ? "pass" : "FAIL"}});
    report.derivation.push_back({"strict_compare_2", "1/C(l+2,2) > (l-1+3/2)^(-2)",
                                 {rational_to_string(left2) + " > " + rational_to_string(right2),
                                  pass2 ? "pass" : "FAIL"}});
    return report;
}

int max_components(int k, int r) {
    if (r < 2 || k <= r) throw std::invalid_argument("max_components requires k > r >= 2");
    return (k - 1) / (r - 1);
}

JensenReport jensen_check(const std::vector<double>& t, const std::vector<double>& p, int r) {
    if (t.empty() || t.size() != p.size()) {
        throw std::invalid_argument("jensen_check requires matching nonempty t and p");
    }
    if (r < 2) throw std::invalid_argument("jensen_check requires r >= 2");
    double psum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= 0) throw std::invalid_argument("jensen_check requires t_i > 0");
        if (p[i] <= 0 || p[i] > 1) throw std::invalid_argument("jensen_check requires p_i in (0,1]");
        psum += p[i];
    }
    if (std::abs(psum - 1.0) > 1e-12) throw std::invalid_argument("jensen_check requires sum(p) = 1");

    JensenReport rep{0.0, 0.0, false, {}};
    double csum = 0;
    std::vector<double> c(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        rep.lhs += t[i] * std::pow(p[i], r);
        c[i] = std::pow(t[i], -1.0 / (r - 1));
        csum += c[i];
    }
    rep.rhs = std::pow(csum, -(r - 1.0));
    rep.holds = rep.lhs >= rep.rhs - 1e-12;
    rep.p_star.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) rep.p_star[i] = c[i] / csum;
    return rep;
}

bool binom_shift_compare(int a, int b, int r) {
    if (!(b >= a && a > r && r > 1)) {
        throw std::invalid_argument("binom_shift_compare requires b >= a > r > 1");
    }
    return binomial_int(a, r) + binomial_int(b, r) <
           binomial_int(a - 1, r) + binomial_int(b + 1, r);
}

std::int64_t thm_max_value(int n) {
    if (n < 6) throw std::invalid_argument("thm_max_value requires n >= 6");
    Int v = (n % 2 == 0)
                ? 2 * binomial_int(n / 2, 3)
                : binomial_int((n - 1) / 2, 3) + binomial_int((n + 1) / 2, 3);
    return static_cast<std::int64_t>(v);
}

nlohmann::json BoundReport::to_json() const {
    nlohmann::json j;
    j["quantity"] = quantity;
    j["lo"] = rational_to_string(interval.lo);
    j["hi"] = rational_to_string(interval.hi);
    auto steps = nlohmann::json::array();
    for (const auto& s : derivation) {
        steps.push_back({{"rule", s.rule}, {"citation", s.citation}, {"inputs", s.inputs}});
    }
    j["derivation"] = std::move(steps);
    if (!minimizers.empty()) {
        auto ms = nlohmann::json::array();
        for (const auto& m : minimizers) ms.push_back(m.entries());
        j["minimizers"] = std::move(ms);
    }
    if (!pass) j["pass"] = false;
    return j;
}

}
