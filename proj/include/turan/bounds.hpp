#pragma once

// Exact interval calculus for asymptotic covering densities t(r,k), t(r,k;m)
// and tdot_r(S): the component decomposition formula, de Caen's lower bound,
// construction upper bounds, and closed forms for 3-graphs.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"

namespace turan {

struct DerivationStep {
    std::string rule;
    std::string citation;
    std::vector<std::string> inputs;
};

// A derived density bound together with the rules that produced it.
struct BoundReport {
    std::string quantity;
    DensityInterval interval;
    std::vector<DerivationStep> derivation;
    // Only for t_limit_components: the multisets whose intervals overlap the
    // minimum (a unique entry certifies a unique minimizer).
    std::vector<IndependenceSequence> minimizers;
    // Only for average_lemma_check.
    bool pass = true;

    BoundReport(std::string quantity_, DensityInterval interval_)
        : quantity(std::move(quantity_)), interval(std::move(interval_)) {}

    nlohmann::json to_json() const;
};

// Enclosure of (sum_i x_i^(-1/(r-1)))^(-(r-1)), the density of a disjoint
// union with per-component densities x_i. Increasing in every argument.
// A single interval is returned unchanged (one-term identity).
DensityInterval combine_sequence(const std::vector<DensityInterval>& intervals, int r);

// tdot_3(2) = 1: a 3-graph with independence number at most 2 is complete.
DensityInterval point_t3_of_2();

// t(r,l+1) >= 1/C(l,r-1).
Rational de_caen_lower(int r, int l);

struct SidorenkoBound {
    Rational value;        // (r-1)^2 / l^2
    bool constructive;     // realized by a balanced complete union when (r-1) | l
};
SidorenkoBound sidorenko_upper(int r, int l);

// [de_caen_lower(r,k-1), sidorenko_upper(r,k-1)], except (3,4) which uses the
// cited constants: pi(3,4) <= 0.561666 (Razborov) and pi(3,4) >= 5/9
// (constructions), giving [0.438334, 4/9].
DensityInterval t_interval(int r, int k);

// t_interval wrapped with its derivation chain.
BoundReport t_interval_report(int r, int k);

// t(3,2m+1;m) = 1/m^2.
Rational t3_limit_odd(int m);

// t(3,2m+2;m) = (m-1 + t34^(-1/2))^(-2), monotone in t34.
DensityInterval t3_limit_even(int m, const DensityInterval& t34);

// Default table of tdot_r(s) enclosures for s = r-1 .. max_s:
// tdot_r(r-1) = 1 exactly, otherwise t_interval(r, s+1).
std::map<int, DensityInterval> default_density_table(int r, int max_s);

// min over multisets S with |S| = m, ||S|| = k-1 of the combined enclosure.
// Entries equal to 1 contribute nothing (vanishing components); entries in
// [2, r-2] admit no component and disqualify the multiset. All candidate
// minimizers whose interval overlaps the minimum are reported.
BoundReport t_limit_components(int r, int k, int m,
                               const std::map<int, DensityInterval>& table);

// Verifies, by exact comparison, the two strict inequalities that make
// all-2 sequences optimal for 3-graphs:
//   1/C(l+1,2) > 1/l^2   and   1/C(l+2,2) > (l-1+3/2)^(-2).
BoundReport average_lemma_check(int l);

// floor((k-1)/(r-1)): the most components an optimal covering r-graph can
// have once n >= k + C(k-2, r-1).
int max_components(int k, int r);

struct JensenReport {
    double lhs;
    double rhs;
    bool holds;                  // lhs >= rhs - 1e-12
    std::vector<double> p_star;  // equality-attaining weights
};

// sum_i t_i p_i^r vs (sum_i t_i^(-1/(r-1)))^(-(r-1)) for probabilities p.
JensenReport jensen_check(const std::vector<double>& t, const std::vector<double>& p, int r);

// C(a,r) + C(b,r) < C(a-1,r) + C(b+1,r); true whenever b >= a > r > 1.
bool binom_shift_compare(int a, int b, int r);

// Minimum edge count of a covering 3-graph (k = 5) with >= 2 components:
// 2*C(n/2,3) for even n, C((n-1)/2,3) + C((n+1)/2,3) for odd n.
std::int64_t thm_max_value(int n);

}
