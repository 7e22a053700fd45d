#pragma once

// Exact minimization of covering edge counts: T(n,k,r), its m-component
// variant, connected kernels with an independence budget, and exact
// independence sequences. Iterative deepening on the edge count with a
// branch-and-bound covering search underneath.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "turan/hypergraph.hpp"

namespace turan {

enum class Family { T, TComponents, TildeT, ConnAlpha };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct SolveSpec {
    Family family = Family::T;
    int n = 0;
    int r = 0;
    int k = -1;                     // T, TComponents
    int m = -1;                     // TComponents
    IndependenceSequence sequence;  // TildeT
    int alpha_budget = -1;          // ConnAlpha
    // Enumerate every optimal witness in canonical storage order (labeled
    // witnesses, not isomorphism classes).
    bool enumerate_all = false;

    void validate() const;  // throws std::invalid_argument
    std::string cache_key() const;
    nlohmann::json to_json() const;
    static SolveSpec from_json(const nlohmann::json& j);
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::int64_t elapsed_ms = 0;
    std::int64_t lower_bound_used = 0;
    int threads = 1;
};

struct Certificate {
    SolveSpec spec;
    bool infeasible = false;
    bool optimal = true;  // false when a budget cut the search short
    std::optional<std::int64_t> value;
    std::optional<Hypergraph> witness;
    std::optional<std::vector<Hypergraph>> all_witnesses;
    SearchStats stats;
    std::string toolkit_version;

    nlohmann::json to_json() const;
    static Certificate from_json(const nlohmann::json& j);
};

struct SolveOptions {
    int threads = 1;
    std::uint64_t node_budget = 0;  // 0 = unlimited
    double time_budget_s = 0.0;     // 0 = unlimited
};

// ceil(C(n,k) / C(n-r,k-r)): every r-edge lies in C(n-r,k-r) of the C(n,k)
// k-subsets, so at least this many edges are needed. Valid for r <= k <= n.
std::int64_t lower_bound_count(int n, int k, int r);

// Minimum edges of an n-vertex r-graph in which every k-subset contains an
// edge. The returned witness is the colex-lexicographically least optimum.
Certificate min_cover(int n, int k, int r, const SolveOptions& opts = {},
                      bool enumerate_all = false);

// Same with exactly m connected components; solved by composing connected
// kernels over part-size partitions and per-part independence budgets.
Certificate min_cover_components(int n, int k, int r, int m, const SolveOptions& opts = {},
                                 bool enumerate_all = false);

// Minimum edges of a CONNECTED n-vertex r-graph with alpha <= s.
Certificate min_edges_connected_alpha(int n, int r, int s, const SolveOptions& opts = {});

// Minimum edges with independence sequence exactly S (exact per-component
// alpha and component count).
Certificate tilde_T(int n, int r, const IndependenceSequence& s, const SolveOptions& opts = {},
                    bool enumerate_all = false);

// Dispatch on spec.family.
Certificate solve(const SolveSpec& spec, const SolveOptions& opts = {});

// Re-checks a certificate's witnesses against its spec using hypergraph-core
// queries only. On failure returns false and, if `why` is given, a reason.
bool validate_certificate(const Certificate& cert, std::string* why = nullptr);

}
