#pragma once

// r-uniform hypergraphs on at most 64 vertices, stored as bitmask edge sets.
//
// Vertices are 0-indexed; an edge is an n-bit mask with exactly r set bits.
// Colexicographic order on r-subsets coincides with numeric order on masks,
// so "sorted colex" simply means sorted by mask value.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

using Mask = std::uint64_t;

inline Mask vertex_bit(int v) { return Mask{1} << v; }

// Exact binomial coefficient; 0 when k < 0 or k > n. Safe for n <= 64.
std::uint64_t binomial64(int n, int k);

// Smallest r-subset mask {0,...,r-1}.
Mask first_rsubset(int r);

// Next r-subset in colex (numeric) order: Gosper's hack.
Mask next_rsubset_colex(Mask v);

// All r-subsets of {0,...,n-1} in colex order.
std::vector<Mask> all_rsubsets(int n, int r);

std::vector<int> mask_to_vertices(Mask m);
Mask vertices_to_mask(std::span<const int> vs);

// Multiset of per-component independence numbers, kept sorted ascending.
class IndependenceSequence {
public:
    IndependenceSequence() = default;
    explicit IndependenceSequence(std::vector<int> entries);

    // Parses a comma-separated list, e.g. "2,2,3".
    static IndependenceSequence parse(const std::string& csv);

    int size() const { return static_cast<int>(entries_.size()); }  // |S|
    int sum() const;                                                // ||S||
    const std::vector<int>& entries() const { return entries_; }

    IndependenceSequence merged(const IndependenceSequence& other) const;
    IndependenceSequence repeated(int m) const;

    std::string to_string() const;
    bool operator==(const IndependenceSequence&) const = default;
    auto operator<=>(const IndependenceSequence&) const = default;

private:
    std::vector<int> entries_;
};

class Hypergraph {
public:
    // Validates: 1 <= n <= 64, 2 <= r <= n, every edge has exactly r bits all
    // below n, no duplicates. Edges are stored sorted in colex order. As the
    // one exception, r > n is accepted for the edge-free graph so that
    // single-vertex certificates can be represented.
    Hypergraph(int n, int r, std::vector<Mask> edges);

    static Hypergraph from_vertex_lists(int n, int r,
                                        const std::vector<std::vector<int>>& edges);

    int n() const { return n_; }
    int r() const { return r_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Mask> edges() const { return edges_; }

    bool operator==(const Hypergraph&) const = default;

private:
    int n_;
    int r_;
    std::vector<Mask> edges_;
};

// H^c: the r-subsets of the vertex set absent from H.
Hypergraph complement(const Hypergraph& h);

// Maximal shared-vertex-connected vertex subsets, sorted by smallest member.
// A component with at least two vertices always contains an edge; edgeless
// vertices appear as singleton components.
std::vector<Mask> connected_components(const Hypergraph& h);

// alpha(H): largest vertex subset containing no edge. Exact branch and bound.
int independence_number(const Hypergraph& h);

// Multiset of component independence numbers; its sum equals alpha(H).
IndependenceSequence independence_sequence(const Hypergraph& h);

// True iff every k-subset of the vertex set contains an edge, decided as
// alpha(H) <= k-1. Throws std::invalid_argument unless r <= k <= n.
bool satisfies_covering(const Hypergraph& h, int k);

// Exact maximum independent set size restricted to `universe`; edges not
// fully inside `universe` are ignored. Workhorse behind independence_number
// and the per-component sequence.
int alpha_masks(std::span<const Mask> edges, Mask universe);

// Component masks of an edge list over vertices {0,...,n-1}.
std::vector<Mask> components_masks(std::span<const Mask> edges, int n);

}
