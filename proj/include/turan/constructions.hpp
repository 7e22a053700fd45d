#pragma once

// Closed-form extremal witnesses: Turán graphs for r = 2 and disjoint unions
// of complete r-graphs.

#include "turan/hypergraph.hpp"

namespace turan {

// Complete k-partite 2-graph on n vertices with class sizes ceil(n/k) or
// floor(n/k); larger classes take the lower vertex indices.
Hypergraph turan_graph(int n, int k);

// Disjoint union of complete r-graphs with the given part sizes. Parts occupy
// consecutive index ranges, largest part first. A part of size < r carries no
// edges and splits into singleton components.
Hypergraph disjoint_complete(int r, std::vector<int> sizes);

// disjoint_complete with m part sizes as equal as possible.
Hypergraph balanced_complete_union(int n, int r, int m);

// balanced_complete_union(n, 3, 2): the minimum-edge covering 3-graph with
// two components for k = 5. Requires n >= 6.
Hypergraph thm_max_witness(int n);

}
