#include "turan/constructions.hpp"

#include <algorithm>
#include <functional>

namespace turan {

Hypergraph turan_graph(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("turan_graph requires 1 <= k <= n");
    // class sizes: (n mod k) classes of size ceil(n/k), then floor(n/k)
    std::vector<int> class_of(n);
    int idx = 0;
    int big = n % k, small_sz = n / k;
    for (int c = 0; c < k; ++c) {
        int sz = small_sz + (c < big ? 1 : 0);
        for (int i = 0; i < sz; ++i) class_of[idx++] = c;
    }
    std::vector<Mask> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (class_of[u] != class_of[v]) edges.push_back(vertex_bit(u) | vertex_bit(v));
        }
    }
    if (edges.empty() && n < 2) throw std::invalid_argument("turan_graph needs n >= 2");
    return Hypergraph(n, 2, std::move(edges));
}

Hypergraph disjoint_complete(int r, std::vector<int> sizes) {
    if (sizes.empty()) throw std::invalid_argument("disjoint_complete requires at least one part");
    if (r < 2) throw std::invalid_argument("disjoint_complete requires r >= 2");
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("part sizes must be >= 1");
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    int n = 0;
    for (int s : sizes) n += s;
    if (n > 64) throw std::invalid_argument("total vertex count exceeds 64");

    std::vector<Mask> edges;
    int base = 0;
    for (int s : sizes) {
        if (s >= r) {
            for (Mask sub : all_rsubsets(s, r)) edges.push_back(sub << base);
        }
        base += s;
    }
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph balanced_complete_union(int n, int r, int m) {
    if (m < 1 || n < m) throw std::invalid_argument("balanced_complete_union requires 1 <= m <= n");
    std::vector<int> sizes(m, n / m);
    for (int i = 0; i < n % m; ++i) ++sizes[i];
    return disjoint_complete(r, std::move(sizes));
}

Hypergraph thm_max_witness(int n) {
    if (n < 6) throw std::invalid_argument("thm_max_witness requires n >= 6");
    return balanced_complete_union(n, 3, 2);
}

}
