#include "turan/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace turan {

std::uint64_t binomial64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(acc);
}

Mask first_rsubset(int r) {
    return r >= 64 ? ~Mask{0} : (Mask{1} << r) - 1;
}

Mask next_rsubset_colex(Mask v) {
    // Gosper's hack: next mask with the same popcount.
    Mask c = v & (~v + 1);
    Mask r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

std::vector<Mask> all_rsubsets(int n, int r) {
    std::vector<Mask> out;
    out.reserve(binomial64(n, r));
    Mask m = first_rsubset(r);
    Mask limit = (n >= 64) ? ~Mask{0} : (Mask{1} << n);
    for (std::uint64_t i = 0, cnt = binomial64(n, r); i < cnt; ++i) {
        out.push_back(m);
        m = next_rsubset_colex(m);
        if (n < 64 && m >= limit) break;
    }
    return out;
}

std::vector<int> mask_to_vertices(Mask m) {
    std::vector<int> vs;
    while (m) {
        int v = std::countr_zero(m);
        vs.push_back(v);
        m &= m - 1;
    }
    return vs;
}

Mask vertices_to_mask(std::span<const int> vs) {
    Mask m = 0;
    for (int v : vs) m |= vertex_bit(v);
    return m;
}

IndependenceSequence::IndependenceSequence(std::vector<int> entries)
    : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 1) throw std::invalid_argument("independence sequence entries must be >= 1");
    }
    std::sort(entries_.begin(), entries_.end());
}

IndependenceSequence IndependenceSequence::parse(const std::string& csv) {
    std::vector<int> entries;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ParseError("empty entry in sequence: " + csv);
        try {
            entries.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad sequence entry: " + tok);
        }
    }
    if (entries.empty()) throw ParseError("empty independence sequence");
    try {
        return IndependenceSequence(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

int IndependenceSequence::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

IndependenceSequence IndependenceSequence::merged(const IndependenceSequence& other) const {
    std::vector<int> all = entries_;
    all.insert(all.end(), other.entries_.begin(), other.entries_.end());
    return IndependenceSequence(std::move(all));
}

IndependenceSequence IndependenceSequence::repeated(int m) const {
    if (m < 1) throw std::invalid_argument("repeat count must be >= 1");
    std::vector<int> all;
    all.reserve(entries_.size() * static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) all.insert(all.end(), entries_.begin(), entries_.end());
    return IndependenceSequence(std::move(all));
}

std::string IndependenceSequence::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s;
}

Hypergraph::Hypergraph(int n, int r, std::vector<Mask> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    if (n < 1 || n > 64) throw std::invalid_argument("vertex count must be in [1,64]");
    if (r < 2) throw std::invalid_argument("uniformity must be >= 2");
    // r > n is tolerated only for the edge-free graph (singleton components
    // of larger solutions); any actual edge forces r <= n.
    if (r > n && !edges_.empty()) throw std::invalid_argument("uniformity must be in [2,n]");
    Mask valid = (n >= 64) ? ~Mask{0} : (Mask{1} << n) - 1;
    for (Mask e : edges_) {
        if (std::popcount(e) != r) throw std::invalid_argument("edge does not have exactly r vertices");
        if (e & ~valid) throw std::invalid_argument("edge vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("duplicate edge");
    }
}

Hypergraph Hypergraph::from_vertex_lists(int n, int r,
                                         const std::vector<std::vector<int>>& edges) {
    std::vector<Mask> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges) {
        if (static_cast<int>(e.size()) != r) {
            throw std::invalid_argument("edge does not have exactly r vertices");
        }
        for (int v : e) {
            if (v < 0 || v >= n) throw std::invalid_argument("edge vertex out of range");
        }
        Mask m = vertices_to_mask(e);
        if (std::popcount(m) != r) throw std::invalid_argument("repeated vertex within an edge");
        masks.push_back(m);
    }
    return Hypergraph(n, r, std::move(masks));
}

Hypergraph complement(const Hypergraph& h) {
    std::uint64_t total = binomial64(h.n(), h.r());
    std::vector<Mask> comp;
    comp.reserve(total - h.edge_count());
    auto edges = h.edges();
    std::size_t i = 0;
    Mask m = first_rsubset(h.r());
    for (std::uint64_t c = 0; c < total; ++c) {
        if (i < edges.size() && edges[i] == m) {
            ++i;
        } else {
            comp.push_back(m);
        }
        m = next_rsubset_colex(m);
    }
    return Hypergraph(h.n(), h.r(), std::move(comp));
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}

std::vector<Mask> components_masks(std::span<const Mask> edges, int n) {
    Dsu dsu(n);
    for (Mask e : edges) {
        int head = std::countr_zero(e);
        Mask rest = e & (e - 1);
        while (rest) {
            dsu.unite(std::countr_zero(rest), head);
            rest &= rest - 1;
        }
    }
    std::vector<Mask> by_root(n, 0);
    for (int v = 0; v < n; ++v) by_root[dsu.find(v)] |= vertex_bit(v);
    std::vector<Mask> comps;
    for (Mask m : by_root) {
        if (m) comps.push_back(m);
    }
    std::sort(comps.begin(), comps.end(), [](Mask a, Mask b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
    return comps;
}

std::vector<Mask> connected_components(const Hypergraph& h) {
    return components_masks(h.edges(), h.n());
}

namespace {

// Branch and bound for maximum independent set in an r-graph.
struct AlphaSearch {
    std::vector<Mask> edges;                 // edges inside the universe
    std::vector<std::vector<Mask>> by_vertex;  // edges containing each vertex
    std::vector<int> order;                  // vertices by decreasing degree
    int best = 0;

    // Vertex-disjoint edges packed inside cand; each costs an exclusion.
    int packing_bound(Mask cand) const {
        int packed = 0;
        Mask avail = cand;
        for (Mask e : edges) {
            if ((e & ~avail) == 0) {
                ++packed;
                avail &= ~e;
            }
        }
        return packed;
    }

    void dfs(Mask chosen, Mask cand, int pos) {
        int cur = std::popcount(chosen);
        best = std::max(best, cur);
        if (!cand) return;
        int avail = std::popcount(cand);
        if (cur + avail <= best) return;
        if (cur + avail - packing_bound(cand) <= best) return;

        // next branching vertex in degree order
        while (pos < static_cast<int>(order.size()) && !(cand & vertex_bit(order[pos]))) ++pos;
        if (pos >= static_cast<int>(order.size())) return;
        int v = order[pos];
        Mask vb = vertex_bit(v);

        bool can_include = true;
        for (Mask e : by_vertex[v]) {
            if ((e & ~(chosen | vb)) == 0) {
                can_include = false;
                break;
            }
        }
        if (can_include) dfs(chosen | vb, cand & ~vb, pos + 1);
        dfs(chosen, cand & ~vb, pos + 1);
    }
};

}

int alpha_masks(std::span<const Mask> edges, Mask universe) {
    AlphaSearch s;
    for (Mask e : edges) {
        if ((e & ~universe) == 0) s.edges.push_back(e);
    }
    if (s.edges.empty()) return std::popcount(universe);

    std::vector<int> degree(64, 0);
    s.by_vertex.resize(64);
    for (Mask e : s.edges) {
        Mask m = e;
        while (m) {
            int v = std::countr_zero(m);
            ++degree[v];
            s.by_vertex[v].push_back(e);
            m &= m - 1;
        }
    }
    for (Mask m = universe; m;) {
        int v = std::countr_zero(m);
        s.order.push_back(v);
        m &= m - 1;
    }
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });

    s.dfs(0, universe, 0);
    return s.best;
}

int independence_number(const Hypergraph& h) {
    Mask all = (h.n() >= 64) ? ~Mask{0} : (Mask{1} << h.n()) - 1;
    return alpha_masks(h.edges(), all);
}

IndependenceSequence independence_sequence(const Hypergraph& h) {
    std::vector<int> entries;
    for (Mask comp : connected_components(h)) {
        entries.push_back(alpha_masks(h.edges(), comp));
    }
    return IndependenceSequence(std::move(entries));
}

bool satisfies_covering(const Hypergraph& h, int k) {
    if (k < h.r() || k > h.n()) {
        throw std::invalid_argument("covering parameter k must satisfy r <= k <= n");
    }
    return independence_number(h) <= k - 1;
}

}
