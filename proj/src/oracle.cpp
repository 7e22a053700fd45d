#include "turan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "turan/version.hpp"

namespace turan {

namespace {

// every k-subset of {0..n-1} contains one of the edges, checked directly
bool covering_by_definition(const std::vector<Mask>& edges, int n, int k) {
    Mask kset = first_rsubset(k);
    for (std::uint64_t i = 0, cnt = binomial64(n, k); i < cnt; ++i) {
        bool has_edge = false;
        for (Mask e : edges) {
            if ((e & ~kset) == 0) {
                has_edge = true;
                break;
            }
        }
        if (!has_edge) return false;
        kset = next_rsubset_colex(kset);
    }
    return true;
}

// no k-subset has all of its r-subsets present
bool kfree_by_definition(const std::vector<Mask>& edges, int n, int k, int r) {
    Mask kset = first_rsubset(k);
    std::uint64_t need = binomial64(k, r);
    for (std::uint64_t i = 0, cnt = binomial64(n, k); i < cnt; ++i) {
        std::uint64_t inside = 0;
        for (Mask e : edges) {
            if ((e & ~kset) == 0) ++inside;
        }
        if (inside == need) return false;
        kset = next_rsubset_colex(kset);
    }
    return true;
}

int component_count_bfs(const std::vector<Mask>& edges, int n) {
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        ++comps;
        std::vector<int> queue{v};
        seen[v] = 1;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (Mask e : edges) {
                if (!(e & vertex_bit(u))) continue;
                for (Mask m = e; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    return comps;
}

// largest subset of `universe` containing no edge, by scanning all submasks
int alpha_brute(const std::vector<Mask>& edges, Mask universe) {
    int best = 0;
    Mask sub = universe;
    for (;;) {  // submask enumeration, includes the empty set
        bool independent = true;
        for (Mask e : edges) {
            if ((e & ~sub) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, std::popcount(sub));
        if (sub == 0) break;
        sub = (sub - 1) & universe;
    }
    return best;
}

std::vector<Mask> component_masks_bfs(const std::vector<Mask>& edges, int n) {
    std::vector<char> seen(n, 0);
    std::vector<Mask> comps;
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        Mask comp = 0;
        std::vector<int> queue{v};
        seen[v] = 1;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            comp |= vertex_bit(u);
            for (Mask e : edges) {
                if (!(e & vertex_bit(u))) continue;
                for (Mask m = e; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        comps.push_back(comp);
    }
    return comps;
}

struct SubsetCounter {
    std::uint64_t examined = 0;
    std::uint64_t budget;
    void bump() {
        if (++examined > budget) {
            throw ResourceLimitError("naive oracle budget exceeded after " +
                                     std::to_string(examined - 1) + " subsets");
        }
    }
};

// all size-t index combinations of {0..total-1} in lexicographic order
template <typename Fn>
bool for_each_combination(int total, int t, Fn&& fn) {
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
        if (fn(idx)) return true;
        int i = t - 1;
        while (i >= 0 && idx[i] == total - t + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Certificate naive_oracle(const SolveSpec& spec, std::uint64_t subset_budget) {
    spec.validate();
    Certificate cert;
    cert.spec = spec;
    cert.toolkit_version = kToolkitVersion;
    cert.stats.threads = 1;

    const int n = spec.n;
    std::vector<Mask> pool = all_rsubsets(n, spec.r);
    auto total = static_cast<int>(pool.size());
    SubsetCounter counter{0, subset_budget};

    auto feasible = [&](const std::vector<Mask>& chosen) -> bool {
        switch (spec.family) {
            case Family::T:
                return covering_by_definition(chosen, n, spec.k);
            case Family::TComponents:
                return covering_by_definition(chosen, n, spec.k) &&
                       component_count_bfs(chosen, n) == spec.m;
            case Family::TildeT: {
                std::vector<int> entries;
                for (Mask comp : component_masks_bfs(chosen, n)) {
                    entries.push_back(alpha_brute(chosen, comp));
                }
                return IndependenceSequence(std::move(entries)) == spec.sequence;
            }
            case Family::ConnAlpha: {
                Mask all = (n >= 64) ? ~Mask{0} : (Mask{1} << n) - 1;
                return component_count_bfs(chosen, n) == 1 &&
                       alpha_brute(chosen, all) <= spec.alpha_budget;
            }
        }
        return false;
    };

    auto start = std::chrono::steady_clock::now();
    for (int t = 0; t <= total; ++t) {
        std::vector<Mask> chosen(t);
        bool found = for_each_combination(total, t, [&](const std::vector<int>& idx) {
            counter.bump();
            for (int i = 0; i < t; ++i) chosen[i] = pool[idx[i]];
            return feasible(chosen);
        });
        if (found) {
            cert.value = t;
            cert.witness = Hypergraph(n, spec.r, chosen);
            cert.stats.nodes_expanded = counter.examined;
            cert.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
            return cert;
        }
    }
    cert.infeasible = true;
    cert.stats.nodes_expanded = counter.examined;
    cert.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    return cert;
}

std::int64_t naive_max_kfree(int n, int k, int r, std::uint64_t subset_budget) {
    if (!(2 <= r && r < k && k <= n)) {
        throw std::invalid_argument("naive_max_kfree requires r < k <= n");
    }
    std::vector<Mask> pool = all_rsubsets(n, r);
    auto total = static_cast<int>(pool.size());
    SubsetCounter counter{0, subset_budget};
    for (int t = total; t >= 0; --t) {
        std::vector<Mask> chosen(t);
        bool found = for_each_combination(total, t, [&](const std::vector<int>& idx) {
            counter.bump();
            for (int i = 0; i < t; ++i) chosen[i] = pool[idx[i]];
            return kfree_by_definition(chosen, n, k, r);
        });
        if (found) return t;
    }
    return 0;
}

}
