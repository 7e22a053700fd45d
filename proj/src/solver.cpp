#include "turan/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "turan/version.hpp"

namespace turan {

std::string family_name(Family f) {
    switch (f) {
        case Family::T: return "T";
        case Family::TComponents: return "T_components";
        case Family::TildeT: return "TildeT";
        case Family::ConnAlpha: return "ConnAlpha";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "T") return Family::T;
    if (name == "T_components") return Family::TComponents;
    if (name == "TildeT") return Family::TildeT;
    if (name == "ConnAlpha") return Family::ConnAlpha;
    throw ParseError("unknown family: " + name);
}

void SolveSpec::validate() const {
    if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
    if (n > 64) throw std::invalid_argument("vertex count must be <= 64");
    switch (family) {
        case Family::T:
        case Family::TComponents:
            if (n < r) throw std::invalid_argument("need n >= r");
            if (!(r < k && k <= n)) throw std::invalid_argument("need r < k <= n");
            if (family == Family::TComponents) {
                if (!(1 <= m && m <= n)) throw std::invalid_argument("need 1 <= m <= n");
            } else if (m != -1) {
                throw std::invalid_argument("component count only applies to family T_components");
            }
            if (sequence.size() != 0 || alpha_budget != -1) {
                throw std::invalid_argument("unexpected parameters for this family");
            }
            break;
        case Family::TildeT:
            if (n < 1) throw std::invalid_argument("need n >= 1");
            if (sequence.size() == 0) throw std::invalid_argument("independence sequence required");
            if (sequence.size() > n || sequence.sum() > n) {
                throw std::invalid_argument("need |S| <= n and ||S|| <= n");
            }
            if (k != -1 || m != -1 || alpha_budget != -1) {
                throw std::invalid_argument("unexpected parameters for family TildeT");
            }
            break;
        case Family::ConnAlpha:
            if (n < 1) throw std::invalid_argument("need n >= 1");
            if (alpha_budget < 1) throw std::invalid_argument("independence budget s must be >= 1");
            if (k != -1 || m != -1 || sequence.size() != 0) {
                throw std::invalid_argument("unexpected parameters for family ConnAlpha");
            }
            break;
    }
}

std::string SolveSpec::cache_key() const {
    std::string key = family_name(family) + ":" + std::to_string(n) + ":";
    key += (k >= 0 ? std::to_string(k) : "-");
    key += ":" + std::to_string(r);
    if (family == Family::TComponents) key += ":" + std::to_string(m);
    if (family == Family::TildeT) key += ":S=" + sequence.to_string();
    if (family == Family::ConnAlpha) key += ":s=" + std::to_string(alpha_budget);
    if (enumerate_all) key += ":all";
    return key;
}

std::int64_t lower_bound_count(int n, int k, int r) {
    if (!(2 <= r && r <= k && k <= n)) {
        throw std::invalid_argument("lower_bound_count requires r <= k <= n");
    }
    std::uint64_t total = binomial64(n, k);
    std::uint64_t per_edge = binomial64(n - r, k - r);
    return static_cast<std::int64_t>((total + per_edge - 1) / per_edge);
}

namespace {

// ---------------------------------------------------------------------------
// Covering search engine
// ---------------------------------------------------------------------------

struct CoverContext {
    int n = 0, r = 0, k = 0;
    std::vector<Mask> edge_masks;  // all r-subsets, colex
    std::vector<Mask> kset_masks;  // all k-subsets, colex
    std::vector<std::vector<std::int32_t>> edges_in_kset;
    std::vector<std::vector<std::int32_t>> ksets_of_edge;
    std::int64_t per_edge_coverage = 1;  // C(n-r, k-r)
};

void check_instance_size(int n, int k, int r) {
    std::uint64_t edges = binomial64(n, r);
    std::uint64_t ksets = binomial64(n, k);
    std::uint64_t incidences = ksets * binomial64(k, r);
    if (edges > 200000 || ksets > 500000 || incidences > 8000000) {
        throw ResourceLimitError("instance too large for covering enumeration (n=" +
                                 std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
}

CoverContext build_context(int n, int r, int k) {
    check_instance_size(n, k, r);
    CoverContext ctx;
    ctx.n = n;
    ctx.r = r;
    ctx.k = k;
    ctx.edge_masks = all_rsubsets(n, r);
    ctx.kset_masks = all_rsubsets(n, k);
    ctx.edges_in_kset.resize(ctx.kset_masks.size());
    ctx.ksets_of_edge.resize(ctx.edge_masks.size());
    auto sub_templates = all_rsubsets(k, r);
    for (std::size_t ki = 0; ki < ctx.kset_masks.size(); ++ki) {
        auto vs = mask_to_vertices(ctx.kset_masks[ki]);
        for (Mask sub : sub_templates) {
            Mask em = 0;
            for (Mask s = sub; s; s &= s - 1) em |= vertex_bit(vs[std::countr_zero(s)]);
            auto it = std::lower_bound(ctx.edge_masks.begin(), ctx.edge_masks.end(), em);
            auto ei = static_cast<std::int32_t>(it - ctx.edge_masks.begin());
            ctx.edges_in_kset[ki].push_back(ei);
            ctx.ksets_of_edge[ei].push_back(static_cast<std::int32_t>(ki));
        }
        std::sort(ctx.edges_in_kset[ki].begin(), ctx.edges_in_kset[ki].end());
    }
    ctx.per_edge_coverage = static_cast<std::int64_t>(binomial64(n - r, k - r));
    return ctx;
}

struct SearchControl {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t node_budget = 0;
    std::chrono::steady_clock::time_point start;
    double time_budget_s = 0.0;
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_exceeded{false};

    explicit SearchControl(const SolveOptions& opts)
        : node_budget(opts.node_budget),
          start(std::chrono::steady_clock::now()),
          time_budget_s(opts.time_budget_s) {}

    // One node expansion; false once the search should wind down.
    bool tick() {
        std::uint64_t c = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (stop.load(std::memory_order_relaxed)) return false;
        if (node_budget && c > node_budget) {
            budget_exceeded.store(true);
            stop.store(true);
            return false;
        }
        if (time_budget_s > 0 && (c & 2047) == 0) {
            std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
            if (el.count() > time_budget_s) {
                budget_exceeded.store(true);
                stop.store(true);
                return false;
            }
        }
        return true;
    }

    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct RollbackDsu {
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> size;
    std::vector<std::int32_t> log;  // roots that got attached
    int comp_count = 0;

    void init(int n) {
        parent.resize(n);
        std::iota(parent.begin(), parent.end(), 0);
        size.assign(n, 1);
        log.clear();
        comp_count = n;
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        log.push_back(b);
        --comp_count;
    }
    std::size_t mark() const { return log.size(); }
    void rollback(std::size_t m) {
        while (log.size() > m) {
            int b = log.back();
            log.pop_back();
            size[parent[b]] -= size[b];
            parent[b] = b;
            ++comp_count;
        }
    }
};

struct EngineConfig {
    bool require_connected = false;
    int require_components = -1;  // exact component count at leaves
    int exact_alpha = -1;         // exact independence number at leaves
    const IndependenceSequence* require_sequence = nullptr;
    // Accept as soon as covering (and connectivity, if required) holds; only
    // sound for edge-monotone constraints.
    bool monotone_accept = false;
    // Fix the root branch to the edge {0,...,r-1}; sound for the optimal
    // value by vertex relabeling, never used when enumerating witnesses.
    bool symmetry_break = false;
    std::int32_t floor_edge = -1;            // non-prefix edges must exceed this
    std::vector<std::int32_t> prefix;        // pre-chosen edges
};

// false from the sink aborts the search (used by feasibility queries).
using SolutionSink = std::function<bool(const std::vector<std::int32_t>&)>;

struct Task {
    std::vector<std::int32_t> chosen;
    std::vector<std::int32_t> forbidden;
};

class CoverSearch {
public:
    CoverSearch(const CoverContext& ctx, int target, const EngineConfig& cfg,
                SearchControl& control, SolutionSink sink)
        : ctx_(ctx), cfg_(cfg), target_(target), control_(control), sink_(std::move(sink)) {
        cover_count_.assign(ctx_.kset_masks.size(), 0);
        uncovered_ = static_cast<int>(ctx_.kset_masks.size());
        forbidden_.assign(ctx_.edge_masks.size(), 0);
        chosen_flag_.assign(ctx_.edge_masks.size(), 0);
        track_components_ = cfg_.require_connected || cfg_.require_components >= 0 ||
                            cfg_.require_sequence != nullptr;
        if (track_components_) dsu_.init(ctx_.n);
        for (std::int32_t e : cfg_.prefix) choose(e);
    }

    void forbid(std::span<const std::int32_t> edges) {
        for (std::int32_t e : edges) forbidden_[e] = 1;
    }

    // Entry point. Returns normally both on exhaustion and on sink-stop.
    void run() { dfs(); }

    // Expand to `depth` non-prefix choices and collect frontier states
    // instead of searching them.
    void collect_tasks(int depth, std::vector<Task>& out) {
        split_depth_ = depth;
        task_out_ = &out;
        dfs();
        split_depth_ = -1;
        task_out_ = nullptr;
    }

private:
    const CoverContext& ctx_;
    const EngineConfig& cfg_;
    int target_;
    SearchControl& control_;
    SolutionSink sink_;

    std::vector<std::int16_t> cover_count_;
    int uncovered_ = 0;
    std::vector<char> forbidden_;
    std::vector<char> chosen_flag_;
    std::vector<std::int32_t> chosen_;
    RollbackDsu dsu_;
    std::vector<std::size_t> dsu_marks_;
    bool track_components_ = false;

    int split_depth_ = -1;
    std::vector<Task>* task_out_ = nullptr;

    void choose(std::int32_t e) {
        chosen_.push_back(e);
        chosen_flag_[e] = 1;
        for (std::int32_t ks : ctx_.ksets_of_edge[e]) {
            if (cover_count_[ks]++ == 0) --uncovered_;
        }
        if (track_components_) {
            dsu_marks_.push_back(dsu_.mark());
            Mask m = ctx_.edge_masks[e];
            int head = std::countr_zero(m);
            for (Mask rest = m & (m - 1); rest; rest &= rest - 1) {
                dsu_.unite(head, std::countr_zero(rest));
            }
        }
    }

    void unchoose(std::int32_t e) {
        chosen_.pop_back();
        chosen_flag_[e] = 0;
        for (std::int32_t ks : ctx_.ksets_of_edge[e]) {
            if (--cover_count_[ks] == 0) ++uncovered_;
        }
        if (track_components_) {
            dsu_.rollback(dsu_marks_.back());
            dsu_marks_.pop_back();
        }
    }

    int first_uncovered() const {
        for (std::size_t ks = 0; ks < cover_count_.size(); ++ks) {
            if (cover_count_[ks] == 0) return static_cast<int>(ks);
        }
        return -1;
    }

    int pack_bound() const {
        int packed = 0;
        Mask used = 0;
        for (std::size_t ks = 0; ks < cover_count_.size(); ++ks) {
            if (cover_count_[ks] == 0 && !(ctx_.kset_masks[ks] & used)) {
                ++packed;
                used |= ctx_.kset_masks[ks];
            }
        }
        return packed;
    }

    bool component_prunes(int remaining) const {
        if (!track_components_) return false;
        if (cfg_.require_connected) {
            int merge_lb = (dsu_.comp_count - 1 + ctx_.r - 2) / (ctx_.r - 1);
            if (merge_lb > remaining) return true;
        }
        int want = cfg_.require_components >= 0 ? cfg_.require_components
                   : cfg_.require_sequence      ? cfg_.require_sequence->size()
                                                : -1;
        if (want >= 0) {
            if (dsu_.comp_count < want) return true;  // merges cannot be undone
            if (dsu_.comp_count - (ctx_.r - 1) * remaining > want) return true;
        }
        return false;
    }

    bool leaf_ok() {
        if (uncovered_ != 0) return false;
        if (cfg_.require_connected && dsu_.comp_count != 1) return false;
        if (cfg_.require_components >= 0 && dsu_.comp_count != cfg_.require_components) return false;
        if (cfg_.exact_alpha >= 0 || cfg_.require_sequence) {
            std::vector<Mask> masks;
            masks.reserve(chosen_.size());
            for (std::int32_t e : chosen_) masks.push_back(ctx_.edge_masks[e]);
            if (cfg_.exact_alpha >= 0) {
                Mask all = (ctx_.n >= 64) ? ~Mask{0} : (Mask{1} << ctx_.n) - 1;
                if (alpha_masks(masks, all) != cfg_.exact_alpha) return false;
            }
            if (cfg_.require_sequence) {
                std::vector<int> entries;
                for (Mask comp : components_masks(masks, ctx_.n)) {
                    entries.push_back(alpha_masks(masks, comp));
                }
                if (IndependenceSequence(std::move(entries)) != *cfg_.require_sequence) return false;
            }
        }
        return true;
    }

    bool emit() {
        std::vector<std::int32_t> sol = chosen_;
        std::sort(sol.begin(), sol.end());
        return sink_(sol);
    }

    bool dfs() {
        if (!control_.tick()) return false;
        const int remaining = target_ - static_cast<int>(chosen_.size());

        if (task_out_ &&
            (static_cast<int>(chosen_.size() - cfg_.prefix.size()) >= split_depth_ ||
             uncovered_ == 0 || remaining == 0)) {
            Task t;
            t.chosen = chosen_;
            for (std::size_t e = 0; e < forbidden_.size(); ++e) {
                if (forbidden_[e]) t.forbidden.push_back(static_cast<std::int32_t>(e));
            }
            task_out_->push_back(std::move(t));
            return true;
        }

        if (uncovered_ == 0) {
            if (cfg_.monotone_accept) {
                if (!cfg_.require_connected || dsu_.comp_count == 1) return emit();
                if (remaining == 0) return true;
                return complete(0);  // extend until connected
            }
            if (remaining == 0) return leaf_ok() ? emit() : true;
            return complete(0);
        }
        if (remaining == 0) return true;

        std::int64_t count_lb =
            (uncovered_ + ctx_.per_edge_coverage - 1) / ctx_.per_edge_coverage;
        if (count_lb > remaining) return true;
        if (pack_bound() > remaining) return true;
        if (component_prunes(remaining)) return true;

        int ks = first_uncovered();
        bool keep_going = true;
        std::vector<std::int32_t> forbade;
        for (std::int32_t e : ctx_.edges_in_kset[ks]) {
            if (forbidden_[e] || e <= cfg_.floor_edge) continue;
            if (cfg_.symmetry_break && chosen_.empty() && e != 0) continue;
            choose(e);
            keep_going = dfs();
            unchoose(e);
            if (!keep_going) break;
            forbidden_[e] = 1;
            forbade.push_back(e);
        }
        for (std::int32_t e : forbade) forbidden_[e] = 0;
        return keep_going;
    }

    // All covering constraints hold; pick the remaining edges freely in
    // increasing index order.
    bool complete(std::int32_t min_idx) {
        if (!control_.tick()) return false;
        if (cfg_.monotone_accept && (!cfg_.require_connected || dsu_.comp_count == 1)) {
            return emit();
        }
        const int remaining = target_ - static_cast<int>(chosen_.size());
        if (remaining == 0) return leaf_ok() ? emit() : true;
        if (component_prunes(remaining)) return true;

        std::int32_t start = std::max(min_idx, cfg_.floor_edge + 1);
        std::int32_t last = static_cast<std::int32_t>(ctx_.edge_masks.size()) - remaining;
        for (std::int32_t e = start; e <= last; ++e) {
            if (forbidden_[e] || chosen_flag_[e]) continue;
            choose(e);
            bool cont = complete(e + 1);
            unchoose(e);
            if (!cont) return false;
        }
        return true;
    }
};

struct RunResult {
    bool found = false;
    bool budget_exceeded = false;
    std::vector<std::int32_t> first;  // a witness when found (feasibility mode)
};

// Runs a search at a fixed edge count. With `collect` null this is a
// feasibility query that stops at the first solution; otherwise every
// solution is collected (sorted, duplicate-free).
RunResult run_search(const CoverContext& ctx, int target, const EngineConfig& cfg,
                     SearchControl& control, int threads,
                     std::vector<std::vector<std::int32_t>>* collect) {
    RunResult result;
    std::mutex result_mutex;

    auto make_sink = [&](std::vector<std::vector<std::int32_t>>* local) -> SolutionSink {
        if (local) {
            return [local](const std::vector<std::int32_t>& sol) {
                local->push_back(sol);
                return true;
            };
        }
        return [&](const std::vector<std::int32_t>& sol) {
            std::lock_guard<std::mutex> lk(result_mutex);
            if (!result.found) {
                result.found = true;
                result.first = sol;
            }
            control.stop.store(true);
            return false;
        };
    };

    if (threads <= 1) {
        CoverSearch search(ctx, target, cfg, control, make_sink(collect));
        search.run();
    } else {
        std::vector<Task> tasks;
        {
            CoverSearch splitter(ctx, target, cfg, control,
                                 [](const std::vector<std::int32_t>&) { return true; });
            splitter.collect_tasks(2, tasks);
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::vector<std::vector<std::int32_t>>> local_all(
            collect ? static_cast<std::size_t>(threads) : 0);
        auto worker = [&](int wid) {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size() || control.stop.load(std::memory_order_relaxed)) break;
                EngineConfig task_cfg = cfg;
                task_cfg.prefix = tasks[i].chosen;
                CoverSearch search(ctx, target, task_cfg, control,
                                   make_sink(collect ? &local_all[wid] : nullptr));
                search.forbid(tasks[i].forbidden);
                search.run();
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < threads; ++w) pool.emplace_back(worker, w);
        worker(0);
        for (auto& th : pool) th.join();
        if (collect) {
            for (auto& local : local_all) {
                collect->insert(collect->end(), local.begin(), local.end());
            }
        }
    }

    if (collect) {
        std::sort(collect->begin(), collect->end());
        collect->erase(std::unique(collect->begin(), collect->end()), collect->end());
    }
    result.budget_exceeded = control.budget_exceeded.load();
    // reset the stop flag so the next deepening round can run
    if (!result.budget_exceeded) control.stop.store(false);
    return result;
}

Hypergraph edges_to_hypergraph(const CoverContext& ctx, const std::vector<std::int32_t>& sol) {
    std::vector<Mask> masks;
    masks.reserve(sol.size());
    for (std::int32_t e : sol) masks.push_back(ctx.edge_masks[e]);
    return Hypergraph(ctx.n, ctx.r, std::move(masks));
}

// Colex-lexicographically least solution with exactly `target` edges, found
// by fixing the witness prefix one edge at a time. Single-threaded. Returns
// nullopt if a budget interrupts the pass.
std::optional<std::vector<std::int32_t>> canonical_witness(const CoverContext& ctx, int target,
                                                           const EngineConfig& constraints,
                                                           SearchControl& control) {
    std::vector<std::int32_t> prefix;
    std::int32_t floor = -1;
    auto edge_total = static_cast<std::int32_t>(ctx.edge_masks.size());
    for (int pos = 0; pos < target; ++pos) {
        bool extended = false;
        for (std::int32_t e = floor + 1; e < edge_total; ++e) {
            EngineConfig cfg = constraints;
            cfg.symmetry_break = false;
            cfg.monotone_accept = false;
            cfg.prefix = prefix;
            cfg.prefix.push_back(e);
            cfg.floor_edge = e;
            RunResult res = run_search(ctx, target, cfg, control, 1, nullptr);
            if (res.budget_exceeded) return std::nullopt;
            if (res.found) {
                prefix.push_back(e);
                floor = e;
                extended = true;
                break;
            }
        }
        if (!extended) throw std::logic_error("canonical witness pass lost feasibility");
    }
    return prefix;
}

// ---------------------------------------------------------------------------
// Connected-kernel solver with memoization
// ---------------------------------------------------------------------------

enum class KernelStatus { Solved, Infeasible, Cut, Budget };

struct KernelResult {
    KernelStatus status = KernelStatus::Infeasible;
    std::int64_t value = 0;
    std::vector<Mask> witness;  // edge masks on vertices {0,...,n-1}
};

std::int64_t kernel_lower_bound(int n, int r, int s) {
    if (n <= 1) return 0;
    int s_eff = std::min(s, n - 1);
    if (n < r || s_eff + 1 < r) return 0;  // structurally infeasible shapes
    std::int64_t cover_lb = lower_bound_count(n, s_eff + 1, r);
    std::int64_t conn_lb = (n - 1 + r - 2) / (r - 1);
    return std::max(cover_lb, conn_lb);
}

// feasibility closed forms shared by the <= and exact-alpha kernels
bool kernel_structurally_infeasible(int n, int r, int s, bool exact) {
    if (n == 1) return exact && s != 1;
    if (n < r) return true;                    // no connected r-graph on 2..r-1 vertices
    if (s < r - 1) return true;                // connected with n >= r forces alpha >= r-1
    if (exact && s > n - 1) return true;       // connected with an edge forces alpha <= n-1
    return false;
}

std::map<std::tuple<int, int, int, bool>, KernelResult>& kernel_memo() {
    static std::map<std::tuple<int, int, int, bool>, KernelResult> memo;
    return memo;
}
std::mutex& kernel_memo_mutex() {
    static std::mutex mu;
    return mu;
}

// Minimum edges of a connected n-vertex r-graph with alpha <= s (or == s when
// `exact`). `cutoff`, when set, allows an early Cut answer once the lower
// bound shows the kernel cannot beat it.
KernelResult conn_alpha_kernel(int n, int r, int s, bool exact, SearchControl& control,
                               std::int64_t cutoff = -1) {
    KernelResult res;
    if (kernel_structurally_infeasible(n, r, s, exact)) {
        res.status = KernelStatus::Infeasible;
        return res;
    }
    if (n == 1) {
        res.status = KernelStatus::Solved;
        res.value = 0;
        return res;
    }
    int s_eff = std::min(s, n - 1);
    std::int64_t lb = kernel_lower_bound(n, r, s_eff);
    if (cutoff >= 0 && lb >= cutoff) {
        res.status = KernelStatus::Cut;
        res.value = lb;
        return res;
    }

    auto key = std::make_tuple(n, r, exact ? s : s_eff, exact);
    {
        std::lock_guard<std::mutex> lk(kernel_memo_mutex());
        auto it = kernel_memo().find(key);
        if (it != kernel_memo().end()) return it->second;
    }

    CoverContext ctx = build_context(n, r, s_eff + 1);
    EngineConfig cfg;
    cfg.require_connected = true;
    cfg.exact_alpha = exact ? s : -1;
    cfg.monotone_accept = !exact;
    cfg.symmetry_break = true;

    auto edge_total = static_cast<std::int64_t>(ctx.edge_masks.size());
    for (std::int64_t t = lb; t <= edge_total; ++t) {
        RunResult run = run_search(ctx, static_cast<int>(t), cfg, control, 1, nullptr);
        if (run.budget_exceeded) {
            res.status = KernelStatus::Budget;
            return res;
        }
        if (run.found) {
            EngineConfig canon;
            canon.require_connected = true;
            canon.exact_alpha = cfg.exact_alpha;
            auto sol = canonical_witness(ctx, static_cast<int>(t), canon, control);
            if (!sol) {
                res.status = KernelStatus::Budget;
                return res;
            }
            res.status = KernelStatus::Solved;
            res.value = t;
            res.witness.clear();
            for (std::int32_t e : *sol) res.witness.push_back(ctx.edge_masks[e]);
            std::lock_guard<std::mutex> lk(kernel_memo_mutex());
            kernel_memo()[key] = res;
            return res;
        }
    }
    res.status = KernelStatus::Infeasible;  // unreachable for <=; exact is bounded too
    std::lock_guard<std::mutex> lk(kernel_memo_mutex());
    kernel_memo()[key] = res;
    return res;
}

Certificate make_base_certificate(const SolveSpec& spec, const SolveOptions& opts) {
    Certificate cert;
    cert.spec = spec;
    cert.stats.threads = opts.threads;
    cert.toolkit_version = kToolkitVersion;
    return cert;
}

// ---------------------------------------------------------------------------
// Part-composition helpers (T_components and TildeT)
// ---------------------------------------------------------------------------

struct PartAssignment {
    std::vector<int> sizes;    // descending
    std::vector<int> budgets;  // alpha budget (or exact alpha) per part
    std::int64_t lb = 0;
};

// partitions of n into m parts, each either 1 or >= r, descending
void gen_size_partitions(int n, int m, int r, int max_part, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (m == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    for (int p = std::min(max_part, n - (m - 1)); p >= 1; --p) {
        if (p > 1 && p < r) continue;
        if (static_cast<std::int64_t>(p) * m < n) break;
        cur.push_back(p);
        gen_size_partitions(n - p, m - 1, r, p, cur, out);
        cur.pop_back();
    }
}

void gen_budget_vectors(const std::vector<int>& sizes, std::size_t i, int budget_left, int r,
                        std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (i == sizes.size()) {
        out.push_back(cur);
        return;
    }
    int min_rest = 0;
    for (std::size_t j = i + 1; j < sizes.size(); ++j) min_rest += sizes[j] == 1 ? 1 : r - 1;
    if (sizes[i] == 1) {
        if (budget_left - 1 >= min_rest) {
            cur.push_back(1);
            gen_budget_vectors(sizes, i + 1, budget_left - 1, r, cur, out);
            cur.pop_back();
        }
        return;
    }
    int hi = std::min(sizes[i] - 1, budget_left - min_rest);
    // budgets non-increasing across equal part sizes (symmetric duplicates)
    if (i > 0 && sizes[i] == sizes[i - 1]) hi = std::min(hi, cur[i - 1]);
    for (int s = r - 1; s <= hi; ++s) {
        cur.push_back(s);
        gen_budget_vectors(sizes, i + 1, budget_left - s, r, cur, out);
        cur.pop_back();
    }
}

Hypergraph compose_parts(int n, int r, const std::vector<int>& sizes,
                         const std::vector<std::vector<Mask>>& part_edges) {
    std::vector<Mask> edges;
    int base = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        for (Mask e : part_edges[i]) edges.push_back(e << base);
        base += sizes[i];
    }
    return Hypergraph(n, r, std::move(edges));
}

}  // namespace

// ---------------------------------------------------------------------------
// Public solvers
// ---------------------------------------------------------------------------

Certificate min_cover(int n, int k, int r, const SolveOptions& opts, bool enumerate_all) {
    SolveSpec spec;
    spec.family = Family::T;
    spec.n = n;
    spec.r = r;
    spec.k = k;
    spec.enumerate_all = enumerate_all;
    spec.validate();

    SearchControl control(opts);
    Certificate cert = make_base_certificate(spec, opts);
    CoverContext ctx = build_context(n, r, k);
    std::int64_t lb = lower_bound_count(n, k, r);
    cert.stats.lower_bound_used = lb;

    auto edge_total = static_cast<std::int64_t>(ctx.edge_masks.size());
    std::optional<std::int64_t> opt_value;
    std::vector<std::int32_t> first_found;
    for (std::int64_t t = lb; t <= edge_total; ++t) {
        EngineConfig cfg;
        cfg.monotone_accept = true;
        cfg.symmetry_break = !enumerate_all;
        RunResult res = run_search(ctx, static_cast<int>(t), cfg, control, opts.threads, nullptr);
        if (res.budget_exceeded) {
            cert.optimal = false;
            cert.stats.lower_bound_used = t;  // every smaller count was refuted
            cert.stats.nodes_expanded = control.nodes.load();
            cert.stats.elapsed_ms = control.elapsed_ms();
            return cert;
        }
        if (res.found) {
            opt_value = t;
            first_found = res.first;
            break;
        }
    }
    cert.value = *opt_value;  // the complete r-graph always covers

    if (enumerate_all) {
        EngineConfig cfg;  // exact edge count, no symmetry breaking
        std::vector<std::vector<std::int32_t>> sols;
        RunResult res =
            run_search(ctx, static_cast<int>(*opt_value), cfg, control, opts.threads, &sols);
        if (res.budget_exceeded) {
            cert.optimal = false;
            cert.witness = edges_to_hypergraph(ctx, first_found);
        } else {
            std::vector<Hypergraph> all;
            all.reserve(sols.size());
            for (const auto& sol : sols) all.push_back(edges_to_hypergraph(ctx, sol));
            cert.witness = all.front();
            cert.all_witnesses = std::move(all);
        }
    } else {
        EngineConfig constraints;
        auto sol = canonical_witness(ctx, static_cast<int>(*opt_value), constraints, control);
        if (sol) {
            cert.witness = edges_to_hypergraph(ctx, *sol);
        } else {
            cert.optimal = false;  // budget hit while canonicalizing
            cert.witness = edges_to_hypergraph(ctx, first_found);
        }
    }
    cert.stats.nodes_expanded = control.nodes.load();
    cert.stats.elapsed_ms = control.elapsed_ms();
    return cert;
}

Certificate min_edges_connected_alpha(int n, int r, int s, const SolveOptions& opts) {
    SolveSpec spec;
    spec.family = Family::ConnAlpha;
    spec.n = n;
    spec.r = r;
    spec.alpha_budget = s;
    spec.validate();

    SearchControl control(opts);
    Certificate cert = make_base_certificate(spec, opts);
    cert.stats.lower_bound_used = kernel_lower_bound(n, r, s);

    KernelResult kr = conn_alpha_kernel(n, r, s, /*exact=*/false, control);
    cert.stats.nodes_expanded = control.nodes.load();
    cert.stats.elapsed_ms = control.elapsed_ms();
    switch (kr.status) {
        case KernelStatus::Infeasible:
            cert.infeasible = true;
            return cert;
        case KernelStatus::Budget:
            cert.optimal = false;
            return cert;
        case KernelStatus::Solved: {
            cert.value = kr.value;
            if (n >= r) {
                cert.witness = Hypergraph(n, r, kr.witness);
            } else {
                cert.witness = Hypergraph(n, r, {});  // single vertex, no edges
            }
            return cert;
        }
        case KernelStatus::Cut: break;
    }
    throw std::logic_error("unexpected kernel status");
}

Certificate min_cover_components(int n, int k, int r, int m, const SolveOptions& opts,
                                 bool enumerate_all) {
    SolveSpec spec;
    spec.family = Family::TComponents;
    spec.n = n;
    spec.r = r;
    spec.k = k;
    spec.m = m;
    spec.enumerate_all = enumerate_all;
    spec.validate();

    SearchControl control(opts);
    Certificate cert = make_base_certificate(spec, opts);
    cert.stats.lower_bound_used = lower_bound_count(n, k, r);

    std::vector<std::vector<int>> partitions;
    std::vector<int> cur;
    gen_size_partitions(n, m, r, n, cur, partitions);

    std::vector<PartAssignment> combos;
    for (const auto& sizes : partitions) {
        std::vector<std::vector<int>> budget_vectors;
        std::vector<int> bcur;
        gen_budget_vectors(sizes, 0, k - 1, r, bcur, budget_vectors);
        for (auto& budgets : budget_vectors) {
            PartAssignment pa;
            pa.sizes = sizes;
            pa.budgets = std::move(budgets);
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                pa.lb += kernel_lower_bound(sizes[i], r, pa.budgets[i]);
            }
            combos.push_back(std::move(pa));
        }
    }
    std::sort(combos.begin(), combos.end(),
              [](const PartAssignment& a, const PartAssignment& b) { return a.lb < b.lb; });

    std::int64_t best = -1;
    std::vector<int> best_sizes;
    std::vector<std::vector<Mask>> best_parts;
    bool budget_hit = false;

    for (const auto& combo : combos) {
        if (best >= 0 && combo.lb >= best) break;  // sorted by lb
        std::vector<std::int64_t> suffix_lb(combo.sizes.size() + 1, 0);
        for (int i = static_cast<int>(combo.sizes.size()) - 1; i >= 0; --i) {
            suffix_lb[i] = suffix_lb[i + 1] + kernel_lower_bound(combo.sizes[i], r, combo.budgets[i]);
        }
        std::int64_t total = 0;
        std::vector<std::vector<Mask>> parts;
        bool ok = true;
        for (std::size_t i = 0; i < combo.sizes.size() && ok; ++i) {
            std::int64_t cutoff =
                best < 0 ? -1 : best - total - suffix_lb[i + 1];
            KernelResult kr =
                conn_alpha_kernel(combo.sizes[i], r, combo.budgets[i], false, control, cutoff);
            switch (kr.status) {
                case KernelStatus::Solved:
                    total += kr.value;
                    parts.push_back(kr.witness);
                    if (best >= 0 && total + suffix_lb[i + 1] >= best) ok = false;
                    break;
                case KernelStatus::Infeasible:
                case KernelStatus::Cut:
                    ok = false;
                    break;
                case KernelStatus::Budget:
                    ok = false;
                    budget_hit = true;
                    break;
            }
        }
        if (budget_hit) break;
        if (ok && (best < 0 || total < best)) {
            best = total;
            best_sizes = combo.sizes;
            best_parts = std::move(parts);
        }
    }

    cert.stats.nodes_expanded = control.nodes.load();
    cert.stats.elapsed_ms = control.elapsed_ms();
    if (budget_hit) {
        cert.optimal = false;
        if (best >= 0) cert.value = best;
        return cert;
    }
    if (best < 0) {
        cert.infeasible = true;
        return cert;
    }
    cert.value = best;
    cert.witness = compose_parts(n, r, best_sizes, best_parts);

    if (enumerate_all) {
        CoverContext ctx = build_context(n, r, k);
        EngineConfig cfg;
        cfg.require_components = m;
        std::vector<std::vector<std::int32_t>> sols;
        RunResult res = run_search(ctx, static_cast<int>(best), cfg, control, opts.threads, &sols);
        if (res.budget_exceeded) {
            cert.optimal = false;
        } else {
            std::vector<Hypergraph> all;
            all.reserve(sols.size());
            for (const auto& sol : sols) all.push_back(edges_to_hypergraph(ctx, sol));
            cert.witness = all.front();
            cert.all_witnesses = std::move(all);
        }
        cert.stats.nodes_expanded = control.nodes.load();
        cert.stats.elapsed_ms = control.elapsed_ms();
    }
    return cert;
}

Certificate tilde_T(int n, int r, const IndependenceSequence& s, const SolveOptions& opts,
                    bool enumerate_all) {
    SolveSpec spec;
    spec.family = Family::TildeT;
    spec.n = n;
    spec.r = r;
    spec.sequence = s;
    spec.enumerate_all = enumerate_all;
    spec.validate();

    SearchControl control(opts);
    Certificate cert = make_base_certificate(spec, opts);

    // entries of 1 force singleton parts; entries in [2, r-2] admit none
    int singletons = 0;
    std::vector<int> big;  // descending
    for (int e : s.entries()) {
        if (e == 1) {
            ++singletons;
        } else if (e <= r - 2) {
            cert.infeasible = true;
            return cert;
        } else {
            big.push_back(e);
        }
    }
    std::sort(big.begin(), big.end(), std::greater<>());

    int vertices_for_big = n - singletons;
    std::int64_t min_needed = 0;
    for (int e : big) min_needed += std::max(r, e + 1);
    if (vertices_for_big < min_needed ||
        (big.empty() && vertices_for_big != 0)) {
        cert.infeasible = true;
        return cert;
    }

    // assign part sizes to the big entries; sizes non-increasing across equal
    // entries to skip symmetric duplicates
    std::vector<std::vector<int>> assignments;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == big.size()) {
            if (left == 0) assignments.push_back(cur);
            return;
        }
        int min_rest = 0;
        for (std::size_t j = i + 1; j < big.size(); ++j) min_rest += std::max(r, big[j] + 1);
        int lo = std::max(r, big[i] + 1);
        int hi = left - min_rest;
        if (i > 0 && big[i] == big[i - 1]) hi = std::min(hi, cur[i - 1]);
        for (int sz = hi; sz >= lo; --sz) {
            cur.push_back(sz);
            self(self, i + 1, left - sz);
            cur.pop_back();
        }
    };
    rec(rec, 0, vertices_for_big);

    struct Option {
        std::vector<int> sizes;
        std::int64_t lb = 0;
    };
    std::vector<Option> options;
    for (auto& sizes : assignments) {
        Option o;
        o.sizes = std::move(sizes);
        for (std::size_t i = 0; i < o.sizes.size(); ++i) {
            o.lb += kernel_lower_bound(o.sizes[i], r, big[i]);
        }
        options.push_back(std::move(o));
    }
    std::sort(options.begin(), options.end(),
              [](const Option& a, const Option& b) { return a.lb < b.lb; });

    std::int64_t best = -1;
    std::vector<int> best_sizes;
    std::vector<std::vector<Mask>> best_parts;
    bool budget_hit = false;
    for (const auto& option : options) {
        if (best >= 0 && option.lb >= best) break;
        std::vector<std::int64_t> suffix_lb(option.sizes.size() + 1, 0);
        for (int i = static_cast<int>(option.sizes.size()) - 1; i >= 0; --i) {
            suffix_lb[i] = suffix_lb[i + 1] + kernel_lower_bound(option.sizes[i], r, big[i]);
        }
        std::int64_t total = 0;
        std::vector<std::vector<Mask>> parts;
        bool ok = true;
        for (std::size_t i = 0; i < option.sizes.size() && ok; ++i) {
            std::int64_t cutoff = best < 0 ? -1 : best - total - suffix_lb[i + 1];
            KernelResult kr =
                conn_alpha_kernel(option.sizes[i], r, big[i], /*exact=*/true, control, cutoff);
            switch (kr.status) {
                case KernelStatus::Solved:
                    total += kr.value;
                    parts.push_back(kr.witness);
                    if (best >= 0 && total + suffix_lb[i + 1] >= best) ok = false;
                    break;
                case KernelStatus::Infeasible:
                case KernelStatus::Cut:
                    ok = false;
                    break;
                case KernelStatus::Budget:
                    ok = false;
                    budget_hit = true;
                    break;
            }
        }
        if (budget_hit) break;
        if (ok && (best < 0 || total < best)) {
            best = total;
            best_sizes = option.sizes;
            best_parts = std::move(parts);
        }
    }

    cert.stats.nodes_expanded = control.nodes.load();
    cert.stats.elapsed_ms = control.elapsed_ms();
    if (budget_hit) {
        cert.optimal = false;
        if (best >= 0) cert.value = best;
        return cert;
    }
    if (best < 0 && !big.empty()) {
        cert.infeasible = true;
        return cert;
    }

    // append singleton parts
    std::vector<int> sizes = best_sizes;
    std::vector<std::vector<Mask>> parts = best_parts;
    for (int i = 0; i < singletons; ++i) {
        sizes.push_back(1);
        parts.emplace_back();
    }
    if (best < 0) best = 0;  // all-singleton sequence
    cert.value = best;
    cert.witness = compose_parts(n, r, sizes, parts);

    if (enumerate_all) {
        if (best == 0) {
            cert.all_witnesses = std::vector<Hypergraph>{*cert.witness};
        } else {
            int cover_k = s.sum() + 1;  // alpha(H) = ||S|| forces this covering
            CoverContext ctx = build_context(n, r, cover_k);
            EngineConfig cfg;
            cfg.require_sequence = &spec.sequence;
            std::vector<std::vector<std::int32_t>> sols;
            RunResult res =
                run_search(ctx, static_cast<int>(best), cfg, control, opts.threads, &sols);
            if (res.budget_exceeded) {
                cert.optimal = false;
            } else {
                std::vector<Hypergraph> all;
                all.reserve(sols.size());
                for (const auto& sol : sols) all.push_back(edges_to_hypergraph(ctx, sol));
                cert.witness = all.front();
                cert.all_witnesses = std::move(all);
            }
            cert.stats.nodes_expanded = control.nodes.load();
            cert.stats.elapsed_ms = control.elapsed_ms();
        }
    }
    return cert;
}

Certificate solve(const SolveSpec& spec, const SolveOptions& opts) {
    spec.validate();
    switch (spec.family) {
        case Family::T:
            return min_cover(spec.n, spec.k, spec.r, opts, spec.enumerate_all);
        case Family::TComponents:
            return min_cover_components(spec.n, spec.k, spec.r, spec.m, opts, spec.enumerate_all);
        case Family::TildeT:
            return tilde_T(spec.n, spec.r, spec.sequence, opts, spec.enumerate_all);
        case Family::ConnAlpha:
            return min_edges_connected_alpha(spec.n, spec.r, spec.alpha_budget, opts);
    }
    throw std::logic_error("unknown family");
}

// ---------------------------------------------------------------------------
// Certificate JSON and validation
// ---------------------------------------------------------------------------

nlohmann::json SolveSpec::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family);
    j["n"] = n;
    j["r"] = r;
    if (k >= 0) j["k"] = k;
    if (m >= 0) j["m"] = m;
    if (family == Family::TildeT) j["S"] = sequence.entries();
    if (family == Family::ConnAlpha) j["s"] = alpha_budget;
    j["enumerate_all"] = enumerate_all;
    return j;
}

SolveSpec SolveSpec::from_json(const nlohmann::json& j) {
    SolveSpec spec;
    try {
        spec.family = family_from_name(j.at("family").get<std::string>());
        spec.n = j.at("n").get<int>();
        spec.r = j.at("r").get<int>();
        if (j.contains("k")) spec.k = j.at("k").get<int>();
        if (j.contains("m")) spec.m = j.at("m").get<int>();
        if (j.contains("S")) spec.sequence = IndependenceSequence(j.at("S").get<std::vector<int>>());
        if (j.contains("s")) spec.alpha_budget = j.at("s").get<int>();
        if (j.contains("enumerate_all")) spec.enumerate_all = j.at("enumerate_all").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad spec JSON: ") + e.what());
    }
    return spec;
}

namespace {

nlohmann::json witness_json(const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.n();
    j["r"] = h.r();
    auto edges = nlohmann::json::array();
    for (Mask e : h.edges()) edges.push_back(mask_to_vertices(e));
    j["edges"] = std::move(edges);
    return j;
}

Hypergraph witness_from_json(const nlohmann::json& j) {
    try {
        return Hypergraph::from_vertex_lists(j.at("n").get<int>(), j.at("r").get<int>(),
                                             j.at("edges").get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad witness JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

nlohmann::json Certificate::to_json() const {
    nlohmann::json j;
    j["spec"] = spec.to_json();
    j["value"] = value ? nlohmann::json(*value) : nlohmann::json(nullptr);
    j["infeasible"] = infeasible;
    if (witness) j["witness"] = witness_json(*witness);
    if (all_witnesses) {
        auto arr = nlohmann::json::array();
        for (const auto& w : *all_witnesses) arr.push_back(witness_json(w));
        j["all_witnesses"] = std::move(arr);
    }
    j["stats"] = {{"nodes_expanded", stats.nodes_expanded},
                  {"elapsed_ms", stats.elapsed_ms},
                  {"lower_bound_used", stats.lower_bound_used},
                  {"threads", stats.threads}};
    j["optimal"] = optimal;
    j["toolkit_version"] = toolkit_version;
    return j;
}

Certificate Certificate::from_json(const nlohmann::json& j) {
    Certificate cert;
    try {
        cert.spec = SolveSpec::from_json(j.at("spec"));
        if (j.contains("value") && !j.at("value").is_null()) {
            cert.value = j.at("value").get<std::int64_t>();
        }
        cert.infeasible = j.at("infeasible").get<bool>();
        if (j.contains("witness")) cert.witness = witness_from_json(j.at("witness"));
        if (j.contains("all_witnesses")) {
            std::vector<Hypergraph> all;
            for (const auto& w : j.at("all_witnesses")) all.push_back(witness_from_json(w));
            cert.all_witnesses = std::move(all);
        }
        const auto& st = j.at("stats");
        cert.stats.nodes_expanded = st.at("nodes_expanded").get<std::uint64_t>();
        cert.stats.elapsed_ms = st.at("elapsed_ms").get<std::int64_t>();
        cert.stats.lower_bound_used = st.at("lower_bound_used").get<std::int64_t>();
        cert.stats.threads = st.at("threads").get<int>();
        cert.optimal = j.at("optimal").get<bool>();
        cert.toolkit_version = j.at("toolkit_version").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad certificate JSON: ") + e.what());
    }
    return cert;
}

bool validate_certificate(const Certificate& cert, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    const SolveSpec& spec = cert.spec;
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        return fail(std::string("spec invalid: ") + e.what());
    }
    if (cert.infeasible) {
        if (cert.value || cert.witness) return fail("infeasible certificate carries a value/witness");
        return true;
    }
    if (!cert.value) {
        if (cert.optimal) return fail("optimal certificate without a value");
        return true;  // budget-limited, nothing to re-check
    }
    if (!cert.witness) return fail("value without witness");
    if (*cert.value < cert.stats.lower_bound_used) return fail("value below its lower bound");

    auto check_one = [&](const Hypergraph& w) -> bool {
        if (w.n() != spec.n || w.r() != spec.r) return fail("witness dimensions mismatch");
        if (static_cast<std::int64_t>(w.edge_count()) != *cert.value) {
            return fail("witness edge count differs from value");
        }
        switch (spec.family) {
            case Family::T:
                if (!satisfies_covering(w, spec.k)) return fail("witness not covering");
                break;
            case Family::TComponents:
                if (!satisfies_covering(w, spec.k)) return fail("witness not covering");
                if (static_cast<int>(connected_components(w).size()) != spec.m) {
                    return fail("witness component count differs from m");
                }
                break;
            case Family::TildeT:
                if (!(independence_sequence(w) == spec.sequence)) {
                    return fail("witness independence sequence differs from S");
                }
                break;
            case Family::ConnAlpha:
                if (connected_components(w).size() != 1) return fail("witness not connected");
                if (independence_number(w) > spec.alpha_budget) {
                    return fail("witness exceeds the independence budget");
                }
                break;
        }
        return true;
    };
    if (!check_one(*cert.witness)) return false;
    if (cert.all_witnesses) {
        for (const auto& w : *cert.all_witnesses) {
            if (!check_one(w)) return false;
        }
    }
    return true;
}

}
