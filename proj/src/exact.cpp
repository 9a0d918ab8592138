#include "nichrom/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <thread>

#include "nichrom/errors.hpp"

namespace nichrom {

SolveResult oracle_ti(const Graph& g, int i) {
    const int n = g.order();
    if (i < 1) throw PreconditionError("oracle_ti: i must be >= 1");
    if (n < 1) throw PreconditionError("oracle_ti: empty graph");
    if (n > kOracleMaxOrder) throw PreconditionError("oracle cap exceeded, use solve_ti");

    // rgs[j] is the 0-based block of vertex j; block ids stay below 16.
    std::vector<int> rgs(n, 0), prefix_max(n, 0);
    SolveResult best;
    best.complete = true;
    std::vector<Color> best_colors;
    int best_blocks = 0;
    std::uint64_t visited = 0;

    auto valid = [&] {
        for (Vertex v = 0; v < n; ++v) {
            std::uint32_t mask = 0;
            for (Vertex x : g.neighbors(v)) mask |= 1u << rgs[x];
            if (std::popcount(mask) > i) return false;
        }
        return true;
    };

    while (true) {
        ++visited;
        const int blocks = prefix_max[n - 1] + 1;
        if (blocks > best_blocks && valid()) {
            best_blocks = blocks;
            best_colors.assign(rgs.begin(), rgs.end());
        }
        // Advance to the next restricted-growth string in lex order.
        int j = n - 1;
        while (j > 0 && rgs[j] > prefix_max[j - 1]) --j;
        if (j == 0) break;
        ++rgs[j];
        prefix_max[j] = std::max(prefix_max[j - 1], rgs[j]);
        for (int k = j + 1; k < n; ++k) {
            rgs[k] = 0;
            prefix_max[k] = prefix_max[k - 1];
        }
    }
    for (Color& c : best_colors) ++c;
    best.value = best_blocks;
    best.witness = Coloring(std::move(best_colors));
    best.nodes = visited;
    return best;
}

namespace {

// Shared between workers. `best` only ever increases.
struct Incumbent {
    std::atomic<int> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::mutex mu;
    std::vector<Color> witness;
    int upper = 0;
    std::uint64_t budget = 0;

    void offer(int value, const std::vector<Color>& colors) {
        std::lock_guard lock(mu);
        if (value > best.load()) {
            witness = colors;
            best.store(value);
        }
    }
};

class Search {
public:
    Search(const Graph& g, int i, std::vector<Vertex> order, Incumbent& inc)
        : g_(g), i_(i), order_(std::move(order)), inc_(inc), color_(g.order(), 0),
          count_(static_cast<std::size_t>(g.order()) * (g.order() + 2), 0), distinct_(g.order(), 0) {}

    // Colours order_[depth] with c; false (and nothing changed) on conflict.
    bool assign(int depth, Color c) {
        const Vertex v = order_[depth];
        auto nbrs = g_.neighbors(v);
        std::size_t done = 0;
        bool ok = true;
        for (; done < nbrs.size(); ++done) {
            const Vertex w = nbrs[done];
            if (count_[slot(w, c)]++ == 0 && ++distinct_[w] > i_) {
                ++done;
                ok = false;
                break;
            }
        }
        if (!ok) {
            for (std::size_t k = 0; k < done; ++k) release(nbrs[k], c);
            return false;
        }
        color_[v] = c;
        return true;
    }

    void unassign(int depth) {
        const Vertex v = order_[depth];
        const Color c = color_[v];
        for (Vertex w : g_.neighbors(v)) release(w, c);
        color_[v] = 0;
    }

    // Explores everything below `depth` given `used` colours so far.
    void dfs(int depth, int used) {
        const int n = g_.order();
        if (inc_.out_of_budget.load(std::memory_order_relaxed)) return;
        if (used + (n - depth) <= inc_.best.load(std::memory_order_relaxed)) return;
        if (inc_.best.load(std::memory_order_relaxed) >= inc_.upper) return;
        if (depth == n) {
            inc_.offer(used, color_);
            return;
        }
        if (inc_.nodes.fetch_add(1, std::memory_order_relaxed) >= inc_.budget) {
            inc_.out_of_budget.store(true);
            return;
        }
        for (Color c = used + 1; c >= 1; --c) {
            if (!assign(depth, c)) continue;
            dfs(depth + 1, std::max(used, c));
            unassign(depth);
        }
    }

    // Collects the feasible prefixes of length `depth_limit` in search order.
    void prefixes(int depth, int used, int depth_limit, std::vector<std::vector<Color>>& out) {
        if (depth == depth_limit || depth == g_.order()) {
            std::vector<Color> p(depth);
            for (int k = 0; k < depth; ++k) p[k] = color_[order_[k]];
            out.push_back(std::move(p));
            return;
        }
        for (Color c = used + 1; c >= 1; --c) {
            if (!assign(depth, c)) continue;
            prefixes(depth + 1, std::max(used, c), depth_limit, out);
            unassign(depth);
        }
    }

private:
    std::size_t slot(Vertex w, Color c) const { return static_cast<std::size_t>(w) * (g_.order() + 2) + c; }

    void release(Vertex w, Color c) {
        if (--count_[slot(w, c)] == 0) --distinct_[w];
    }

    const Graph& g_;
    int i_;
    std::vector<Vertex> order_;
    Incumbent& inc_;
    std::vector<Color> color_;
    std::vector<int> count_;
    std::vector<int> distinct_;
};

}  // namespace

SolveResult solve_ti(const Graph& g, int i, const SolveOptions& options) {
    const int n = g.order();
    if (i < 1) throw PreconditionError("solve_ti: i must be >= 1");
    if (n < 1) throw PreconditionError("solve_ti: empty graph");

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    Incumbent inc;
    inc.budget = options.node_budget;
    inc.upper = n;
    if (is_connected(g)) inc.upper = std::min(n, n - max_degree(g) + i);
    // A single colour is always valid.
    inc.best = 1;
    inc.witness.assign(n, 1);

    if (options.threads <= 1 || n < 6) {
        Search s(g, i, order, inc);
        s.dfs(0, 0);
    } else {
        std::vector<std::vector<Color>> tasks;
        {
            Search s(g, i, order, inc);
            int depth = 1;
            do {
                tasks.clear();
                s.prefixes(0, 0, ++depth, tasks);
            } while (tasks.size() < 4 * options.threads && depth < n - 2);
        }
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            Search s(g, i, order, inc);
            for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
                const auto& prefix = tasks[t];
                int used = 0;
                for (int d = 0; d < static_cast<int>(prefix.size()); ++d) {
                    s.assign(d, prefix[d]);
                    used = std::max(used, prefix[d]);
                }
                s.dfs(static_cast<int>(prefix.size()), used);
                for (int d = static_cast<int>(prefix.size()) - 1; d >= 0; --d) s.unassign(d);
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < options.threads; ++k) pool.emplace_back(worker);
    }

    SolveResult r;
    r.value = inc.best.load();
    r.witness = Coloring(inc.witness);
    r.nodes = inc.nodes.load();
    r.complete = !inc.out_of_budget.load();
    return r;
}

CoverResult min_connected_vertex_cover(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw PreconditionError("min_connected_vertex_cover: need n >= 2");
    if (!is_connected(g)) throw PreconditionError("min_connected_vertex_cover: graph is disconnected");

    std::vector<char> in(n, 0);
    VertexSet chosen;

    // Include-before-exclude over ascending ids visits k-subsets in
    // lexicographic order, so the first hit is the smallest witness.
    auto search = [&](auto&& self, Vertex v, int slots) -> bool {
        if (v == n) return slots == 0 && induces_connected(g, chosen);
        if (n - v < slots) return false;
        if (slots > 0) {
            in[v] = 1;
            chosen.push_back(v);
            if (self(self, v + 1, slots - 1)) return true;
            chosen.pop_back();
            in[v] = 0;
        }
        // Leaving v out forces every earlier neighbour to be in.
        for (Vertex u : g.neighbors(v)) {
            if (u < v && !in[u]) return false;
        }
        return self(self, v + 1, slots);
    };

    for (int k = 1; k <= n; ++k) {
        chosen.clear();
        std::fill(in.begin(), in.end(), 0);
        if (search(search, 0, k)) return {k, chosen};
    }
    return {n, chosen};  // unreachable for connected graphs
}

}  // namespace nichrom
