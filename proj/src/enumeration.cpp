#include "euler_census/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>

#include "euler_census/parallel.hpp"

namespace ec {

namespace {

struct SearchGraph {
    int n = 0, m = 0;
    // per vertex: (neighbor, edge id), neighbors ascending
    std::vector<std::vector<std::pair<int, int>>> adj;
};

SearchGraph build_search_graph(const Graph& g) {
    SearchGraph s;
    s.n = g.n;
    s.m = g.m();
    s.adj.assign(g.n, {});
    for (int e = 0; e < s.m; ++e) {
        auto [u, v] = g.edges[e];
        s.adj[u].push_back({v, e});
        s.adj[v].push_back({u, e});
    }
    return s;
}

// True when every unused edge is reachable from cur through unused edges.
bool remaining_connected(const SearchGraph& s, std::uint64_t used, int cur, int remaining) {
    if (remaining == 0) return true;
    std::uint32_t seen = 1u << cur;
    int stack[64];
    int top = 0;
    stack[top++] = cur;
    int edges_seen = 0;
    std::uint64_t edge_seen = 0;
    while (top > 0) {
        int v = stack[--top];
        for (auto [w, e] : s.adj[v]) {
            if (used >> e & 1) continue;
            if (!(edge_seen >> e & 1)) {
                edge_seen |= 1ULL << e;
                ++edges_seen;
            }
            if (!(seen >> w & 1)) {
                seen |= 1u << w;
                stack[top++] = w;
            }
        }
    }
    return edges_seen == remaining;
}

struct TaskState {
    int vertex;
    std::uint64_t used;
    int depth;
};

struct DfsCounter {
    const SearchGraph& s;
    int start;
    std::uint64_t budget;
    std::atomic<std::uint64_t>& global_nodes;
    std::atomic<bool>& exhausted;

    unsigned long long leaves = 0;
    std::uint64_t local_nodes = 0;
    std::uint64_t since_flush = 0;
    // small budgets must be noticed promptly, large ones amortize the atomic
    std::uint64_t quantum = std::max<std::uint64_t>(1, std::min<std::uint64_t>(1024, budget / 8));

    bool tick() {  // returns false when the global budget ran out
        ++local_nodes;
        if (++since_flush >= quantum) {
            global_nodes.fetch_add(since_flush, std::memory_order_relaxed);
            since_flush = 0;
            if (global_nodes.load(std::memory_order_relaxed) > budget) {
                exhausted.store(true, std::memory_order_relaxed);
                return false;
            }
        }
        return !exhausted.load(std::memory_order_relaxed);
    }
    void flush() {
        global_nodes.fetch_add(since_flush, std::memory_order_relaxed);
        since_flush = 0;
    }

    void run(int cur, std::uint64_t used, int depth) {
        if (!tick()) return;
        if (depth == s.m) {
            ++leaves;  // trail closed; parity forces cur == start here
            return;
        }
        if ((depth & 3) == 0 && !remaining_connected(s, used, cur, s.m - depth)) return;
        for (auto [w, e] : s.adj[cur]) {
            if (used >> e & 1) continue;
            run(w, used | (1ULL << e), depth + 1);
        }
    }
};

}  // namespace

ExactCount count_eulerian_circuits(const Graph& g, std::uint64_t node_budget, unsigned workers,
                                   std::optional<std::pair<int, int>> cut_edge) {
    auto t0 = std::chrono::steady_clock::now();
    ValidationReport rep = validate(g);
    if (!rep.all_ok())
        throw std::domain_error(
            "count_eulerian_circuits: graph must be simple, connected, all degrees even");
    if (g.m() > 64)
        throw std::invalid_argument("count_eulerian_circuits: at most 64 edges supported");
    if (g.n > 32)
        throw std::invalid_argument("count_eulerian_circuits: at most 32 vertices supported");

    ExactCount out;
    if (g.m() == 0) {  // single vertex: one empty circuit
        out.count = 1;
        out.nodes_explored = 0;
        return out;
    }
    std::pair<int, int> anchor = cut_edge.value_or(g.edges.front());
    if (!g.has_edge(anchor.first, anchor.second))
        throw std::invalid_argument("count_eulerian_circuits: cut edge not in graph");
    out.cut_edge = anchor;

    SearchGraph s = build_search_graph(g);
    int anchor_id = -1;
    for (int e = 0; e < s.m; ++e) {
        auto [u, v] = g.edges[e];
        if (std::minmax(anchor.first, anchor.second) == std::minmax(u, v)) anchor_id = e;
    }

    // Fixed fork depth of 3 (anchor step + two more) gives plenty of tasks
    // for even small graphs while keeping the prefix list deterministic.
    const int fork_depth = std::min(3, s.m);
    std::vector<TaskState> tasks;
    unsigned long long prefix_leaves = 0;
    std::uint64_t prefix_nodes = 0;
    {
        // expand prefixes breadth-first in lexicographic order
        std::vector<TaskState> frontier{
            {anchor.second, 1ULL << anchor_id, 1}};
        prefix_nodes += 1;
        int depth = 1;
        while (depth < fork_depth) {
            std::vector<TaskState> next;
            for (const auto& st : frontier)
                for (auto [w, e] : s.adj[st.vertex]) {
                    if (st.used >> e & 1) continue;
                    ++prefix_nodes;
                    next.push_back({w, st.used | (1ULL << e), st.depth + 1});
                }
            frontier = std::move(next);
            ++depth;
        }
        for (const auto& st : frontier) {
            if (st.depth == s.m)
                ++prefix_leaves;  // whole graph was shorter than the fork depth
            else
                tasks.push_back(st);
        }
    }

    std::atomic<std::uint64_t> global_nodes{prefix_nodes};
    std::atomic<bool> exhausted{false};
    std::vector<unsigned long long> task_leaves(tasks.size(), 0);
    std::vector<std::uint64_t> task_nodes(tasks.size(), 0);

    parallel_for(
        tasks.size(),
        [&](std::size_t i) {
            DfsCounter c{s, anchor.first, node_budget, global_nodes, exhausted};
            c.run(tasks[i].vertex, tasks[i].used, tasks[i].depth);
            c.flush();
            task_leaves[i] = c.leaves;
            task_nodes[i] = c.local_nodes;
        },
        workers);

    unsigned long long anchored = prefix_leaves;
    std::uint64_t nodes = prefix_nodes;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        anchored += task_leaves[i];
        nodes += task_nodes[i];
    }
    // each cyclic class crosses the anchor edge once in each direction
    out.count = mpz_class(static_cast<unsigned long>(anchored)) * 2;
    out.nodes_explored = nodes;
    out.budget_exhausted = exhausted.load();
    out.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

mpz_class brute_force_spanning_trees(const Graph& g) {
    const int m = g.m(), n = g.n;
    if (m > 24) throw std::invalid_argument("brute_force_spanning_trees: at most 24 edges");
    if (n == 1) return 1;
    if (m < n - 1) return 0;
    mpz_class count = 0;
    std::vector<int> parent(n);
    // iterate all (n-1)-subsets of edges via Gosper's hack
    const std::uint32_t limit = 1u << m;
    std::uint32_t subset = (1u << (n - 1)) - 1;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    while (subset < limit) {
        for (int v = 0; v < n; ++v) parent[v] = v;
        bool acyclic = true;
        for (int e = 0; e < m && acyclic; ++e) {
            if (!(subset >> e & 1)) continue;
            int a = find(g.edges[e].first), b = find(g.edges[e].second);
            if (a == b)
                acyclic = false;
            else
                parent[a] = b;
        }
        if (acyclic) ++count;  // n-1 acyclic edges on n vertices always span
        std::uint32_t c = subset & -subset, r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
    return count;
}

mpq_class brute_force_directed_trees(const std::vector<std::vector<mpq_class>>& weights, int r) {
    const int n = static_cast<int>(weights.size());
    if (n > 6) throw std::invalid_argument("brute_force_directed_trees: at most 6 vertices");
    if (r < 0 || r >= n) throw std::invalid_argument("brute_force_directed_trees: bad root");
    if (n == 1) return 1;
    std::vector<int> verts;  // non-root vertices choosing an out-neighbor
    for (int v = 0; v < n; ++v)
        if (v != r) verts.push_back(v);
    const int k = n - 1;
    std::vector<int> choice(k, 0);  // index into the candidate list of each vertex
    mpq_class total = 0;
    for (;;) {
        // parent[] encodes the out-edge of each non-root vertex
        std::vector<int> parent(n, -1);
        for (int i = 0; i < k; ++i) {
            int c = choice[i];
            parent[verts[i]] = c >= verts[i] ? c + 1 : c;  // skip self
        }
        bool tree = true;
        for (int v = 0; v < n && tree; ++v) {
            if (v == r) continue;
            int steps = 0, cur = v;
            while (cur != r && steps <= n) {
                cur = parent[cur];
                ++steps;
            }
            if (cur != r) tree = false;  // walked into a cycle
        }
        if (tree) {
            mpq_class prod = 1;
            for (int v = 0; v < n; ++v)
                if (v != r) prod *= weights[v][parent[v]];
            total += prod;
        }
        int i = 0;
        while (i < k && ++choice[i] == n - 1) choice[i++] = 0;
        if (i == k) break;
    }
    total.canonicalize();
    return total;
}

}  // namespace ec
