#include "euler_census/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "euler_census/rng.hpp"

namespace ec {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
    }
    Graph g;
    g.n = n;
    g.edges.assign(seen.begin(), seen.end());
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            // skip blank lines
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(1, "empty document, expected header \"n m\"");
    int n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError(lineno, "malformed header, expected \"n m\"");
        if (n < 1) throw ParseError(lineno, "vertex count must be positive");
        if (m < 0) throw ParseError(lineno, "negative edge count");
    }
    std::vector<std::pair<int, int>> edge_list;
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < m; ++e) {
        if (!next_line()) throw ParseError(lineno + 1, "unexpected end of file, expected edge");
        std::istringstream es(line);
        int u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw ParseError(lineno, "malformed edge line, expected \"u v\"");
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        int a = std::min(u, v) - 1, b = std::max(u, v) - 1;
        if (!seen.insert({a, b}).second) throw ParseError(lineno, "duplicate edge");
        edge_list.push_back({a, b});
    }
    if (next_line()) throw ParseError(lineno, "trailing content after last edge");
    return make_graph(n, std::move(edge_list));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be positive");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return make_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
    e.push_back({0, n - 1});
    return make_graph(n, std::move(e));
}

namespace {

int count_components(const Graph& g) {
    std::vector<int> mark(g.n, -1);
    int comps = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (mark[s] >= 0) continue;
        ++comps;
        stack.push_back(s);
        mark[s] = comps;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[v])
                if (mark[w] < 0) {
                    mark[w] = comps;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

}  // namespace

Graph random_even_graph(int n, double p, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_even_graph: n must be at least 3");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("random_even_graph: p must be in (0,1]");
    const int max_attempts = 1000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(attempt));
        std::set<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.uniform() < p) edges.insert({u, v});
        std::vector<int> deg(n, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        std::vector<int> odd;
        for (int v = 0; v < n; ++v)
            if (deg[v] % 2) odd.push_back(v);
        // uniform perfect matching of the odd vertices: shuffle, pair in order
        for (std::size_t i = odd.size(); i > 1; --i)
            std::swap(odd[i - 1], odd[rng.uniform_int(i)]);
        for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
            std::pair<int, int> e{std::min(odd[i], odd[i + 1]), std::max(odd[i], odd[i + 1])};
            if (!edges.erase(e)) edges.insert(e);
        }
        Graph g = make_graph(n, {edges.begin(), edges.end()});
        ValidationReport rep = validate(g);
        if (rep.all_ok()) return g;
    }
    throw RetriesExhausted(max_attempts);
}

ValidationReport validate(const Graph& g) {
    ValidationReport r;
    r.is_simple = true;  // construction enforces it
    r.component_count = g.n == 0 ? 0 : count_components(g);
    r.is_connected = r.component_count == 1;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) % 2) r.odd_vertices.push_back(v);
    r.all_degrees_even = r.odd_vertices.empty();
    return r;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n) throw std::invalid_argument("relabel: bad permutation");
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges) e.push_back({perm[u], perm[v]});
    return make_graph(g.n, std::move(e));
}

}  // namespace ec
