#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ec {

// Simple undirected graph. Vertices are 0-based internally; every external
// text format (edge lists, error messages) is 1-based.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;   // u < v, sorted lexicographically
    std::vector<std::vector<int>> adj;        // sorted neighbor lists

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    std::vector<int> degrees() const {
        std::vector<int> d(n);
        for (int v = 0; v < n; ++v) d[v] = degree(v);
        return d;
    }
    bool has_edge(int u, int v) const;
};

struct ValidationReport {
    bool is_simple = false;
    bool is_connected = false;
    bool all_degrees_even = false;
    std::vector<int> odd_vertices;  // 0-based
    int component_count = 0;
    bool all_ok() const { return is_simple && is_connected && all_degrees_even; }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct RetriesExhausted : std::runtime_error {
    int attempts;
    explicit RetriesExhausted(int attempts_)
        : std::runtime_error("no valid graph after " + std::to_string(attempts_) + " attempts"),
          attempts(attempts_) {}
};

// Build a Graph from vertex count and an edge list (0-based, any order).
// Rejects self-loops and duplicates.
Graph make_graph(int n, std::vector<std::pair<int, int>> edge_list);

// First line "n m", then m lines "u v", 1-based.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);

// G(n,p) draw, odd vertices repaired by toggling a random perfect matching
// of them; redrawn (up to 1000 attempts) until connected with all degrees
// even. Deterministic in (n, p, seed).
Graph random_even_graph(int n, double p, std::uint64_t seed);

ValidationReport validate(const Graph& g);

// Relabel vertices: vertex v becomes perm[v]. perm must be a permutation.
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace ec
