#pragma once
#include <string>

#include "euler_census/graph.hpp"
#include "euler_census/rng.hpp"

namespace fx {

// Two triangles sharing vertex 0; degrees (4,2,2,2,2).
inline ec::Graph bowtie() {
    return ec::make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

// Two disjoint triangles.
inline ec::Graph two_triangles() {
    return ec::make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

// G(n, p) conditioned on connectivity (rejection); any degree parity.
inline ec::Graph random_connected(int n, double p, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        ec::Rng rng = ec::Rng::substream(seed, attempt);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.uniform() < p) edges.push_back({u, v});
        ec::Graph g = ec::make_graph(n, edges);
        if (ec::validate(g).is_connected) return g;
    }
}

inline std::string k5_text() {
    return "5 10\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n";
}

}  // namespace fx
