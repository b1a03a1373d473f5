#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "euler_census/graph.hpp"

namespace ec {

struct ExactCount {
    mpz_class count;
    std::uint64_t nodes_explored = 0;
    double elapsed_s = 0.0;
    std::pair<int, int> cut_edge{-1, -1};  // 0-based
    bool budget_exhausted = false;         // when set, count is a lower bound, not truth
};

// Exact EC(G): equivalence classes of Eulerian circuits under cyclic rotation
// (reversal not identified). Counts directed closed trails whose first step is
// a fixed orientation of the cut edge, times two. cut_edge defaults to the
// lexicographically smallest edge; tests override it to check cut invariance.
ExactCount count_eulerian_circuits(const Graph& g,
                                   std::uint64_t node_budget = 1'000'000'000ULL,
                                   unsigned workers = 0,
                                   std::optional<std::pair<int, int>> cut_edge = std::nullopt);

// Subset enumeration of (n-1)-edge spanning trees; |EG| <= 24.
mpz_class brute_force_spanning_trees(const Graph& g);

// Sum over directed trees with root r (0-based) of the product of edge
// weights, by enumerating parent functions; n <= 6.
mpq_class brute_force_directed_trees(const std::vector<std::vector<mpq_class>>& weights, int r);

}  // namespace ec
