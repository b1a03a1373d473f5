#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "euler_census/enumeration.hpp"
#include "euler_census/rng.hpp"
#include "euler_census/spectral.hpp"
#include "fixtures.hpp"

using namespace ec;

TEST_CASE("eulerian circuit fixtures") {
    CHECK(count_eulerian_circuits(make_graph(3, {{0, 1}, {0, 2}, {1, 2}})).count == 2);
    for (int n : {4, 5, 6, 7, 8})
        CHECK(count_eulerian_circuits(cycle_graph(n)).count == 2);
    CHECK(count_eulerian_circuits(complete_graph(5)).count == 264);
    CHECK(count_eulerian_circuits(fx::bowtie()).count == 4);
    CHECK(count_eulerian_circuits(make_graph(1, {})).count == 1);
}

TEST_CASE("preconditions are enforced") {
    CHECK_THROWS_AS(count_eulerian_circuits(complete_graph(4)), std::domain_error);
    CHECK_THROWS_AS(count_eulerian_circuits(fx::two_triangles()), std::domain_error);
}

TEST_CASE("cut edge choice does not change the count") {
    Rng rng(64);
    int tested = 0;
    for (std::uint64_t s = 0; tested < 10; ++s) {
        Graph g;
        try {
            g = random_even_graph(4 + static_cast<int>(s % 3), 0.7, 7000 + s);
        } catch (const RetriesExhausted&) {
            continue;
        }
        if (g.n > 6) continue;
        ++tested;
        mpz_class base = count_eulerian_circuits(g).count;
        for (auto e : g.edges)
            CHECK(count_eulerian_circuits(g, 1000000000ULL, 0, e).count == base);
    }
}

TEST_CASE("count is invariant under relabeling") {
    Rng rng(11);
    for (const Graph& g : {complete_graph(5), fx::bowtie(), cycle_graph(6)}) {
        mpz_class base = count_eulerian_circuits(g).count;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> perm(g.n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = g.n - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.uniform_int(i + 1)]);
            CHECK(count_eulerian_circuits(relabel(g, perm)).count == base);
        }
    }
}

TEST_CASE("determinism and worker independence") {
    Graph g = complete_graph(5);
    ExactCount a = count_eulerian_circuits(g, 1000000000ULL, 1);
    ExactCount b = count_eulerian_circuits(g, 1000000000ULL, 1);
    CHECK(a.count == b.count);
    CHECK(a.nodes_explored == b.nodes_explored);
    for (unsigned w : {2u, 4u, 8u})
        CHECK(count_eulerian_circuits(g, 1000000000ULL, w).count == a.count);
}

TEST_CASE("node budget flags a partial count") {
    Graph g = complete_graph(5);
    ExactCount full = count_eulerian_circuits(g);
    CHECK_FALSE(full.budget_exhausted);
    ExactCount cut = count_eulerian_circuits(g, 50, 1);
    CHECK(cut.budget_exhausted);
    CHECK(cut.count < full.count);
}

TEST_CASE("brute force spanning trees") {
    CHECK(brute_force_spanning_trees(cycle_graph(4)) == 4);
    CHECK(brute_force_spanning_trees(complete_graph(5)) == 125);
    Graph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(brute_force_spanning_trees(path) == 1);
    CHECK(brute_force_spanning_trees(fx::two_triangles()) == 0);
    CHECK_THROWS_AS(brute_force_spanning_trees(complete_graph(8)), std::invalid_argument);

    for (std::uint64_t s = 0; s < 20; ++s) {
        Graph g = fx::random_connected(6, 0.6, 1200 + s);
        if (g.m() > 20) continue;
        CHECK(brute_force_spanning_trees(g) == spanning_tree_count_exact(g));
    }
}

TEST_CASE("brute force directed trees") {
    {
        std::vector<std::vector<mpq_class>> w(2, std::vector<mpq_class>(2, 0));
        w[1][0] = 1;
        CHECK(brute_force_directed_trees(w, 0) == 1);
    }
    {
        std::vector<std::vector<mpq_class>> w(3, std::vector<mpq_class>(3, 1));
        for (int i = 0; i < 3; ++i) w[i][i] = 0;
        for (int r = 0; r < 3; ++r) CHECK(brute_force_directed_trees(w, r) == 3);
    }
    {
        // path 0-1-2 rooted at 0: single directed tree, product w10 * w21
        std::vector<std::vector<mpq_class>> w(3, std::vector<mpq_class>(3, 0));
        w[0][1] = mpq_class(1, 2);
        w[1][0] = mpq_class(2, 3);
        w[1][2] = mpq_class(3, 5);
        w[2][1] = mpq_class(5, 7);
        CHECK(brute_force_directed_trees(w, 0) == mpq_class(2, 3) * mpq_class(5, 7));
        CHECK(brute_force_directed_trees(w, 2) == mpq_class(1, 2) * mpq_class(3, 5));
    }
    std::vector<std::vector<mpq_class>> w(7, std::vector<mpq_class>(7, 1));
    CHECK_THROWS_AS(brute_force_directed_trees(w, 0), std::invalid_argument);
}
