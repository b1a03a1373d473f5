// Acceptance gate: each criterion prints exactly one PASS/FAIL line and the
// process exit code reports it, so the suite can register them individually.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "euler_census/asymptotic.hpp"
#include "euler_census/enumeration.hpp"
#include "euler_census/integral.hpp"
#include "euler_census/matrix.hpp"
#include "euler_census/rng.hpp"
#include "euler_census/spectral.hpp"
#include "fixtures.hpp"

using namespace ec;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string fmt(double v, int prec = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    return buf;
}

// 1: matrix-tree exactness
Outcome criterion1() {
    Outcome o;
    int agreed = 0;
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng.uniform_int(5));  // 3..7
        Graph g = fx::random_connected(n, 0.5, 42000 + trial);
        if (spanning_tree_count_exact(g) == brute_force_spanning_trees(g))
            ++agreed;
        else
            o.fail("disagreement on trial " + std::to_string(trial) + " (n=" +
                   std::to_string(g.n) + ", m=" + std::to_string(g.m()) + ")");
    }
    o.note(std::to_string(agreed) + "/50 random graphs agree with subset enumeration");
    for (int n = 2; n <= 9; ++n) {
        mpz_class expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), n, n - 2);
        if (spanning_tree_count_exact(complete_graph(n)) != expect)
            o.fail("t(K_" + std::to_string(n) + ") != n^(n-2)");
    }
    o.note("t(K_n)=n^(n-2) for n=2..9");
    return o;
}

// 2: Tutte identity
Outcome criterion2() {
    Outcome o;
    Rng rng(202);
    int agreed = 0;
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng.uniform_int(3));  // 3..5
        std::vector<std::vector<mpq_class>> w(n, std::vector<mpq_class>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    w[i][j] = mpq_class(static_cast<long>(rng.uniform_int(9)),
                                        1 + static_cast<long>(rng.uniform_int(4)));
        int r = static_cast<int>(rng.uniform_int(n));
        if (tutte_minor(w, r) == brute_force_directed_trees(w, r))
            ++agreed;
        else
            o.fail("mismatch on trial " + std::to_string(trial));
    }
    o.note(std::to_string(agreed) + "/25 rational-weight instances agree, exact equality");
    return o;
}

// 3: the integral representation is exact at desk scale
Outcome criterion3() {
    Outcome o;
    struct Case {
        const char* name;
        Graph g;
    };
    for (Case c : {Case{"K3", complete_graph(3)}, Case{"C4", cycle_graph(4)}}) {
        mpz_class exact = count_eulerian_circuits(c.g).count;
        double ln_exact = log_mpz(exact);
        IntegralResult r = quadrature_S(c.g, 128);
        double ratio = std::exp(r.ln_ec_implied) / exact.get_d();
        if (std::fabs(ratio - 2.0) < 0.05 || std::fabs(ratio - 0.5) < 0.0125) {
            o.fail(std::string("CONVENTION PROBE on ") + c.name +
                   ": quadrature/oracle ratio = " + fmt(ratio) +
                   " — systematic factor-2 mismatch between the circuit-equivalence "
                   "convention of the integrand and the backtracking oracle");
            continue;
        }
        if (std::fabs(r.ln_ec_implied - ln_exact) > 0.01 * std::fabs(ln_exact))
            o.fail(std::string(c.name) + ": ln_ec_implied " + fmt(r.ln_ec_implied, 10) +
                   " vs exact " + fmt(ln_exact, 10) + " beyond 1%");
        if (std::fabs(r.value.imag()) > 1e-6 * std::fabs(r.value.real()))
            o.fail(std::string(c.name) + ": imaginary residue " + fmt(r.value.imag()) +
                   " above 1e-6 relative");
        o.note(std::string(c.name) + " ln_ec=" + fmt(r.ln_ec_implied, 10) + " (exact " +
               fmt(ln_exact, 10) + "), imag/real=" +
               fmt(std::fabs(r.value.imag() / r.value.real()), 2));
    }
    return o;
}

// 4: the estimate specializes to the closed complete-graph form
Outcome criterion4() {
    Outcome o;
    double worst = 0.0;
    for (int n = 3; n <= 25; n += 2) {
        double est = ln_ec_estimate(complete_graph(n)).ln_ec;
        double closed = ln_ec_complete(n);
        double rel = std::fabs(est - closed) / std::fabs(closed);
        worst = std::max(worst, rel);
        if (rel > 1e-9)
            o.fail("n=" + std::to_string(n) + " relative gap " + fmt(rel));
    }
    o.note("odd n=3..25, worst relative gap " + fmt(worst, 3));
    return o;
}

// 5: |delta| shrinks from K5 to K7 (trend check; the error constant is not
// pinned analytically, so only the direction is testable)
Outcome criterion5() {
    Outcome o;
    double deltas[2];
    int idx = 0;
    for (int n : {5, 7}) {
        Graph g = complete_graph(n);
        ExactCount ex = count_eulerian_circuits(g, 1000000000ULL);
        if (ex.budget_exhausted) {
            o.fail("K" + std::to_string(n) + " exhausted the 1e9 node budget");
            return o;
        }
        double ln_exact = log_mpz(ex.count);
        double ln_formula = ln_ec_estimate(g).ln_ec;
        double delta = std::expm1(ln_exact - ln_formula);
        deltas[idx++] = delta;
        o.note("K" + std::to_string(n) + ": EC=" + ex.count.get_str() + ", delta=" +
               fmt(delta, 6) + ", delta*n^0.45=" + fmt(std::fabs(delta) * std::pow(n, 0.45), 6) +
               ", nodes=" + std::to_string(ex.nodes_explored));
    }
    if (!std::isfinite(deltas[0]) || !std::isfinite(deltas[1])) o.fail("delta not finite");
    if (!(std::fabs(deltas[1]) < std::fabs(deltas[0])))
        o.fail("|delta(K7)| not smaller than |delta(K5)|");
    return o;
}

// 6: Gaussian normalization via the diagonal-theta proposal
Outcome criterion6() {
    Outcome o;
    struct Case {
        const char* name;
        Graph g;
    };
    for (Case c : {Case{"K5", complete_graph(5)}, Case{"random-even-n10", random_even_graph(10, 0.5, 3)}}) {
        IntegralModel m = build_model(c.g, 0.05);
        // finite variance of the theta-diagonal weight needs
        // lambda_min(D^{-1/2} Q_hat D^{-1/2}) > 1/4 with D = diag(d_j + 1)
        const int n = c.g.n;
        Matrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a(i, j) = m.Q_hat(i, j) / (2.0 * m.theta_scale[i] * m.theta_scale[j]);
        double lmin = eigenvalues_symmetric(a).front();
        if (lmin <= 0.25) {
            o.fail(std::string(c.name) + ": proposal variance precondition violated, "
                   "lambda_min(A)=" + fmt(lmin));
            continue;
        }
        McOptions opts;
        opts.include_beta = opts.include_quartic = opts.include_r = false;
        opts.infinite_box = true;
        opts.proposal = McOptions::Proposal::theta_diagonal;
        IntegralResult r = mc_estimate_int(m, 1000000, 4321, opts);
        double target = std::exp(0.5 * n * std::log(2 * std::numbers::pi) -
                                 0.5 * log_mpz(det_qhat_exact(c.g)));
        double z = (r.value.real() - target) / r.std_error_re;
        if (std::fabs(z) > 3.0)
            o.fail(std::string(c.name) + ": (2pi)^{n/2}/sqrt(det) off by " + fmt(z, 3) +
                   " std errors");
        o.note(std::string(c.name) + ": z=" + fmt(z, 3) + " (target " + fmt(target, 6) +
               ", estimate " + fmt(r.value.real(), 6) + " +- " + fmt(r.std_error_re, 3) + ")");
    }
    return o;
}

// 7: full MC pipeline vs the exact oracle on K5 — includes the documented
// S~=S0 allowance; the box U_n(n^{-1/2+eps}) covers only ~1.08 proposal
// standard deviations per axis at n=5, so the dominant-region restriction is
// far from dominant here and this criterion is expected to fail honestly.
Outcome criterion7() {
    Outcome o;
    Graph g = complete_graph(5);
    double ln_exact = log_mpz(count_eulerian_circuits(g).count);
    IntegralModel m = build_model(g, 0.05);

    IntegralResult r1 = mc_estimate_int(m, 1000000, 20250815, {}, 1);
    for (unsigned w : {2u, 4u}) {
        IntegralResult rw = mc_estimate_int(m, 1000000, 20250815, {}, w);
        if (rw.value != r1.value || rw.std_error != r1.std_error) {
            o.fail("not deterministic across worker counts");
            break;
        }
    }

    double rel_se = r1.std_error / std::fabs(r1.value.real());
    double tol = 3.0 * rel_se + 0.15;
    double gap = std::fabs(r1.ln_ec_implied - ln_exact);
    double sigma = std::sqrt(m.W(0, 0));  // proposal std dev per axis
    o.note("ln_ec_implied=" + fmt(r1.ln_ec_implied, 8) + ", ln_exact=" + fmt(ln_exact, 8) +
           ", gap=" + fmt(gap, 4) + ", tol=3*" + fmt(rel_se, 3) + "+0.15=" + fmt(tol, 4));
    o.note("box/sigma=" + fmt(m.box_radius / sigma, 4) +
           " per axis — the box captures only a small fraction of the Gaussian mass at n=5, "
           "so S0 underestimates S badly at this size");
    if (gap > tol) o.fail("gap " + fmt(gap, 4) + " exceeds tolerance " + fmt(tol, 4));
    return o;
}

// 8: spectral invariants across the fixture corpus
Outcome criterion8() {
    Outcome o;
    std::vector<std::pair<std::string, Graph>> corpus = {
        {"K3", complete_graph(3)},     {"C4", cycle_graph(4)},
        {"K5", complete_graph(5)},     {"C6", cycle_graph(6)},
        {"bowtie", fx::bowtie()},      {"K7", complete_graph(7)},
        {"2K3", fx::two_triangles()},  {"re10", random_even_graph(10, 0.5, 5)},
        {"re12", random_even_graph(12, 0.4, 8)}, {"re20", random_even_graph(20, 0.3, 11)}};
    for (const auto& [name, g] : corpus) {
        SpectralSummary s = spectral_summary(g);
        double sum = 0.0;
        for (double v : s.eigenvalues) sum += v;
        if (std::fabs(sum - 2.0 * g.m()) > 1e-9 * std::max(1.0, 2.0 * g.m()))
            o.fail(name + ": eigenvalue sum != 2m");
        if (std::fabs(s.eigenvalues.front()) > 1e-8) o.fail(name + ": lambda_1 not ~0");

        bool connected = validate(g).is_connected;
        if (connected) {
            int min_d = g.degree(0);
            for (int v = 0; v < g.n; ++v) min_d = std::min(min_d, g.degree(v));
            if (s.lambda2 < 2 * min_d - g.n + 2 - 1e-6)
                o.fail(name + ": lower degree-eigenvalue inequality violated");
            if (s.lambda2 > static_cast<double>(g.n) / (g.n - 1) * min_d + 1e-6)
                o.fail(name + ": upper degree-eigenvalue inequality violated");
        }

        if (det_qhat_exact(g) != mpz_class(g.n) * g.n * spanning_tree_count_exact(g))
            o.fail(name + ": det(Q+J) != n^2 t");

        Norms nq = norms(laplacian(g).q_hat_float());
        if (std::fabs(nq.one - g.n) > 1e-12) o.fail(name + ": ||Q_hat||_1 != n");

        // expansion error vs its own lemma bound, X = off-diagonal(Q_hat)/n
        Matrix x(g.n, g.n);
        LaplacianBundle b = laplacian(g);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                if (i != j) x(i, j) = static_cast<double>(b.Q_hat[i][j]) / g.n;
        Matrix ipx = Matrix::identity(g.n);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) ipx(i, j) += x(i, j);
        double truth = std::log(lu_det(ipx));
        for (int terms : {2, 3, 4, 6}) {
            LogDetExpansion e = logdet_expansion(x, terms);
            if (std::fabs(e.approx_logdet - truth) > e.error_bound + 1e-12)
                o.fail(name + ": logdet expansion error above the lemma bound at m=" +
                       std::to_string(terms));
        }
    }
    o.note(std::to_string(corpus.size()) + " fixtures checked");
    return o;
}

// 9: the C1*C2 identity sharpens as n grows
Outcome criterion9() {
    Outcome o;
    auto median_gap = [&](int n, std::uint64_t seed0, double& min_gamma) {
        std::vector<double> v;
        for (std::uint64_t s = 0; s < 20; ++s) {
            Graph g = random_even_graph(n, 0.5, seed0 + s);
            min_gamma = std::min(min_gamma, algebraic_connectivity(g) / g.n);
            CorrectionConstants c = correction_constants(g);
            double imb = 0.0;
            for (auto [a, b] : g.edges) {
                double d = 1.0 / (g.degree(a) + 1) - 1.0 / (g.degree(b) + 1);
                imb += d * d;
            }
            v.push_back(std::fabs(std::log(c.c1 * c.c2) + 0.5 * imb));
        }
        std::sort(v.begin(), v.end());
        return 0.5 * (v[9] + v[10]);
    };
    double min_gamma = 1.0;
    double m10 = median_gap(10, 9100, min_gamma);
    double m20 = median_gap(20, 9200, min_gamma);
    double m40 = median_gap(40, 9300, min_gamma);
    o.note("median |ln(C1 C2) + S/2|: n=10 -> " + fmt(m10, 4) + ", n=20 -> " + fmt(m20, 4) +
           ", n=40 -> " + fmt(m40, 4) + " (min observed gamma " + fmt(min_gamma, 3) + ")");
    if (!(m10 <= 10.0 / 10)) o.fail("n=10 median above the 10/n calibration");
    if (!(m20 <= m10)) o.fail("median increased from n=10 to n=20");
    if (!(m40 <= m20)) o.fail("median increased from n=20 to n=40");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <criterion 1..9 | all>\n", argv[0]);
        return 2;
    }
    Outcome (*table[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                            criterion6, criterion7, criterion8, criterion9};
    int lo, hi;
    if (std::strcmp(argv[1], "all") == 0) {
        lo = 1;
        hi = 9;
    } else {
        lo = hi = std::atoi(argv[1]);
        if (lo < 1 || lo > 9) {
            std::fprintf(stderr, "criterion out of range\n");
            return 2;
        }
    }
    bool all_pass = true;
    for (int c = lo; c <= hi; ++c) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = table[c - 1]();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s — %s (%.1f s)\n", c, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
