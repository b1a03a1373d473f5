#pragma once
#include <map>
#include <string>
#include <vector>

#include "euler_census/graph.hpp"

namespace ec {

struct AsymptoticEstimate {
    double ln_ec = 0.0;         // k_ec + ln_prefactor
    double k_ec = 0.0;
    double ln_prefactor = 0.0;  // log of 2^{m-(n-1)/2} pi^{-(n-1)/2} sqrt(t) prod (d/2-1)!
    std::map<std::string, double> components;
};

struct CorrectionConstants {
    std::vector<double> alpha;   // diag of Q_hat^{-1}
    std::vector<double> beta;    // Q alpha
    std::vector<double> r_diag;  // R_kk
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
};

// Degree-imbalance exponent: -1/4 sum_edges (1/(d_j+1) - 1/(d_k+1))^2.
double k_ec(const Graph& g);

// ln EC(G) per the main estimate; requires simple + connected + even degrees.
// Spanning trees exact for n <= 64, spectral log-sum beyond.
AsymptoticEstimate ln_ec_estimate(const Graph& g);

// Complete-graph specialization. Returns -infinity for even n (EC(K_n) = 0).
double ln_ec_complete(int n);

// ln k! by exact summation of logs; k >= 0.
double ln_factorial(int k);

CorrectionConstants correction_constants(const Graph& g);

}  // namespace ec
