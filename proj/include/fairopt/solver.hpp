#pragma once

#include <span>
#include <vector>

#include "fairopt/ggi.hpp"
#include "fairopt/instance.hpp"
#include "fairopt/projection.hpp"
#include "fairopt/subsolvers.hpp"

namespace fairopt {

enum class InitStrategy { Uniform, RankBased };
enum class SubgradientSign { Paper, Descent };

const char* init_name(InitStrategy s);
const char* sign_name(SubgradientSign s);

struct SolverConfig {
    int max_iter = 200;
    double rho0 = 2.0;
    int halving_patience = 3;
    double y_change_tol = 1e-6;
    InitStrategy init = InitStrategy::RankBased;
    SubgradientSign sign = SubgradientSign::Paper;
    int dp_vertex_cap = kDefaultDpVertexCap;
};

struct SolverReport {
    Solution best_solution;
    double best_ggi = 0.0;
    int iterations = 0;
    std::vector<double> upper_bounds;  // L(y_t) per iteration
    std::vector<double> ggi_values;    // ggi(z_t) per iteration
    bool certificate = false;
    double wall_time_ms = 0.0;
    SolverConfig config;

    double best_upper_bound() const;
};

// r_k = k-th smallest of T, d_ik = max(0, r_k - T_i); the feasible
// reconstruction used for both the optimality certificate and the
// subgradient.
struct RDPair {
    std::vector<double> r;
    Matrix d;
};

// Initial dual weights in the polytope. Uniform: y_ik = (k/n) w'_k.
// RankBased: solve the max-weight problem (theta = 1) first, put w'_k on the
// k poorest components of its value vector, and hand that solution back via
// maxweight_sol as the starting incumbent.
Matrix init_dual(const Instance& inst, const WeightVector& w, InitStrategy strategy,
                 Solution* maxweight_sol = nullptr, int dp_vertex_cap = kDefaultDpVertexCap);

RDPair reconstruct_rd(std::span<const double> T);

// g_ik = r_k - d_ik - T_i = min(r_k - T_i, 0).
Matrix subgradient(std::span<const double> T, const RDPair& rd);

// gamma = (val - bestvalue) * rho / sqn; sqn must be positive (a zero
// subgradient means the dual is stationary and the caller skips the step).
double step_size(double val_zt, double bestvalue, double sqn, double rho);

// Lagrangian bound L(lambda) for lambda in the dual polytope: the optimum of
// the weighted subproblem with theta_i = sum_k lambda_ik. Always an upper
// bound on the optimal GGI value.
double upper_bound(const Instance& inst, const Matrix& lambda, const WeightVector& w,
                   int dp_vertex_cap = kDefaultDpVertexCap);

// True iff, after sorting components by decreasing T (ties by index), every
// rank column k of y puts w'_k on the k poorest components and 0 elsewhere.
// When it fires, the solution that produced T is GGI-optimal.
bool certificate(const Matrix& y, std::span<const double> T, std::span<const double> deltas,
                 double tol = 1e-9);

// Approximation ratio of the max-weight solution:
// max(2 w'_n / ((n+1) w'_max), n * min(T) / sum(T)).
double maxweight_ratio_bound(std::span<const double> Tbar, const WeightVector& w);

SolverReport solve(const Instance& inst, const WeightVector& w, const SolverConfig& cfg = {});

}  // namespace fairopt
