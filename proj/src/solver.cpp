#include "fairopt/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fairopt {

const char* init_name(InitStrategy s) {
    return s == InitStrategy::Uniform ? "uniform" : "rank-based";
}

const char* sign_name(SubgradientSign s) {
    return s == SubgradientSign::Paper ? "paper" : "descent";
}

double SolverReport::best_upper_bound() const {
    return *std::min_element(upper_bounds.begin(), upper_bounds.end());
}

namespace {

// Component indices ordered by decreasing value, ties by index.
std::vector<int> decreasing_order(std::span<const double> T) {
    std::vector<int> order(T.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return T[a] > T[b]; });
    return order;
}

std::vector<double> column_sums_by_row(const Matrix& y) {
    std::vector<double> theta(y.size(), 0.0);
    for (std::size_t i = 0; i < y.size(); ++i)
        for (double v : y[i]) theta[i] += v;
    return theta;
}

}  // namespace

Matrix init_dual(const Instance& inst, const WeightVector& w, InitStrategy strategy,
                 Solution* maxweight_sol, int dp_vertex_cap) {
    const int n = inst.n;
    if (w.size() != n) throw std::invalid_argument("weight vector size must equal instance n");
    const std::vector<double>& d = w.deltas();
    Matrix y(n, std::vector<double>(n, 0.0));
    if (strategy == InitStrategy::Uniform) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) y[i][k] = static_cast<double>(k + 1) / n * d[k];
        return y;
    }
    const std::vector<double> ones(n, 1.0);
    Solution mw = solve_weighted(inst, ones, dp_vertex_cap);
    const std::vector<double> T = agent_values(inst, mw);
    const std::vector<int> order = decreasing_order(T);
    // Rank column k gets w'_k on the k poorest components.
    for (int k = 0; k < n; ++k)
        for (int pos = n - 1 - k; pos < n; ++pos) y[order[pos]][k] = d[k];
    if (maxweight_sol) *maxweight_sol = std::move(mw);
    return y;
}

RDPair reconstruct_rd(std::span<const double> T) {
    const int n = static_cast<int>(T.size());
    RDPair rd;
    rd.r.assign(T.begin(), T.end());
    std::sort(rd.r.begin(), rd.r.end());
    rd.d.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) rd.d[i][k] = std::max(0.0, rd.r[k] - T[i]);
    return rd;
}

Matrix subgradient(std::span<const double> T, const RDPair& rd) {
    const int n = static_cast<int>(T.size());
    Matrix g(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) g[i][k] = rd.r[k] - rd.d[i][k] - T[i];
    return g;
}

double step_size(double val_zt, double bestvalue, double sqn, double rho) {
    if (!(sqn > 0.0)) throw std::invalid_argument("zero subgradient: dual is stationary");
    return (val_zt - bestvalue) * rho / sqn;
}

double upper_bound(const Instance& inst, const Matrix& lambda, const WeightVector& w,
                   int dp_vertex_cap) {
    const int n = inst.n;
    if (w.size() != n || static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("dimension mismatch");
    const std::vector<double>& d = w.deltas();
    const double tol = 1e-7;
    for (int k = 0; k < n; ++k) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) {
            if (lambda[i][k] < -tol || lambda[i][k] > d[k] + tol)
                throw std::invalid_argument("lambda outside the dual polytope box");
            col += lambda[i][k];
        }
        if (std::abs(col - static_cast<double>(k + 1) * d[k]) > tol * n)
            throw std::invalid_argument("lambda column sum violates the dual polytope");
    }
    const std::vector<double> theta = column_sums_by_row(lambda);
    const Solution z = solve_weighted(inst, theta, dp_vertex_cap);
    return weighted_value(inst, z, theta);
}

bool certificate(const Matrix& y, std::span<const double> T, std::span<const double> deltas,
                 double tol) {
    const int n = static_cast<int>(T.size());
    const std::vector<int> order = decreasing_order(T);
    for (int k = 0; k < n; ++k) {
        for (int pos = 0; pos < n; ++pos) {
            const double expected = pos >= n - 1 - k ? deltas[k] : 0.0;
            if (std::abs(y[order[pos]][k] - expected) > tol) return false;
        }
    }
    return true;
}

double maxweight_ratio_bound(std::span<const double> Tbar, const WeightVector& w) {
    const int n = w.size();
    if (static_cast<int>(Tbar.size()) != n) throw std::invalid_argument("dimension mismatch");
    const double total = std::accumulate(Tbar.begin(), Tbar.end(), 0.0);
    if (!(total > 0.0)) throw std::invalid_argument("total utility must be positive");
    const double tmin = *std::min_element(Tbar.begin(), Tbar.end());
    const double first = 2.0 * w.deltas()[n - 1] / (static_cast<double>(n + 1) * w.delta_max());
    const double second = static_cast<double>(n) * tmin / total;
    return std::max(first, second);
}

SolverReport solve(const Instance& inst, const WeightVector& w, const SolverConfig& cfg) {
    if (cfg.max_iter < 1 || !(cfg.rho0 > 0.0) || cfg.halving_patience < 1)
        throw std::invalid_argument("invalid solver configuration");
    const auto t_start = std::chrono::steady_clock::now();
    const int n = inst.n;
    const std::vector<double>& deltas = w.deltas();

    SolverReport rep;
    rep.config = cfg;

    Solution mw_sol;
    Matrix y = init_dual(inst, w, cfg.init, &mw_sol, cfg.dp_vertex_cap);

    double best_ggi = -std::numeric_limits<double>::infinity();
    Solution best_sol;
    if (cfg.init == InitStrategy::RankBased) {
        best_ggi = ggi(agent_values(inst, mw_sol), w);
        best_sol = mw_sol;
    }

    double rho = cfg.rho0;
    int stall = 0;
    double best_ub = std::numeric_limits<double>::infinity();

    for (int t = 1; t <= cfg.max_iter; ++t) {
        const std::vector<double> theta = column_sums_by_row(y);
        const Solution z = solve_weighted(inst, theta, cfg.dp_vertex_cap);
        const std::vector<double> T = agent_values(inst, z);
        double val = 0.0;
        for (int i = 0; i < n; ++i) val += theta[i] * T[i];  // = L(y_t)
        const double g = ggi(T, w);

        rep.iterations = t;
        rep.ggi_values.push_back(g);
        rep.upper_bounds.push_back(val);
        if (g > best_ggi) {
            best_ggi = g;
            best_sol = z;
        }

        if (val < best_ub - 1e-12) {
            best_ub = val;
            stall = 0;
        } else if (++stall >= cfg.halving_patience) {
            rho *= 0.5;
            stall = 0;
        }

        if (certificate(y, T, deltas)) {
            rep.certificate = true;
            break;
        }

        const RDPair rd = reconstruct_rd(T);
        const Matrix grad = subgradient(T, rd);
        double sqn = 0.0;
        for (const auto& row : grad)
            for (double x : row) sqn += x * x;
        if (!(sqn > 0.0)) break;  // stationary dual, y would never move

        const double gamma = step_size(val, best_ggi, sqn, rho);
        const double dir = cfg.sign == SubgradientSign::Paper ? -1.0 : 1.0;
        Matrix yraw(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) yraw[i][k] = y[i][k] + dir * gamma * grad[i][k];
        Matrix ynew = project_dual(yraw, deltas);

        double dy = 0.0;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) dy = std::max(dy, std::abs(ynew[i][k] - y[i][k]));
        y = std::move(ynew);
        if (dy <= cfg.y_change_tol) break;
    }

    rep.best_solution = std::move(best_sol);
    rep.best_ggi = best_ggi;
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t_start)
                           .count();
    return rep;
}

}  // namespace fairopt
