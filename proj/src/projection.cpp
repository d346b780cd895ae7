#include "fairopt/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fairopt/errors.hpp"

namespace fairopt {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// sum_i clamp(v_i - tau, 0, 1)
double cap_sum(std::span<const double> v, double tau) {
    double s = 0.0;
    for (double x : v) s += clamp01(x - tau);
    return s;
}

// Solve cap_sum(v, tau) = k. The sum is continuous, piecewise linear and
// non-increasing in tau with breakpoints at v_i - 1 (coordinate leaves the
// upper cap) and v_i (coordinate hits zero); scan the sorted breakpoints and
// solve the linear segment that brackets k.
double find_threshold(std::span<const double> v, int k) {
    const int n = static_cast<int>(v.size());
    struct Event {
        double tau;
        int coord;
        bool enters_interior;  // true at v_i - 1, false at v_i
    };
    std::vector<Event> events;
    events.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        events.push_back({v[i] - 1.0, i, true});
        events.push_back({v[i], i, false});
    }
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.tau < b.tau; });

    // State on the current segment: cnt1 coordinates capped at 1, interior
    // coordinates summing to S (m of them); cap_sum(tau) = cnt1 + S - m*tau.
    double cnt1 = n, S = 0.0;
    int m = 0;
    const double target = static_cast<double>(k);
    std::size_t idx = 0;
    while (idx < events.size()) {
        const double tau0 = events[idx].tau;
        while (idx < events.size() && events[idx].tau == tau0) {
            if (events[idx].enters_interior) {
                cnt1 -= 1.0;
                m += 1;
                S += v[events[idx].coord];
            } else {
                m -= 1;
                S -= v[events[idx].coord];
            }
            ++idx;
        }
        const double tau1 =
            idx < events.size() ? events[idx].tau : std::numeric_limits<double>::infinity();
        const double g0 = cnt1 + S - m * tau0;
        if (g0 < target - 1e-12) break;  // already past the target
        if (m == 0) {
            if (std::abs(g0 - target) <= 1e-12) return tau0;
            continue;
        }
        const double tau = (cnt1 + S - target) / m;
        if (tau >= tau0 - 1e-9 && tau <= tau1 + 1e-9) return tau;
    }

    // Fallback for pathological float ties: bisection on the same function.
    double lo = *std::min_element(v.begin(), v.end()) - 1.0;
    double hi = *std::max_element(v.begin(), v.end());
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        (cap_sum(v, mid) >= target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> project_capped_simplex(std::span<const double> v, int k) {
    const int n = static_cast<int>(v.size());
    if (n < 1) throw std::invalid_argument("empty vector");
    if (k < 1 || k > n) throw std::invalid_argument("budget k must be in [1, n]");
    if (k == n) return std::vector<double>(n, 1.0);  // single feasible point

    const double tau = find_threshold(v, k);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = clamp01(v[i] - tau);

    // Spread the residual sum error over interior coordinates.
    double sum = 0.0;
    for (double xi : x) sum += xi;
    double residual = static_cast<double>(k) - sum;
    if (residual != 0.0) {
        std::vector<int> interior;
        for (int i = 0; i < n; ++i)
            if (x[i] > 1e-12 && x[i] < 1.0 - 1e-12) interior.push_back(i);
        if (!interior.empty()) {
            const double per = residual / static_cast<double>(interior.size());
            for (int i : interior) x[i] = clamp01(x[i] + per);
        }
    }
    return x;
}

Matrix project_dual(const Matrix& yraw, std::span<const double> deltas) {
    const int n = static_cast<int>(deltas.size());
    if (static_cast<int>(yraw.size()) != n) throw std::invalid_argument("yraw must be n x n");
    for (const auto& row : yraw)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("yraw must be n x n");
    for (int k = 0; k < n; ++k)
        if (!(deltas[k] > 0.0))
            throw std::invalid_argument("delta " + std::to_string(k + 1) + " must be positive");

    Matrix y(n, std::vector<double>(n, 0.0));
    std::vector<double> col(n);
    for (int k = 0; k < n; ++k) {
        const double dk = deltas[k];
        for (int i = 0; i < n; ++i) col[i] = yraw[i][k] / dk;
        std::vector<double> x = project_capped_simplex(col, k + 1);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i][k] = std::min(dk, std::max(0.0, dk * x[i]));
            sum += y[i][k];
        }
        const double residual = static_cast<double>(k + 1) * dk - sum;
        if (residual != 0.0) {
            std::vector<int> interior;
            for (int i = 0; i < n; ++i)
                if (y[i][k] > 1e-12 * dk && y[i][k] < dk * (1.0 - 1e-12)) interior.push_back(i);
            if (!interior.empty()) {
                const double per = residual / static_cast<double>(interior.size());
                for (int i : interior) y[i][k] = std::min(dk, std::max(0.0, y[i][k] + per));
            }
        }
    }
    return y;
}

std::vector<double> qp_projection_oracle(std::span<const double> v, int k) {
    const int n = static_cast<int>(v.size());
    if (n > 6) throw CapacityError("qp_projection_oracle capped at n = 6");
    if (n < 1) throw std::invalid_argument("empty vector");
    if (k < 1 || k > n) throw std::invalid_argument("budget k must be in [1, n]");

    // Every optimum has some active-set pattern (each coordinate at 0, at 1 or
    // interior); enumerate all 3^n patterns, solve each equality-constrained
    // candidate in closed form and keep the feasible one closest to v.
    long patterns = 1;
    for (int i = 0; i < n; ++i) patterns *= 3;

    std::vector<double> best;
    double best_dist = std::numeric_limits<double>::infinity();
    std::vector<int> digit(n);
    for (long p = 0; p < patterns; ++p) {
        long rest = p;
        for (int i = 0; i < n; ++i) {
            digit[i] = static_cast<int>(rest % 3);
            rest /= 3;
        }
        int ones = 0, free_cnt = 0;
        double free_sum = 0.0;
        for (int i = 0; i < n; ++i) {
            if (digit[i] == 1) ++ones;
            if (digit[i] == 2) {
                ++free_cnt;
                free_sum += v[i];
            }
        }
        std::vector<double> x(n, 0.0);
        bool ok = true;
        if (free_cnt == 0) {
            ok = (ones == k);
            if (ok)
                for (int i = 0; i < n; ++i) x[i] = digit[i] == 1 ? 1.0 : 0.0;
        } else {
            const double tau = (free_sum - static_cast<double>(k - ones)) / free_cnt;
            for (int i = 0; i < n && ok; ++i) {
                if (digit[i] == 1) {
                    x[i] = 1.0;
                } else if (digit[i] == 2) {
                    x[i] = v[i] - tau;
                    if (x[i] < -1e-12 || x[i] > 1.0 + 1e-12) ok = false;
                    x[i] = clamp01(x[i]);
                }
            }
        }
        if (!ok) continue;
        double dist = 0.0;
        for (int i = 0; i < n; ++i) dist += (v[i] - x[i]) * (v[i] - x[i]);
        if (dist < best_dist) {
            best_dist = dist;
            best = x;
        }
    }
    return best;
}

}  // namespace fairopt
