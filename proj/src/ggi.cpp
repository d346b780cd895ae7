#include "fairopt/ggi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fairopt {

namespace {
constexpr double kWeightTol = 1e-12;
}

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
    const int n = static_cast<int>(w_.size());
    deltas_.resize(n);
    for (int k = 0; k + 1 < n; ++k) deltas_[k] = w_[k] - w_[k + 1];
    deltas_[n - 1] = w_[n - 1];
}

WeightVector WeightVector::inverse_square(int n) {
    if (n < 1) throw std::invalid_argument("weight vector size must be >= 1");
    std::vector<double> w(n);
    for (int k = 0; k < n; ++k) w[k] = 1.0 / (static_cast<double>(k + 1) * (k + 1));
    return WeightVector(std::move(w));
}

WeightVector WeightVector::classic_gini(int n) {
    if (n < 1) throw std::invalid_argument("weight vector size must be >= 1");
    std::vector<double> w(n);
    for (int i = 1; i <= n; ++i)
        w[i - 1] = static_cast<double>(2 * (n - i) + 1) / (static_cast<double>(n) * n);
    return WeightVector(std::move(w));
}

WeightVector WeightVector::custom(std::vector<double> w) {
    if (w.empty()) throw std::invalid_argument("weight vector size must be >= 1");
    const int n = static_cast<int>(w.size());
    for (int k = 0; k < n; ++k) {
        if (!(w[k] > kWeightTol))
            throw std::invalid_argument("weight " + std::to_string(k + 1) + " is not strictly positive");
        if (k + 1 < n && !(w[k] > w[k + 1] + kWeightTol))
            throw std::invalid_argument("weights not strictly decreasing at index " +
                                        std::to_string(k + 2));
    }
    return WeightVector(std::move(w));
}

double WeightVector::delta_max() const {
    return *std::max_element(deltas_.begin(), deltas_.end());
}

std::vector<double> lorenz(std::span<const double> v) {
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    double acc = 0.0;
    for (double& x : sorted) {
        acc += x;
        x = acc;
    }
    return sorted;
}

double ggi(std::span<const double> v, const WeightVector& w) {
    if (static_cast<int>(v.size()) != w.size())
        throw std::invalid_argument("value vector and weight vector sizes differ");
    const std::vector<double> L = lorenz(v);
    const std::vector<double>& d = w.deltas();
    double total = 0.0;
    for (std::size_t k = 0; k < L.size(); ++k) total += d[k] * L[k];
    return total;
}

std::vector<double> pigou_dalton_transfer(std::span<const double> v, int i, int j, double eps) {
    const int n = static_cast<int>(v.size());
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
        throw std::invalid_argument("transfer indices out of range");
    if (!(v[i] < v[j])) throw std::invalid_argument("transfer requires v[i] < v[j]");
    if (!(eps > 0.0 && eps < v[j] - v[i]))
        throw std::invalid_argument("transfer amount outside (0, v[j]-v[i])");
    std::vector<double> out(v.begin(), v.end());
    out[i] += eps;
    out[j] -= eps;
    return out;
}

}  // namespace fairopt
