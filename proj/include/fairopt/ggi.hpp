#pragma once

#include <span>
#include <vector>

namespace fairopt {

// Strictly decreasing, strictly positive fairness weights together with their
// first differences deltas[k] = w[k] - w[k+1] (deltas.back() = w.back()).
// The generalized Gini index of a value vector v is
//   sum_k w[k] * (k-th smallest of v)  =  sum_k deltas[k] * L_k(v)
// where L_k is the k-th Lorenz component (sum of the k smallest values).
class WeightVector {
  public:
    // w_k = 1/k^2.
    static WeightVector inverse_square(int n);
    // w_i = (2(n-i)+1)/n^2, the classic Gini weights.
    static WeightVector classic_gini(int n);
    // Validates strict decrease and positivity; throws std::invalid_argument
    // naming the first violating (1-based) index.
    static WeightVector custom(std::vector<double> w);

    int size() const { return static_cast<int>(w_.size()); }
    const std::vector<double>& w() const { return w_; }
    const std::vector<double>& deltas() const { return deltas_; }
    double delta_max() const;

  private:
    explicit WeightVector(std::vector<double> w);
    std::vector<double> w_;
    std::vector<double> deltas_;
};

// Lorenz components: prefix sums of the increasingly sorted vector.
std::vector<double> lorenz(std::span<const double> v);

// Generalized Gini index of v under weights w (computed in the Lorenz form).
double ggi(std::span<const double> v, const WeightVector& w);

// v + eps*1_i - eps*1_j, requiring v[i] < v[j] and 0 < eps < v[j]-v[i].
// Indices are 0-based. Test helper for Schur-concavity checks.
std::vector<double> pigou_dalton_transfer(std::span<const double> v, int i, int j, double eps);

}  // namespace fairopt
