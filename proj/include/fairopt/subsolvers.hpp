#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "fairopt/instance.hpp"

namespace fairopt {

inline constexpr int kDefaultDpVertexCap = 24;   // ~16M DP states, < 1 GB
inline constexpr int kEnumAssignmentCap = 8;     // 8! solutions
inline constexpr int kEnumMatchingVertexCap = 10;  // 9!! solutions

struct AssignmentResult {
    std::vector<int> sigma;
    double value = 0.0;
};

// Maximum-weight perfect assignment on a square matrix, O(n^3).
// Internally minimizes cost[i][j] = max_entry - weight[i][j]; the shift is the
// largest matrix entry, recovered by evaluating the returned permutation on
// the original weights.
AssignmentResult hungarian(const std::vector<std::vector<double>>& weight);

struct MatchingResult {
    std::vector<std::pair<int, int>> pairs;  // i < j, 0-based
    double value = 0.0;
};

// Maximum-weight perfect matching on a complete graph with an even vertex
// count, by bitmask DP over vertex subsets. weight(i, j) is consulted for
// i < j only. Throws CapacityError above vertex_cap.
MatchingResult dp_perfect_matching(int vertices,
                                   const std::function<double(int, int)>& weight,
                                   int vertex_cap = kDefaultDpVertexCap);

// Yields every feasible solution exactly once (n! permutations or (2n-1)!!
// perfect matchings). Throws CapacityError beyond the enumeration caps.
void for_each_feasible(const Instance& inst, const std::function<void(const Solution&)>& fn);
std::vector<Solution> enumerate_feasible(const Instance& inst);

// Exact optimum of the weighted subproblem: maximize sum_i theta_i T_i(z).
Solution solve_weighted(const Instance& inst, std::span<const double> theta,
                        int dp_vertex_cap = kDefaultDpVertexCap);

// Objective value sum_i theta_i T_i of a feasible solution.
double weighted_value(const Instance& inst, const Solution& sol, std::span<const double> theta);

}  // namespace fairopt
