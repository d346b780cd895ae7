#include "fairopt/subsolvers.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fairopt/errors.hpp"

namespace fairopt {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

AssignmentResult hungarian(const std::vector<std::vector<double>>& weight) {
    const int n = static_cast<int>(weight.size());
    if (n == 0) throw std::invalid_argument("empty weight matrix");
    for (const auto& row : weight)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("weight matrix not square");

    // Minimizing formulation on cost = shift - weight, shift = largest entry,
    // so costs are non-negative; the objective is recovered from the original
    // weights afterwards.
    double shift = weight[0][0];
    for (const auto& row : weight)
        for (double x : row) shift = std::max(shift, x);

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = (shift - weight[i0 - 1][j - 1]) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0]);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    AssignmentResult res;
    res.sigma.assign(n, -1);
    for (int j = 1; j <= n; ++j) res.sigma[p[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) res.value += weight[i][res.sigma[i]];
    return res;
}

MatchingResult dp_perfect_matching(int vertices, const std::function<double(int, int)>& weight,
                                   int vertex_cap) {
    if (vertices < 2 || vertices % 2 != 0)
        throw std::invalid_argument("perfect matching needs an even vertex count >= 2");
    if (vertices > vertex_cap)
        throw CapacityError("matching on " + std::to_string(vertices) +
                            " vertices exceeds the subset-DP cap of " + std::to_string(vertex_cap) +
                            " (export the instance as an LP instead)");

    const std::size_t size = std::size_t{1} << vertices;
    std::vector<double> dp(size, kNegInf);
    std::vector<std::uint16_t> par(size, 0);
    dp[0] = 0.0;
    const std::uint32_t full = static_cast<std::uint32_t>(size - 1);
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (dp[mask] == kNegInf) continue;
        int i = 0;
        while (mask & (1u << i)) ++i;
        for (int j = i + 1; j < vertices; ++j) {
            if (mask & (1u << j)) continue;
            const std::uint32_t nm = mask | (1u << i) | (1u << j);
            const double cand = dp[mask] + weight(i, j);
            if (cand > dp[nm]) {
                dp[nm] = cand;
                par[nm] = static_cast<std::uint16_t>(i * vertices + j);
            }
        }
    }

    MatchingResult res;
    res.value = dp[full];
    std::uint32_t mask = full;
    while (mask) {
        const int i = par[mask] / vertices;
        const int j = par[mask] % vertices;
        res.pairs.emplace_back(i, j);
        mask &= ~((1u << i) | (1u << j));
    }
    std::reverse(res.pairs.begin(), res.pairs.end());
    return res;
}

namespace {

void enum_matchings(const Instance& inst, std::vector<char>& used,
                    std::vector<std::pair<int, int>>& pairs,
                    const std::function<void(const Solution&)>& fn) {
    const int v = inst.vertices();
    int a = 0;
    while (a < v && used[a]) ++a;
    if (a == v) {
        Solution sol;
        sol.kind = Kind::Matching;
        sol.pairs = pairs;
        fn(sol);
        return;
    }
    used[a] = 1;
    for (int b = a + 1; b < v; ++b) {
        if (used[b]) continue;
        used[b] = 1;
        pairs.emplace_back(a, b);
        enum_matchings(inst, used, pairs, fn);
        pairs.pop_back();
        used[b] = 0;
    }
    used[a] = 0;
}

}  // namespace

void for_each_feasible(const Instance& inst, const std::function<void(const Solution&)>& fn) {
    if (inst.kind == Kind::Assignment) {
        if (inst.n > kEnumAssignmentCap)
            throw CapacityError("assignment enumeration capped at n = " +
                                std::to_string(kEnumAssignmentCap));
        Solution sol;
        sol.kind = Kind::Assignment;
        sol.sigma.resize(inst.n);
        std::iota(sol.sigma.begin(), sol.sigma.end(), 0);
        do {
            fn(sol);
        } while (std::next_permutation(sol.sigma.begin(), sol.sigma.end()));
    } else {
        if (inst.vertices() > kEnumMatchingVertexCap)
            throw CapacityError("matching enumeration capped at " +
                                std::to_string(kEnumMatchingVertexCap) + " vertices");
        std::vector<char> used(inst.vertices(), 0);
        std::vector<std::pair<int, int>> pairs;
        enum_matchings(inst, used, pairs, fn);
    }
}

std::vector<Solution> enumerate_feasible(const Instance& inst) {
    std::vector<Solution> out;
    for_each_feasible(inst, [&](const Solution& s) { out.push_back(s); });
    return out;
}

Solution solve_weighted(const Instance& inst, std::span<const double> theta, int dp_vertex_cap) {
    if (static_cast<int>(theta.size()) != inst.n)
        throw std::invalid_argument("theta length must equal instance n");
    Solution sol;
    sol.kind = inst.kind;
    if (inst.kind == Kind::Assignment) {
        std::vector<std::vector<double>> w(inst.n, std::vector<double>(inst.n));
        for (int i = 0; i < inst.n; ++i)
            for (int j = 0; j < inst.n; ++j) w[i][j] = theta[i] * static_cast<double>(inst.u[i][j]);
        sol.sigma = hungarian(w).sigma;
    } else {
        // Edge (i, j), i < j, contributes to component i only (and only if
        // i is a first-half vertex).
        auto w = [&](int i, int j) {
            return i < inst.n ? theta[i] * static_cast<double>(inst.utility(i, j)) : 0.0;
        };
        sol.pairs = dp_perfect_matching(inst.vertices(), w, dp_vertex_cap).pairs;
    }
    return sol;
}

double weighted_value(const Instance& inst, const Solution& sol, std::span<const double> theta) {
    const std::vector<double> T = agent_values(inst, sol);
    double val = 0.0;
    for (int i = 0; i < inst.n; ++i) val += theta[i] * T[i];
    return val;
}

}  // namespace fairopt
