#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fairopt {

enum class Kind { Assignment, Matching };

const char* kind_name(Kind k);

struct Provenance {
    int d = 0;
    std::uint64_t seed = 0;
    bool operator==(const Provenance&) const = default;
};

// A fair-optimization instance over n value components.
//   Assignment: u is n x n, u[i][j] = utility component i gets from column j.
//   Matching:   complete graph on 2n vertices; u holds the upper triangle,
//               row i (0-based, i < 2n-1) stores u(i, i+1..2n-1). Components
//               are the first n vertices; pairs with both endpoints in the
//               first half carry utility -1000.
struct Instance {
    Kind kind = Kind::Assignment;
    int n = 0;
    std::vector<std::vector<long long>> u;
    std::optional<Provenance> provenance;

    int vertices() const { return 2 * n; }  // matching only
    // Upper-triangle accessor for matching instances, 0-based, requires i < j.
    long long utility(int i, int j) const;

    bool operator==(const Instance&) const = default;
};

// A feasible selection. Assignment: sigma[i] = column of component i
// (a permutation of 0..n-1). Matching: n disjoint pairs (i, j), i < j,
// covering all 2n vertices.
struct Solution {
    Kind kind = Kind::Assignment;
    std::vector<int> sigma;
    std::vector<std::pair<int, int>> pairs;

    bool operator==(const Solution&) const = default;
};

bool feasible(const Instance& inst, const Solution& sol);

// Hard random assignment instance: u[i][0] uniform over {1..100}, the rest of
// the row equals u[i][0] plus uniform integer noise in [-d, d].
Instance gen_assignment(int n, int d, std::uint64_t seed);

// Hard random matching instance on 2n vertices: first-half pairs get -1000,
// each remaining row has a uniform {1..100} reference value (at column n+1
// for first-half rows, at the first off-diagonal column for second-half rows)
// and the later columns add uniform integer noise in [-d, d].
Instance gen_matching(int n, int d, std::uint64_t seed);

// Per-component values T_i = sum_j u_ij z_ij. For matching, component i
// (a first-half vertex) receives the utility of the selected edge whose lower
// endpoint is i, or 0 if its edge is counted in another component's row.
std::vector<double> agent_values(const Instance& inst, const Solution& sol);

void write_instance(const Instance& inst, std::ostream& os);
void write_instance(const Instance& inst, const std::string& path);
Instance read_instance(std::istream& is);
Instance read_instance(const std::string& path);

}  // namespace fairopt
