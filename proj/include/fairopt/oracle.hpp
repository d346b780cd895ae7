#pragma once

#include <iosfwd>
#include <string>

#include "fairopt/ggi.hpp"
#include "fairopt/instance.hpp"

namespace fairopt {

struct ExactResult {
    Solution sol;
    double value = 0.0;
};

// Ground-truth GGI optimum by exhaustive enumeration; ties broken by the
// first optimum found in enumeration order. Subject to the enumeration caps.
ExactResult ggi_brute_force(const Instance& inst, const WeightVector& w);

// Writes the linearized 0,1 program as an LP-format text model: binary
// selection variables z_i_j, free rank variables r_k, non-negative deviation
// variables d_i_k, degree equalities and the n^2 linking constraints.
// Constraint order is deterministic (degree by vertex index, linking
// lexicographic in (i, k)); indices in variable names are 1-based.
void export_ip(const Instance& inst, const WeightVector& w, std::ostream& os);
void export_ip(const Instance& inst, const WeightVector& w, const std::string& path);

// (opt - sol) * 100 / opt; requires opt > 0.
double gap_percent(double opt, double sol);

}  // namespace fairopt
