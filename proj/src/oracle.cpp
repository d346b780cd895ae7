#include "fairopt/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fairopt/subsolvers.hpp"

namespace fairopt {

ExactResult ggi_brute_force(const Instance& inst, const WeightVector& w) {
    if (w.size() != inst.n) throw std::invalid_argument("weight vector size must equal instance n");
    ExactResult best;
    best.value = -std::numeric_limits<double>::infinity();
    for_each_feasible(inst, [&](const Solution& sol) {
        const double val = ggi(agent_values(inst, sol), w);
        if (val > best.value) {
            best.value = val;
            best.sol = sol;
        }
    });
    return best;
}

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Accumulates "coef var" terms with explicit signs, wrapping long constraints.
class TermWriter {
  public:
    explicit TermWriter(std::ostream& os) : os_(os) {}

    void term(double coef, const std::string& var) {
        if (coef == 0.0) return;
        if (count_ == 0) {
            if (coef < 0.0) os_ << "- ";
        } else {
            os_ << (coef < 0.0 ? " - " : " + ");
            if (count_ % 8 == 0) os_ << "\n   ";
        }
        const double mag = std::abs(coef);
        if (mag == 1.0)
            os_ << var;
        else
            os_ << num(mag) << ' ' << var;
        ++count_;
    }

  private:
    std::ostream& os_;
    int count_ = 0;
};

std::string zvar(int i, int j) {
    return "z_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

void export_ip(const Instance& inst, const WeightVector& w, std::ostream& os) {
    const int n = inst.n;
    if (w.size() != n) throw std::invalid_argument("weight vector size must equal instance n");
    const std::vector<double>& wd = w.deltas();

    os << "Maximize\n obj: ";
    {
        TermWriter tw(os);
        for (int k = 0; k < n; ++k)
            tw.term(static_cast<double>(k + 1) * wd[k], "r_" + std::to_string(k + 1));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                tw.term(-wd[k], "d_" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
    }
    os << "\nSubject To\n";

    if (inst.kind == Kind::Assignment) {
        for (int i = 0; i < n; ++i) {
            os << " row_" << i + 1 << ": ";
            TermWriter tw(os);
            for (int j = 0; j < n; ++j) tw.term(1.0, zvar(i, j));
            os << " = 1\n";
        }
        for (int j = 0; j < n; ++j) {
            os << " col_" << j + 1 << ": ";
            TermWriter tw(os);
            for (int i = 0; i < n; ++i) tw.term(1.0, zvar(i, j));
            os << " = 1\n";
        }
    } else {
        const int v = inst.vertices();
        for (int vert = 0; vert < v; ++vert) {
            os << " deg_" << vert + 1 << ": ";
            TermWriter tw(os);
            for (int i = 0; i < v; ++i)
                for (int j = i + 1; j < v; ++j)
                    if (i == vert || j == vert) tw.term(1.0, zvar(i, j));
            os << " = 1\n";
        }
    }

    // Linking constraints: r_k - d_ik <= T_i, lexicographic in (i, k).
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            os << " link_" << i + 1 << "_" << k + 1 << ": ";
            TermWriter tw(os);
            tw.term(1.0, "r_" + std::to_string(k + 1));
            tw.term(-1.0, "d_" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
            if (inst.kind == Kind::Assignment) {
                for (int j = 0; j < n; ++j) tw.term(-static_cast<double>(inst.u[i][j]), zvar(i, j));
            } else {
                for (int j = i + 1; j < inst.vertices(); ++j)
                    tw.term(-static_cast<double>(inst.utility(i, j)), zvar(i, j));
            }
            os << " <= 0\n";
        }
    }

    os << "Bounds\n";
    for (int k = 0; k < n; ++k) os << " r_" << k + 1 << " free\n";

    os << "Binaries\n";
    if (inst.kind == Kind::Assignment) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) os << " " << zvar(i, j) << "\n";
    } else {
        const int v = inst.vertices();
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j) os << " " << zvar(i, j) << "\n";
    }
    os << "End\n";
}

void export_ip(const Instance& inst, const WeightVector& w, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    export_ip(inst, w, os);
    if (!os) throw std::runtime_error("write failed: " + path);
}

double gap_percent(double opt, double sol) {
    if (!(opt > 0.0)) throw std::invalid_argument("gap requires a positive optimum");
    return (opt - sol) * 100.0 / opt;
}

}  // namespace fairopt
