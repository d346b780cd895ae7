#include "fairopt/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fairopt/errors.hpp"
#include "fairopt/rng.hpp"

namespace fairopt {

const char* kind_name(Kind k) {
    return k == Kind::Assignment ? "assignment" : "matching";
}

long long Instance::utility(int i, int j) const {
    if (kind != Kind::Matching) throw std::logic_error("utility(i,j) is for matching instances");
    if (!(0 <= i && i < j && j < vertices())) throw std::out_of_range("pair index out of range");
    return u[i][j - i - 1];
}

bool feasible(const Instance& inst, const Solution& sol) {
    if (sol.kind != inst.kind) return false;
    if (inst.kind == Kind::Assignment) {
        if (static_cast<int>(sol.sigma.size()) != inst.n) return false;
        std::vector<char> seen(inst.n, 0);
        for (int j : sol.sigma) {
            if (j < 0 || j >= inst.n || seen[j]) return false;
            seen[j] = 1;
        }
        return true;
    }
    const int v = inst.vertices();
    if (static_cast<int>(sol.pairs.size()) != inst.n) return false;
    std::vector<char> seen(v, 0);
    for (auto [a, b] : sol.pairs) {
        if (a < 0 || b < 0 || a >= v || b >= v || a >= b) return false;
        if (seen[a] || seen[b]) return false;
        seen[a] = seen[b] = 1;
    }
    return true;
}

Instance gen_assignment(int n, int d, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d), 0);
    Instance inst;
    inst.kind = Kind::Assignment;
    inst.n = n;
    inst.provenance = Provenance{d, seed};
    inst.u.assign(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i) {
        const long long base = rng.uniform_int(1, 100);
        inst.u[i][0] = base;
        for (int j = 1; j < n; ++j) inst.u[i][j] = base + rng.uniform_int(-d, d);
    }
    return inst;
}

Instance gen_matching(int n, int d, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d), 1);
    Instance inst;
    inst.kind = Kind::Matching;
    inst.n = n;
    inst.provenance = Provenance{d, seed};
    const int v = 2 * n;
    inst.u.resize(v - 1);
    for (int i = 0; i < v - 1; ++i) inst.u[i].assign(v - 1 - i, 0);
    // 0-based: first half is vertices 0..n-1; the reference column is n for
    // first-half rows and i+1 for second-half rows.
    for (int i = 0; i < v - 1; ++i) {
        const int ref_col = (i < n) ? n : i + 1;
        const long long base = rng.uniform_int(1, 100);
        for (int j = i + 1; j < v; ++j) {
            long long val;
            if (j < n)
                val = -1000;
            else if (j == ref_col)
                val = base;
            else
                val = base + rng.uniform_int(-d, d);
            inst.u[i][j - i - 1] = val;
        }
    }
    return inst;
}

std::vector<double> agent_values(const Instance& inst, const Solution& sol) {
    if (!feasible(inst, sol)) throw std::invalid_argument("solution infeasible for instance");
    std::vector<double> T(inst.n, 0.0);
    if (inst.kind == Kind::Assignment) {
        for (int i = 0; i < inst.n; ++i) T[i] = static_cast<double>(inst.u[i][sol.sigma[i]]);
    } else {
        for (auto [a, b] : sol.pairs)
            if (a < inst.n) T[a] = static_cast<double>(inst.utility(a, b));
    }
    return T;
}

void write_instance(const Instance& inst, std::ostream& os) {
    os << "fairopt-instance v1\n";
    os << "kind " << kind_name(inst.kind) << "\n";
    os << "n " << inst.n << "\n";
    if (inst.kind == Kind::Matching) os << "vertices " << inst.vertices() << "\n";
    if (inst.provenance)
        os << "provenance d=" << inst.provenance->d << " seed=" << inst.provenance->seed << "\n";
    os << "u\n";
    for (const auto& row : inst.u) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << "\n";
    }
}

void write_instance(const Instance& inst, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_instance(inst, os);
    if (!os) throw std::runtime_error("write failed: " + path);
}

namespace {

std::string next_line(std::istream& is, int& line_no) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("unexpected end of file", line_no + 1);
    ++line_no;
    return line;
}

}  // namespace

Instance read_instance(std::istream& is) {
    int line_no = 0;
    std::string line = next_line(is, line_no);
    if (line != "fairopt-instance v1") throw ParseError("bad magic header", line_no);

    line = next_line(is, line_no);
    std::istringstream kind_ss(line);
    std::string tag, kind_str;
    kind_ss >> tag >> kind_str;
    if (tag != "kind") throw ParseError("expected 'kind' line", line_no);
    Instance inst;
    if (kind_str == "assignment")
        inst.kind = Kind::Assignment;
    else if (kind_str == "matching")
        inst.kind = Kind::Matching;
    else
        throw ParseError("unsupported kind '" + kind_str + "'", line_no);

    line = next_line(is, line_no);
    std::istringstream n_ss(line);
    n_ss >> tag >> inst.n;
    if (tag != "n" || n_ss.fail() || inst.n < 1) throw ParseError("expected 'n <int>' line", line_no);

    if (inst.kind == Kind::Matching) {
        line = next_line(is, line_no);
        int vert = 0;
        std::istringstream v_ss(line);
        v_ss >> tag >> vert;
        if (tag != "vertices" || v_ss.fail()) throw ParseError("expected 'vertices <int>' line", line_no);
        if (vert != 2 * inst.n) throw ParseError("vertices must equal 2n", line_no);
    }

    line = next_line(is, line_no);
    if (line.starts_with("provenance")) {
        Provenance prov;
        std::istringstream p_ss(line.substr(std::string("provenance").size()));
        std::string field;
        while (p_ss >> field) {
            if (field.starts_with("d="))
                prov.d = std::stoi(field.substr(2));
            else if (field.starts_with("seed="))
                prov.seed = std::stoull(field.substr(5));
            else
                throw ParseError("unknown provenance field '" + field + "'", line_no);
        }
        inst.provenance = prov;
        line = next_line(is, line_no);
    }
    if (line != "u") throw ParseError("expected 'u' section", line_no);

    const int rows = inst.kind == Kind::Assignment ? inst.n : inst.vertices() - 1;
    inst.u.resize(rows);
    for (int i = 0; i < rows; ++i) {
        const int cols = inst.kind == Kind::Assignment ? inst.n : inst.vertices() - 1 - i;
        line = next_line(is, line_no);
        std::istringstream row_ss(line);
        inst.u[i].resize(cols);
        for (int j = 0; j < cols; ++j) {
            if (!(row_ss >> inst.u[i][j]))
                throw ParseError("truncated utility row " + std::to_string(i + 1), line_no);
        }
        long long extra;
        if (row_ss >> extra)
            throw ParseError("too many entries in utility row " + std::to_string(i + 1), line_no);
    }
    return inst;
}

Instance read_instance(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_instance(is);
}

}  // namespace fairopt
