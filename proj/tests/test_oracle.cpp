#include <cctype>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fairopt/errors.hpp"
#include "fairopt/oracle.hpp"
#include "fairopt/subsolvers.hpp"

using namespace fairopt;

TEST_CASE("brute force oracle") {
    SUBCASE("2x2 example") {
        Instance inst;
        inst.kind = Kind::Assignment;
        inst.n = 2;
        inst.u = {{5, 1}, {2, 3}};
        const WeightVector w = WeightVector::custom({1.0, 0.25});
        const ExactResult res = ggi_brute_force(inst, w);
        CHECK(res.value == doctest::Approx(4.25));
        CHECK(res.sol.sigma == std::vector<int>{0, 1});
    }
    SUBCASE("n = 1") {
        const Instance inst = gen_assignment(1, 0, 4);
        const WeightVector w = WeightVector::inverse_square(1);
        CHECK(ggi_brute_force(inst, w).value ==
              doctest::Approx(static_cast<double>(inst.u[0][0])));
    }
    SUBCASE("dominates the max-weight solution") {
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 5);
            const Instance inst = gen_assignment(n, 35, rng());
            const WeightVector w = WeightVector::inverse_square(n);
            const std::vector<double> ones(n, 1.0);
            const double mw_ggi = ggi(agent_values(inst, solve_weighted(inst, ones)), w);
            CHECK(ggi_brute_force(inst, w).value >= mw_ggi - 1e-12);
        }
    }
    SUBCASE("capacity error beyond caps") {
        const WeightVector w = WeightVector::inverse_square(9);
        CHECK_THROWS_AS(ggi_brute_force(gen_assignment(9, 10, 1), w), CapacityError);
    }
}

namespace {

// Strict structural validator for the exported LP text: required sections in
// order, every variable token declared, balanced relational lines.
struct LpModel {
    std::set<std::string> binaries;
    std::set<std::string> free_vars;
    std::set<std::string> used_vars;
    int equality_constraints = 0;
    int inequality_constraints = 0;
};

bool is_var_token(const std::string& tok) {
    return !tok.empty() && (std::isalpha(static_cast<unsigned char>(tok[0])) != 0) &&
           tok.find(':') == std::string::npos;
}

LpModel parse_lp(const std::string& text) {
    LpModel m;
    std::istringstream ss(text);
    std::string line;
    enum { None, Objective, Constraints, Bounds, Binaries, Done } section = None;
    std::vector<std::string> order;
    while (std::getline(ss, line)) {
        if (line == "Maximize") {
            section = Objective;
            order.push_back(line);
            continue;
        }
        if (line == "Subject To") {
            section = Constraints;
            order.push_back(line);
            continue;
        }
        if (line == "Bounds") {
            section = Bounds;
            order.push_back(line);
            continue;
        }
        if (line == "Binaries") {
            section = Binaries;
            order.push_back(line);
            continue;
        }
        if (line == "End") {
            section = Done;
            order.push_back(line);
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        if (section == Binaries) {
            while (ls >> tok) m.binaries.insert(tok);
        } else if (section == Bounds) {
            std::string var, kw;
            ls >> var >> kw;
            REQUIRE(kw == "free");
            m.free_vars.insert(var);
        } else if (section == Objective || section == Constraints) {
            bool has_eq = false, has_le = false;
            while (ls >> tok) {
                if (tok == "=") has_eq = true;
                if (tok == "<=") has_le = true;
                if (is_var_token(tok)) m.used_vars.insert(tok);
            }
            if (section == Constraints) {
                if (has_eq) ++m.equality_constraints;
                if (has_le) ++m.inequality_constraints;
            }
        } else {
            REQUIRE(section != None);
        }
    }
    REQUIRE(order == std::vector<std::string>{"Maximize", "Subject To", "Bounds", "Binaries",
                                              "End"});
    REQUIRE(section == Done);
    return m;
}

}  // namespace

TEST_CASE("lp export structure") {
    SUBCASE("assignment n = 2 counts") {
        const Instance inst = gen_assignment(2, 10, 6);
        const WeightVector w = WeightVector::inverse_square(2);
        std::ostringstream os;
        export_ip(inst, w, os);
        const LpModel m = parse_lp(os.str());
        CHECK(m.binaries.size() == 4);
        CHECK(m.equality_constraints == 4);  // 2 row + 2 column
        CHECK(m.inequality_constraints == 4);
        CHECK(m.free_vars == std::set<std::string>{"r_1", "r_2"});
        int d_vars = 0;
        for (const auto& v : m.used_vars)
            if (v.starts_with("d_")) ++d_vars;
        CHECK(d_vars == 4);
        // every used variable is declared or is an r/d variable
        for (const auto& v : m.used_vars) {
            const bool declared = m.binaries.count(v) || m.free_vars.count(v) ||
                                  v.starts_with("d_");
            CHECK(declared);
        }
    }
    SUBCASE("matching 2n = 4 counts") {
        const Instance inst = gen_matching(2, 10, 6);
        const WeightVector w = WeightVector::inverse_square(2);
        std::ostringstream os;
        export_ip(inst, w, os);
        const LpModel m = parse_lp(os.str());
        CHECK(m.binaries.size() == 6);
        CHECK(m.equality_constraints == 4);  // one per vertex
        CHECK(m.inequality_constraints == 4);
    }
    SUBCASE("byte-stable output") {
        const Instance inst = gen_matching(3, 20, 9);
        const WeightVector w = WeightVector::inverse_square(3);
        std::ostringstream a, b;
        export_ip(inst, w, a);
        export_ip(inst, w, b);
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("gap") {
    CHECK(gap_percent(100.0, 99.7) == doctest::Approx(0.3));
    CHECK(gap_percent(42.0, 42.0) == doctest::Approx(0.0));
    CHECK(gap_percent(100.0, 0.0) == doctest::Approx(100.0));
    CHECK_THROWS_AS(gap_percent(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gap_percent(-1.0, 0.0), std::invalid_argument);
}
