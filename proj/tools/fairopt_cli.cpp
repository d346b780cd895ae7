// fairopt command-line front end. Talks to the solver library exclusively
// through the C API in fairopt.h.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fairopt.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct CliError {
    int code;
    std::string message;
};

void check(int rc, const std::string& context) {
    if (rc == FAIROPT_OK) return;
    const int exit_code = rc == FAIROPT_ERR_CAPACITY ? kExitCapacity : kExitError;
    throw CliError{exit_code, context + ": " + fairopt_last_error()};
}

using InstancePtr = std::unique_ptr<fairopt_instance, decltype(&fairopt_instance_destroy)>;
using WeightsPtr = std::unique_ptr<fairopt_weights, decltype(&fairopt_weights_destroy)>;
using ReportPtr = std::unique_ptr<fairopt_report, decltype(&fairopt_report_destroy)>;

WeightsPtr make_weights(int n, const std::string& scheme) {
    fairopt_weights* w = nullptr;
    check(fairopt_weights_create(n, scheme.c_str(), nullptr, &w), "weights");
    return WeightsPtr(w, &fairopt_weights_destroy);
}

InstancePtr load_instance(const std::string& path) {
    fairopt_instance* inst = nullptr;
    const int rc = fairopt_instance_read(path.c_str(), &inst);
    if (rc == FAIROPT_ERR_PARSE) throw CliError{kExitError, path + ": " + fairopt_last_error()};
    check(rc, path);
    return InstancePtr(inst, &fairopt_instance_destroy);
}

std::string fmt(double x, const char* spec = "%.10g") {
    char buf[48];
    std::snprintf(buf, sizeof(buf), spec, x);
    return buf;
}

struct SolveOptions {
    std::string weights = "inverse-square";
    fairopt_solver_config cfg{};
    SolveOptions() { fairopt_solver_config_default(&cfg); }
};

void add_solver_flags(CLI::App* cmd, SolveOptions& opt) {
    cmd->add_option("--weights", opt.weights, "Weight scheme: inverse-square or classic-gini")
        ->check(CLI::IsMember({"inverse-square", "classic-gini"}));
    cmd->add_option_function<std::string>(
           "--init",
           [&opt](const std::string& s) {
               opt.cfg.init_strategy =
                   s == "uniform" ? FAIROPT_INIT_UNIFORM : FAIROPT_INIT_RANK_BASED;
           },
           "Dual initialization: uniform or rank-based")
        ->check(CLI::IsMember({"uniform", "rank-based"}));
    cmd->add_option_function<std::string>(
           "--sign",
           [&opt](const std::string& s) {
               opt.cfg.subgradient_sign = s == "paper" ? FAIROPT_SIGN_PAPER : FAIROPT_SIGN_DESCENT;
           },
           "Subgradient update sign: paper or descent")
        ->check(CLI::IsMember({"paper", "descent"}));
    cmd->add_option("--max-iter", opt.cfg.max_iter, "Iteration limit");
    cmd->add_option("--rho0", opt.cfg.rho0, "Initial step-size relaxation");
    cmd->add_option("--patience", opt.cfg.halving_patience,
                    "Consecutive non-improving iterations before halving rho");
    cmd->add_option("--tol", opt.cfg.y_change_tol, "Stop when max |dy| falls below this");
}

const char* kCsvHeader =
    "instance,kind,n,d,seed,init,sign,iters,best_ggi,upper_bound,gap_vs_ub,gap_vs_exact,"
    "certificate,time_ms";

std::string init_label(int v) { return v == FAIROPT_INIT_UNIFORM ? "uniform" : "rank-based"; }
std::string sign_label(int v) { return v == FAIROPT_SIGN_PAPER ? "paper" : "descent"; }

// Solve one instance and format its CSV row. gap_vs_exact stays empty when
// the brute-force oracle is over its enumeration caps.
std::string run_one(const fairopt_instance* inst, const std::string& name,
                    const SolveOptions& opt) {
    const int n = fairopt_instance_n(inst);
    const int kind = fairopt_instance_kind(inst);
    WeightsPtr w = make_weights(n, opt.weights);

    fairopt_report* raw = nullptr;
    check(fairopt_solve(inst, w.get(), &opt.cfg, &raw), name);
    ReportPtr rep(raw, &fairopt_report_destroy);

    const double best = fairopt_report_best_ggi(rep.get());
    const double ub = fairopt_report_upper_bound(rep.get());
    double gap_ub = 0.0;
    check(fairopt_gap(ub, best, &gap_ub), "gap");

    std::string gap_exact;
    double opt_value = 0.0;
    const int rc = fairopt_exact(inst, w.get(), &opt_value, nullptr, 0);
    if (rc == FAIROPT_OK) {
        double g = 0.0;
        check(fairopt_gap(opt_value, best, &g), "gap");
        gap_exact = fmt(g, "%.6g");
    } else if (rc != FAIROPT_ERR_CAPACITY) {
        check(rc, name);
    }

    int d = 0;
    std::uint64_t seed = 0;
    fairopt_instance_provenance(inst, &d, &seed);

    std::ostringstream row;
    row << name << ',' << (kind == FAIROPT_KIND_MATCHING ? "matching" : "assignment") << ',' << n
        << ',' << d << ',' << seed << ',' << init_label(opt.cfg.init_strategy) << ','
        << sign_label(opt.cfg.subgradient_sign) << ',' << fairopt_report_iterations(rep.get())
        << ',' << fmt(best) << ',' << fmt(ub) << ',' << fmt(gap_ub, "%.6g") << ',' << gap_exact
        << ',' << fairopt_report_certificate(rep.get()) << ','
        << fmt(fairopt_report_time_ms(rep.get()), "%.3f");
    return row.str();
}

void emit_csv(const std::string& path, const std::vector<std::string>& rows) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw CliError{kExitError, "cannot open for writing: " + path};
        os = &file;
    }
    *os << kCsvHeader << '\n';
    for (const auto& r : rows) *os << r << '\n';
}

int bench_threads(std::size_t runs) {
    unsigned cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("FAIROPT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) cap = static_cast<unsigned>(v);
    }
    return static_cast<int>(std::min<std::size_t>(cap, runs));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fair combinatorial optimization under the generalized Gini index"};
    app.require_subcommand(1);

    // gen
    std::string gen_kind = "assignment", gen_out;
    int gen_n = 0, gen_d = 0;
    std::uint64_t gen_seed = 0;
    CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--kind", gen_kind)->check(CLI::IsMember({"assignment", "matching"}));
    gen->add_option("--n", gen_n, "Number of components")->required();
    gen->add_option("--d", gen_d, "Utility deviation");
    gen->add_option("--seed", gen_seed);
    gen->add_option("-o,--output", gen_out, "Instance file to write")->required();

    // solve
    std::string solve_path, solve_csv;
    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "Run the primal-dual heuristic");
    solve->add_option("instance", solve_path, "Instance file")->required();
    add_solver_flags(solve, solve_opt);
    solve->add_option("--csv", solve_csv, "CSV output file (default stdout)");

    // exact
    std::string exact_path, exact_weights = "inverse-square";
    CLI::App* exact = app.add_subcommand("exact", "Brute-force GGI optimum");
    exact->add_option("instance", exact_path)->required();
    exact->add_option("--weights", exact_weights)
        ->check(CLI::IsMember({"inverse-square", "classic-gini"}));

    // export-lp
    std::string lp_path, lp_out, lp_weights = "inverse-square";
    CLI::App* export_lp = app.add_subcommand("export-lp", "Write the 0,1-LP in LP format");
    export_lp->add_option("instance", lp_path)->required();
    export_lp->add_option("-o,--output", lp_out)->required();
    export_lp->add_option("--weights", lp_weights)
        ->check(CLI::IsMember({"inverse-square", "classic-gini"}));

    // bench
    std::string bench_kind = "assignment", bench_csv;
    std::vector<int> bench_sizes, bench_devs;
    int bench_reps = 10;
    std::uint64_t bench_seed = 0;
    SolveOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "Benchmark grid, one CSV row per run");
    bench->add_option("--kind", bench_kind)->check(CLI::IsMember({"assignment", "matching"}));
    bench->add_option("--sizes", bench_sizes, "Component counts n")->required()->delimiter(',');
    bench->add_option("--d", bench_devs, "Deviations")->required()->delimiter(',');
    bench->add_option("--reps", bench_reps, "Instances per (size, d) cell");
    bench->add_option("--seed", bench_seed, "Base seed; run i uses seed + i");
    bench->add_option("--csv", bench_csv, "CSV output file (default stdout)");
    add_solver_flags(bench, bench_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen) {
            fairopt_instance* raw = nullptr;
            if (gen_kind == "assignment")
                check(fairopt_gen_assignment(gen_n, gen_d, gen_seed, &raw), "gen");
            else
                check(fairopt_gen_matching(gen_n, gen_d, gen_seed, &raw), "gen");
            InstancePtr inst(raw, &fairopt_instance_destroy);
            check(fairopt_instance_write(inst.get(), gen_out.c_str()), gen_out);
        } else if (*solve) {
            InstancePtr inst = load_instance(solve_path);
            std::string name = solve_path;
            if (const auto pos = name.find_last_of('/'); pos != std::string::npos)
                name = name.substr(pos + 1);
            emit_csv(solve_csv, {run_one(inst.get(), name, solve_opt)});
        } else if (*exact) {
            InstancePtr inst = load_instance(exact_path);
            WeightsPtr w = make_weights(fairopt_instance_n(inst.get()), exact_weights);
            double opt_value = 0.0;
            check(fairopt_exact(inst.get(), w.get(), &opt_value, nullptr, 0), exact_path);
            std::cout << "optimum " << fmt(opt_value) << "\n";
        } else if (*export_lp) {
            InstancePtr inst = load_instance(lp_path);
            WeightsPtr w = make_weights(fairopt_instance_n(inst.get()), lp_weights);
            check(fairopt_export_lp(inst.get(), w.get(), lp_out.c_str()), lp_out);
        } else if (*bench) {
            struct Run {
                int n, d;
                std::uint64_t seed;
                std::string name;
            };
            std::vector<Run> runs;
            std::uint64_t idx = 0;
            for (int n : bench_sizes)
                for (int d : bench_devs)
                    for (int rep = 0; rep < bench_reps; ++rep, ++idx)
                        runs.push_back({n, d, bench_seed + idx,
                                        "v" + std::to_string(d) + "-" + std::to_string(2 * n)});

            std::vector<std::string> rows(runs.size());
            std::atomic<std::size_t> next{0};
            std::atomic<bool> failed{false};
            std::string fail_msg;
            int fail_code = kExitError;
            std::mutex fail_mutex;
            const bool matching = bench_kind == "matching";
            auto worker = [&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= runs.size() || failed.load()) break;
                    try {
                        fairopt_instance* raw = nullptr;
                        const Run& r = runs[i];
                        check(matching ? fairopt_gen_matching(r.n, r.d, r.seed, &raw)
                                       : fairopt_gen_assignment(r.n, r.d, r.seed, &raw),
                              r.name);
                        InstancePtr inst(raw, &fairopt_instance_destroy);
                        rows[i] = run_one(inst.get(), r.name, bench_opt);
                    } catch (const CliError& e) {
                        std::lock_guard<std::mutex> lk(fail_mutex);
                        if (!failed.exchange(true)) {
                            fail_msg = e.message;
                            fail_code = e.code;
                        }
                        break;
                    }
                }
            };
            const int nthreads = bench_threads(runs.size());
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
            if (failed.load()) throw CliError{fail_code, fail_msg};
            emit_csv(bench_csv, rows);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return 0;
}
