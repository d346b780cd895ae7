#include "fairopt.h"

#include <cstring>
#include <new>
#include <string>

#include "fairopt/errors.hpp"
#include "fairopt/ggi.hpp"
#include "fairopt/instance.hpp"
#include "fairopt/oracle.hpp"
#include "fairopt/solver.hpp"

struct fairopt_weights {
    fairopt::WeightVector w;
};
struct fairopt_instance {
    fairopt::Instance inst;
};
struct fairopt_report {
    fairopt::SolverReport rep;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Maps C++ exceptions from the core onto status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const fairopt::CapacityError& e) {
        return fail(FAIROPT_ERR_CAPACITY, e.what());
    } catch (const fairopt::ParseError& e) {
        return fail(FAIROPT_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FAIROPT_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(FAIROPT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        // Core I/O failures surface as runtime_error.
        return fail(FAIROPT_ERR_IO, e.what());
    }
}

int solution_to_sel(const fairopt::Instance& inst, const fairopt::Solution& sol, int* sel,
                    size_t len) {
    if (!sel) return FAIROPT_OK;
    if (inst.kind == fairopt::Kind::Assignment) {
        if (len < static_cast<size_t>(inst.n))
            return fail(FAIROPT_ERR_INVALID, "sel buffer too small");
        for (int i = 0; i < inst.n; ++i) sel[i] = sol.sigma[i];
    } else {
        if (len < static_cast<size_t>(inst.vertices()))
            return fail(FAIROPT_ERR_INVALID, "sel buffer too small");
        for (auto [a, b] : sol.pairs) {
            sel[a] = b;
            sel[b] = a;
        }
    }
    return FAIROPT_OK;
}

}  // namespace

extern "C" {

const char* fairopt_version(void) { return "1.0.0"; }

const char* fairopt_last_error(void) { return g_last_error.c_str(); }

int fairopt_weights_create(int n, const char* scheme, const double* custom,
                           fairopt_weights** out) {
    if (!scheme || !out) return fail(FAIROPT_ERR_INVALID, "null argument");
    return guarded([&] {
        fairopt::WeightVector w = [&] {
            if (std::strcmp(scheme, "inverse-square") == 0)
                return fairopt::WeightVector::inverse_square(n);
            if (std::strcmp(scheme, "classic-gini") == 0)
                return fairopt::WeightVector::classic_gini(n);
            if (std::strcmp(scheme, "custom") == 0) {
                if (!custom) throw std::invalid_argument("custom scheme needs a weight array");
                return fairopt::WeightVector::custom(std::vector<double>(custom, custom + n));
            }
            throw std::invalid_argument(std::string("unknown weight scheme '") + scheme + "'");
        }();
        *out = new fairopt_weights{std::move(w)};
        return FAIROPT_OK;
    });
}

void fairopt_weights_destroy(fairopt_weights* w) { delete w; }

int fairopt_weights_size(const fairopt_weights* w) { return w ? w->w.size() : 0; }

int fairopt_weights_get(const fairopt_weights* wv, double* w, double* deltas) {
    if (!wv) return fail(FAIROPT_ERR_INVALID, "null weights handle");
    const int n = wv->w.size();
    for (int k = 0; k < n; ++k) {
        if (w) w[k] = wv->w.w()[k];
        if (deltas) deltas[k] = wv->w.deltas()[k];
    }
    return FAIROPT_OK;
}

int fairopt_ggi(const fairopt_weights* w, const double* values, int n, double* out) {
    if (!w || !values || !out) return fail(FAIROPT_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = fairopt::ggi(std::span<const double>(values, static_cast<size_t>(n)), w->w);
        return FAIROPT_OK;
    });
}

int fairopt_gen_assignment(int n, int d, uint64_t seed, fairopt_instance** out) {
    if (!out) return fail(FAIROPT_ERR_INVALID, "null output pointer");
    return guarded([&] {
        *out = new fairopt_instance{fairopt::gen_assignment(n, d, seed)};
        return FAIROPT_OK;
    });
}

int fairopt_gen_matching(int n, int d, uint64_t seed, fairopt_instance** out) {
    if (!out) return fail(FAIROPT_ERR_INVALID, "null output pointer");
    return guarded([&] {
        *out = new fairopt_instance{fairopt::gen_matching(n, d, seed)};
        return FAIROPT_OK;
    });
}

int fairopt_instance_read(const char* path, fairopt_instance** out) {
    if (!path || !out) return fail(FAIROPT_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new fairopt_instance{fairopt::read_instance(std::string(path))};
        return FAIROPT_OK;
    });
}

int fairopt_instance_write(const fairopt_instance* inst, const char* path) {
    if (!inst || !path) return fail(FAIROPT_ERR_INVALID, "null argument");
    return guarded([&] {
        fairopt::write_instance(inst->inst, std::string(path));
        return FAIROPT_OK;
    });
}

void fairopt_instance_destroy(fairopt_instance* inst) { delete inst; }

int fairopt_instance_kind(const fairopt_instance* inst) {
    return inst && inst->inst.kind == fairopt::Kind::Matching ? FAIROPT_KIND_MATCHING
                                                              : FAIROPT_KIND_ASSIGNMENT;
}

int fairopt_instance_n(const fairopt_instance* inst) { return inst ? inst->inst.n : 0; }

int fairopt_instance_provenance(const fairopt_instance* inst, int* d, uint64_t* seed) {
    if (!inst || !inst->inst.provenance) return 0;
    if (d) *d = inst->inst.provenance->d;
    if (seed) *seed = inst->inst.provenance->seed;
    return 1;
}

void fairopt_solver_config_default(fairopt_solver_config* cfg) {
    if (!cfg) return;
    const fairopt::SolverConfig d;
    cfg->max_iter = d.max_iter;
    cfg->rho0 = d.rho0;
    cfg->halving_patience = d.halving_patience;
    cfg->y_change_tol = d.y_change_tol;
    cfg->init_strategy =
        d.init == fairopt::InitStrategy::Uniform ? FAIROPT_INIT_UNIFORM : FAIROPT_INIT_RANK_BASED;
    cfg->subgradient_sign =
        d.sign == fairopt::SubgradientSign::Paper ? FAIROPT_SIGN_PAPER : FAIROPT_SIGN_DESCENT;
}

int fairopt_solve(const fairopt_instance* inst, const fairopt_weights* w,
                  const fairopt_solver_config* cfg, fairopt_report** out) {
    if (!inst || !w || !out) return fail(FAIROPT_ERR_INVALID, "null argument");
    return guarded([&] {
        fairopt::SolverConfig c;
        if (cfg) {
            c.max_iter = cfg->max_iter;
            c.rho0 = cfg->rho0;
            c.halving_patience = cfg->halving_patience;
            c.y_change_tol = cfg->y_change_tol;
            c.init = cfg->init_strategy == FAIROPT_INIT_UNIFORM ? fairopt::InitStrategy::Uniform
                                                                : fairopt::InitStrategy::RankBased;
            c.sign = cfg->subgradient_sign == FAIROPT_SIGN_PAPER
                         ? fairopt::SubgradientSign::Paper
                         : fairopt::SubgradientSign::Descent;
        }
        *out = new fairopt_report{fairopt::solve(inst->inst, w->w, c)};
        return FAIROPT_OK;
    });
}

void fairopt_report_destroy(fairopt_report* rep) { delete rep; }

double fairopt_report_best_ggi(const fairopt_report* rep) { return rep->rep.best_ggi; }

double fairopt_report_upper_bound(const fairopt_report* rep) {
    return rep->rep.best_upper_bound();
}

int fairopt_report_iterations(const fairopt_report* rep) { return rep->rep.iterations; }

int fairopt_report_certificate(const fairopt_report* rep) {
    return rep->rep.certificate ? 1 : 0;
}

double fairopt_report_time_ms(const fairopt_report* rep) { return rep->rep.wall_time_ms; }

int fairopt_report_iteration_values(const fairopt_report* rep, double* ggi, double* ub) {
    if (!rep) return fail(FAIROPT_ERR_INVALID, "null report handle");
    for (int t = 0; t < rep->rep.iterations; ++t) {
        if (ggi) ggi[t] = rep->rep.ggi_values[t];
        if (ub) ub[t] = rep->rep.upper_bounds[t];
    }
    return FAIROPT_OK;
}

int fairopt_report_solution(const fairopt_report* rep, int* sel, size_t len) {
    if (!rep) return fail(FAIROPT_ERR_INVALID, "null report handle");
    const fairopt::Kind kind = rep->rep.best_solution.kind;
    fairopt::Instance shim;  // only kind/n are consulted by the converter
    shim.kind = kind;
    shim.n = kind == fairopt::Kind::Assignment
                 ? static_cast<int>(rep->rep.best_solution.sigma.size())
                 : static_cast<int>(rep->rep.best_solution.pairs.size());
    return solution_to_sel(shim, rep->rep.best_solution, sel, len);
}

int fairopt_exact(const fairopt_instance* inst, const fairopt_weights* w, double* opt_value,
                  int* sel, size_t sel_len) {
    if (!inst || !w || !opt_value) return fail(FAIROPT_ERR_INVALID, "null argument");
    return guarded([&] {
        const fairopt::ExactResult res = fairopt::ggi_brute_force(inst->inst, w->w);
        *opt_value = res.value;
        return solution_to_sel(inst->inst, res.sol, sel, sel_len);
    });
}

int fairopt_export_lp(const fairopt_instance* inst, const fairopt_weights* w, const char* path) {
    if (!inst || !w || !path) return fail(FAIROPT_ERR_INVALID, "null argument");
    return guarded([&] {
        fairopt::export_ip(inst->inst, w->w, std::string(path));
        return FAIROPT_OK;
    });
}

int fairopt_gap(double opt, double sol, double* out) {
    if (!out) return fail(FAIROPT_ERR_INVALID, "null output pointer");
    return guarded([&] {
        *out = fairopt::gap_percent(opt, sol);
        return FAIROPT_OK;
    });
}

}  // extern "C"
