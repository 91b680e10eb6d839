#pragma once

#include "kreiss/objective.hpp"

namespace kreiss {

enum class OptStatus { Converged, MaxIter, StalledNonsmooth };

const char* opt_status_name(OptStatus s);

struct OptOptions {
    double grad_tol = 1e-10;  // on the scaled gradient, relative to the objective value
    int max_iter = 200;
    bool use_hessian = true;
    double coord_cap = 1e8;   // upper bound on x (continuous) or r (discrete)
    int max_nonsmooth_steps = 20;
};

struct OptResult {
    EvalPoint minimizer;
    double grad_norm = kInf;
    int iterations = 0;
    OptStatus status = OptStatus::MaxIter;
};

// Scale-free gradient norm: (x g_x, x g_y) in continuous time, ((r - 1) h_r, h_theta) in discrete time.
double scaled_grad_norm(const MatrixProblem& prob, const EvalPoint& pt, const Eigen::Vector2d& grad);

// Damped Newton with Armijo backtracking; infeasible trial points evaluate to +inf and are rejected.
OptResult minimize(const MatrixProblem& prob, double c1, double c2, const OptOptions& opts = {});

}  // namespace kreiss
