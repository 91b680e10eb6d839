#include "kreiss/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <spdlog/spdlog.h>

#include "kreiss/cert_ct.hpp"
#include "kreiss/cert_dt.hpp"
#include "kreiss/oracle.hpp"

namespace kreiss {

namespace {

constexpr int kMaxDoublings = 20;
constexpr double kStationaryTol = 1e-12;
constexpr double kImproveRtol = 1e-13;
// Level used when the local minimum is not below 1 (normal or nearly normal A).
constexpr double kNormalGammaGap = 1e-12;

bool discrete(const MatrixProblem& prob) { return prob.time_domain == TimeDomain::Discrete; }

double boundary_distance(const MatrixProblem& prob, double c1) { return discrete(prob) ? c1 - 1.0 : c1; }

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

Coords feasible_start(const MatrixProblem& prob, std::optional<Coords> start) {
    Coords c = start ? *start : default_start(prob);
    if (!is_feasible(prob, c.c1, c.c2))
        fail(ErrorCode::InfeasibleStart, "starting point lies outside the search domain");
    return c;
}

void record_points(KreissResult& res, const CertificateReport& rep) {
    for (size_t i = 0; i < rep.points.size(); ++i)
        res.level_points.push_back({rep.points[i].c1, rep.points[i].c2, rep.gamma, rep.residuals[i]});
}

std::string verdict_of(const CertificateReport& rep) {
    return rep.empty() ? std::string("empty") : "points:" + std::to_string(rep.points.size());
}

double coord_gap(const MatrixProblem& prob, const EvalPoint& a, const EvalPoint& b) {
    double d2 = b.c2 - a.c2;
    if (discrete(prob)) {
        d2 = std::abs(normalize_angle(a.c2) - normalize_angle(b.c2));
        d2 = std::min(d2, 2.0 * kPi - d2);
    }
    return std::hypot(b.c1 - a.c1, d2);
}

// Local minimization from the best detected points; returns a strictly lower local minimum if one exists.
std::optional<OptResult> try_restart(const MatrixProblem& prob, const CertificateReport& rep, const EvalPoint& current,
                                     const SolverOptions& opts) {
    std::vector<EvalPoint> pts = rep.points;
    std::sort(pts.begin(), pts.end(), [](const EvalPoint& a, const EvalPoint& b) { return a.value < b.value; });
    const double scale = std::max(1.0, std::hypot(current.c1, current.c2));
    int tried = 0;
    for (const EvalPoint& p : pts) {
        if (tried >= opts.max_restart_candidates) break;
        if (!p.feasible() || coord_gap(prob, p, current) <= 1e-8 * scale) continue;
        const Derivatives d = gradient(p, prob, true);
        if (scaled_grad_norm(prob, p, d.grad) < kStationaryTol * p.value) continue;
        ++tried;
        OptResult r = minimize(prob, p.c1, p.c2, opts.opt);
        if (r.minimizer.value < current.value * (1.0 - kImproveRtol)) return r;
    }
    return std::nullopt;
}

bool wants_fixed(CertChoice c) { return c == CertChoice::FixedVertical || c == CertChoice::FixedHorizontal; }
bool wants_variable(CertChoice c) {
    return c == CertChoice::VariableVertical || c == CertChoice::VariableHorizontal;
}

KreissResult finish(KreissResult res, double gamma_inv, const Timer& t) {
    res.gamma_inv = std::min(gamma_inv, 1.0);
    res.kreiss = 1.0 / res.gamma_inv;
    res.wall_time = t.seconds();
    return res;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::OwrBacktracking: return "owr-bt";
        case Method::Owr: return "owr";
        case Method::Trisection: return "trisection";
        case Method::Grid: return "grid";
    }
    return "unknown";
}

const char* result_status_name(ResultStatus s) {
    switch (s) {
        case ResultStatus::Converged: return "Converged";
        case ResultStatus::ToleranceReached: return "ToleranceReached";
        case ResultStatus::Failed: return "Failed";
    }
    return "unknown";
}

Method method_from_name(const std::string& name) {
    if (name == "owr-bt") return Method::OwrBacktracking;
    if (name == "owr") return Method::Owr;
    if (name == "trisection") return Method::Trisection;
    if (name == "grid") return Method::Grid;
    fail(ErrorCode::InvalidArgument, "unknown method: " + name);
}

CertChoice cert_choice_from_name(const std::string& name) {
    if (name == "auto") return CertChoice::Auto;
    if (name == "fixed-v") return CertChoice::FixedVertical;
    if (name == "fixed-h") return CertChoice::FixedHorizontal;
    if (name == "variable-v") return CertChoice::VariableVertical;
    if (name == "variable-h") return CertChoice::VariableHorizontal;
    fail(ErrorCode::InvalidArgument, "unknown certificate: " + name);
}

Coords default_start(const MatrixProblem& prob) {
    Coords c;
    if (discrete(prob)) {
        c.c1 = 0.5 * (1.0 + 1.0 / prob.spectral_radius);
        c.c2 = normalize_angle(std::arg(prob.largest));
    } else {
        c.c1 = std::max(1.0, -2.0 * prob.spectral_abscissa);
        c.c2 = prob.rightmost.imag();
    }
    const Coords initial = c;
    for (int i = 0; i < kMaxDoublings; ++i) {
        if (objective_value(prob, c.c1, c.c2) < 1.0) return c;
        c.c1 += boundary_distance(prob, c.c1);
    }
    // No value below 1 within reach: the constant is 1 or very close to it, and any start will do.
    return objective_value(prob, c.c1, c.c2) < 1.0 ? c : initial;
}

CertificateReport run_certificate(const MatrixProblem& prob, bool fixed_family, CertChoice choice, double gamma,
                                  double eta, const CertOptions& opts) {
    if (fixed_family && wants_variable(choice))
        fail(ErrorCode::InvalidArgument, "backtracking requires a fixed-distance certificate");
    if (!fixed_family && wants_fixed(choice))
        fail(ErrorCode::InvalidArgument, "this method requires a variable-distance certificate");
    if (discrete(prob))
        return fixed_family ? fixed_distance_test_dt(prob, gamma, eta, opts)
                            : variable_distance_test_dt(prob, gamma, eta, opts);
    if (fixed_family)
        return fixed_distance_test(prob, gamma, eta, choice == CertChoice::FixedHorizontal ? 0.0 : kPi / 2, opts);
    if (choice == CertChoice::VariableHorizontal) return horizontal_variable_test(prob, gamma, eta, opts);
    return variable_distance_test(prob, gamma, eta, opts);
}

KreissResult solve_owr_backtracking(const MatrixProblem& prob, std::optional<Coords> start,
                                    const SolverOptions& opts) {
    const Timer timer;
    if (!(opts.shrink > 0.0 && opts.shrink < 1.0)) fail(ErrorCode::InvalidArgument, "c must lie in (0, 1)");
    const Coords s = feasible_start(prob, start);
    const double eta0 = opts.eta0 > 0.0 ? opts.eta0 : 0.1 * boundary_distance(prob, s.c1);
    const double eta_tol = opts.eta_tol > 0.0 ? opts.eta_tol : opts.eta_tol_rel * eta0;
    if (!(eta0 > eta_tol)) fail(ErrorCode::InvalidArgument, "eta0 must exceed eta_tol");

    KreissResult res;
    OptResult opt = minimize(prob, s.c1, s.c2, opts.opt);
    try {
        while (true) {
            const double gk = opt.minimizer.value;
            res.local_minima.push_back(gk);
            res.trace.push_back({"optimize", gk, 0.0, opt_status_name(opt.status), {}});
            spdlog::debug("owr-bt: local minimum {:.16g} at ({:.10g}, {:.10g})", gk, opt.minimizer.c1,
                          opt.minimizer.c2);
            const double gamma = std::min(gk, 1.0 - kNormalGammaGap);
            bool restarted = false;
            bool stalled = false;
            for (double eta = eta0; eta > eta_tol; eta *= opts.shrink) {
                CertificateReport rep;
                try {
                    rep = run_certificate(prob, true, opts.certificate, gamma, eta, opts.cert);
                } catch (const Error& e) {
                    // The fixed pencil degenerates as eta shrinks; stop at the last eta it could be solved for.
                    if (e.code() != ErrorCode::SingularPencil) throw;
                    ++res.certificate_calls;
                    res.trace.push_back({"certify", gamma, eta, "singular-pencil", {}});
                    res.status = ResultStatus::ToleranceReached;
                    res.message = fmt::format("pencil numerically singular at eta={:.3g}", eta);
                    stalled = true;
                    break;
                }
                ++res.certificate_calls;
                record_points(res, rep);
                std::string verdict = verdict_of(rep);
                if (!rep.empty() && res.restarts < opts.max_restarts) {
                    if (auto next = try_restart(prob, rep, opt.minimizer, opts)) {
                        opt = *next;
                        ++res.restarts;
                        restarted = true;
                        res.trace.push_back({"certify", rep.gamma, eta, verdict + ",restart", {}});
                        break;
                    }
                    verdict += ",no-improvement";
                }
                res.trace.push_back({"certify", rep.gamma, eta, verdict, {}});
            }
            if (!restarted || stalled) break;
        }
    } catch (const Error& e) {
        res.status = ResultStatus::Failed;
        res.message = e.what();
    }
    res.minimizer = opt.minimizer;
    return finish(std::move(res), opt.minimizer.value, timer);
}

KreissResult solve_owr(const MatrixProblem& prob, std::optional<Coords> start, const SolverOptions& opts) {
    const Timer timer;
    if (!(opts.gamma_tol > 0.0 && opts.gamma_tol < 1.0)) fail(ErrorCode::InvalidArgument, "gamma_tol must lie in (0, 1)");
    const Coords s = feasible_start(prob, start);

    KreissResult res;
    OptResult opt = minimize(prob, s.c1, s.c2, opts.opt);
    try {
        while (true) {
            const double gk = opt.minimizer.value;
            res.local_minima.push_back(gk);
            res.trace.push_back({"optimize", gk, 0.0, opt_status_name(opt.status), {}});
            spdlog::debug("owr: local minimum {:.16g} at ({:.10g}, {:.10g})", gk, opt.minimizer.c1, opt.minimizer.c2);
            const double level = std::min(gk, 1.0);
            const double gamma = level * (1.0 - 0.5 * opts.gamma_tol);
            const double eta = level * opts.gamma_tol;
            const CertificateReport rep = run_certificate(prob, false, opts.certificate, gamma, eta, opts.cert);
            ++res.certificate_calls;
            record_points(res, rep);
            if (rep.empty()) {
                res.trace.push_back({"certify", rep.gamma, eta, "empty", {}});
                break;
            }
            std::optional<OptResult> next;
            if (res.restarts < opts.max_restarts) next = try_restart(prob, rep, opt.minimizer, opts);
            if (!next) {
                res.trace.push_back({"certify", rep.gamma, eta, verdict_of(rep) + ",no-improvement", {}});
                res.status = ResultStatus::ToleranceReached;
                break;
            }
            res.trace.push_back({"certify", rep.gamma, eta, verdict_of(rep) + ",restart", {}});
            opt = *next;
            ++res.restarts;
        }
    } catch (const Error& e) {
        res.status = ResultStatus::Failed;
        res.message = e.what();
    }
    res.minimizer = opt.minimizer;
    return finish(std::move(res), opt.minimizer.value, timer);
}

KreissResult solve_trisection(const MatrixProblem& prob, std::optional<Coords> start, const SolverOptions& opts) {
    const Timer timer;
    if (!(opts.gamma_tol > 0.0 && opts.gamma_tol < 1.0)) fail(ErrorCode::InvalidArgument, "gamma_tol must lie in (0, 1)");
    const Coords s = feasible_start(prob, start);

    KreissResult res;
    double lb = 0.0;
    double ub = std::min(objective_value(prob, s.c1, s.c2), 1.0);
    res.bounds = {lb, ub};
    res.trace.push_back({"trisect", ub, 0.0, "start", {lb, ub}});
    try {
        for (int it = 0; ub - lb > ub * opts.gamma_tol; ++it) {
            if (it >= opts.max_trisection_iter) {
                res.status = ResultStatus::ToleranceReached;
                res.message = "iteration limit";
                break;
            }
            const double diff = ub - lb;
            const double eta = (2.0 / 3.0) * diff;
            const double gamma = lb + eta;
            const CertificateReport rep = run_certificate(prob, false, opts.certificate, gamma, eta, opts.cert);
            ++res.certificate_calls;
            record_points(res, rep);
            if (rep.empty()) {
                lb += diff / 3.0;
            } else {
                // A nudged level (discrete variants) may sit slightly above gamma; the points certify that level.
                ub = std::min(ub, std::max(gamma, rep.gamma));
            }
            res.trace.push_back({"trisect", gamma, eta, verdict_of(rep), {lb, ub}});
        }
    } catch (const Error& e) {
        res.status = ResultStatus::Failed;
        res.message = e.what();
    }
    res.bounds = {lb, ub};
    return finish(std::move(res), ub, timer);
}

KreissResult solve_grid(const MatrixProblem& prob, const SolverOptions& opts) {
    const Timer timer;
    KreissResult res;
    GridOptions go;
    go.threads = opts.threads;
    const GridResult g = grid_min(prob, default_grid_ranges(prob), opts.grid_levels, go);
    res.minimizer = evaluate(prob, g.c1, g.c2);
    res.local_minima.push_back(g.value);
    res.trace.push_back({"grid", g.value, 0.0, "approximate", {}});
    res.status = ResultStatus::ToleranceReached;
    return finish(std::move(res), g.value, timer);
}

KreissResult solve_kreiss(const MatrixProblem& prob, Method method, std::optional<Coords> start,
                          const SolverOptions& opts) {
    switch (method) {
        case Method::OwrBacktracking: return solve_owr_backtracking(prob, start, opts);
        case Method::Owr: return solve_owr(prob, start, opts);
        case Method::Trisection: return solve_trisection(prob, start, opts);
        case Method::Grid: return solve_grid(prob, opts);
    }
    fail(ErrorCode::InvalidArgument, "unknown method");
}

}  // namespace kreiss
