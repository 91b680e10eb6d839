#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kreiss/certificate.hpp"
#include "kreiss/localopt.hpp"

namespace kreiss {

enum class Method { OwrBacktracking, Owr, Trisection, Grid };
enum class CertChoice { Auto, FixedVertical, FixedHorizontal, VariableVertical, VariableHorizontal };
enum class ResultStatus { Converged, ToleranceReached, Failed };

const char* method_name(Method m);
const char* result_status_name(ResultStatus s);
Method method_from_name(const std::string& name);
CertChoice cert_choice_from_name(const std::string& name);

struct Coords {
    double c1 = 0.0;
    double c2 = 0.0;
};

struct Bounds {
    double lb = 0.0;
    double ub = 0.0;
};

struct TraceEntry {
    std::string phase;    // "optimize", "certify" or "trisect"
    double gamma = 0.0;
    double eta = 0.0;
    std::string verdict;
    Bounds bounds;        // trisection only
};

struct LevelPointRecord {
    double c1 = 0.0;
    double c2 = 0.0;
    double gamma = 0.0;
    double residual = 0.0;
};

struct KreissResult {
    double kreiss = 1.0;
    double gamma_inv = 1.0;
    std::optional<EvalPoint> minimizer;
    int restarts = 0;
    int certificate_calls = 0;
    std::vector<TraceEntry> trace;
    std::vector<double> local_minima;          // g_k values in order
    std::vector<LevelPointRecord> level_points;
    ResultStatus status = ResultStatus::Converged;
    std::string message;
    Bounds bounds;
    double wall_time = 0.0;                    // seconds
};

struct SolverOptions {
    CertChoice certificate = CertChoice::Auto;
    CertOptions cert;
    OptOptions opt;
    double eta0 = 0.0;        // backtracking: 0 selects 0.1 * (x0 or r0 - 1)
    double eta_tol = 0.0;     // backtracking: 0 selects eta_tol_rel * eta0
    double eta_tol_rel = 1e-8;
    double shrink = 0.5;      // backtracking factor c
    double gamma_tol = 1e-10;
    int max_restarts = 100;
    int max_restart_candidates = 8;
    int max_trisection_iter = 2000;
    int grid_levels = 4;
    int threads = 1;          // grid evaluation; 0 uses every core
};

// Continuous: (max(1, -2 alpha), Im of the rightmost eigenvalue). Discrete: (3 - 2 rho, arg of the
// largest eigenvalue). The first coordinate's distance to the boundary is then doubled until the
// objective drops below 1 (bounded number of doublings).
Coords default_start(const MatrixProblem& prob);

KreissResult solve_owr_backtracking(const MatrixProblem& prob, std::optional<Coords> start = std::nullopt,
                                    const SolverOptions& opts = {});
KreissResult solve_owr(const MatrixProblem& prob, std::optional<Coords> start = std::nullopt,
                       const SolverOptions& opts = {});
KreissResult solve_trisection(const MatrixProblem& prob, std::optional<Coords> start = std::nullopt,
                              const SolverOptions& opts = {});
KreissResult solve_grid(const MatrixProblem& prob, const SolverOptions& opts = {});
KreissResult solve_kreiss(const MatrixProblem& prob, Method method, std::optional<Coords> start = std::nullopt,
                          const SolverOptions& opts = {});

// Runs the certificate matching the method family ("fixed" for backtracking, "variable" otherwise).
CertificateReport run_certificate(const MatrixProblem& prob, bool fixed_family, CertChoice choice, double gamma,
                                  double eta, const CertOptions& opts);

}  // namespace kreiss
