#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kreiss/objective.hpp"

namespace kreiss {

enum class CertVariant {
    FixedDistance,       // continuous, pairs a fixed distance apart along an orientation
    VariableVertical,    // continuous, pairs (x, y) and (x, y + x eta)
    VariableHorizontal,  // continuous, pairs (x, y) and (beta x, y)
    FixedRadial,         // discrete, pairs (r, theta) and (r + eta, theta)
    VariableRadial,      // discrete, pairs (r, theta) and (beta r + delta, theta)
};

const char* cert_variant_name(CertVariant v);

struct CertOptions {
    double real_rtol = 1e-8;       // real-axis band for the large pencil eigenvalues
    // The pencils become singular as eta -> 0 and real candidates coalesce near the minimum, so real
    // eigenvalues drift off the axis by up to about sqrt(eps / eta). The band is widened to
    // min(1e-2, band_factor * sqrt(eps / eta_rel)) when that exceeds real_rtol.
    double band_factor = 100.0;
    double crossing_tol = 1e-6;    // imaginary-axis / unit-circle band for the 1D tests
    double verify_tol = 1e-8;      // |sigma_k - gamma| <= verify_tol * min(||A||, gamma)
    bool inverse_norm_tol = false; // variable pencils only: tol * eps * ||B2^{-1} B1||_inf
    double inverse_norm_factor = 100.0;
    bool use_dnc = false;
    double dnc_hi = 0.0;           // upper end of the divide-and-conquer interval, 0 selects a default
    Index dnc_k = 8;
    unsigned seed = 0;
};

struct CertificateReport {
    double gamma = 0.0;
    double eta = 0.0;
    CertVariant variant = CertVariant::FixedDistance;
    double orientation = 0.0;            // fixed continuous variant only
    std::vector<double> candidates;      // lines x or circles r, after pairing and dedup
    std::vector<EvalPoint> points;       // verified level-set points
    std::vector<double> residuals;       // |sigma_k - gamma| per point
    Index large_eig_count = 0;
    double real_eig_tol_used = 0.0;
    int rejected = 0;                    // 1D crossings that failed verification
    bool used_dnc = false;

    bool empty() const { return points.empty(); }
};

// A coordinate where gamma is (approximately) a singular value along a 1D slice.
struct Crossing {
    double coord = 0.0;
    double residual = kInf;  // |sigma_k - gamma| after refinement
};

// Newton refinement of the second coordinate so that some singular value equals gamma,
// followed by clustering of nearby crossings (tangencies produce split pairs).
std::vector<Crossing> refine_crossings(const MatrixProblem& prob, double c1, std::vector<double> raw, double gamma);

// Newton steps on the singular value nearest gamma, along its 2D gradient, until it equals gamma.
// Used when a candidate line or circle only grazes the level set and the 1D test sees no crossing.
std::optional<std::pair<double, double>> project_to_level(const MatrixProblem& prob, double c1, double c2,
                                                          double gamma, int max_steps = 30);

// True if some singular value at (c1, c2) equals gamma within verify_tol * min(||A||, gamma).
bool verify_level_point(const MatrixProblem& prob, double c1, double c2, double gamma, double verify_tol,
                        double* residual = nullptr);

// Lower bound c on sigma_min(zI - A) for Re z >= 0 (continuous, c = 1 / (2 ||P||) with A^* P + P A = -I),
// or on |z| sigma_min(zI - A) for |z| >= 1 (discrete, same with the Stein equation A^* P A - P = -I).
double resolvent_floor(const MatrixProblem& prob);
// Smallest first coordinate (x, or r) at which gamma can be a singular value, with a factor 2 margin.
double level_coord_floor(const MatrixProblem& prob, double gamma);

// Candidate real eigenvalues from a spectrum, deduplicated and sorted ascending.
std::vector<double> real_candidates(const std::vector<Complex>& eigs, double rtol, double lo);
// Effective relative band for a pair separation eta_rel (eta measured in units of the first coordinate).
double real_band(const CertOptions& opts, double eta_rel);
std::vector<double> dedup_sorted(std::vector<double> v, double tol = 1e-12);

}  // namespace kreiss
