#include "kreiss/cert_dt.hpp"

#include <algorithm>
#include <cmath>

#include "kreiss/dnc.hpp"

namespace kreiss {

namespace {

constexpr double kMinRadius = 1.0 + 1e-12;

void require_discrete(const MatrixProblem& prob) {
    if (prob.time_domain != TimeDomain::Discrete) fail(ErrorCode::InvalidArgument, "discrete-time problem required");
}

Matrix block2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    const Index n = a.rows();
    Matrix out(2 * n, 2 * n);
    out << a, b, c, d;
    return out;
}

QuadraticForm quad_form(const MatrixProblem& prob, double gamma, double a, double b) {
    const Index n = prob.n;
    const Matrix I = Matrix::Identity(n, n), Z = Matrix::Zero(n, n);
    const Matrix& A = prob.A;
    const Matrix As = A.adjoint();
    QuadraticForm f;
    f.a = a;
    f.b = b;
    f.M0 = block2(A, -gamma * I, Z, Z);
    f.M1 = block2(Z, gamma * I, Z, I);
    f.N0 = block2(Z, Z, -gamma * I, As);
    f.N1 = block2(I, Z, gamma * I, Z);
    f.S0 = block2(As, Z, gamma * (b - 1.0) * I, b * I);
    f.S1 = a * block2(Z, Z, gamma * I, I);
    f.T0 = block2(b * I, gamma * (b - 1.0) * I, Z, A);
    f.T1 = a * block2(I, gamma * I, Z, Z);
    return f;
}

// A circle carrying a level-set point satisfies r < (||A|| - gamma) / (1 - gamma), since every singular
// value of H(r, theta) is at least (r - ||A||) / (r - 1).
double circle_bound(const MatrixProblem& prob, double gamma) {
    return std::max(1.5, 1.0 + 1.01 * std::max(0.0, prob.norm2 - gamma) / (1.0 - gamma) + 0.01);
}

CertificateReport radial_test(const MatrixProblem& prob, double gamma, double eta, bool variable,
                              const CertOptions& opts) {
    require_discrete(prob);
    if (!(gamma > 0.0 && gamma < 1.0)) fail(ErrorCode::InvalidArgument, "gamma must lie in (0, 1)");
    if (!(eta > 0.0)) fail(ErrorCode::InvalidArgument, "eta must be positive");
    const double g = nudge_gamma(prob, gamma);
    const QuadraticForm form = variable ? variable_quad_form(prob, g, eta) : fixed_quad_form(prob, g, eta);

    CertificateReport report;
    report.gamma = g;
    report.eta = eta;
    report.variant = variable ? CertVariant::VariableRadial : CertVariant::FixedRadial;
    const double band = real_band(opts, eta);
    report.real_eig_tol_used = band;

    // r = 1 carries a cluster of eigenvalues and no level point lies below this radius.
    const double floor = std::max(kMinRadius, level_coord_floor(prob, g));
    std::vector<double> roots;
    bool done = false;
    if (opts.use_dnc) {
        try {
            IntervalOptions io;
            io.real_rtol = band;
            io.eigs.seed = opts.seed;
            const double hi = opts.dnc_hi > 1.0 ? opts.dnc_hi : circle_bound(prob, g);
            const double lo = std::min(floor, 0.5 * (1.0 + hi));
            IntervalSearch s = real_eigs_in_interval(op_from_quad_form(form), lo, hi, opts.dnc_k, io);
            for (double r : s.eigenvalues)
                if (r > kMinRadius) roots.push_back(r);
            report.large_eig_count = static_cast<Index>(s.found.size());
            report.used_dnc = true;
            done = true;
        } catch (const Error&) {
            roots.clear();
        }
    }
    if (!done) {
        const QuadPencil pencil = assemble_quad_pencil(form);
        const Spectrum sp = eig_quadratic(pencil.Q0, pencil.Q1, pencil.Q2, false);
        report.large_eig_count = sp.size();
        roots = real_candidates(sp.finite(), band, floor);
    }
    std::vector<double> circles = roots;
    for (double r : roots) {
        const double partner = form.a * r + form.b;
        if (partner > kMinRadius) circles.push_back(partner);
    }
    report.candidates = dedup_sorted(circles);
    for (double r : report.candidates) {
        const size_t before = report.points.size();
        for (double theta : circular_level_points(prob, g, r, opts.crossing_tol)) {
            double residual = kInf;
            if (verify_level_point(prob, r, theta, g, opts.verify_tol, &residual)) {
                report.points.push_back(evaluate(prob, r, theta));
                report.residuals.push_back(residual);
            } else {
                ++report.rejected;
            }
        }
        if (report.points.size() > before) continue;
        for (double theta : circular_near_unit(prob, g, r)) {
            const auto p = project_to_level(prob, r, theta, g);
            double residual = kInf;
            if (p && verify_level_point(prob, p->first, p->second, g, opts.verify_tol, &residual)) {
                report.points.push_back(evaluate(prob, p->first, normalize_angle(p->second)));
                report.residuals.push_back(residual);
                break;
            }
        }
    }
    return report;
}

}  // namespace

std::pair<Matrix, Matrix> symplectic_pencil(const MatrixProblem& prob, double gamma, double r) {
    const Index n = prob.n;
    const Matrix I = Matrix::Identity(n, n), Z = Matrix::Zero(n, n);
    return {block2(prob.A, gamma * (r - 1.0) * I, Z, r * I), block2(r * I, Z, gamma * (r - 1.0) * I, prob.A.adjoint())};
}

std::vector<double> circular_near_unit(const MatrixProblem& prob, double gamma, double r, int count) {
    require_discrete(prob);
    const auto [M, N] = symplectic_pencil(prob, gamma, r);
    std::vector<Complex> eigs = eig_pencil(M, N).finite();
    std::sort(eigs.begin(), eigs.end(),
              [](Complex a, Complex b) { return std::abs(std::abs(a) - 1.0) < std::abs(std::abs(b) - 1.0); });
    std::vector<double> out;
    for (int i = 0; i < count && i < static_cast<int>(eigs.size()); ++i) out.push_back(normalize_angle(std::arg(eigs[i])));
    return out;
}

std::vector<double> circular_level_points(const MatrixProblem& prob, double gamma, double r, double crossing_tol) {
    require_discrete(prob);
    if (r == 1.0 || r == 0.0) fail(ErrorCode::InvalidArgument, "r must differ from 0 and 1");
    if (gamma < 0.0) fail(ErrorCode::InvalidArgument, "gamma must be nonnegative");
    const auto [M, N] = symplectic_pencil(prob, gamma, r);
    const Spectrum sp = eig_pencil(M, N);
    std::vector<double> raw;
    for (const Complex& l : sp.finite())
        if (std::abs(std::abs(l) - 1.0) <= crossing_tol) raw.push_back(normalize_angle(std::arg(l)));
    if (r < 1.0) return dedup_sorted(raw);
    std::vector<double> out;
    for (const Crossing& c : refine_crossings(prob, r, raw, gamma)) out.push_back(c.coord);
    return out;
}

QuadraticForm fixed_quad_form(const MatrixProblem& prob, double gamma, double eta) {
    return quad_form(prob, gamma, 1.0, eta);
}

QuadraticForm variable_quad_form(const MatrixProblem& prob, double gamma, double eta) {
    return quad_form(prob, gamma, radial_beta(gamma, eta), radial_delta(gamma, eta));
}

QuadPencil assemble_quad_pencil(const QuadraticForm& f) {
    QuadPencil p;
    p.Q0 = kron(f.S0.transpose(), f.M0) - kron(f.T0.transpose(), f.N0);
    p.Q1 = kron(f.S1.transpose(), f.M0) + kron(f.S0.transpose(), f.M1) - kron(f.T1.transpose(), f.N0) -
           kron(f.T0.transpose(), f.N1);
    p.Q2 = kron(f.S1.transpose(), f.M1) - kron(f.T1.transpose(), f.N1);
    p.slope = f.a;
    p.offset = f.b;
    p.form = f;
    return p;
}

QuadPencil build_quad_pencil_fixed(const MatrixProblem& prob, double gamma, double eta) {
    require_discrete(prob);
    if (!(gamma > 0.0) || !(eta > 0.0)) fail(ErrorCode::InvalidArgument, "gamma and eta must be positive");
    QuadPencil p = assemble_quad_pencil(fixed_quad_form(prob, gamma, eta));
    p.gamma = gamma;
    p.eta = eta;
    p.variant = CertVariant::FixedRadial;
    return p;
}

QuadPencil build_quad_pencil_variable(const MatrixProblem& prob, double gamma, double eta) {
    require_discrete(prob);
    if (!(gamma > 0.0 && gamma < 1.0) || !(eta > 0.0))
        fail(ErrorCode::InvalidArgument, "gamma must lie in (0, 1) and eta must be positive");
    QuadPencil p = assemble_quad_pencil(variable_quad_form(prob, gamma, eta));
    p.gamma = gamma;
    p.eta = eta;
    p.variant = CertVariant::VariableRadial;
    return p;
}

double radial_delta(double gamma, double eta) { return -eta / (1.0 + gamma); }

double radial_beta(double gamma, double eta) { return 1.0 - radial_delta(gamma, eta); }

double nudge_gamma(const MatrixProblem& prob, double gamma) {
    const RealVector s = singular_values(prob.A);
    for (Index i = 0; i < s.size(); ++i) {
        if (std::abs(gamma - s(i)) <= 1e-8) return gamma >= s(i) ? gamma * (1.0 + 1e-6) : gamma * (1.0 - 1e-6);
    }
    return gamma;
}

CertificateReport fixed_distance_test_dt(const MatrixProblem& prob, double gamma, double eta,
                                         const CertOptions& opts) {
    return radial_test(prob, gamma, eta, false, opts);
}

CertificateReport variable_distance_test_dt(const MatrixProblem& prob, double gamma, double eta,
                                            const CertOptions& opts) {
    return radial_test(prob, gamma, eta, true, opts);
}

}  // namespace kreiss
