#include "kreiss/cert_ct.hpp"

#include <algorithm>
#include <cmath>

#include "kreiss/dnc.hpp"

namespace kreiss {

namespace {


void require_gamma(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) fail(ErrorCode::InvalidArgument, "gamma must lie in (0, 1)");
}

void require_continuous(const MatrixProblem& prob) {
    if (prob.time_domain != TimeDomain::Continuous) fail(ErrorCode::InvalidArgument, "continuous-time problem required");
}

Matrix block2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    const Index n = a.rows();
    Matrix out(2 * n, 2 * n);
    out << a, b, c, d;
    return out;
}

// Any candidate line with a level-set point satisfies x <= ||A|| / (1 - gamma), since
// every singular value of G(x, y) is at least 1 - ||A|| / x.
double line_bound(const MatrixProblem& prob, double gamma) { return 1.01 * prob.norm2 / (1.0 - gamma) + 1.0; }

std::vector<double> pencil_candidates(const MatrixProblem& prob, const SylvesterForm& form, double gamma,
                                      bool variable, const CertOptions& opts, CertificateReport& report) {
    const double band = real_band(opts, variable ? report.eta : report.eta / std::max(1.0, prob.norm2));
    // x = 0 is a multiple eigenvalue of the variable pencils and no level point lies below this floor.
    const double floor = level_coord_floor(prob, gamma);
    if (opts.use_dnc) {
        try {
            IntervalOptions io;
            io.real_rtol = band;
            io.eigs.seed = opts.seed;
            const double hi = opts.dnc_hi > 0.0 ? opts.dnc_hi : line_bound(prob, gamma);
            const double lo = std::min(floor, 0.5 * hi);
            IntervalSearch s = real_eigs_in_interval(op_from_form(form), lo, hi, opts.dnc_k, io);
            report.used_dnc = true;
            report.large_eig_count = static_cast<Index>(s.found.size());
            report.real_eig_tol_used = band;
            std::vector<double> out;
            for (double x : s.eigenvalues)
                if (x > 0.0) out.push_back(x);
            return dedup_sorted(out);
        } catch (const Error&) {
            report.used_dnc = false;  // fall back to dense QZ
        }
    }
    const KroneckerPencil pencil = assemble_pencil(form);
    const Spectrum sp = eig_pencil(pencil.A1, pencil.A2);
    report.large_eig_count = sp.size();
    const std::vector<Complex> eigs = sp.finite();
    if (variable && opts.inverse_norm_tol) {
        const Matrix Binv_B1 = pencil.A2.partialPivLu().solve(pencil.A1);
        const double norm_inf = Binv_B1.cwiseAbs().rowwise().sum().maxCoeff();
        const double tol = opts.inverse_norm_factor * kEps * norm_inf;
        report.real_eig_tol_used = tol;
        std::vector<double> out;
        for (const Complex& l : eigs)
            if (std::abs(l.imag()) <= tol && l.real() > floor) out.push_back(l.real());
        return dedup_sorted(out);
    }
    report.real_eig_tol_used = band;
    return real_candidates(eigs, band, floor);
}

void scan_lines(const MatrixProblem& prob, double gamma, const std::vector<double>& lines, const CertOptions& opts,
                CertificateReport& report) {
    report.candidates = lines;
    for (double x : lines) {
        const size_t before = report.points.size();
        for (double y : vertical_level_points(prob, gamma, x, opts.crossing_tol)) {
            double residual = kInf;
            if (verify_level_point(prob, x, y, gamma, opts.verify_tol, &residual)) {
                report.points.push_back(evaluate(prob, x, y));
                report.residuals.push_back(residual);
            } else {
                ++report.rejected;
            }
        }
        if (report.points.size() > before) continue;
        for (double y : vertical_near_axis(prob, gamma, x)) {
            const auto p = project_to_level(prob, x, y, gamma);
            double residual = kInf;
            if (p && verify_level_point(prob, p->first, p->second, gamma, opts.verify_tol, &residual)) {
                report.points.push_back(evaluate(prob, p->first, p->second));
                report.residuals.push_back(residual);
                break;
            }
        }
    }
}

}  // namespace

Matrix hamiltonian_matrix(const MatrixProblem& prob, double gamma, double x) {
    const Index n = prob.n;
    const Matrix I = Matrix::Identity(n, n);
    return block2(prob.A - x * I, gamma * x * I, -gamma * x * I, x * I - prob.A.adjoint());
}

std::vector<double> vertical_level_points(const MatrixProblem& prob, double gamma, double x, double crossing_tol) {
    require_continuous(prob);
    if (x == 0.0) fail(ErrorCode::InvalidArgument, "x must be nonzero");
    if (gamma < 0.0) fail(ErrorCode::InvalidArgument, "gamma must be nonnegative");
    const Spectrum sp = eig_dense(hamiltonian_matrix(prob, gamma, x));
    std::vector<double> raw;
    for (Index i = 0; i < sp.size(); ++i) {
        const Complex l = sp.alpha(i);
        if (std::abs(l.real()) <= crossing_tol * std::max(1.0, std::abs(l))) raw.push_back(l.imag());
    }
    if (x < 0.0) return dedup_sorted(raw);
    std::vector<double> out;
    for (const Crossing& c : refine_crossings(prob, x, raw, gamma)) out.push_back(c.coord);
    return out;
}

std::vector<double> vertical_near_axis(const MatrixProblem& prob, double gamma, double x, int count) {
    require_continuous(prob);
    const Spectrum sp = eig_dense(hamiltonian_matrix(prob, gamma, x));
    std::vector<Complex> eigs(sp.alpha.data(), sp.alpha.data() + sp.alpha.size());
    std::sort(eigs.begin(), eigs.end(), [](Complex a, Complex b) {
        return std::abs(a.real()) / std::max(1.0, std::abs(a.imag())) <
               std::abs(b.real()) / std::max(1.0, std::abs(b.imag()));
    });
    std::vector<double> out;
    for (int i = 0; i < count && i < static_cast<int>(eigs.size()); ++i) out.push_back(eigs[i].imag());
    return out;
}

SylvesterForm fixed_form(const MatrixProblem& prob, double gamma, double eta, double orientation) {
    const Index n = prob.n;
    const Matrix I = Matrix::Identity(n, n), Z = Matrix::Zero(n, n);
    const Matrix& A = prob.A;
    const Matrix As = A.adjoint();
    const Complex e = std::polar(1.0, orientation);
    const double c = std::cos(orientation);
    SylvesterForm f;
    f.P0 = block2(A, Z, Z, -As);
    f.P1 = block2(I, -gamma * I, gamma * I, -I);
    f.R0 = block2(As - eta * std::conj(e) * I, -gamma * eta * c * I, gamma * eta * c * I, eta * e * I - A);
    f.R1 = block2(I, gamma * I, -gamma * I, -I);
    return f;
}

SylvesterForm variable_form(const MatrixProblem& prob, double gamma, double eta) {
    const Index n = prob.n;
    const Matrix I = Matrix::Identity(n, n), Z = Matrix::Zero(n, n);
    const Matrix& A = prob.A;
    const Matrix As = A.adjoint();
    SylvesterForm f;
    f.P0 = block2(A, Z, Z, -As);
    f.P1 = block2(I, -gamma * I, gamma * I, -I);
    f.R0 = block2(As, Z, Z, -A);
    f.R1 = block2(Complex(1.0, -eta) * I, gamma * I, -gamma * I, -Complex(1.0, eta) * I);
    return f;
}

SylvesterForm horizontal_form(const MatrixProblem& prob, double gamma, double eta) {
    const Index n = prob.n;
    const Matrix I = Matrix::Identity(n, n), Z = Matrix::Zero(n, n);
    const Matrix& A = prob.A;
    const Matrix As = A.adjoint();
    const double beta = horizontal_beta(gamma, eta);
    SylvesterForm f;
    f.P0 = block2(A, Z, Z, -As);
    f.P1 = block2(I, -gamma * I, gamma * I, -I);
    f.R0 = block2(As, Z, Z, -A);
    f.R1 = beta * block2(I, gamma * I, -gamma * I, -I);
    return f;
}

KroneckerPencil assemble_pencil(const SylvesterForm& form) {
    const Index m = form.P0.rows();
    const Matrix I = Matrix::Identity(m, m);
    KroneckerPencil p;
    p.A1 = kron(I, form.P0) + kron(form.R0.transpose(), I);
    p.A2 = kron(I, form.P1) + kron(form.R1.transpose(), I);
    p.form = form;
    return p;
}

double horizontal_beta(double gamma, double eta) { return 1.0 + eta / (1.0 + gamma); }

KroneckerPencil build_fixed_pencil(const MatrixProblem& prob, double gamma, double eta, double orientation) {
    require_continuous(prob);
    require_gamma(gamma);
    if (eta < 0.0) fail(ErrorCode::InvalidArgument, "eta must be nonnegative");
    if (!(orientation > -kPi / 2 && orientation <= kPi / 2 + 1e-15))
        fail(ErrorCode::InvalidArgument, "orientation must lie in (-pi/2, pi/2]");
    KroneckerPencil p = assemble_pencil(fixed_form(prob, gamma, eta, orientation));
    p.gamma = gamma;
    p.eta = eta;
    p.orientation = orientation;
    p.variant = CertVariant::FixedDistance;
    return p;
}

KroneckerPencil build_variable_pencil(const MatrixProblem& prob, double gamma, double eta) {
    require_continuous(prob);
    require_gamma(gamma);
    if (eta < 0.0) fail(ErrorCode::InvalidArgument, "eta must be nonnegative");
    KroneckerPencil p = assemble_pencil(variable_form(prob, gamma, eta));
    p.gamma = gamma;
    p.eta = eta;
    p.variant = CertVariant::VariableVertical;
    return p;
}

KroneckerPencil build_horizontal_pencil(const MatrixProblem& prob, double gamma, double eta) {
    require_continuous(prob);
    require_gamma(gamma);
    if (eta < 0.0) fail(ErrorCode::InvalidArgument, "eta must be nonnegative");
    KroneckerPencil p = assemble_pencil(horizontal_form(prob, gamma, eta));
    p.gamma = gamma;
    p.eta = eta;
    p.variant = CertVariant::VariableHorizontal;
    return p;
}

CertificateReport fixed_distance_test(const MatrixProblem& prob, double gamma, double eta, double orientation,
                                      const CertOptions& opts) {
    const KroneckerPencil shape = build_fixed_pencil(prob, gamma, eta, orientation);
    CertificateReport report;
    report.gamma = gamma;
    report.eta = eta;
    report.variant = CertVariant::FixedDistance;
    report.orientation = orientation;
    const std::vector<double> roots = pencil_candidates(prob, shape.form, gamma, false, opts, report);
    std::vector<double> lines = roots;
    const double shift = eta * std::cos(orientation);
    if (std::abs(orientation) < kPi / 2)
        for (double x : roots)
            if (x + shift > 0.0) lines.push_back(x + shift);
    scan_lines(prob, gamma, dedup_sorted(lines), opts, report);
    return report;
}

CertificateReport variable_distance_test(const MatrixProblem& prob, double gamma, double eta,
                                         const CertOptions& opts) {
    require_continuous(prob);
    require_gamma(gamma);
    if (!(eta > 0.0)) fail(ErrorCode::InvalidArgument, "eta must be positive");
    CertificateReport report;
    report.gamma = gamma;
    report.eta = eta;
    report.variant = CertVariant::VariableVertical;
    const std::vector<double> roots = pencil_candidates(prob, variable_form(prob, gamma, eta), gamma, true, opts, report);
    scan_lines(prob, gamma, roots, opts, report);
    return report;
}

CertificateReport horizontal_variable_test(const MatrixProblem& prob, double gamma, double eta,
                                           const CertOptions& opts) {
    require_continuous(prob);
    require_gamma(gamma);
    if (!(eta > 0.0)) fail(ErrorCode::InvalidArgument, "eta must be positive");
    CertificateReport report;
    report.gamma = gamma;
    report.eta = eta;
    report.variant = CertVariant::VariableHorizontal;
    const double beta = horizontal_beta(gamma, eta);
    const std::vector<double> roots =
        pencil_candidates(prob, horizontal_form(prob, gamma, eta), gamma, true, opts, report);
    std::vector<double> lines = roots;
    for (double x : roots) lines.push_back(beta * x);
    scan_lines(prob, gamma, dedup_sorted(lines), opts, report);
    return report;
}

Matrix kron_block_c(double a, double b, Index n) {
    const Matrix I = Matrix::Identity(n, n);
    return block2(a * I, -b * I, b * I, -a * I);
}

Matrix kron_factor_u(double a, double b, Index k, Index n) {
    const Matrix I = Matrix::Identity(n, n), Z = Matrix::Zero(n, n);
    const Index m = 2 * k * n;
    Matrix U(2 * m, m);
    U.topRows(m) = kron(Matrix::Identity(k, k), block2(2.0 * a * I, -b * I, b * I, Z));
    U.bottomRows(m) = b * Matrix::Identity(m, m);
    return U;
}

Matrix kron_factor_v(double a, double b, Index k, Index n) {
    if (b == 0.0) fail(ErrorCode::InvalidArgument, "b must be nonzero");
    const Matrix I = Matrix::Identity(n, n), Z = Matrix::Zero(n, n);
    const Index m = 2 * k * n;
    Matrix V(m, 2 * m);
    V.leftCols(m) = Matrix::Identity(m, m);
    V.rightCols(m) = kron(Matrix::Identity(k, k), block2(Z, -I, I, -(2.0 * a / b) * I));
    return V;
}

KronSumInverse::KronSumInverse(double a, double b, Index k, Index n, Complex s)
    : a_(a), b_(b), k_(k), n_(n), s_(s) {
    if (b == 0.0) fail(ErrorCode::InvalidArgument, "b must be nonzero");
    if (k < 1 || n < 1) fail(ErrorCode::InvalidArgument, "k and n must be positive");
    beta_ = s * s + 4.0 * (b * b - a * a);
    const double scale = std::abs(a) + std::abs(b);
    if (std::abs(s) <= 1e-14 * scale) fail(ErrorCode::SingularD, "s = 0");
    if (std::abs(beta_) <= 1e-14 * (std::norm(s) + 4.0 * (a * a + b * b))) fail(ErrorCode::SingularD, "beta = 0");
}

Vector KronSumInverse::apply_v(const Vector& y) const {
    const Index m = 2 * k_ * n_;
    Vector out = y.head(m);
    const double r = 2.0 * a_ / b_;
    for (Index i = 0; i < k_; ++i) {
        const Index o = m + 2 * n_ * i, t = 2 * n_ * i;
        out.segment(t, n_) -= y.segment(o + n_, n_);
        out.segment(t + n_, n_) += y.segment(o, n_) - r * y.segment(o + n_, n_);
    }
    return out;
}

Vector KronSumInverse::apply_u(const Vector& z) const {
    const Index m = 2 * k_ * n_;
    Vector out(2 * m);
    for (Index i = 0; i < k_; ++i) {
        const Index t = 2 * n_ * i;
        out.segment(t, n_) = 2.0 * a_ * z.segment(t, n_) - b_ * z.segment(t + n_, n_);
        out.segment(t + n_, n_) = b_ * z.segment(t, n_);
    }
    out.tail(m) = b_ * z;
    return out;
}

Vector KronSumInverse::apply_middle(const Vector& z) const {
    Vector out = z;
    const Complex f = 2.0 / s_;
    for (Index i = 0; i < k_; ++i) {
        const Index t = 2 * n_ * i;
        out.segment(t, n_) -= f * (a_ * z.segment(t, n_) - b_ * z.segment(t + n_, n_));
        out.segment(t + n_, n_) -= f * (b_ * z.segment(t, n_) - a_ * z.segment(t + n_, n_));
    }
    return out;
}

Vector KronSumInverse::apply(const Vector& y) const {
    if (y.size() != dim()) fail(ErrorCode::InvalidArgument, "vector size mismatch");
    return y / s_ - apply_u(apply_middle(apply_v(y))) / beta_;
}

Vector KronSumInverse::apply_d(const Vector& w) const {
    if (w.size() != dim()) fail(ErrorCode::InvalidArgument, "vector size mismatch");
    return s_ * w + apply_u(apply_v(w));
}

Matrix KronSumInverse::dense() const {
    const Index d = dim();
    Matrix out(d, d);
    for (Index j = 0; j < d; ++j) out.col(j) = apply(Vector::Unit(d, j));
    return out;
}

Matrix KronSumInverse::dense_d() const {
    const Matrix C = kron_block_c(a_, b_, n_);
    const Index m2 = 2 * k_;
    const Matrix Ik = Matrix::Identity(m2, m2);
    Matrix Cs = C;
    Cs.diagonal().array() += s_;
    return kron(Ik, C) + kron(Cs, Ik);
}

KronSumInverse kron_sum_inverse(double a, double b, Index k, Index n, Complex s) {
    return KronSumInverse(a, b, k, n, s);
}

}  // namespace kreiss
