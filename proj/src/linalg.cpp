#include "kreiss/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <memory>
#include <cmath>
#include <numeric>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "lapack.hpp"

namespace kreiss {

namespace {


void require_finite(const Matrix& M, const char* what) {
    if (!M.allFinite()) fail(ErrorCode::InvalidArgument, std::string(what) + " has non-finite entries");
}

void require_square(const Matrix& M, const char* what) {
    if (M.rows() != M.cols()) fail(ErrorCode::InvalidArgument, std::string(what) + " must be square");
}

bool is_real(const Matrix& M) { return (M.imag().array() == 0.0).all(); }

struct QzForm {
    Matrix S, T, Q, Z;  // A = Q S Z^*, B = Q T Z^*
};

QzForm complex_qz(const Matrix& A, const Matrix& B) {
    const int n = static_cast<int>(A.rows());
    QzForm f{A, B, Matrix(n, n), Matrix(n, n)};
    if (n == 0) return f;
    Vector alpha(n), beta(n);
    std::vector<double> rwork(8 * static_cast<size_t>(n));
    int sdim = 0, info = 0, lwork = -1;
    Complex query;
    zgges_("V", "V", "N", nullptr, &n, f.S.data(), &n, f.T.data(), &n, &sdim, alpha.data(), beta.data(),
           f.Q.data(), &n, f.Z.data(), &n, &query, &lwork, rwork.data(), nullptr, &info);
    lwork = std::max(1, static_cast<int>(query.real()));
    std::vector<Complex> work(static_cast<size_t>(lwork));
    zgges_("V", "V", "N", nullptr, &n, f.S.data(), &n, f.T.data(), &n, &sdim, alpha.data(), beta.data(),
           f.Q.data(), &n, f.Z.data(), &n, work.data(), &lwork, rwork.data(), nullptr, &info);
    if (info != 0) fail(ErrorCode::ConvergenceFailure, "zgges info=" + std::to_string(info));
    return f;
}

Spectrum qz_eigenvalues(const Matrix& M, const Matrix& N) {
    const int n = static_cast<int>(M.rows());
    Spectrum sp;
    sp.alpha.resize(n);
    sp.beta.resize(n);
    sp.norm_m = M.norm();
    sp.norm_n = N.norm();
    if (n == 0) return sp;
    int info = 0, lwork = -1;
    const int one = 1;
    if (is_real(M) && is_real(N)) {
        RealMatrix a = M.real(), b = N.real();
        RealVector ar(n), ai(n), be(n);
        double query = 0.0;
        dggev_("N", "N", &n, a.data(), &n, b.data(), &n, ar.data(), ai.data(), be.data(), nullptr, &one,
               nullptr, &one, &query, &lwork, &info);
        lwork = std::max(1, static_cast<int>(query));
        std::vector<double> work(static_cast<size_t>(lwork));
        dggev_("N", "N", &n, a.data(), &n, b.data(), &n, ar.data(), ai.data(), be.data(), nullptr, &one,
               nullptr, &one, work.data(), &lwork, &info);
        if (info != 0) fail(ErrorCode::ConvergenceFailure, "dggev info=" + std::to_string(info));
        for (int i = 0; i < n; ++i) {
            sp.alpha(i) = Complex(ar(i), ai(i));
            sp.beta(i) = be(i);
        }
    } else {
        Matrix a = M, b = N;
        std::vector<double> rwork(8 * static_cast<size_t>(n));
        Complex query;
        zggev_("N", "N", &n, a.data(), &n, b.data(), &n, sp.alpha.data(), sp.beta.data(), nullptr, &one,
               nullptr, &one, &query, &lwork, rwork.data(), &info);
        lwork = std::max(1, static_cast<int>(query.real()));
        std::vector<Complex> work(static_cast<size_t>(lwork));
        zggev_("N", "N", &n, a.data(), &n, b.data(), &n, sp.alpha.data(), sp.beta.data(), nullptr, &one,
               nullptr, &one, work.data(), &lwork, rwork.data(), &info);
        if (info != 0) fail(ErrorCode::ConvergenceFailure, "zggev info=" + std::to_string(info));
    }
    return sp;
}

// Samples sigma_min(M - lambda N) at random lambda; a regular pencil is nonsingular almost everywhere.
// Row/column equilibration so that badly scaled blocks do not masquerade as rank deficiency.
Matrix equilibrate(Matrix S) {
    for (int sweep = 0; sweep < 5; ++sweep) {
        for (Index i = 0; i < S.rows(); ++i)
            if (const double r = S.row(i).norm(); r > 0.0) S.row(i) /= r;
        for (Index j = 0; j < S.cols(); ++j)
            if (const double c = S.col(j).norm(); c > 0.0) S.col(j) /= c;
    }
    return S;
}

bool pencil_looks_singular(const Matrix& M, const Matrix& N) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    const double nm = M.norm(), nn = N.norm();
    const double radius = (nn > 0.0 && nm > 0.0) ? nm / nn : 1.0;
    for (int trial = 0; trial < 3; ++trial) {
        const Complex lambda = std::polar(radius * (0.5 + 0.5 * trial), angle(rng));
        const RealVector s = singular_values(equilibrate(M - lambda * N));
        if (s.size() == 0 || s(s.size() - 1) > static_cast<double>(s.size()) * kEps * s(0)) return false;
    }
    return true;
}

}  // namespace

SvdResult svd_full(const Matrix& M) {
    require_finite(M, "svd input");
    Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return {svd.singularValues(), svd.matrixU(), svd.matrixV()};
}

RealVector singular_values(const Matrix& M) {
    require_finite(M, "svd input");
    if (M.rows() <= 64 && M.cols() <= 64) return Eigen::JacobiSVD<Matrix>(M).singularValues();
    // Eigen's divide-and-conquer SVD can return spurious zeros on badly scaled input.
    Matrix a = M;
    const int m = static_cast<int>(M.rows()), n = static_cast<int>(M.cols()), one = 1;
    RealVector s(std::min(m, n));
    std::vector<double> rwork(5 * static_cast<size_t>(std::min(m, n)));
    int lwork = -1, info = 0;
    Complex query;
    zgesvd_("N", "N", &m, &n, a.data(), &m, s.data(), nullptr, &one, nullptr, &one, &query, &lwork, rwork.data(),
            &info);
    lwork = std::max(1, static_cast<int>(query.real()));
    std::vector<Complex> work(static_cast<size_t>(lwork));
    zgesvd_("N", "N", &m, &n, a.data(), &m, s.data(), nullptr, &one, nullptr, &one, work.data(), &lwork,
            rwork.data(), &info);
    if (info != 0) fail(ErrorCode::ConvergenceFailure, "zgesvd info=" + std::to_string(info));
    return s;
}

double sigma_min(const Matrix& M) {
    const RealVector s = singular_values(M);
    return s.size() ? s(s.size() - 1) : 0.0;
}

bool Spectrum::is_infinite(Index i, double tol) const {
    const Complex b = beta(i);
    if (b == 0.0) return true;
    if (norm_n == 0.0 && norm_m == 0.0) return false;
    return std::abs(b) * norm_m <= tol * std::abs(alpha(i)) * norm_n;
}

Complex Spectrum::eigenvalue(Index i) const {
    if (beta(i) == 0.0) return {kInf, 0.0};
    return alpha(i) / beta(i);
}

std::vector<Complex> Spectrum::finite(double tol) const {
    std::vector<Complex> out;
    for (Index i = 0; i < size(); ++i)
        if (!is_infinite(i, tol)) out.push_back(eigenvalue(i));
    return out;
}

Index Spectrum::infinite_count(double tol) const {
    Index c = 0;
    for (Index i = 0; i < size(); ++i) c += is_infinite(i, tol) ? 1 : 0;
    return c;
}

Spectrum eig_dense(const Matrix& M) {
    require_square(M, "eig_dense input");
    require_finite(M, "eig_dense input");
    Eigen::ComplexEigenSolver<Matrix> es(M, false);
    if (es.info() != Eigen::Success) fail(ErrorCode::ConvergenceFailure, "complex eigensolver failed");
    Spectrum sp;
    sp.alpha = es.eigenvalues();
    sp.beta = Vector::Ones(M.rows());
    return sp;
}

EigDecomposition eig_dense_vectors(const Matrix& M) {
    require_square(M, "eig_dense input");
    require_finite(M, "eig_dense input");
    Eigen::ComplexEigenSolver<Matrix> es(M, true);
    if (es.info() != Eigen::Success) fail(ErrorCode::ConvergenceFailure, "complex eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

Spectrum eig_pencil(const Matrix& M, const Matrix& N) {
    require_square(M, "pencil matrix M");
    require_square(N, "pencil matrix N");
    if (M.rows() != N.rows()) fail(ErrorCode::InvalidArgument, "pencil dimensions differ");
    require_finite(M, "pencil matrix M");
    require_finite(N, "pencil matrix N");
    Spectrum sp = qz_eigenvalues(M, N);
    const double tol = 1e3 * kEps * std::sqrt(static_cast<double>(std::max<Index>(1, M.rows())));
    bool indeterminate = false;
    for (Index i = 0; i < sp.size(); ++i) {
        if (std::abs(sp.alpha(i)) <= tol * sp.norm_m && std::abs(sp.beta(i)) <= tol * sp.norm_n) indeterminate = true;
    }
    if (indeterminate && pencil_looks_singular(M, N)) fail(ErrorCode::SingularPencil, "pencil is not regular");
    return sp;
}

Spectrum eig_quadratic(const Matrix& Q0, const Matrix& Q1, const Matrix& Q2, bool check_well_posed) {
    const Index m = Q0.rows();
    if (Q1.rows() != m || Q2.rows() != m) fail(ErrorCode::InvalidArgument, "quadratic coefficients differ in size");
    if (check_well_posed) {
        auto singular = [](const Matrix& Q) {
            const RealVector s = singular_values(Q);
            return s.size() == 0 || s(s.size() - 1) <= 1e-13 * s(0) || s(0) == 0.0;
        };
        if (singular(Q0) && singular(Q2)) fail(ErrorCode::IllPosed, "both Q0 and Q2 are singular");
    }
    Matrix L0 = Matrix::Zero(2 * m, 2 * m), L1 = Matrix::Zero(2 * m, 2 * m);
    L0.topLeftCorner(m, m) = Q1;
    L0.topRightCorner(m, m) = Q0;
    L0.bottomLeftCorner(m, m) = -Matrix::Identity(m, m);
    L1.topLeftCorner(m, m) = -Q2;
    L1.bottomRightCorner(m, m) = -Matrix::Identity(m, m);
    return eig_pencil(L0, L1);
}

SylvesterSolver::SylvesterSolver(const Matrix& P, const Matrix& Q, double sep_tol) {
    require_square(P, "Sylvester P");
    require_square(Q, "Sylvester Q");
    Eigen::ComplexSchur<Matrix> sp(P), sq(Q);
    if (sp.info() != Eigen::Success || sq.info() != Eigen::Success)
        fail(ErrorCode::ConvergenceFailure, "Schur decomposition failed");
    up_ = sp.matrixU();
    tp_ = sp.matrixT();
    uq_ = sq.matrixU();
    tq_ = sq.matrixT();
    const double scale = P.norm() + Q.norm();
    double sep = kInf;
    for (Index i = 0; i < tp_.rows(); ++i)
        for (Index j = 0; j < tq_.rows(); ++j) sep = std::min(sep, std::abs(tp_(i, i) + tq_(j, j)));
    if (sep <= sep_tol * scale) fail(ErrorCode::NearSingularOperator, "spectra of P and -Q nearly intersect");
}

Matrix SylvesterSolver::solve(const Matrix& C) const {
    const Index n = tp_.rows(), m = tq_.rows();
    if (C.rows() != n || C.cols() != m) fail(ErrorCode::InvalidArgument, "Sylvester right-hand side has wrong shape");
    const Matrix ct = up_.adjoint() * C * uq_;
    Matrix X(n, m);
    Matrix shifted = tp_;
    for (Index j = 0; j < m; ++j) {
        Vector rhs = ct.col(j);
        if (j > 0) rhs.noalias() -= X.leftCols(j) * tq_.col(j).head(j);
        shifted.diagonal() = tp_.diagonal().array() + tq_(j, j);
        X.col(j) = shifted.triangularView<Eigen::Upper>().solve(rhs);
    }
    return up_ * X * uq_.adjoint();
}

GenSylvesterSolver::GenSylvesterSolver(const Matrix& A, const Matrix& B, const Matrix& C, const Matrix& D,
                                       double sep_tol) {
    require_square(A, "generalized Sylvester A");
    require_square(B, "generalized Sylvester B");
    if (C.rows() != A.rows() || C.cols() != A.cols() || D.rows() != B.rows() || D.cols() != B.cols())
        fail(ErrorCode::InvalidArgument, "generalized Sylvester coefficient shapes differ");
    QzForm left = complex_qz(A, C), right = complex_qz(B, D);
    s1_ = std::move(left.S);
    t1_ = std::move(left.T);
    q1_ = std::move(left.Q);
    z1_ = std::move(left.Z);
    s2_ = std::move(right.S);
    t2_ = std::move(right.T);
    q2_ = std::move(right.Q);
    z2_ = std::move(right.Z);
    const double scale = A.norm() * B.norm() + C.norm() * D.norm();
    double sep = kInf;
    for (Index i = 0; i < s1_.rows(); ++i)
        for (Index j = 0; j < s2_.rows(); ++j)
            sep = std::min(sep, std::abs(s2_(j, j) * s1_(i, i) - t2_(j, j) * t1_(i, i)));
    if (sep <= sep_tol * scale) fail(ErrorCode::NearSingularOperator, "generalized Sylvester operator is singular");
}

Matrix GenSylvesterSolver::solve(const Matrix& E) const {
    const Index n = s1_.rows(), m = s2_.rows();
    if (E.rows() != n || E.cols() != m) fail(ErrorCode::InvalidArgument, "right-hand side has wrong shape");
    const Matrix et = q1_.adjoint() * E * z2_;
    Matrix X(n, m), SX(n, m), TX(n, m);
    for (Index j = 0; j < m; ++j) {
        Vector rhs = et.col(j);
        if (j > 0) {
            rhs.noalias() -= SX.leftCols(j) * s2_.col(j).head(j);
            rhs.noalias() += TX.leftCols(j) * t2_.col(j).head(j);
        }
        const Matrix diag_block = s2_(j, j) * s1_ - t2_(j, j) * t1_;
        X.col(j) = diag_block.triangularView<Eigen::Upper>().solve(rhs);
        SX.col(j) = s1_.triangularView<Eigen::Upper>() * X.col(j);
        TX.col(j) = t1_.triangularView<Eigen::Upper>() * X.col(j);
    }
    return z1_ * X * q2_.adjoint();
}

Matrix solve_sylvester(const Matrix& P, const Matrix& Q, const Matrix& C) {
    return SylvesterSolver(P, Q).solve(C);
}

Matrix solve_gen_sylvester(const Matrix& M, const Matrix& Mt, const Matrix& N, const Matrix& Nt,
                           const Matrix& Y) {
    return GenSylvesterSolver(M, Mt.adjoint(), N, Nt.adjoint()).solve(Y);
}

LinearOperator LinearOperator::from_dense(const Matrix& A) {
    LinearOperator op;
    op.dim = A.rows();
    op.apply = [A](const Vector& v) -> Vector { return A * v; };
    op.factor_shifted = [A](Complex s) -> VectorMap {
        Matrix shifted = A;
        shifted.diagonal().array() -= s;
        auto lu = std::make_shared<Eigen::PartialPivLU<Matrix>>(shifted);
        if (lu->rcond() < 1e-14) fail(ErrorCode::NearSingularOperator, "shift is an eigenvalue");
        return [lu](const Vector& y) -> Vector { return lu->solve(y); };
    };
    return op;
}

LinearOperator LinearOperator::from_dense(const Matrix& A, const Matrix& B) {
    LinearOperator op;
    op.dim = A.rows();
    op.apply = [A](const Vector& v) -> Vector { return A * v; };
    op.apply_mass = [B](const Vector& v) -> Vector { return B * v; };
    op.mass_matrix = B.sparseView();
    op.factor_shifted = [A, B](Complex s) -> VectorMap {
        auto lu = std::make_shared<Eigen::PartialPivLU<Matrix>>(A - s * B);
        if (lu->rcond() < 1e-14) fail(ErrorCode::NearSingularOperator, "shift is an eigenvalue");
        return [lu](const Vector& y) -> Vector { return lu->solve(y); };
    };
    return op;
}

namespace {

Vector random_vector(Index n, std::mt19937& rng) {
    std::normal_distribution<double> nd;
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = Complex(nd(rng), nd(rng));
    return v.normalized();
}

// Two passes of classical Gram-Schmidt against the first `cols` columns of V.
Vector orthogonalize(const Matrix& V, Index cols, Vector w, Vector* coeffs) {
    Vector h = Vector::Zero(cols);
    for (int pass = 0; pass < 2; ++pass) {
        const Vector c = V.leftCols(cols).adjoint() * w;
        w.noalias() -= V.leftCols(cols) * c;
        h += c;
    }
    if (coeffs) *coeffs = h;
    return w;
}

}  // namespace

ShiftInvertResult eigs_shift_invert(const LinearOperator& op, Complex shift, Index k, const EigsOptions& opts) {
    const Index dim = op.dim;
    if (dim <= 0 || k <= 0) fail(ErrorCode::InvalidArgument, "eigs_shift_invert needs dim > 0 and k > 0");
    k = std::min(k, dim);
    Index m = opts.subspace > 0 ? opts.subspace : std::max<Index>(2 * k + 10, 20);
    m = std::min(m, dim);

    const VectorMap solve = op.factor_shifted(shift);
    auto apply_t = [&](const Vector& v) -> Vector { return solve(op.mass(v)); };

    std::mt19937 rng(opts.seed);
    Matrix V = Matrix::Zero(dim, m + 1);
    Matrix H = Matrix::Zero(m + 1, m);
    V.col(0) = random_vector(dim, rng);
    Index start = 0;

    // Extends the Arnoldi factorization from column `from` to m; restarts with a fresh
    // orthogonal vector on breakdown so the basis keeps growing.
    auto extend = [&](Index from) {
        for (Index j = from; j < m; ++j) {
            Vector h;
            Vector w = orthogonalize(V, j + 1, apply_t(V.col(j)), &h);
            H.col(j).head(j + 1) = h;
            double beta = w.norm();
            if (beta <= 1e-12 * std::max(1.0, h.norm())) {
                H(j + 1, j) = 0.0;
                if (j + 1 >= dim) return;
                for (int attempt = 0; attempt < 5; ++attempt) {
                    w = orthogonalize(V, j + 1, random_vector(dim, rng), nullptr);
                    beta = w.norm();
                    if (beta > 1e-8) break;
                }
                if (beta <= 1e-8) fail(ErrorCode::ArnoldiBreakdown, "cannot extend Krylov basis");
                V.col(j + 1) = w / beta;
            } else {
                H(j + 1, j) = beta;
                V.col(j + 1) = w / beta;
            }
        }
    };

    ShiftInvertResult result;
    Vector theta;
    Matrix Y;
    std::vector<Index> order;
    for (int iter = 0;; ++iter) {
        extend(start);
        const Matrix Hm = H.topLeftCorner(m, m);
        Eigen::ComplexEigenSolver<Matrix> es(Hm, true);
        if (es.info() != Eigen::Success) fail(ErrorCode::ConvergenceFailure, "Hessenberg eigensolver failed");
        theta = es.eigenvalues();
        Y = es.eigenvectors();
        order.resize(static_cast<size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](Index a, Index b) { return std::abs(theta(a)) > std::abs(theta(b)); });
        const double hres = m < dim ? std::abs(H(m, m - 1)) : 0.0;
        Index nconv = 0;
        for (Index i = 0; i < k; ++i) {
            const Index idx = order[static_cast<size_t>(i)];
            const double est = hres * std::abs(Y(m - 1, idx));
            if (est <= opts.tol * std::max(std::abs(theta(idx)), kEps)) ++nconv;
        }
        result.restarts = iter;
        if (nconv >= k || m == dim || iter >= opts.max_restarts) break;

        // Implicit restart with the unwanted Ritz values as exact shifts.
        const Index keep = std::min(m - 1, k + std::min(nconv, (m - k) / 2));
        Matrix Hk = Hm;
        Matrix Q = Matrix::Identity(m, m);
        for (Index s = keep; s < m; ++s) {
            const Complex mu = theta(order[static_cast<size_t>(s)]);
            Matrix shifted = Hk;
            shifted.diagonal().array() -= mu;
            Eigen::HouseholderQR<Matrix> qr(shifted);
            const Matrix Qs = qr.householderQ();
            Hk = Qs.adjoint() * Hk * Qs;
            for (Index c = 0; c < m; ++c)
                for (Index r = c + 2; r < m; ++r) Hk(r, c) = 0.0;
            Q = Q * Qs;
        }
        const Vector f = V.col(m) * H(m, m - 1);
        const Matrix Vk = V.leftCols(m) * Q.leftCols(keep + 1);
        Vector fk = Vk.col(keep) * Hk(keep, keep - 1) + f * Q(m - 1, keep - 1);
        V.setZero();
        V.leftCols(keep) = Vk.leftCols(keep);
        H.setZero();
        H.topLeftCorner(keep, keep) = Hk.topLeftCorner(keep, keep);
        fk = orthogonalize(V, keep, fk, nullptr);
        double beta = fk.norm();
        if (beta <= 1e-14) {
            fk = orthogonalize(V, keep, random_vector(dim, rng), nullptr);
            beta = fk.norm();
            H(keep, keep - 1) = 0.0;
        } else {
            H(keep, keep - 1) = beta;
        }
        V.col(keep) = fk / beta;
        start = keep;
    }

    // Validate each wanted Ritz pair against the original pencil. Norm estimates of both operators
    // keep the backward error meaningful for eigenvalues at or near zero.
    const Vector probe = random_vector(dim, rng).normalized();
    const double norm_a = op.apply(probe).norm(), norm_b = op.mass(probe).norm();
    const Matrix basis = V.leftCols(m);
    for (Index i = 0; i < k; ++i) {
        const Index idx = order[static_cast<size_t>(i)];
        const Complex mu = theta(idx);
        RitzValue rv;
        if (std::abs(mu) == 0.0) {
            rv.value = Complex(kInf, 0.0);
            rv.residual = kInf;
            result.values.push_back(rv);
            continue;
        }
        rv.value = shift + 1.0 / mu;
        const Vector x = (basis * Y.col(idx)).normalized();
        const Vector ax = op.apply(x), bx = op.mass(x);
        const double scale = std::max(ax.norm(), norm_a) + std::abs(rv.value) * std::max(bx.norm(), norm_b);
        rv.residual = scale > 0.0 ? (ax - rv.value * bx).norm() / scale : 0.0;
        rv.converged = std::isfinite(rv.residual) && rv.residual <= opts.accept_tol;
        result.values.push_back(rv);
    }
    const bool any = std::any_of(result.values.begin(), result.values.end(),
                                 [](const RitzValue& r) { return r.converged; });
    if (!any) fail(ErrorCode::MaxIterations, "no Ritz value converged");
    return result;
}

Matrix kron(const Matrix& X, const Matrix& Y) { return Eigen::kroneckerProduct(X, Y).eval(); }

SparseMatrix kron_sparse(const SparseMatrix& X, const SparseMatrix& Y) {
    SparseMatrix out;
    out = Eigen::kroneckerProduct(X, Y);
    return out;
}

Vector vec(const Matrix& W) { return Eigen::Map<const Vector>(W.data(), W.size()); }

Matrix unvec(const Vector& w, Index rows, Index cols) {
    if (w.size() != rows * cols) fail(ErrorCode::InvalidArgument, "unvec size mismatch");
    return Eigen::Map<const Matrix>(w.data(), rows, cols);
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::Unstable: return "Unstable";
        case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
        case ErrorCode::UnknownKind: return "UnknownKind";
        case ErrorCode::MissingBaseMatrix: return "MissingBaseMatrix";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::SingularPencil: return "SingularPencil";
        case ErrorCode::IllPosed: return "IllPosed";
        case ErrorCode::NearSingularOperator: return "NearSingularOperator";
        case ErrorCode::ArnoldiBreakdown: return "ArnoldiBreakdown";
        case ErrorCode::MaxIterations: return "MaxIterations";
        case ErrorCode::NonsimpleSigma: return "NonsimpleSigma";
        case ErrorCode::ZeroSigma: return "ZeroSigma";
        case ErrorCode::DegenerateGap: return "DegenerateGap";
        case ErrorCode::InfeasibleStart: return "InfeasibleStart";
        case ErrorCode::SingularD: return "SingularD";
        case ErrorCode::ZeroShift: return "ZeroShift";
        case ErrorCode::MaxShifts: return "MaxShifts";
        case ErrorCode::CertificateFailure: return "CertificateFailure";
    }
    return "Unknown";
}

const char* time_domain_name(TimeDomain td) { return td == TimeDomain::Continuous ? "continuous" : "discrete"; }

}  // namespace kreiss
