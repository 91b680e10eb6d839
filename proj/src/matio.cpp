#include "kreiss/matio.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <vector>

#include "kreiss/errors.hpp"
#include "kreiss/linalg.hpp"

namespace kreiss {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

double parse_double(const std::string& tok, const std::string& context) {
    std::string t = trim(tok);
    if (t.empty()) fail(ErrorCode::ParseError, "empty number in " + context);
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad number '" + t + "' in " + context);
    }
    if (used != t.size()) fail(ErrorCode::ParseError, "bad number '" + t + "' in " + context);
    return v;
}

// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i" (j is accepted in place of i).
Complex parse_complex(const std::string& token) {
    std::string t = trim(token);
    if (t.empty()) fail(ErrorCode::ParseError, "empty CSV cell");
    const char last = static_cast<char>(std::tolower(static_cast<unsigned char>(t.back())));
    if (last != 'i' && last != 'j') return {parse_double(t, "CSV cell"), 0.0};
    t.pop_back();
    size_t split = std::string::npos;
    for (size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_double(s, "CSV cell");
    };
    if (split == std::string::npos) return {0.0, imag_of(t)};
    return {parse_double(t.substr(0, split), "CSV cell"), imag_of(t.substr(split))};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_double(z.real());
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Matrix read_matrix_market(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) fail(ErrorCode::ParseError, "empty MatrixMarket file");
    std::istringstream header(lower(line));
    std::string banner, object, layout, field, symmetry;
    header >> banner >> object >> layout >> field >> symmetry;
    if (banner != "%%matrixmarket" || object != "matrix")
        fail(ErrorCode::ParseError, "missing MatrixMarket banner");
    if (layout != "coordinate" && layout != "array") fail(ErrorCode::ParseError, "unknown layout " + layout);
    if (field != "real" && field != "complex" && field != "integer" && field != "pattern")
        fail(ErrorCode::ParseError, "unsupported field " + field);
    if (symmetry.empty()) symmetry = "general";
    const bool cplx = field == "complex";
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (!t.empty() && t[0] != '%') break;
    }
    std::istringstream size_line(line);
    long rows = -1, cols = -1, nnz = -1;
    size_line >> rows >> cols;
    if (layout == "coordinate") size_line >> nnz;
    if (rows <= 0 || cols <= 0 || (layout == "coordinate" && nnz < 0))
        fail(ErrorCode::ParseError, "bad MatrixMarket size line");
    if (rows != cols) fail(ErrorCode::NotSquare, std::to_string(rows) + "x" + std::to_string(cols));
    Matrix A = Matrix::Zero(rows, cols);
    auto mirror = [&](long i, long j, Complex v) {
        if (i == j) return;
        if (symmetry == "symmetric") A(j, i) = v;
        else if (symmetry == "hermitian") A(j, i) = std::conj(v);
        else if (symmetry == "skew-symmetric") A(j, i) = -v;
    };
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '%') {
            std::getline(in, tok);
            continue;
        }
        tokens.push_back(tok);
    }
    size_t pos = 0;
    auto next = [&]() -> const std::string& {
        if (pos >= tokens.size()) fail(ErrorCode::ParseError, "truncated MatrixMarket data");
        return tokens[pos++];
    };
    if (layout == "coordinate") {
        for (long e = 0; e < nnz; ++e) {
            const long i = static_cast<long>(parse_double(next(), "index")) - 1;
            const long j = static_cast<long>(parse_double(next(), "index")) - 1;
            if (i < 0 || j < 0 || i >= rows || j >= cols) fail(ErrorCode::ParseError, "index out of range");
            Complex v = 1.0;
            if (field != "pattern") {
                const double re = parse_double(next(), "entry");
                const double im = cplx ? parse_double(next(), "entry") : 0.0;
                v = {re, im};
            }
            A(i, j) = v;
            mirror(i, j, v);
        }
    } else {
        for (long j = 0; j < cols; ++j) {
            const long first = symmetry == "general" ? 0 : (symmetry == "skew-symmetric" ? j + 1 : j);
            for (long i = first; i < rows; ++i) {
                const double re = parse_double(next(), "entry");
                const double im = cplx ? parse_double(next(), "entry") : 0.0;
                A(i, j) = {re, im};
                mirror(i, j, A(i, j));
            }
        }
    }
    if (pos != tokens.size()) fail(ErrorCode::ParseError, "trailing MatrixMarket data");
    return A;
}

Matrix read_csv(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::vector<Complex>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<Complex> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(parse_complex(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(ErrorCode::ParseError, "empty CSV file");
    const size_t n = rows.size();
    Matrix A(static_cast<Index>(n), static_cast<Index>(rows[0].size()));
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != rows[0].size()) fail(ErrorCode::ParseError, "ragged CSV rows");
        for (size_t j = 0; j < rows[i].size(); ++j) A(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    }
    if (A.rows() != A.cols())
        fail(ErrorCode::NotSquare, std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
    return A;
}

Matrix read_json(const std::string& path, std::optional<TimeDomain>* declared) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    try {
        const auto& re = doc.at("real");
        const size_t rows = re.size();
        if (rows == 0) fail(ErrorCode::ParseError, "empty matrix");
        const size_t cols = re.at(0).size();
        if (rows != cols) fail(ErrorCode::NotSquare, std::to_string(rows) + "x" + std::to_string(cols));
        if (doc.contains("n") && doc.at("n").get<size_t>() != rows)
            fail(ErrorCode::ParseError, "field n disagrees with matrix size");
        const bool has_imag = doc.contains("imag") && !doc.at("imag").is_null();
        Matrix A(static_cast<Index>(rows), static_cast<Index>(cols));
        for (size_t i = 0; i < rows; ++i) {
            if (re.at(i).size() != cols) fail(ErrorCode::NotSquare, "ragged rows");
            for (size_t j = 0; j < cols; ++j) {
                const double im = has_imag ? doc.at("imag").at(i).at(j).get<double>() : 0.0;
                A(static_cast<Index>(i), static_cast<Index>(j)) = Complex(re.at(i).at(j).get<double>(), im);
            }
        }
        if (declared && doc.contains("time_domain")) {
            const std::string td = doc.at("time_domain").get<std::string>();
            if (td == "continuous") *declared = TimeDomain::Continuous;
            else if (td == "discrete") *declared = TimeDomain::Discrete;
            else fail(ErrorCode::ParseError, "unknown time_domain " + td);
        }
        return A;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

}  // namespace

MatrixProblem make_problem(const Matrix& A, TimeDomain td) {
    if (A.rows() != A.cols()) fail(ErrorCode::NotSquare, std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
    if (A.rows() < 1) fail(ErrorCode::InvalidArgument, "matrix must be at least 1x1");
    if (!A.allFinite()) fail(ErrorCode::ParseError, "matrix has non-finite entries");
    MatrixProblem p;
    p.A = A;
    p.time_domain = td;
    p.n = A.rows();
    p.eigenvalues = eig_dense(A).alpha;
    p.spectral_abscissa = -kInf;
    p.spectral_radius = 0.0;
    for (Index i = 0; i < p.n; ++i) {
        const Complex l = p.eigenvalues(i);
        if (l.real() > p.spectral_abscissa) {
            p.spectral_abscissa = l.real();
            p.rightmost = l;
        }
        if (std::abs(l) >= p.spectral_radius) {
            p.spectral_radius = std::abs(l);
            p.largest = l;
        }
    }
    const RealVector s = singular_values(A);
    p.norm2 = s(0);
    if (td == TimeDomain::Continuous) {
        if (!(p.spectral_abscissa < 0.0))
            fail(ErrorCode::Unstable, "spectral abscissa " + format_double(p.spectral_abscissa) + " >= 0");
    } else {
        if (!(p.spectral_radius < 1.0))
            fail(ErrorCode::Unstable, "spectral radius " + format_double(p.spectral_radius) + " >= 1");
        const double eps = std::numeric_limits<double>::epsilon();
        if (s(s.size() - 1) <= static_cast<double>(p.n) * eps * p.norm2)
            fail(ErrorCode::ZeroEigenvalue, "A is singular; 0 is an eigenvalue");
    }
    return p;
}

MatrixFormat format_from_name(const std::string& name) {
    const std::string n = lower(name);
    if (n == "mm" || n == "mtx" || n == "matrixmarket") return MatrixFormat::MatrixMarket;
    if (n == "csv") return MatrixFormat::CSV;
    if (n == "json") return MatrixFormat::JSON;
    fail(ErrorCode::InvalidArgument, "unknown matrix format " + name);
}

MatrixFormat format_from_path(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) fail(ErrorCode::InvalidArgument, "cannot infer format of " + path);
    return format_from_name(path.substr(dot + 1));
}

Matrix read_matrix(const std::string& path, MatrixFormat format, std::optional<TimeDomain>* declared) {
    switch (format) {
        case MatrixFormat::MatrixMarket: return read_matrix_market(path);
        case MatrixFormat::CSV: return read_csv(path);
        case MatrixFormat::JSON: return read_json(path, declared);
    }
    fail(ErrorCode::InvalidArgument, "unknown format");
}

MatrixProblem load_matrix(const std::string& path, MatrixFormat format, std::optional<TimeDomain> td) {
    std::optional<TimeDomain> declared;
    const Matrix A = read_matrix(path, format, &declared);
    if (td) declared = td;
    if (!declared) fail(ErrorCode::InvalidArgument, "time domain not given for " + path);
    return make_problem(A, *declared);
}

void save_matrix(const std::string& path, const Matrix& A, MatrixFormat format, TimeDomain td) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path);
    const bool cplx = !(A.imag().array() == 0.0).all();
    switch (format) {
        case MatrixFormat::MatrixMarket:
            out << "%%MatrixMarket matrix array " << (cplx ? "complex" : "real") << " general\n";
            out << A.rows() << " " << A.cols() << "\n";
            for (Index j = 0; j < A.cols(); ++j)
                for (Index i = 0; i < A.rows(); ++i) {
                    out << format_double(A(i, j).real());
                    if (cplx) out << " " << format_double(A(i, j).imag());
                    out << "\n";
                }
            break;
        case MatrixFormat::CSV:
            for (Index i = 0; i < A.rows(); ++i) {
                for (Index j = 0; j < A.cols(); ++j) out << (j ? "," : "") << format_complex(A(i, j));
                out << "\n";
            }
            break;
        case MatrixFormat::JSON: {
            nlohmann::json doc;
            doc["n"] = A.rows();
            nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
            for (Index i = 0; i < A.rows(); ++i) {
                nlohmann::json rr = nlohmann::json::array(), ir = nlohmann::json::array();
                for (Index j = 0; j < A.cols(); ++j) {
                    rr.push_back(A(i, j).real());
                    ir.push_back(A(i, j).imag());
                }
                re.push_back(rr);
                im.push_back(ir);
            }
            doc["real"] = re;
            doc["imag"] = im;
            doc["time_domain"] = time_domain_name(td);
            out << doc.dump() << "\n";
            break;
        }
    }
    if (!out) fail(ErrorCode::InvalidArgument, "write failed for " + path);
}

TestMatrixKind test_matrix_kind_from_name(const std::string& name) {
    const std::string n = lower(name);
    if (n == "jordanshifted" || n == "jordan") return TestMatrixKind::JordanShifted;
    if (n == "randomstableshifted" || n == "random") return TestMatrixKind::RandomStableShifted;
    if (n == "companionshifted" || n == "companion") return TestMatrixKind::CompanionShifted;
    if (n == "convdiffshifted" || n == "convdiff") return TestMatrixKind::ConvDiffShifted;
    fail(ErrorCode::UnknownKind, name);
}

MatrixProblem gen_test_matrix(TestMatrixKind kind, Index n, std::uint64_t seed, const GenOptions& opts) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
    const TimeDomain td = opts.time_domain;
    switch (kind) {
        case TestMatrixKind::JordanShifted: {
            const double center = td == TimeDomain::Continuous ? -opts.epsilon : 1.0 - opts.epsilon;
            Matrix A = Matrix::Identity(n, n) * center;
            for (Index i = 0; i + 1 < n; ++i) A(i, i + 1) = 1.0;
            return make_problem(A, td);
        }
        case TestMatrixKind::RandomStableShifted: {
            std::mt19937_64 rng(seed);
            std::normal_distribution<double> nd;
            Matrix B(n, n);
            for (Index j = 0; j < n; ++j)
                for (Index i = 0; i < n; ++i) B(i, j) = nd(rng) / std::sqrt(static_cast<double>(n));
            const Vector ev = eig_dense(B).alpha;
            if (td == TimeDomain::Continuous) {
                double alpha = -kInf;
                for (Index i = 0; i < n; ++i) alpha = std::max(alpha, ev(i).real());
                const double kappa = alpha + 0.1;
                return make_problem(B - kappa * Matrix::Identity(n, n), td);
            }
            double rho = 0.0;
            for (Index i = 0; i < n; ++i) rho = std::max(rho, std::abs(ev(i)));
            return make_problem(B * (0.9 / rho), td);
        }
        case TestMatrixKind::CompanionShifted:
        case TestMatrixKind::ConvDiffShifted: {
            Matrix B;
            if (opts.base) B = *opts.base;
            else if (opts.base_path) B = read_matrix(*opts.base_path, format_from_path(*opts.base_path));
            else fail(ErrorCode::MissingBaseMatrix, "a base matrix file is required for this kind");
            if (B.rows() != B.cols()) fail(ErrorCode::NotSquare, "base matrix");
            const Index m = B.rows();
            if (kind == TestMatrixKind::CompanionShifted) {
                const Vector ev = eig_dense(B).alpha;
                double alpha = -kInf;
                for (Index i = 0; i < m; ++i) alpha = std::max(alpha, ev(i).real());
                return make_problem(B - 1.001 * alpha * Matrix::Identity(m, m), TimeDomain::Continuous);
            }
            return make_problem(B / 13.0 + 1.1 * Matrix::Identity(m, m), TimeDomain::Discrete);
        }
    }
    fail(ErrorCode::UnknownKind, "unknown test matrix kind");
}

}  // namespace kreiss
