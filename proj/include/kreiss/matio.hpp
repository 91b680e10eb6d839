#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kreiss/types.hpp"

namespace kreiss {

struct MatrixProblem {
    Matrix A;
    TimeDomain time_domain = TimeDomain::Continuous;
    Index n = 0;
    double spectral_abscissa = 0.0;
    double spectral_radius = 0.0;
    double norm2 = 0.0;       // largest singular value of A
    Vector eigenvalues;
    Complex rightmost;        // eigenvalue attaining the spectral abscissa
    Complex largest;          // eigenvalue attaining the spectral radius
};

enum class MatrixFormat { MatrixMarket, CSV, JSON };

// Validates stability for the declared time domain and caches the spectrum summary.
MatrixProblem make_problem(const Matrix& A, TimeDomain td);

MatrixFormat format_from_name(const std::string& name);
MatrixFormat format_from_path(const std::string& path);

// JSON files carry their own time domain; `td` overrides it when given. Text formats require `td`.
MatrixProblem load_matrix(const std::string& path, MatrixFormat format, std::optional<TimeDomain> td = std::nullopt);
Matrix read_matrix(const std::string& path, MatrixFormat format, std::optional<TimeDomain>* declared = nullptr);
void save_matrix(const std::string& path, const Matrix& A, MatrixFormat format,
                 TimeDomain td = TimeDomain::Continuous);

enum class TestMatrixKind { JordanShifted, RandomStableShifted, CompanionShifted, ConvDiffShifted };

TestMatrixKind test_matrix_kind_from_name(const std::string& name);

struct GenOptions {
    TimeDomain time_domain = TimeDomain::Continuous;
    double epsilon = 0.1;                 // Jordan eigenvalue offset
    std::optional<Matrix> base;           // base matrix for the shifted constructions
    std::optional<std::string> base_path; // or a file holding it
};

MatrixProblem gen_test_matrix(TestMatrixKind kind, Index n, std::uint64_t seed, const GenOptions& opts = {});

}  // namespace kreiss
