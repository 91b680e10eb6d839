#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>

namespace kreiss {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

enum class TimeDomain { Continuous, Discrete };

const char* time_domain_name(TimeDomain td);

}  // namespace kreiss
