#pragma once

#include <stdexcept>
#include <string>

namespace kreiss {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    NotSquare,
    Unstable,
    ZeroEigenvalue,
    UnknownKind,
    MissingBaseMatrix,
    ConvergenceFailure,
    SingularPencil,
    IllPosed,
    NearSingularOperator,
    ArnoldiBreakdown,
    MaxIterations,
    NonsimpleSigma,
    ZeroSigma,
    DegenerateGap,
    InfeasibleStart,
    SingularD,
    ZeroShift,
    MaxShifts,
    CertificateFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace kreiss
