#pragma once

#include <stdexcept>
#include <string>

namespace fourpt {

enum class ErrorCode {
    NonConvex,
    DegenerateSampling,
    DegenerateProfile,
    NonUniformGrid,
    AllBelowTolerance,
    AtCusp,
    NotContained,
    BadParametrization,
    NotInHemisphere,
    NotBisecting,
    FrenetBreakdown,
    NotHorocyclicallyConvex,
    CothDomain,
    InvalidSpec,
    ParseError,
    SchemaError,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// C API can map it to a status value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace fourpt
