#pragma once

#include <stdexcept>
#include <string>

namespace minperiod {

// Single exception type for the whole library; the code tells callers
// (and tests) which contract was violated.
class Error : public std::runtime_error {
public:
    enum class Code {
        BadDimension,
        NotSymmetric,
        NotPositiveDefinite,
        NumericalBreakdown,
        DimensionTooLarge,
        BoxTooSmall,
        GenusTooSmall,
        BadGonality,
        GenusMismatch,
        BadMultiplicity,
        DegenerateLinear,
        ZeroInput,
        StepTooSmall,
        InfeasibleProfile,
        BadInput,
    };

    Error(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

inline const char* to_string(Error::Code c) {
    switch (c) {
        case Error::Code::BadDimension: return "BadDimension";
        case Error::Code::NotSymmetric: return "NotSymmetric";
        case Error::Code::NotPositiveDefinite: return "NotPositiveDefinite";
        case Error::Code::NumericalBreakdown: return "NumericalBreakdown";
        case Error::Code::DimensionTooLarge: return "DimensionTooLarge";
        case Error::Code::BoxTooSmall: return "BoxTooSmall";
        case Error::Code::GenusTooSmall: return "GenusTooSmall";
        case Error::Code::BadGonality: return "BadGonality";
        case Error::Code::GenusMismatch: return "GenusMismatch";
        case Error::Code::BadMultiplicity: return "BadMultiplicity";
        case Error::Code::DegenerateLinear: return "DegenerateLinear";
        case Error::Code::ZeroInput: return "ZeroInput";
        case Error::Code::StepTooSmall: return "StepTooSmall";
        case Error::Code::InfeasibleProfile: return "InfeasibleProfile";
        case Error::Code::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace minperiod
