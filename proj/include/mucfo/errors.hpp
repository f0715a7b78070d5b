#pragma once

#include <stdexcept>
#include <string>

namespace mucfo {

/// Error conditions surfaced by the library. Validation errors describe bad
/// inputs; numerical errors describe conditions detected during computation.
enum class Errc {
    // validation / input
    NonDivisibleTraining,   ///< N is not a multiple of K*L
    TooFewBlocks,           ///< B = N/(K*L) < 2
    CfoOutOfRange,          ///< |omega_k * K * L| >= pi for some user
    NonPositivePower,       ///< p_u <= 0, or sigma2 < 0
    InvalidDimension,       ///< M, K, L or N < 1, or size mismatch in a spec
    IndexOutOfRange,        ///< block/user/tap/time index outside its range
    DimensionMismatch,      ///< operands with incompatible shapes
    ZeroPdp,                ///< a user's tap-power sum is zero (or negative entry)
    ParseError,             ///< malformed spec file
    // numerical / runtime
    UndefinedEstimate,      ///< correlation statistic is zero; arg() undefined
    RankDeficientPilot,     ///< pilot matrix Q_b does not have full column rank
    SingularInformation,    ///< information matrix not positive definite
    BracketFailure,         ///< target MSE not achievable inside the SNR bracket
    MonotonicityViolation,  ///< common-random-number MSE not monotone in SNR
    IoError,                ///< file could not be written/read
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonDivisibleTraining: return "NonDivisibleTraining";
        case Errc::TooFewBlocks: return "TooFewBlocks";
        case Errc::CfoOutOfRange: return "CfoOutOfRange";
        case Errc::NonPositivePower: return "NonPositivePower";
        case Errc::InvalidDimension: return "InvalidDimension";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::ZeroPdp: return "ZeroPdp";
        case Errc::ParseError: return "ParseError";
        case Errc::UndefinedEstimate: return "UndefinedEstimate";
        case Errc::RankDeficientPilot: return "RankDeficientPilot";
        case Errc::SingularInformation: return "SingularInformation";
        case Errc::BracketFailure: return "BracketFailure";
        case Errc::MonotonicityViolation: return "MonotonicityViolation";
        case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

/// True for conditions that indicate a rejected input rather than a failure
/// encountered mid-computation. The CLI maps these to exit code 1, all
/// others to exit code 2.
inline bool is_validation_error(Errc c) {
    switch (c) {
        case Errc::NonDivisibleTraining:
        case Errc::TooFewBlocks:
        case Errc::CfoOutOfRange:
        case Errc::NonPositivePower:
        case Errc::InvalidDimension:
        case Errc::IndexOutOfRange:
        case Errc::DimensionMismatch:
        case Errc::ZeroPdp:
        case Errc::ParseError:
            return true;
        default:
            return false;
    }
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace mucfo
