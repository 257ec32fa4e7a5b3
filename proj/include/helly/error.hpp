#pragma once

#include <stdexcept>
#include <string>

namespace helly {

enum class Errc {
    InvalidVertex,
    NotAFace,
    OverlappingVertexSets,
    EmptyGround,
    DimensionOutOfRange,
    VoidComplex,
    BudgetExceeded,
    NotFreeFace,
    NotASubset,
    ToleranceOutOfRange,
    ParameterViolation,
    HypothesisViolated,
    NotDLeray,
    DimensionMismatch,
    InputTooSmall,
    SearchBudgetExceeded,
    BadParams,
    IoError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidVertex: return "InvalidVertex";
        case Errc::NotAFace: return "NotAFace";
        case Errc::OverlappingVertexSets: return "OverlappingVertexSets";
        case Errc::EmptyGround: return "EmptyGround";
        case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
        case Errc::VoidComplex: return "VoidComplex";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::NotFreeFace: return "NotFreeFace";
        case Errc::NotASubset: return "NotASubset";
        case Errc::ToleranceOutOfRange: return "ToleranceOutOfRange";
        case Errc::ParameterViolation: return "ParameterViolation";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::NotDLeray: return "NotDLeray";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::InputTooSmall: return "InputTooSmall";
        case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case Errc::BadParams: return "BadParams";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace helly
