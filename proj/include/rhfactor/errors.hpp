#pragma once

#include <stdexcept>
#include <string>

namespace rhf {

// Every failure mode named by the library contracts. Tests match on the code,
// messages are for humans.
enum class Err {
    ZeroInSet,
    ZeroInSupport,
    SymmetryViolation,
    DistanceViolation,
    InternalError,
    FootnoteRequired,
    DomainError,
    EmptyIntersection,
    NotPiecewise,
    PieceCountOverflow,
    OnSingularSupport,
    OnUnitCircle,
    Breakpoint,
    NonCircleFactor,
    UnboundedArgument,
    AnchorViolation,
    PathCrossesBoundary,
    NotHolomorphicAtAnchor,
    NotLocallyConstant,
    BranchCut,
    NonIntegerPlateau,
    NonConstantPlateau,
    NotOdd,
    NotEven,
    NonConstantRatio,
    NegativeConstant,
    OscillationTooLarge,
    CoverIncomplete,
    EmptyGrid,
    GridOnSingularSupport,
    ParseError,
    ValidationError,
    ConvergenceFailure,
    Overflow,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::ZeroInSet: return "ZeroInSet";
        case Err::ZeroInSupport: return "ZeroInSupport";
        case Err::SymmetryViolation: return "SymmetryViolation";
        case Err::DistanceViolation: return "DistanceViolation";
        case Err::InternalError: return "InternalError";
        case Err::FootnoteRequired: return "FootnoteRequired";
        case Err::DomainError: return "DomainError";
        case Err::EmptyIntersection: return "EmptyIntersection";
        case Err::NotPiecewise: return "NotPiecewise";
        case Err::PieceCountOverflow: return "PieceCountOverflow";
        case Err::OnSingularSupport: return "OnSingularSupport";
        case Err::OnUnitCircle: return "OnUnitCircle";
        case Err::Breakpoint: return "Breakpoint";
        case Err::NonCircleFactor: return "NonCircleFactor";
        case Err::UnboundedArgument: return "UnboundedArgument";
        case Err::AnchorViolation: return "AnchorViolation";
        case Err::PathCrossesBoundary: return "PathCrossesBoundary";
        case Err::NotHolomorphicAtAnchor: return "NotHolomorphicAtAnchor";
        case Err::NotLocallyConstant: return "NotLocallyConstant";
        case Err::BranchCut: return "BranchCut";
        case Err::NonIntegerPlateau: return "NonIntegerPlateau";
        case Err::NonConstantPlateau: return "NonConstantPlateau";
        case Err::NotOdd: return "NotOdd";
        case Err::NotEven: return "NotEven";
        case Err::NonConstantRatio: return "NonConstantRatio";
        case Err::NegativeConstant: return "NegativeConstant";
        case Err::OscillationTooLarge: return "OscillationTooLarge";
        case Err::CoverIncomplete: return "CoverIncomplete";
        case Err::EmptyGrid: return "EmptyGrid";
        case Err::GridOnSingularSupport: return "GridOnSingularSupport";
        case Err::ParseError: return "ParseError";
        case Err::ValidationError: return "ValidationError";
        case Err::ConvergenceFailure: return "ConvergenceFailure";
        case Err::Overflow: return "Overflow";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace rhf
