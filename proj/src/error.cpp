#include "dgcat/error.hpp"

#include "dgcat/term.hpp"

namespace dgcat {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DSquaredNonzero: return "DSquaredNonzero";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::ChainMapViolation: return "ChainMapViolation";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::NotSemifreeExtension: return "NotSemifreeExtension";
    case ErrorCode::ConeNotCommuting: return "ConeNotCommuting";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotDegreeZero: return "NotDegreeZero";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotInRing: return "NotInRing";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotAStabilizationPair: return "NotAStabilizationPair";
    case ErrorCode::GeneratorStillUsed: return "GeneratorStillUsed";
    case ErrorCode::NameCollision: return "NameCollision";
    case ErrorCode::NotLocalized: return "NotLocalized";
    case ErrorCode::BadLocalizationData: return "BadLocalizationData";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SquareNotCommuting: return "SquareNotCommuting";
    case ErrorCode::PrerequisiteSquareFails: return "PrerequisiteSquareFails";
    case ErrorCode::NotAHomotopyEquivalenceDatum: return "NotAHomotopyEquivalenceDatum";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ResolutionError: return "ResolutionError";
    }
    return "Unknown";
}

DgError::DgError(ErrorCode code, const std::string& message, std::string subject)
    : std::runtime_error(message), code_(code), subject_(std::move(subject))
{
}

DgError& DgError::with_residual(const Term& residual)
{
    residual_ = std::make_shared<const Term>(residual);
    return *this;
}

DgError& DgError::at(SourcePosition pos)
{
    position_ = pos;
    return *this;
}

}  // namespace dgcat
