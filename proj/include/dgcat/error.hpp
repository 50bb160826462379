#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dgcat {

class Term;

enum class ErrorCode {
    DuplicateName,
    DanglingEndpoint,
    OrderViolation,
    DegreeMismatch,
    DSquaredNonzero,
    EndpointMismatch,
    UnknownGenerator,
    UnknownObject,
    ChainMapViolation,
    SourceTargetMismatch,
    NotSemifreeExtension,
    ConeNotCommuting,
    NotClosed,
    NotDegreeZero,
    NotAUnit,
    NotInRing,
    RingMismatch,
    NotAStabilizationPair,
    GeneratorStillUsed,
    NameCollision,
    NotLocalized,
    BadLocalizationData,
    ShapeMismatch,
    SquareNotCommuting,
    PrerequisiteSquareFails,
    NotAHomotopyEquivalenceDatum,
    SyntaxError,
    ResolutionError,
};

std::string_view to_string(ErrorCode code);

struct SourcePosition {
    int line = 0;
    int column = 0;
};

class DgError : public std::runtime_error {
public:
    DgError(ErrorCode code, const std::string& message, std::string subject = {});

    ErrorCode code() const { return code_; }
    // Name of the offending generator, object or entity, if any.
    const std::string& subject() const { return subject_; }
    const Term* residual() const { return residual_.get(); }
    const std::optional<SourcePosition>& position() const { return position_; }

    DgError& with_residual(const Term& residual);
    DgError& at(SourcePosition pos);

private:
    ErrorCode code_;
    std::string subject_;
    std::shared_ptr<const Term> residual_;
    std::optional<SourcePosition> position_;
};

}  // namespace dgcat
