#pragma once

#include <stdexcept>
#include <string>

namespace pcascade {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PCASCADE_ERROR(Name)                  \
    class Name : public Error {               \
    public:                                   \
        explicit Name(const std::string& msg) \
            : Error(#Name ": " + msg) {}      \
    }

PCASCADE_ERROR(InvalidRank);
PCASCADE_ERROR(IncompleteMultiplicity);
PCASCADE_ERROR(InvalidMultiplicity);
PCASCADE_ERROR(NotARoot);
PCASCADE_ERROR(LayerMismatch);
PCASCADE_ERROR(UnsupportedForm);
PCASCADE_ERROR(CartanDirection);
PCASCADE_ERROR(OddDimension);
PCASCADE_ERROR(NotAntisymmetric);
PCASCADE_ERROR(ArityError);
PCASCADE_ERROR(StructureViolation);
PCASCADE_ERROR(IncompatibleFamily);
PCASCADE_ERROR(SingularParameter);
PCASCADE_ERROR(QuadratureFailure);
PCASCADE_ERROR(UnsupportedPoint);
PCASCADE_ERROR(UsageError);

#undef PCASCADE_ERROR

/// A direct-limit family breaks an inclusion at `level` (the larger rank of the failing pair).
class FamilyViolation : public Error {
public:
    FamilyViolation(int level, std::string kind, std::string witness)
        : Error("FamilyViolation: " + kind + " inclusion fails at rank " + std::to_string(level) + " (" + witness + ")"),
          level_(level),
          kind_(std::move(kind)),
          witness_(std::move(witness)) {}

    int level() const { return level_; }
    const std::string& kind() const { return kind_; }
    const std::string& witness() const { return witness_; }

private:
    int level_;
    std::string kind_;
    std::string witness_;
};

}  // namespace pcascade
