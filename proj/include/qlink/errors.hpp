#pragma once

#include <stdexcept>
#include <string>

namespace qlink {

// All domain failures derive from Error and carry a stable short name so the
// command line tool can report the originating condition uniformly.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define QLINK_DEFINE_ERROR(NAME)                                          \
    class NAME : public Error {                                           \
    public:                                                                \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}     \
    }

QLINK_DEFINE_ERROR(DivisionByZero);
QLINK_DEFINE_ERROR(NonHalfIntegerExponent);
QLINK_DEFINE_ERROR(PoleAtPoint);
QLINK_DEFINE_ERROR(LimitDiverges);
QLINK_DEFINE_ERROR(InvalidRank);
QLINK_DEFINE_ERROR(KindMismatch);
QLINK_DEFINE_ERROR(NonRepresentableBracketArgument);
QLINK_DEFINE_ERROR(ZeroDenominatorBracket);
QLINK_DEFINE_ERROR(NonIntegralDimension);
QLINK_DEFINE_ERROR(NotAllowable);
QLINK_DEFINE_ERROR(SchemaError);
QLINK_DEFINE_ERROR(InvariantViolation);
QLINK_DEFINE_ERROR(ParseError);
QLINK_DEFINE_ERROR(IndexNestingUnresolved);

#undef QLINK_DEFINE_ERROR

}  // namespace qlink
