/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by all hopfkit modules.
 *
 * Every failure mode named in the public interfaces has its own type so
 * callers (and tests) can dispatch on it. All types derive from
 * hopfkit::Error, which derives from std::runtime_error.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HOPFKIT_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  };

// scalars
HOPFKIT_DEFINE_ERROR(DivisionByZero)
HOPFKIT_DEFINE_ERROR(ParseError)
HOPFKIT_DEFINE_ERROR(NotAUnit)
HOPFKIT_DEFINE_ERROR(AmbiguousLog)
HOPFKIT_DEFINE_ERROR(ExponentOverflow)
HOPFKIT_DEFINE_ERROR(SpecializationFailure)

// lattice
HOPFKIT_DEFINE_ERROR(RankMismatch)
HOPFKIT_DEFINE_ERROR(NoSolution)
HOPFKIT_DEFINE_ERROR(NotRegular)

// datum
HOPFKIT_DEFINE_ERROR(InvalidDatum)
HOPFKIT_DEFINE_ERROR(NotGeneric)
HOPFKIT_DEFINE_ERROR(NotCartan)
HOPFKIT_DEFINE_ERROR(NotSymmetrizable)
HOPFKIT_DEFINE_ERROR(IllegalLink)
HOPFKIT_DEFINE_ERROR(AntisymmetryViolation)
HOPFKIT_DEFINE_ERROR(MultipleLinks)
HOPFKIT_DEFINE_ERROR(NotUnlinked)
HOPFKIT_DEFINE_ERROR(NotPerfect)
HOPFKIT_DEFINE_ERROR(ConditionFails)

// engine
HOPFKIT_DEFINE_ERROR(DegreeCapExceeded)
HOPFKIT_DEFINE_ERROR(WrongSide)
HOPFKIT_DEFINE_ERROR(SingularGram)

// repr
HOPFKIT_DEFINE_ERROR(NotDominant)
HOPFKIT_DEFINE_ERROR(HandleMismatch)
HOPFKIT_DEFINE_ERROR(NotInCoset)
HOPFKIT_DEFINE_ERROR(NliFails)
HOPFKIT_DEFINE_ERROR(CosetMismatch)
HOPFKIT_DEFINE_ERROR(AuditFailure)
HOPFKIT_DEFINE_ERROR(ConnectedDiagram)

#undef HOPFKIT_DEFINE_ERROR

}  // namespace hopfkit
