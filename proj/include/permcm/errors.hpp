#pragma once

#include <stdexcept>
#include <string>

namespace permcm {

// Every library error derives from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PERMCM_ERROR(Name)              \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

PERMCM_ERROR(CapExceeded);
PERMCM_ERROR(NotASubgroup);
PERMCM_ERROR(DegreeMismatch);
PERMCM_ERROR(LengthMismatch);
PERMCM_ERROR(IndexOutOfRange);
PERMCM_ERROR(NotSymmetric);
PERMCM_ERROR(NotInvariant);
PERMCM_ERROR(DomainMismatch);
PERMCM_ERROR(NotAnOrbitMonomial);
PERMCM_ERROR(ForeignFace);
PERMCM_ERROR(NotAFace);
PERMCM_ERROR(BudgetExceeded);
PERMCM_ERROR(InvalidShelling);
PERMCM_ERROR(SizeMismatch);
PERMCM_ERROR(SystemUnsolvable);
PERMCM_ERROR(NotPrime);
PERMCM_ERROR(PointOutOfRange);
PERMCM_ERROR(NonIntegerCoefficientInZMode);
PERMCM_ERROR(NotApplicable);
PERMCM_ERROR(Unclassifiable);

#undef PERMCM_ERROR

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace permcm
