#ifndef QPP_ERRORS_HPP_
#define QPP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qpp {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad input" from "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QPP_DEFINE_ERROR(Name)       \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

// exact-core
QPP_DEFINE_ERROR(ParseError);
QPP_DEFINE_ERROR(DivisionByZero);
QPP_DEFINE_ERROR(OrderMismatch);
QPP_DEFINE_ERROR(NotInvertible);
QPP_DEFINE_ERROR(BadConstantTerm);
QPP_DEFINE_ERROR(NotRevertible);

// signatures
QPP_DEFINE_ERROR(InvalidSignature);
QPP_DEFINE_ERROR(DegenerateInput);
QPP_DEFINE_ERROR(QZeroBranch);
QPP_DEFINE_ERROR(TooLarge);

// freeprob / limits
QPP_DEFINE_ERROR(InvalidSequence);
QPP_DEFINE_ERROR(InsufficientOrder);
QPP_DEFINE_ERROR(OutOfDomain);
QPP_DEFINE_ERROR(UnknownPreset);

// densities
QPP_DEFINE_ERROR(BadParams);
QPP_DEFINE_ERROR(TooCloseToSupport);
QPP_DEFINE_ERROR(BranchAmbiguity);

#undef QPP_DEFINE_ERROR

class QuadratureFailure : public Error {
 public:
  QuadratureFailure(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace qpp

#endif  // QPP_ERRORS_HPP_
