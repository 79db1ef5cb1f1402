#pragma once

#include <stdexcept>
#include <string>

namespace binwaring {

/// Base class for every error the library raises. `kind()` is a stable
/// identifier used in JSON output and CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define BINWARING_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& what) : Error(#Name, what) {}         \
  };

BINWARING_DEFINE_ERROR(SyntaxError)
BINWARING_DEFINE_ERROR(NotHomogeneous)
BINWARING_DEFINE_ERROR(DegreeMismatch)
BINWARING_DEFINE_ERROR(SingularSubstitution)
BINWARING_DEFINE_ERROR(ZeroPolynomial)
BINWARING_DEFINE_ERROR(ZeroForm)
BINWARING_DEFINE_ERROR(OddDegree)
BINWARING_DEFINE_ERROR(RankOutOfRange)
BINWARING_DEFINE_ERROR(DimensionMismatch)
BINWARING_DEFINE_ERROR(PrecisionExhausted)
BINWARING_DEFINE_ERROR(NotHonest)
BINWARING_DEFINE_ERROR(NotIncomparable)
BINWARING_DEFINE_ERROR(DegenerateRepresentation)
BINWARING_DEFINE_ERROR(NotRational)
BINWARING_DEFINE_ERROR(InvalidArgument)

#undef BINWARING_DEFINE_ERROR

}  // namespace binwaring
