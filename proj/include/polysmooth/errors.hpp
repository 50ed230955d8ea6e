#ifndef POLYSMOOTH_ERRORS_HPP
#define POLYSMOOTH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polysmooth {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& what = "zero polynomial not allowed here") : Error(what) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};
struct NotDivisible : Error {
  explicit NotDivisible(const std::string& what = "polynomial division leaves a nonzero remainder") : Error(what) {}
};
struct NotCoprime : Error {
  explicit NotCoprime(const std::string& what) : Error(what) {}
};
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& what = "elements belong to different number fields") : Error(what) {}
};
struct NotAGenerator : Error {
  explicit NotAGenerator(const std::string& what = "element does not generate the field") : Error(what) {}
};
struct ZeroElement : Error {
  explicit ZeroElement(const std::string& what = "zero field element not allowed here") : Error(what) {}
};
struct BadPrime : Error {
  explicit BadPrime(const std::string& what) : Error(what) {}
};
struct NotIrreducible : Error {
  explicit NotIrreducible(const std::string& what = "polynomial is not irreducible")
      : Error(what) {}
};
struct NotMonic : Error {
  explicit NotMonic(const std::string& what = "polynomial is not monic") : Error(what) {}
};
struct ZeroConstantTerm : Error {
  explicit ZeroConstantTerm(const std::string& what = "constant term vanishes") : Error(what) {}
};
struct IdentityFails : Error {
  explicit IdentityFails(const std::string& what) : Error(what) {}
};
struct BadParameters : Error {
  explicit BadParameters(const std::string& what) : Error(what) {}
};
struct NotCubic : Error {
  explicit NotCubic(const std::string& what = "polynomial is not a cubic") : Error(what) {}
};
struct DegreeTooSmall : Error {
  explicit DegreeTooSmall(const std::string& what) : Error(what) {}
};
struct ZeroLead : Error {
  explicit ZeroLead(const std::string& what = "a binomial lead coefficient is zero") : Error(what) {}
};
struct EmptyPartitionSet : Error {
  explicit EmptyPartitionSet(const std::string& what = "prime partition has an empty set; increase y") : Error(what) {}
};
struct SeedSearchExhausted : Error {
  explicit SeedSearchExhausted(const std::string& what) : Error(what) {}
};
struct FactorBudgetExceeded : Error {
  explicit FactorBudgetExceeded(const std::string& what) : Error(what) {}
};
struct RecombinationBudget : Error {
  explicit RecombinationBudget(const std::string& what = "factor recombination exceeded the subset budget") : Error(what) {}
};
struct CertificateTooCoarse : Error {
  explicit CertificateTooCoarse(const std::string& what) : Error(what) {}
};
struct SyntaxError : Error {
  std::size_t offset;
  SyntaxError(const std::string& what, std::size_t at)
      : Error(what + " at offset " + std::to_string(at)), offset(at) {}
};
struct NonIntegerExponent : Error {
  explicit NonIntegerExponent(std::size_t at)
      : Error("exponent must be a nonnegative integer (offset " + std::to_string(at) + ")") {}
};

}  // namespace polysmooth

#endif
