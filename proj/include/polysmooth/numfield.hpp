#ifndef POLYSMOOTH_NUMFIELD_HPP
#define POLYSMOOTH_NUMFIELD_HPP

#include <memory>
#include <optional>
#include <vector>

#include "polysmooth/intpoly.hpp"

namespace polysmooth {

class FieldElement;

/// K = Q[t]/(f) for a primitive irreducible f of degree d >= 2, not
/// necessarily monic. Elements live in the power basis 1, alpha, ...,
/// alpha^{d-1} with rational coordinates; alpha^d reduces through
/// a_d alpha^d = -(a_{d-1} alpha^{d-1} + ... + a_0).
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Certifies irreducibility; throws NotIrreducible / DegreeTooSmall.
  static std::shared_ptr<const NumberField> make(const IntPoly& defining);

  const IntPoly& defining() const { return f_; }
  int degree() const { return f_.degree(); }
  const Int& lead() const { return f_.lead(); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;  // alpha
  FieldElement from_rational(const Rat& v) const;
  FieldElement from_coords(std::vector<Rat> coords) const;
  /// p(alpha) for p in Q[t] of any degree.
  FieldElement element(const RatPoly& p) const;

 private:
  explicit NumberField(IntPoly f) : f_(std::move(f)) {}
  IntPoly f_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<Rat> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  /// The constant coordinate; only meaningful when is_rational().
  Rat rational_value() const { return c_[0]; }
  /// Coordinates as a polynomial in the generator.
  RatPoly as_poly() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rat& s) const;
  FieldElement pow(unsigned long e) const;
  FieldElement inverse() const;  // throws DivisionByZero
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

  std::string str() const;

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  std::vector<Rat> c_;
};

/// Norm_{K/Q}(x) = resultant(f, x) / lc(f)^{deg x}; norm(0) = 0.
Rat norm(const FieldElement& x);

/// Primitive integer minimal polynomial of x over Q; degree divides d.
IntPoly minimal_polynomial(const FieldElement& x);

/// g in Q[y] with deg g <= d-1 and g(generator) = target; throws
/// NotAGenerator when the powers of generator are dependent before degree d.
RatPoly express_in_powers(const FieldElement& target, const FieldElement& generator);

enum class SquareStatus { Yes, No, Unknown };

struct SquareResult {
  SquareStatus status;
  std::optional<FieldElement> root;  // present iff status == Yes
};

struct IsSquareOptions {
  unsigned modular_primes = 40;   // quadratic-residue filter passes required
  unsigned max_resultant_degree = 64;  // exact-stage budget
};

/// Decides whether x is a square in K. Stage 1 is a quadratic-residue
/// filter at primes of good reduction; stage 2 factors
/// Res_y(f(y), X^2 - x(y)) over Z and recovers the root via gcd in K[t].
/// Returns Unknown only when the exact stage exceeds its budget.
SquareResult is_square(const FieldElement& x, const IsSquareOptions& opts = {});

}  // namespace polysmooth

#endif
