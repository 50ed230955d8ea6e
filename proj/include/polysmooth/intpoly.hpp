#ifndef POLYSMOOTH_INTPOLY_HPP
#define POLYSMOOTH_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "polysmooth/errors.hpp"

namespace polysmooth {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial over Z, coefficients in ascending degree order.
/// The zero polynomial is the empty coefficient vector; its degree is the
/// sentinel kZeroDegree.
class IntPoly {
 public:
  static constexpr int kZeroDegree = -1;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int v);
  static IntPoly var();                      // t
  static IntPoly monomial(Int coeff, unsigned power);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }

  /// Coefficient of t^i; zero beyond the degree.
  const Int& coeff(std::size_t i) const;
  const Int& lead() const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& s) const;

  Int evaluate(const Int& x) const;
  Rat evaluate(const Rat& x) const;

  IntPoly derivative() const;
  IntPoly compose(const IntPoly& inner) const;

  /// coefficients reversed: t^d * p(1/t).
  IntPoly reversed() const;

  /// gcd of coefficients, positive. Throws ZeroPolynomial on zero input.
  Int content() const;
  IntPoly primitive() const;  // p / content(p)

  /// Multiply by t^k.
  IntPoly shift_up(unsigned k) const;

  /// Exact division; throws NotDivisible / DivisionByZero.
  IntPoly divide_exact(const IntPoly& q) const;
  /// Quotient and remainder over Q, both guaranteed integral or returns false.
  bool try_divide(const IntPoly& q, IntPoly& quot, IntPoly& rem) const;

  std::string str(const std::string& var = "t") const;

  /// Total order for canonical sorting: degree, then coefficients from the top.
  static bool lex_less(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();
  std::vector<Int> c_;
};

/// Element of Q[t] kept as a primitive-coprime fraction: num / den with
/// den >= 1 and gcd(content(num), den) = 1.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(IntPoly num, Int den);  // normalizes
  /* implicit */ RatPoly(const IntPoly& p) : num_(p), den_(1) {}

  static RatPoly zero() { return RatPoly(); }
  static RatPoly constant(const Rat& v);
  static RatPoly var() { return RatPoly(IntPoly::var()); }
  static RatPoly from_coeffs(const std::vector<Rat>& coeffs);

  const IntPoly& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int degree() const { return num_.degree(); }
  bool is_integral() const { return den_ == 1; }
  Rat coeff(std::size_t i) const { return Rat(num_.coeff(i)) / Rat(den_); }
  Rat lead_coeff() const;

  bool operator==(const RatPoly& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& s) const;

  Rat evaluate(const Rat& x) const;
  RatPoly compose(const RatPoly& inner) const;
  RatPoly derivative() const { return RatPoly(num_.derivative(), den_); }

  /// Exact division in Q[t]; throws NotDivisible / DivisionByZero.
  RatPoly divide_exact(const RatPoly& q) const;
  /// Euclidean division in Q[t].
  void divmod(const RatPoly& q, RatPoly& quot, RatPoly& rem) const;

  std::string str(const std::string& var = "t") const;

 private:
  IntPoly num_;
  Int den_{1};
};

/// Resultant w.r.t. t by the subresultant pseudo-remainder sequence.
/// Convention: res(p, q) = lc(p)^{deg q} * prod q(root_i(p)), so that
/// res(t^2+1, t-2) = 5 and res(q, p) = (-1)^{deg p deg q} res(p, q).
Int resultant(const IntPoly& p, const IntPoly& q);
Rat resultant(const RatPoly& p, const RatPoly& q);

/// Primitive positive-lead gcd over Z.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

/// Pseudo-remainder: lc(q)^{deg p - deg q + 1} p = Q q + R; returns R.
IntPoly pseudo_rem(const IntPoly& p, const IntPoly& q);

/// Exact Lagrange interpolation through (points[i], values[i]).
RatPoly interpolate(const std::vector<Int>& points, const std::vector<Rat>& values);

}  // namespace polysmooth

#endif
