#include "polysmooth/numfield.hpp"

#include <algorithm>
#include <sstream>

#include "polysmooth/factorz.hpp"
#include "polysmooth/numutil.hpp"

namespace polysmooth {

std::shared_ptr<const NumberField> NumberField::make(const IntPoly& defining) {
  if (defining.is_zero()) throw ZeroPolynomial("defining polynomial is zero");
  IntPoly f = defining.primitive();
  if (f.lead() < 0) f = -f;
  if (f.degree() < 2) throw DegreeTooSmall("number field needs degree >= 2");
  if (!is_irreducible(f)) throw NotIrreducible("defining polynomial is reducible: " + f.str());
  return std::shared_ptr<const NumberField>(new NumberField(std::move(f)));
}

FieldElement NumberField::zero() const { return from_rational(Rat(0)); }
FieldElement NumberField::one() const { return from_rational(Rat(1)); }

FieldElement NumberField::generator() const {
  std::vector<Rat> c(degree(), Rat(0));
  c[1] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_rational(const Rat& v) const {
  std::vector<Rat> c(degree(), Rat(0));
  c[0] = v;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_coords(std::vector<Rat> coords) const {
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::element(const RatPoly& p) const {
  RatPoly q, r;
  p.divmod(RatPoly(f_), q, r);
  std::vector<Rat> c(degree(), Rat(0));
  for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != field_->degree())
    throw BadParameters("coordinate vector length must equal the field degree");
  for (auto& v : c_) v.canonicalize();
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

RatPoly FieldElement::as_poly() const { return RatPoly::from_coeffs(c_); }

bool FieldElement::operator==(const FieldElement& o) const {
  return field_->defining() == o.field_->defining() && c_ == o.c_;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_->defining() != o.field_->defining())
    throw FieldMismatch("elements of different number fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  std::vector<Rat> c(c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  std::vector<Rat> c(c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v = -v;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return field_->element(as_poly() * o.as_poly());
}

FieldElement FieldElement::operator*(const Rat& s) const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v *= s;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement r = field_->one();
  FieldElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  // extended Euclid in Q[t]: u * x + v * f = gcd = const
  RatPoly a(field_->defining()), b = as_poly();
  RatPoly u0 = RatPoly::zero(), u1 = RatPoly::constant(Rat(1));
  while (!b.is_zero()) {
    RatPoly q, r;
    a.divmod(b, q, r);
    RatPoly u2 = u0 - q * u1;
    a = b;
    b = r;
    u0 = u1;
    u1 = u2;
  }
  // a is a nonzero constant gcd; u0 * x = a (mod f)
  Rat g = a.coeff(0);
  return field_->element(u0 * (Rat(1) / g));
}

std::string FieldElement::str() const {
  std::ostringstream os;
  os << as_poly().str("a");
  return os.str();
}

Rat norm(const FieldElement& x) {
  if (x.is_zero()) return Rat(0);
  const IntPoly& f = x.field()->defining();
  RatPoly xp = x.as_poly();
  Rat r = resultant(RatPoly(f), xp);
  Rat lead(f.lead());
  for (int i = 0; i < xp.degree(); ++i) r /= lead;
  return r;
}

IntPoly minimal_polynomial(const FieldElement& x) {
  const int d = x.field()->degree();
  // rows[j] = coordinates of x^j; stop at the first linear dependency
  std::vector<std::vector<Rat>> rows;       // reduced echelon rows
  std::vector<std::vector<Rat>> expr;       // expression of each row in x^0..x^j
  FieldElement p = x.field()->one();
  for (int j = 0; j <= d; ++j) {
    std::vector<Rat> v = p.coords();
    std::vector<Rat> e(static_cast<std::size_t>(j) + 1, Rat(0));
    e[j] = 1;
    // eliminate against existing rows in ascending pivot order
    std::vector<std::size_t> order(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) order[r] = r;
    auto pivot_of = [&](std::size_t r) {
      std::size_t piv = 0;
      while (rows[r][piv] == 0) ++piv;
      return piv;
    };
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivot_of(a) < pivot_of(b); });
    for (std::size_t r : order) {
      std::size_t piv = pivot_of(r);
      Rat factor = v[piv] / rows[r][piv];
      if (factor == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= factor * rows[r][i];
      for (std::size_t i = 0; i < expr[r].size(); ++i) e[i] -= factor * expr[r][i];
    }
    bool zero = std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
    if (zero) {
      // e gives the coefficients of the monic minimal polynomial
      RatPoly m = RatPoly::from_coeffs(e);
      IntPoly prim = m.num().primitive();
      if (prim.lead() < 0) prim = -prim;
      return prim;
    }
    rows.push_back(std::move(v));
    expr.push_back(std::move(e));
    p = p * x;
  }
  throw Error("minimal polynomial search failed");  // unreachable: d+1 powers are dependent
}

RatPoly express_in_powers(const FieldElement& target, const FieldElement& generator) {
  const int d = target.field()->degree();
  if (target.field()->defining() != generator.field()->defining())
    throw FieldMismatch("target and generator from different fields");
  // columns: coords of generator^0 .. generator^{d-1}; solve M c = target
  std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d + 1, Rat(0)));
  FieldElement p = target.field()->one();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) M[i][j] = p.coords()[i];
    if (j + 1 < d) p = p * generator;
  }
  for (int i = 0; i < d; ++i) M[i][d] = target.coords()[i];
  // Gaussian elimination with column pivoting
  std::vector<int> where(d, -1);
  int row = 0;
  for (int col = 0; col < d && row < d; ++col) {
    int piv = -1;
    for (int i = row; i < d; ++i)
      if (M[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[row]);
    Rat lead = M[row][col];
    for (int j = col; j <= d; ++j) M[row][j] /= lead;
    for (int i = 0; i < d; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rat factor = M[i][col];
      for (int j = col; j <= d; ++j) M[i][j] -= factor * M[row][j];
    }
    where[col] = row;
    ++row;
  }
  if (row < d) throw NotAGenerator("powers of the generator are linearly dependent");
  std::vector<Rat> sol(d, Rat(0));
  for (int col = 0; col < d; ++col) sol[col] = M[where[col]][d];
  return RatPoly::from_coeffs(sol);
}

namespace {

// Minimal polynomial arithmetic over K for the gcd step of is_square.
using KPoly = std::vector<FieldElement>;

void ktrim(KPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

KPoly kmod(KPoly a, const KPoly& b) {
  FieldElement inv = b.back().inverse();
  while (a.size() >= b.size()) {
    FieldElement q = a.back() * inv;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[a.size() - b.size() + i] = a[a.size() - b.size() + i] - q * b[i];
    a.pop_back();
    ktrim(a);
    if (a.empty()) break;
  }
  return a;
}

KPoly kgcd(KPoly a, KPoly b) {
  ktrim(a);
  ktrim(b);
  while (!b.empty()) {
    KPoly r = kmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    FieldElement inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

Int denominator_lcm(const FieldElement& x) {
  Int d = 1;
  for (const auto& v : x.coords()) d = lcm_int(d, Int(v.get_den()));
  return d;
}

// Quadratic-residue filter at primes of good reduction. Returns false when a
// non-residue certifies that x is not a square.
bool modular_filter(const FieldElement& x, unsigned passes_needed) {
  const IntPoly& f = x.field()->defining();
  Int bad = f.lead() * resultant(f, f.derivative()) * denominator_lcm(x);
  if (bad == 0) bad = f.lead();  // inseparable cannot happen: f is irreducible
  const RatPoly xp = x.as_poly();
  unsigned passes = 0;
  for (unsigned long p : primes_below(100000)) {
    if (passes >= passes_needed) break;
    Int P(p);
    if (bad % P == 0) continue;
    auto roots = roots_mod_p(f, P);
    for (const Int& r : roots) {
      // evaluate x at r mod p
      Int num = xp.num().evaluate(r) % P;
      Int val = num * inverse_mod(xp.den() % P, P) % P;
      val = ((val % P) + P) % P;
      if (val == 0) continue;
      Int euler = pow_mod(val, (P - 1) / 2, P);
      if (euler == P - 1) return false;
      ++passes;
    }
  }
  return true;
}

}  // namespace

SquareResult is_square(const FieldElement& x, const IsSquareOptions& opts) {
  if (x.is_zero()) throw ZeroElement("is_square of zero");
  const FieldPtr field = x.field();
  const IntPoly& f = field->defining();
  const int d = field->degree();

  if (!modular_filter(x, opts.modular_primes)) return {SquareStatus::No, std::nullopt};
  if (2 * d > static_cast<int>(opts.max_resultant_degree))
    return {SquareStatus::Unknown, std::nullopt};

  // Exact stage. For shifts u = 1, alpha, alpha+1, ..., alpha+d put
  // x' = x u^2 and factor R(X) = Res_y(f(y), X^2 - x'(y)) over Z; a root s'
  // of X^2 - x' in K shows up as a linear gcd of some irreducible factor of
  // R with t^2 - x' over K[t]. Some shift separates s' from -s', so finding
  // no linear gcd across all shifts certifies that x is not a square.
  std::vector<FieldElement> shifts;
  shifts.push_back(field->one());
  for (int c = 0; c <= d; ++c)
    shifts.push_back(field->generator() + field->from_rational(Rat(c)));

  bool budget_hit = false;
  for (const FieldElement& u : shifts) {
    FieldElement xs = x * u * u;
    RatPoly xpoly = xs.as_poly();
    // interpolate R through X = 0..2d
    std::vector<Int> pts;
    std::vector<Rat> vals;
    for (int j = 0; j <= 2 * d; ++j) {
      RatPoly second = RatPoly::constant(Rat(j) * Rat(j)) - xpoly;
      pts.push_back(j);
      vals.push_back(second.is_zero() ? Rat(0) : resultant(RatPoly(f), second));
    }
    RatPoly R = interpolate(pts, vals);
    if (R.is_zero()) continue;  // x' hit a root of f-resultant degeneracy
    ZFactorization zf;
    try {
      zf = factor_over_Z(R.num());
    } catch (const FactorBudgetExceeded&) {
      budget_hit = true;
      continue;
    } catch (const RecombinationBudget&) {
      budget_hit = true;
      continue;
    }
    // t^2 - x' over K
    KPoly quad = {-xs, field->zero(), field->one()};
    for (const auto& [m, mult] : zf.factors) {
      if (m.degree() < 1) continue;
      KPoly mk;
      for (int i = 0; i <= m.degree(); ++i) mk.push_back(field->from_rational(Rat(m.coeff(i))));
      KPoly g = kgcd(mk, quad);
      if (g.size() == 2) {   // monic t + b: root s' = -b
        FieldElement s = (-g[0]) * u.inverse();
        if (s * s == x) return {SquareStatus::Yes, s};
      }
    }
  }
  if (budget_hit) return {SquareStatus::Unknown, std::nullopt};
  return {SquareStatus::No, std::nullopt};
}

}  // namespace polysmooth
