#include "polysmooth/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace polysmooth {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int v) {
  IntPoly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::var() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(Int coeff, unsigned power) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(power + 1, Int(0));
    p.c_.back() = std::move(coeff);
  }
  return p;
}

const Int& IntPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const Int& IntPoly::lead() const {
  if (c_.empty()) throw ZeroPolynomial();
  return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> r(c_);
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const {
  if (s == 0) return IntPoly();
  std::vector<Int> r(c_);
  for (auto& v : r) v *= s;
  return IntPoly(std::move(r));
}

Int IntPoly::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  IntPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * inner + IntPoly::constant(*it);
  return acc;
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

Int IntPoly::content() const {
  if (is_zero()) throw ZeroPolynomial();
  Int g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  Int g = content();
  std::vector<Int> r(c_);
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::shift_up(unsigned k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : IntPoly();
  std::vector<Int> r(k, Int(0));
  r.insert(r.end(), c_.begin(), c_.end());
  return IntPoly(std::move(r));
}

bool IntPoly::try_divide(const IntPoly& q, IntPoly& quot, IntPoly& rem) const {
  if (q.is_zero()) throw DivisionByZero();
  // Division in Q[t]; succeeds only when every step stays integral.
  std::vector<Int> r(c_);
  int dq = q.degree();
  int dr = degree();
  std::vector<Int> qc(dr >= dq ? dr - dq + 1 : 0, Int(0));
  while (dr >= dq) {
    if (r[dr] != 0) {
      Int c;
      mpz_tdiv_q(c.get_mpz_t(), r[dr].get_mpz_t(), q.lead().get_mpz_t());
      if (c * q.lead() != r[dr]) return false;
      qc[dr - dq] = c;
      for (int i = 0; i <= dq; ++i) r[dr - dq + i] -= c * q.c_[i];
    }
    --dr;
  }
  quot = IntPoly(std::move(qc));
  rem = IntPoly(std::move(r));
  return true;
}

IntPoly IntPoly::divide_exact(const IntPoly& q) const {
  IntPoly quot, rem;
  if (!try_divide(q, quot, rem) || !rem.is_zero()) throw NotDivisible();
  return quot;
}

bool IntPoly::lex_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

namespace {

void print_term(std::ostringstream& out, const Int& c, int power, const std::string& var,
                bool first) {
  Int a = abs(c);
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? "-" : "+");
  }
  if (power == 0) {
    out << a.get_str();
    return;
  }
  if (a != 1) out << a.get_str() << "*";
  out << var;
  if (power > 1) out << "^" << power;
}

}  // namespace

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    print_term(out, c_[i], i, var, first);
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

RatPoly::RatPoly(IntPoly num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DivisionByZero();
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Int g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    std::vector<Int> r(num_.coeffs());
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    num_ = IntPoly(std::move(r));
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

RatPoly RatPoly::constant(const Rat& v) {
  return RatPoly(IntPoly::constant(v.get_num()), v.get_den());
}

RatPoly RatPoly::from_coeffs(const std::vector<Rat>& coeffs) {
  Int den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> num(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Rat scaled = coeffs[i] * Rat(den);
    num[i] = scaled.get_num();
  }
  return RatPoly(IntPoly(std::move(num)), den);
}

Rat RatPoly::lead_coeff() const {
  if (is_zero()) throw ZeroPolynomial();
  return Rat(num_.lead()) / Rat(den_);
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  return RatPoly(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  return RatPoly(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatPoly RatPoly::operator-() const { return RatPoly(-num_, den_); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
  return RatPoly(num_ * o.num_, den_ * o.den_);
}

RatPoly RatPoly::operator*(const Rat& s) const {
  return RatPoly(num_ * Int(s.get_num()), den_ * s.get_den());
}

Rat RatPoly::evaluate(const Rat& x) const { return num_.evaluate(x) / Rat(den_); }

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc;
  for (int i = num_.degree(); i >= 0; --i)
    acc = acc * inner + RatPoly::constant(Rat(num_.coeff(i)));
  return acc * Rat(Int(1), den_);
}

void RatPoly::divmod(const RatPoly& q, RatPoly& quot, RatPoly& rem) const {
  if (q.is_zero()) throw DivisionByZero();
  std::vector<Rat> r(num_.degree() + 1);
  for (int i = 0; i <= num_.degree(); ++i) r[i] = coeff(i);
  int dq = q.degree();
  int dr = degree();
  Rat qlead = q.lead_coeff();
  std::vector<Rat> qc(dr >= dq ? dr - dq + 1 : 0, Rat(0));
  while (dr >= dq) {
    if (r[dr] != 0) {
      Rat c = r[dr] / qlead;
      qc[dr - dq] = c;
      for (int i = 0; i <= dq; ++i) r[dr - dq + i] -= c * q.coeff(i);
    }
    --dr;
  }
  quot = RatPoly::from_coeffs(qc);
  rem = RatPoly::from_coeffs(r);
}

RatPoly RatPoly::divide_exact(const RatPoly& q) const {
  RatPoly quot, rem;
  divmod(q, quot, rem);
  if (!rem.is_zero()) throw NotDivisible();
  return quot;
}

std::string RatPoly::str(const std::string& var) const {
  if (den_ == 1) return num_.str(var);
  return "(" + num_.str(var) + ")/" + den_.get_str();
}

// ---------------------------------------------------------------------------

IntPoly pseudo_rem(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DivisionByZero();
  int dp = p.degree(), dq = q.degree();
  if (dp < dq) return p;
  std::vector<Int> r(p.coeffs());
  const Int& lq = q.lead();
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), lq.get_mpz_t(), dp - dq + 1);
  for (auto& v : r) v *= scale;
  int dr = dp;
  while (dr >= dq) {
    if (r[dr] != 0) {
      Int c;
      mpz_divexact(c.get_mpz_t(), r[dr].get_mpz_t(), lq.get_mpz_t());
      for (int i = 0; i <= dq; ++i) r[dr - dq + i] -= c * q.coeff(i);
    }
    --dr;
  }
  r.resize(dq);
  return IntPoly(std::move(r));
}

namespace {

IntPoly divide_by_int(const IntPoly& p, const Int& d) {
  std::vector<Int> r(p.coeffs());
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(r));
}

Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

// Subresultant PRS resultant, after Cohen, "A Course in Computational
// Algebraic Number Theory", Algorithm 3.3.7.
Int resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomial();
  IntPoly A = p, B = q;
  int sign = 1;
  Int ca = A.content(), cb = B.content();
  A = divide_by_int(A, ca);
  B = divide_by_int(B, cb);
  Int t = pow_int(ca, B.degree()) * pow_int(cb, A.degree());
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    std::swap(A, B);
  }
  Int g = 1, h = 1;
  while (B.degree() > 0) {
    int d = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    IntPoly R = pseudo_rem(A, B);
    A = B;
    Int ghd = g * pow_int(h, d);
    B = R.is_zero() ? R : divide_by_int(R, ghd);
    g = A.lead();
    if (d > 0) {
      Int num = pow_int(g, d);
      Int den = pow_int(h, d - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  if (B.is_zero()) return Int(0);
  Int num = pow_int(B.lead(), A.degree());
  Int den = pow_int(h, A.degree() - 1 >= 0 ? A.degree() - 1 : 0);
  Int res;
  if (A.degree() >= 1) {
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    res = 1;  // both constants
  }
  return sign * t * res;
}

Rat resultant(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomial();
  Int rz = resultant(p.num(), q.num());
  Rat den = Rat(pow_int(p.den(), q.degree())) * Rat(pow_int(q.den(), p.degree()));
  return Rat(rz) / den;
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) return IntPoly();
  if (p.is_zero()) return q.primitive() * Int(q.lead() < 0 ? -1 : 1);
  if (q.is_zero()) return p.primitive() * Int(p.lead() < 0 ? -1 : 1);
  IntPoly A = p.primitive(), B = q.primitive();
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    IntPoly R = pseudo_rem(A, B);
    A = B;
    B = R.is_zero() ? R : R.primitive();
  }
  Int cg;
  mpz_gcd(cg.get_mpz_t(), p.content().get_mpz_t(), q.content().get_mpz_t());
  IntPoly g = A * cg;
  if (g.lead() < 0) g = -g;
  return g;
}

RatPoly interpolate(const std::vector<Int>& points, const std::vector<Rat>& values) {
  // Newton's divided differences, exact over Q.
  std::size_t n = points.size();
  std::vector<Rat> dd(values);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i] - points[i - j]);
  RatPoly result = RatPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    RatPoly lin = RatPoly(IntPoly{0, 1}) - RatPoly::constant(Rat(points[i]));
    result = result * lin + RatPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace polysmooth
