#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polysmooth/factorz.hpp"
#include "polysmooth/numfield.hpp"

using namespace polysmooth;

static FieldElement elem(const FieldPtr& K, std::vector<long> coords) {
  std::vector<Rat> c;
  for (long v : coords) c.emplace_back(v);
  return K->from_coords(c);
}

TEST_CASE("arithmetic in Q(i)") {
  auto K = NumberField::make(IntPoly{1, 0, 1});
  FieldElement a = K->generator();
  FieldElement x = elem(K, {2, 1});  // 2 + i
  CHECK(x.pow(3) == elem(K, {2, 11}));
  CHECK(x * K->one() == x);
  CHECK((a * a) == K->from_rational(Rat(-1)));
  CHECK(x * x.inverse() == K->one());
  CHECK_THROWS_AS(K->zero().inverse(), DivisionByZero);
  auto L = NumberField::make(IntPoly{-2, 0, 0, 1});
  CHECK_THROWS_AS(x + L->generator(), FieldMismatch);
}

TEST_CASE("inverse in Q(cbrt 2)") {
  auto K = NumberField::make(IntPoly{-2, 0, 0, 1});
  FieldElement a = K->generator();
  FieldElement inv = a.inverse();
  CHECK(inv == K->from_coords({Rat(0), Rat(0), Rat(1, 2)}));
  CHECK(a * inv == K->one());
}

TEST_CASE("field construction guards") {
  CHECK_THROWS_AS(NumberField::make(IntPoly{-1, 0, 0, 0, 1}), NotIrreducible);
  CHECK_THROWS_AS(NumberField::make(IntPoly{1, 1}), DegreeTooSmall);
  CHECK_THROWS_AS(NumberField::make(IntPoly::zero()), ZeroPolynomial);
}

TEST_CASE("norms") {
  auto K = NumberField::make(IntPoly{1, 0, 1});
  CHECK(norm(elem(K, {2, 1})) == 5);
  CHECK(norm(K->one()) == 1);
  CHECK(norm(K->zero()) == 0);

  // quadratic norm formula a^{-1}(aB^2 - bAB + cA^2) at (a,b,c,A,B)=(4,4,9,1,3)
  auto Q = NumberField::make(IntPoly{9, 4, 4});
  CHECK(norm(elem(Q, {3, 1})) == Rat(33, 4));

  // multiplicativity, randomized
  std::mt19937_64 rng(5);
  auto C = NumberField::make(IntPoly{-2, 0, 0, 1});
  for (int rep = 0; rep < 25; ++rep) {
    auto rnd = [&] {
      std::vector<Rat> c;
      for (int i = 0; i < 3; ++i)
        c.push_back(Rat(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 4)));
      return C->from_coords(c);
    };
    FieldElement x = rnd(), y = rnd();
    CHECK(norm(x * y) == norm(x) * norm(y));
  }
}

TEST_CASE("minimal polynomials") {
  auto K = NumberField::make(IntPoly{1, 0, 1});
  FieldElement a = K->generator();
  CHECK(minimal_polynomial(a * a) == IntPoly{1, 1});
  CHECK(minimal_polynomial(a) == IntPoly{1, 0, 1});

  auto Q = NumberField::make(IntPoly{1, -1, 4, 0, 1});
  FieldElement b = Q->generator();
  FieldElement h = b * b + Q->one();
  IntPoly m = minimal_polynomial(h);
  CHECK(m == IntPoly{5, -9, 0, 4, 1});
  // and m divides f(t^2+2t-2)
  IntPoly comp = IntPoly{1, -1, 4, 0, 1}.compose(IntPoly{-2, 2, 1});
  CHECK(comp.divide_exact(m) * m == comp);

  // minpoly of 1/alpha is the reversal when a0 = -1
  auto C = NumberField::make(IntPoly{-1, -1, 0, 0, 0, 0, 1});  // t^6 - t - 1
  IntPoly r = minimal_polynomial(C->generator().inverse());
  CHECK(r == IntPoly{-1, 0, 0, 0, 0, 1, 1});

  // minpoly(x)(x) = 0, randomized
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Rat> c;
    for (int i = 0; i < 4; ++i) c.push_back(Rat(static_cast<long>(rng() % 11) - 5));
    FieldElement x = Q->from_coords(c);
    IntPoly mp = minimal_polynomial(x);
    FieldElement acc = Q->zero();
    FieldElement p = Q->one();
    for (int i = 0; i <= mp.degree(); ++i) {
      acc = acc + p * Rat(mp.coeff(i));
      p = p * x;
    }
    CHECK(acc.is_zero());
    CHECK(4 % mp.degree() == 0);
  }
}

TEST_CASE("express_in_powers") {
  auto K = NumberField::make(IntPoly{-2, 0, 0, 1});
  FieldElement a = K->generator();
  CHECK(express_in_powers(a, a) == RatPoly::var());
  CHECK(express_in_powers(a, a * a) == RatPoly(IntPoly{0, 0, 1}, Int(2)));
  CHECK(express_in_powers(a, a.inverse()) == RatPoly(IntPoly{0, 0, 2}));
  CHECK_THROWS_AS(express_in_powers(a, K->from_rational(Rat(3))), NotAGenerator);
  // substitute back, randomized
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Rat> c;
    for (int i = 0; i < 3; ++i) c.push_back(Rat(static_cast<long>(rng() % 9) - 4));
    FieldElement g = K->from_coords(c);
    IntPoly mg = minimal_polynomial(g);
    if (mg.degree() != 3) continue;
    RatPoly expr = express_in_powers(a, g);
    CHECK(K->element(expr.compose(g.as_poly())) == a);
  }
}

TEST_CASE("is_square") {
  auto K = NumberField::make(IntPoly{1, 0, 1});
  FieldElement a = K->generator();
  auto r = is_square(a * Rat(2));
  REQUIRE(r.status == SquareStatus::Yes);
  FieldElement s = *r.root;
  CHECK(s * s == a * Rat(2));

  auto one = is_square(K->one());
  REQUIRE(one.status == SquareStatus::Yes);
  CHECK(*one.root * *one.root == K->one());

  // -1 = alpha^2 in Q(i)
  auto m1 = is_square(K->from_rational(Rat(-1)));
  REQUIRE(m1.status == SquareStatus::Yes);
  CHECK(*m1.root * *m1.root == K->from_rational(Rat(-1)));

  CHECK(is_square(K->from_rational(Rat(2))).status == SquareStatus::No);
  CHECK_THROWS_AS(is_square(K->zero()), ZeroElement);

  // 4*alpha in Q[t]/(t^4+t^2+2t+3) is not a square (f(t^2) irreducible)
  auto Q4 = NumberField::make(IntPoly{3, 2, 1, 0, 1});
  CHECK(is_irreducible(IntPoly{3, 0, 2, 0, 1, 0, 0, 0, 1}));
  CHECK(is_square(Q4->generator() * Rat(4)).status == SquareStatus::No);

  // 2 is a square in Q(sqrt 2) though not in Q
  auto R = NumberField::make(IntPoly{-2, 0, 1});
  auto two = is_square(R->from_rational(Rat(2)));
  REQUIRE(two.status == SquareStatus::Yes);
  CHECK(*two.root * *two.root == R->from_rational(Rat(2)));

  // randomized: squares are recognized with a verified root
  std::mt19937_64 rng(29);
  auto C = NumberField::make(IntPoly{-2, 0, 0, 1});
  for (int rep = 0; rep < 8; ++rep) {
    std::vector<Rat> c;
    for (int i = 0; i < 3; ++i) c.push_back(Rat(static_cast<long>(rng() % 7) - 3));
    FieldElement x = C->from_coords(c);
    if (x.is_zero()) continue;
    auto res = is_square(x * x);
    REQUIRE(res.status == SquareStatus::Yes);
    CHECK(*res.root * *res.root == x * x);
  }
}

TEST_CASE("Capelli degree divisibility") {
  std::mt19937_64 rng(71);
  int done = 0;
  while (done < 12) {
    std::vector<Int> fc(3 + rng() % 3), gc(2 + rng() % 3);
    for (auto& v : fc) v = static_cast<long>(rng() % 11) - 5;
    for (auto& v : gc) v = static_cast<long>(rng() % 11) - 5;
    IntPoly f(std::move(fc)), g(std::move(gc));
    if (f.degree() < 2 || g.degree() < 1) continue;
    f = f.primitive();
    if (!is_irreducible(f)) continue;
    IntPoly comp = f.compose(g);
    auto z = factor_over_Z(comp);
    for (const auto& [fac, mult] : z.factors) CHECK(fac.degree() % f.degree() == 0);
    ++done;
  }
}
