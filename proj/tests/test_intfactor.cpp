#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polysmooth/intfactor.hpp"
#include "polysmooth/numutil.hpp"

using namespace polysmooth;

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(257));
  CHECK(is_prime(1093));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(280901));
  CHECK(is_prime(Int("2305843009213693951")));  // M61
  CHECK_FALSE(is_prime(Int("2305843009213693953")));
  // strong pseudoprime to several bases
  CHECK_FALSE(is_prime(Int("3215031751")));
  auto sieve = primes_below(2000);
  size_t idx = 0;
  for (long n = 2; n < 2000; ++n) {
    bool p = (idx < sieve.size() && sieve[idx] == static_cast<unsigned long>(n));
    if (p) ++idx;
    CHECK(is_prime(n) == p);
  }
}

TEST_CASE("factor_integer basics") {
  auto f = factor_integer(280901);
  REQUIRE(f.complete);
  REQUIRE(f.entries.size() == 2);
  CHECK(f.entries[0].first == 257);
  CHECK(f.entries[1].first == 1093);
  CHECK(f.largest_prime() == 1093);
  CHECK(f.value() == 280901);

  auto one = factor_integer(1);
  CHECK(one.entries.empty());
  CHECK(one.value() == 1);

  auto pw = factor_integer(Int(2) * 2 * 2 * 3 * 3 * 125);
  REQUIRE(pw.entries.size() == 3);
  CHECK(pw.entries[0] == std::pair<Int, unsigned>(2, 3));
  CHECK(pw.entries[1] == std::pair<Int, unsigned>(3, 2));
  CHECK(pw.entries[2] == std::pair<Int, unsigned>(5, 3));

  // perfect power
  Int big = 1;
  for (int i = 0; i < 8; ++i) big *= 1000003;
  auto pp = factor_integer(big);
  REQUIRE(pp.entries.size() == 1);
  CHECK(pp.entries[0] == std::pair<Int, unsigned>(1000003, 8));
}

TEST_CASE("factor_integer roundtrip on random values") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    Int n = Int(rng() % 1000000) + 2;
    auto f = factor_integer(n);
    REQUIRE(f.complete);
    CHECK(f.value() == n);
    for (const auto& [p, e] : f.entries) CHECK(is_prime(p));
    for (size_t i = 1; i < f.entries.size(); ++i)
      CHECK(f.entries[i - 1].first < f.entries[i].first);
  }
}

TEST_CASE("factor_integer semiprimes beyond trial division") {
  Int a("1000000007"), b("1000000009");
  auto f = factor_integer(a * b);
  REQUIRE(f.complete);
  REQUIRE(f.entries.size() == 2);
  CHECK(f.entries[0].first == a);
  CHECK(f.entries[1].first == b);
}

TEST_CASE("kth_root_mod") {
  // cube root of 2 mod 11: the quadratic running example needs z=7
  Int z = kth_root_mod(2, 3, 11);
  CHECK(pow_mod(z, 3, 11) == 2);
  CHECK(z == 7);

  // gcd(k, lambda) > 1 branch: square root of 2 mod 7 (2 = 3^2 = 4^2)
  Int s = kth_root_mod(2, 2, 7);
  CHECK(pow_mod(s, 2, 7) == 2);

  // no root exists
  CHECK_THROWS(kth_root_mod(3, 2, 7));

  // composite modulus via CRT
  Int r = kth_root_mod(Int(4), 2, Int(225));
  CHECK(pow_mod(r, 2, 225) == 4);

  // power of two modulus
  Int t = kth_root_mod(Int(9), 2, Int(64));
  CHECK(pow_mod(t, 2, 64) == 9);
}

TEST_CASE("kth_root_mod randomized against forward powering") {
  std::mt19937_64 rng(99);
  const long mods[] = {121, 125, 343, 243, 1331, 7 * 7 * 11, 2 * 9 * 25};
  for (long m : mods) {
    for (int rep = 0; rep < 30; ++rep) {
      unsigned k = 2 + rng() % 6;
      Int x = Int(rng() % (m - 1)) + 1;
      if (gcd_int(x, m) != 1) continue;
      Int v = pow_mod(x, k, m);
      Int z = kth_root_mod(v, k, m);
      CHECK(pow_mod(z, k, m) == v);
    }
  }
}
