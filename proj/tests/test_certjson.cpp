#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polysmooth/certjson.hpp"

using namespace polysmooth;

namespace {

bool same_certificate(const Certificate& a, const Certificate& b) {
  if (a.f != b.f || a.g != b.g || a.scalar != b.scalar || a.method != b.method ||
      a.polysmoothness != b.polysmoothness || a.factors.size() != b.factors.size())
    return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (!(a.factors[i] == b.factors[i])) return false;
  return a.seed.has_value() == b.seed.has_value() &&
         a.partition.has_value() == b.partition.has_value();
}

void check_roundtrip(const Certificate& c, const std::optional<VerifyReport>& rep) {
  std::string s = certificate_to_string(c, rep);
  Certificate back = certificate_from_string(s);
  CHECK(same_certificate(c, back));
  auto rep2 = verify_report_from_json(OrderedJson::parse(s));
  CHECK(rep.has_value() == rep2.has_value());
  std::string s2 = certificate_to_string(back, rep2);
  CHECK(s == s2);  // bit-exact
}

}  // namespace

TEST_CASE("decomposition certificate round-trip") {
  auto c = decomposition_construct(IntPoly{1, -1, 4, 0, 1}, IntPoly{-2, 2, 1}, IntPoly{1, 0, 1});
  auto rep = verify_certificate(c, VerifyMode::Symbolic);
  check_roundtrip(c, rep);
  check_roundtrip(c, std::nullopt);

  auto doc = certificate_to_json(c);
  CHECK(doc["schema"] == 1);
  CHECK(doc["f"] == "t^4+4*t^2-t+1");
  CHECK(doc["polysmoothness"] == "1/2");
  CHECK_FALSE(doc.contains("seed"));
}

TEST_CASE("quadratic certificate with seed round-trip") {
  auto [seed, c] = quadratic_construct(IntPoly{1, 0, 1}, 5);
  check_roundtrip(c, verify_certificate(c, VerifyMode::Symbolic));
  auto doc = certificate_to_json(c);
  REQUIRE(doc.contains("seed"));
  CHECK(doc["seed"]["A"] == "11");
  CHECK(doc["seed"]["z"] == "7");
  Certificate back = certificate_from_json(doc);
  REQUIRE(back.seed.has_value());
  CHECK(back.seed->k == seed.k);
  CHECK(back.seed->B == seed.B);
  CHECK(back.factors[0].kind == FactorExpr::Kind::Shifted);
  CHECK(verify_certificate(back, VerifyMode::Symbolic).pass);
}

TEST_CASE("binomial certificate with partition round-trip") {
  auto c = binomial_product_construct({{1, 2, 1}, {1, 3, 1}}, 7);
  check_roundtrip(c, verify_certificate(c, VerifyMode::Probabilistic));
  auto doc = certificate_to_json(c);
  REQUIRE(doc.contains("partition"));
  Certificate back = certificate_from_json(doc);
  REQUIRE(back.partition.has_value());
  CHECK(back.partition->Gamma == c.partition->Gamma);
  CHECK(back.factors[0].kind == FactorExpr::Kind::CycloOfMonomial);
  CHECK(verify_certificate(back, VerifyMode::Probabilistic).pass);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS(certificate_from_string("{}"));
  CHECK_THROWS(certificate_from_string("{\"schema\": 2}"));
  CHECK_THROWS(certificate_from_string("not json"));
  CHECK(rat_from_string("-6/4") == Rat(-3, 2));
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK_THROWS(rat_from_string("x"));
}
