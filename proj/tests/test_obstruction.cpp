#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "polysmooth/errors.hpp"
#include "polysmooth/obstruction.hpp"

using namespace polysmooth;

namespace {

const QuadHit* find_hit(const ScanResult& r, long a, long b, long c) {
  for (const auto& h : r.hits)
    if (h.a == a && h.b == b && h.c == c) return &h;
  return nullptr;
}

bool has_point(const std::vector<RationalPointHit>& pts, long x, long y) {
  return std::any_of(pts.begin(), pts.end(),
                     [&](const RationalPointHit& p) { return p.x == x && p.y == y; });
}

}  // namespace

TEST_CASE("homogenized form") {
  auto phi = HomogenizedForm::make(IntPoly{-2, 0, 0, 1});
  CHECK(phi.A == 1);
  for (long x = -4; x <= 4; ++x) CHECK(phi.evaluate(Int(x), Int(1)) == Int(x * x * x - 2));
  CHECK(phi.evaluate(Int(1), Int(0)) == phi.A);
  CHECK(phi.evaluate(Int(3), Int(2)) == 27 - 16);
  auto phi2 = HomogenizedForm::make(IntPoly{3, 2, 0, 0, 1, 4});
  CHECK(phi2.A == 4);
  CHECK(phi2.evaluate(Int(1), Int(0)) == 4);
  CHECK(phi2.evaluate(Int(-2), Int(3)) == Int(4 * 32 * -1 + 16 * 3 + 2 * -2 * 81 + 3 * 243));
}

TEST_CASE("scan finds the Sophie Germain substitution") {
  auto r = quadratic_substitution_scan(IntPoly{4, 0, 1}, 1);
  const QuadHit* h = find_hit(r, 1, 0, 0);
  REQUIRE(h != nullptr);
  REQUIRE(h->factorization.factors.size() == 2);
  CHECK(h->factorization.factors[0].first == IntPoly{2, -2, 1});
  CHECK(h->factorization.factors[1].first == IntPoly{2, 2, 1});
  for (const auto& hit : r.hits) {
    IntPoly sub(std::vector<Int>{hit.c, hit.b, hit.a});
    CHECK(hit.factorization.reconstruct() == IntPoly{4, 0, 1}.compose(sub));
  }
  CHECK(r.stats.hits == r.hits.size());
  CHECK(r.stats.candidates == 2 * 2 * 3 - 0);  // a in {-1,1}, b in {0,1}, c in {-1,0,1}
  CHECK(r.stats.filtered + r.stats.factored == r.stats.candidates);
}

TEST_CASE("scan finds the cube substitution") {
  auto r = quadratic_substitution_scan(IntPoly{-2, 0, 0, 1}, 2);
  const QuadHit* h = find_hit(r, 2, 0, 0);
  REQUIRE(h != nullptr);
  CHECK(h->factorization.reconstruct() == IntPoly{-2, 0, 0, 0, 0, 0, 8});
  CHECK(h->factorization.factors.size() >= 2);
}

TEST_CASE("planted hits survive the filter at larger heights") {
  auto r1 = quadratic_substitution_scan(IntPoly{4, 0, 1}, 3);
  CHECK(find_hit(r1, 1, 0, 0) != nullptr);
  auto r2 = quadratic_substitution_scan(IntPoly{-2, 0, 0, 1}, 3);
  CHECK(find_hit(r2, 2, 0, 0) != nullptr);
}

TEST_CASE("parallel and serial scans agree") {
  IntPoly f{3, 2, 1, 0, 1};  // the section-6 quartic
  ScanOptions opts;
  auto par = quadratic_substitution_scan(f, 6, opts);
  auto ser = quadratic_substitution_scan_serial(f, 6, opts);
  CHECK(par.hits.empty());
  CHECK(ser.hits.empty());
  CHECK(par.stats.candidates == ser.stats.candidates);
  CHECK(par.stats.filtered == ser.stats.filtered);
  CHECK(par.stats.factored == ser.stats.factored);
  CHECK(par.stats.unknowns == ser.stats.unknowns);
  CHECK(par.stats.filtered > 0);

  auto pg = quadratic_substitution_scan(IntPoly{-2, 0, 0, 1}, 3);
  auto sg = quadratic_substitution_scan_serial(IntPoly{-2, 0, 0, 1}, 3);
  REQUIRE(pg.hits.size() == sg.hits.size());
  for (std::size_t i = 0; i < pg.hits.size(); ++i) {
    CHECK(pg.hits[i].a == sg.hits[i].a);
    CHECK(pg.hits[i].b == sg.hits[i].b);
    CHECK(pg.hits[i].c == sg.hits[i].c);
  }
}

TEST_CASE("resume from shell") {
  IntPoly f{-2, 0, 0, 1};
  auto full = quadratic_substitution_scan(f, 2);
  auto first = quadratic_substitution_scan(f, 1);
  ScanOptions resume;
  resume.start_shell = 2;
  auto rest = quadratic_substitution_scan(f, 2, resume);
  CHECK(full.stats.candidates == first.stats.candidates + rest.stats.candidates);
  CHECK(full.hits.size() == first.hits.size() + rest.hits.size());
}

TEST_CASE("scan preconditions") {
  CHECK_THROWS_AS(quadratic_substitution_scan(IntPoly{-1, 0, 1}, 2), NotIrreducible);
  CHECK_THROWS_AS(quadratic_substitution_scan(IntPoly{1, 1}, 2), DegreeTooSmall);
  CHECK_THROWS_AS(rational_point_search(IntPoly{-1, 0, 1}, 2), NotIrreducible);
}

TEST_CASE("rational point search") {
  auto pts = rational_point_search(IntPoly{-2, 0, 0, 1}, 3);
  CHECK(has_point(pts, 3, 1));  // 27 - 2 = 25
  for (const auto& p : pts) {
    CHECK(p.y != 0);
    CHECK(p.s * p.s == HomogenizedForm::make(IntPoly{-2, 0, 0, 1}).evaluate(p.x, p.y));
    CHECK(Rat(1) * p.z * p.z ==
          Rat(HomogenizedForm::make(IntPoly{-2, 0, 0, 1}).evaluate(p.x, p.y)));
  }
  // rank-zero sextic: no solutions at height 50
  auto empty = rational_point_search(IntPoly{-31, 0, -21, 0, -1, 0, 1}, 50);
  CHECK(empty.empty());
}

TEST_CASE("scan hits map to rational points") {
  struct Case {
    IntPoly f;
    unsigned scan_h, point_h;
  };
  for (const auto& cs : {Case{IntPoly{4, 0, 1}, 1, 16}, Case{IntPoly{-2, 0, 0, 1}, 2, 8}}) {
    auto scan = quadratic_substitution_scan(cs.f, cs.scan_h);
    REQUIRE(!scan.hits.empty());
    auto pts = rational_point_search(cs.f, cs.point_h);
    auto phi = HomogenizedForm::make(cs.f);
    for (const auto& h : scan.hits) {
      Int x = h.b * h.b - 4 * h.a * h.c;
      Int y = -4 * h.a;
      Int v = phi.A * phi.evaluate(x, y);
      CHECK(v > 0);
      CHECK(mpz_perfect_square_p(v.get_mpz_t()) != 0);
      CHECK(has_point(pts, x.get_si(), y.get_si()));
    }
  }
}

TEST_CASE("scan report json") {
  auto r = quadratic_substitution_scan(IntPoly{4, 0, 1}, 1);
  auto doc = scan_report_json(IntPoly{4, 0, 1}, r);
  CHECK(doc["schema"] == 1);
  CHECK(doc["f"] == "t^2+4");
  CHECK(doc["height"] == 1);
  CHECK(doc["stats"]["hits"] == r.hits.size());
  CHECK(doc["hits"].size() == r.hits.size());
  CHECK(doc["hits"][0].contains("factors"));
}
