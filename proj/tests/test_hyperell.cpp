#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eszlab/eszcount.hpp"
#include "eszlab/hyperell.hpp"
#include "eszlab/parse.hpp"

using namespace eszlab;
using namespace eszlab::hyperell;
using exactq::parse_poly;
using exactq::to_unipoly;

namespace {

UniPoly fx(const char* s) { return to_unipoly(parse_poly(s), Var::x); }
Rational Q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("make_curve validation") {
  const auto c = make_curve(fx("x^5+1"));
  CHECK(c.genus == 2);
  CHECK(c.degree == 5);

  try {
    make_curve(fx("x^4+1"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::degree);
  }
  try {
    make_curve(fx("(x-1)^2*(x^3+2)"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_squarefree);
  }
}

TEST_CASE("genus formula") {
  CHECK(genus_of(5) == 2);
  CHECK(genus_of(6) == 2);
  CHECK(genus_of(7) == 3);
  CHECK_THROWS_AS(genus_of(4), Error);
  for (int d = 5; d <= 20; ++d) CHECK(genus_of(d) >= 2);
}

TEST_CASE("product curves") {
  const auto c = product_curve(parse_poly("x+y"), {Q(1), Q(2), Q(3), Q(4), Q(5)});
  CHECK(c.genus == 2);
  CHECK(c.f == fx("(x+1)*(x+2)*(x+3)*(x+4)*(x+5)"));

  CHECK_THROWS_AS(product_curve(parse_poly("x+y"), {Q(1), Q(1), Q(2), Q(3), Q(4)}), Error);
  CHECK_THROWS_AS(product_curve(parse_poly("y^2-x^2"), {Q(-1), Q(1), Q(2)}), Error);
  CHECK_THROWS_AS(product_curve(parse_poly("x+y"), {Q(1), Q(2)}), Error);  // degree 2 < 5
}

TEST_CASE("product curve succeeds exactly under the fiber conditions") {
  // Valid iff every fiber is squarefree, no two fibers share a root, and
  // s * d_p >= 5; cross-checked against the eszcount predicates.
  const Poly p = parse_poly("y^2 - x");  // fibers y^2 - a, distinct square roots
  std::vector<std::vector<Rational>> tuples = {
      {Q(1), Q(2), Q(3)},          // ok: degrees 2+2+2 = 6
      {Q(0), Q(1), Q(2)},          // fiber at 0 is y^2: repeated root
      {Q(1), Q(2)},                // degree 4 < 5
  };
  for (const auto& tup : tuples) {
    bool lib_ok = true;
    try {
      product_curve(p, tup);
    } catch (const Error&) {
      lib_ok = false;
    }
    const eszcount::RatSet as(std::vector<Rational>(tup.begin(), tup.end()));
    const bool fibers_ok = eszcount::repeated_root_check(p, as).empty();
    const bool pairs_ok = eszcount::common_root_pairs(p, as).pairs.empty();
    const bool degree_ok = static_cast<int>(tup.size()) * p.degree_in(Var::y) >= 5;
    CHECK(lib_ok == (fibers_ok && pairs_ok && degree_ok));
  }
}

TEST_CASE("point search") {
  const auto c = make_curve(fx("x^5+1"));
  const auto pts = search_points(c, 3);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == CurvePoint{Q(-1), Q(0)});
  CHECK(pts[1] == CurvePoint{Q(0), Q(-1)});
  CHECK(pts[2] == CurvePoint{Q(0), Q(1)});

  const auto c4 = make_curve(fx("x^5+4"));
  const auto pts4 = search_points(c4, 1);
  REQUIRE(pts4.size() == 2);
  CHECK(pts4[0] == CurvePoint{Q(0), Q(-2)});
  CHECK(pts4[1] == CurvePoint{Q(0), Q(2)});

  // soundness, symmetry, monotonicity in the height
  for (long h : {1L, 2L, 4L, 6L}) {
    const auto ps = search_points(c, h);
    for (const auto& pt : ps) {
      CHECK(pt.y * pt.y == c.f(pt.x));
      const bool has_mirror =
          std::find(ps.begin(), ps.end(), CurvePoint{pt.x, -pt.y}) != ps.end();
      CHECK(has_mirror);
    }
    const auto bigger = search_points(c, h + 3);
    for (const auto& pt : ps)
      CHECK(std::find(bigger.begin(), bigger.end(), pt) != bigger.end());
  }

  // f(-2) = 1, so (-2, +-1) must appear once the height box covers it
  const auto c33 = make_curve(fx("x^5+33"));
  const auto p33 = search_points(c33, 2);
  CHECK(std::find(p33.begin(), p33.end(), CurvePoint{Q(-2), Q(1)}) != p33.end());
}

TEST_CASE("shifted power curve") {
  const auto sp = shifted_power_curve(Q(4), 5);
  CHECK(sp.contains(Q(0), Q(2)));
  CHECK(!sp.contains(Q(1), Q(1)));
  CHECK(sp.genus == 2);
  CHECK_THROWS_AS(shifted_power_curve(Q(4), 4), Error);
  CHECK_THROWS_AS(shifted_power_curve(Q(0), 5), Error);
}
