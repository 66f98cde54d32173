#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iterator>
#include <random>

#include "wedge/geometry.hpp"
#include "wedge/quad.hpp"

using namespace wedge;

namespace {

BigRational rat(long n, long d = 1) { return BigRational(mpz_class(n), mpz_class(d)); }

Point pt(long x, long y) { return {rat(x), rat(y)}; }

BigRational random_side(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 999);
  std::uniform_int_distribution<long> den(1, 99);
  return BigRational(mpz_class(num(rng)), mpz_class(den(rng)));
}

}  // namespace

TEST_CASE("midpoint") {
  CHECK(midpoint(pt(0, 0), pt(60, 60)) == pt(30, 30));
  CHECK(midpoint(pt(7, 7), pt(7, 7)) == pt(7, 7));
  CHECK(midpoint(pt(0, 0), pt(30, 30)) == pt(15, 15));
  CHECK(midpoint(pt(0, 0), pt(1, 0)) == Point{rat(1, 2), rat(0)});
}

TEST_CASE("line_through") {
  Line ac = line_through(pt(0, 0), pt(60, 60));
  CHECK(ac.a() == 1);
  CHECK(ac.b() == -1);
  CHECK(ac.c() == 0);

  Line bd = line_through(pt(60, 0), pt(0, 60));
  CHECK(bd.a() == 1);
  CHECK(bd.b() == 1);
  CHECK(bd.c() == 60);

  CHECK_THROWS_AS(line_through(pt(0, 0), pt(0, 0)), geometry_error);
  try {
    line_through(pt(1, 2), pt(1, 2));
  } catch (const geometry_error& e) {
    CHECK(e.which() == geometry_error::kind::degenerate_line);
  }
}

TEST_CASE("line canonicality makes direction irrelevant") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> coord(-50, 50);
  for (int i = 0; i < 300; ++i) {
    Point p = pt(coord(rng), coord(rng)), q = pt(coord(rng), coord(rng));
    if (p == q) continue;
    CHECK(line_through(p, q) == line_through(q, p));
  }
}

TEST_CASE("perpendicular_through") {
  Line ac = line_through(pt(0, 0), pt(60, 60));  // x - y = 0
  Line wedge_line = perpendicular_through(pt(15, 15), ac);
  CHECK(wedge_line == Line(rat(1), rat(1), rat(30)));

  Line x_axis = line_through(pt(0, 0), pt(1, 0));  // y = 0
  CHECK(perpendicular_through(pt(0, 0), x_axis) == Line(rat(1), rat(0), rat(0)));

  Line bd = line_through(pt(60, 0), pt(0, 60));  // x + y = 60
  CHECK(perpendicular_through(pt(45, 15), bd) == Line(rat(1), rat(-1), rat(30)));
}

TEST_CASE("intersect") {
  Line wl = Line(rat(1), rat(1), rat(30));                // x + y = 30
  Line ab = line_through(pt(0, 0), pt(1, 0));             // y = 0
  CHECK(intersect(wl, ab) == pt(30, 0));

  Line ac = line_through(pt(0, 0), pt(60, 60));
  Line bd = line_through(pt(60, 0), pt(0, 60));
  CHECK(intersect(ac, bd) == pt(30, 30));

  Line y0 = Line(rat(0), rat(1), rat(0));
  Line y1 = Line(rat(0), rat(1), rat(1));
  CHECK_THROWS_AS(intersect(y0, y1), geometry_error);
  try {
    intersect(y0, y1);
  } catch (const geometry_error& e) {
    CHECK(e.which() == geometry_error::kind::parallel_lines);
  }
  try {
    intersect(y0, Line(rat(0), rat(2), rat(0)));
  } catch (const geometry_error& e) {
    CHECK(e.which() == geometry_error::kind::coincident_lines);
  }
}

TEST_CASE("sq_dist") {
  CHECK(sq_dist(pt(15, 15), pt(45, 15)) == rat(900));
  CHECK(sq_dist(pt(15, 15), pt(45, 45)) == rat(1800));
  CHECK(sq_dist(pt(3, 4), pt(3, 4)) == rat(0));
}

TEST_CASE("polygon_area") {
  CHECK(polygon_area({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}) == rat(1));
  CHECK(polygon_area({pt(15, 15), pt(30, 0), pt(45, 15)}) == rat(225));
  CHECK(polygon_area({pt(0, 0), pt(30, 0), pt(15, 15)}) == rat(225));
  CHECK(signed_polygon_area({pt(0, 0), pt(1, 0), pt(0, 1)}) == rat(1, 2));
  CHECK(signed_polygon_area({pt(0, 0), pt(0, 1), pt(1, 0)}) == rat(-1, 2));
  CHECK_THROWS_AS(polygon_area({pt(0, 0), pt(1, 0)}), domain_error);
}

TEST_CASE("bm15285 figure at side 60") {
  Figure fig = build_bm15285_figure(rat(60));
  CHECK(fig.points.size() == 13);
  CHECK(fig.triangles.size() == 16);
  CHECK(fig.segments.size() == 14);

  CHECK(fig.point("O") == pt(30, 30));
  CHECK(fig.point("L") == pt(15, 15));
  CHECK(fig.point("M") == pt(45, 15));
  CHECK(fig.point("N") == pt(45, 45));
  CHECK(fig.point("R") == pt(15, 45));
  CHECK(fig.point("W") == pt(30, 0));
  CHECK(fig.point("X") == pt(60, 30));
  CHECK(fig.point("Y") == pt(30, 60));
  CHECK(fig.point("Z") == pt(0, 30));

  for (const NamedTriangle& t : fig.triangles) {
    BigRational area = polygon_area({fig.point(t.vertices[0]),
                                     fig.point(t.vertices[1]),
                                     fig.point(t.vertices[2])});
    CHECK(area == rat(225));
  }

  CHECK_THROWS_AS(build_bm15285_figure(rat(0)), domain_error);
  CHECK_THROWS_AS(build_bm15285_figure(rat(-3)), domain_error);
}

TEST_CASE("verification report at side 60") {
  VerificationReport report = verify_problem_xii(build_bm15285_figure(rat(60)));
  CHECK(report.T == rat(225));
  CHECK(report.lm_sq == rat(900));
  CHECK(report.mn_sq == rat(900));
  CHECK(report.ln_sq == rat(1800));
  for (const IdentityResult& id : report.identities) CHECK(id.holds);
}

TEST_CASE("verification at non-integer sides") {
  VerificationReport report =
      verify_problem_xii(build_bm15285_figure(rat(7, 3)));
  CHECK(report.T == rat(49, 144));

  Figure small = build_bm15285_figure(rat(1));
  for (const NamedTriangle& t : small.triangles)
    CHECK(polygon_area({small.point(t.vertices[0]), small.point(t.vertices[1]),
                        small.point(t.vertices[2])}) == rat(1, 16));
}

TEST_CASE("tampering is caught") {
  Figure fig = build_bm15285_figure(rat(60));
  fig.points["L"] = pt(16, 15);
  CHECK_THROWS_AS(verify_problem_xii(fig), verification_error);
  try {
    verify_problem_xii(fig);
  } catch (const verification_error& e) {
    CHECK(e.identity() == "equal-areas");
  }
}

TEST_CASE("problem-xii identities hold at 100 random sides") {
  std::mt19937_64 rng(41);
  BigRational quarter(mpz_class(1), mpz_class(4));
  BigRational sixteenth(mpz_class(1), mpz_class(16));
  BigRational half(mpz_class(1), mpz_class(2));
  for (int i = 0; i < 100; ++i) {
    BigRational s = random_side(rng);
    BigRational s_sq = s * s;
    VerificationReport report = verify_problem_xii(build_bm15285_figure(s));
    CHECK(report.T == s_sq * sixteenth);
    CHECK(report.lm_sq == s_sq * quarter);
    CHECK(report.mn_sq == s_sq * quarter);
    CHECK(report.ln_sq == s_sq * half);
    CHECK(report.lm_sq + report.mn_sq == report.ln_sq);
  }
}

TEST_CASE("scale equivariance") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    BigRational s = random_side(rng);
    Figure base = build_bm15285_figure(s);
    Figure doubled = build_bm15285_figure(s * BigRational(2));
    BigRational four(4);
    for (std::size_t t = 0; t < base.triangles.size(); ++t) {
      auto area = [](const Figure& f, const NamedTriangle& tr) {
        return polygon_area({f.point(tr.vertices[0]), f.point(tr.vertices[1]),
                             f.point(tr.vertices[2])});
      };
      CHECK(area(doubled, doubled.triangles[t]) == four * area(base, base.triangles[t]));
    }
    for (auto it = base.points.begin(); it != base.points.end(); ++it)
      for (auto jt = std::next(it); jt != base.points.end(); ++jt)
        CHECK(sq_dist(doubled.point(it->first), doubled.point(jt->first)) ==
              four * sq_dist(it->second, jt->second));
  }
}

TEST_CASE("ybc7289 figure") {
  Figure fig = build_ybc7289_figure(rat(30));
  CHECK(fig.points.size() == 5);
  CHECK(fig.triangles.size() == 4);
  CHECK(sq_dist(fig.point("B"), fig.point("D")) == rat(1800));
  CHECK(sq_dist(fig.point("A"), fig.point("C")) == rat(1800));

  // diagonal length 30 sqrt(2) to seven digits
  QuadValue diag(BigRational(0), rat(30), 2);
  CHECK(approx_decimal(diag, 7) == "42.4264069");

  CHECK(sq_dist(build_ybc7289_figure(rat(1)).point("B"),
                build_ybc7289_figure(rat(1)).point("D")) == rat(2));
  CHECK(sq_dist(build_ybc7289_figure(rat(60)).point("B"),
                build_ybc7289_figure(rat(60)).point("D")) == rat(7200));
  CHECK_THROWS_AS(build_ybc7289_figure(rat(-1)), domain_error);
}

TEST_CASE("diagonal squared is twice the side squared at 100 random sides") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    BigRational s = random_side(rng);
    Figure fig = build_ybc7289_figure(s);
    CHECK(sq_dist(fig.point("B"), fig.point("D")) == BigRational(2) * s * s);
    BigRational total;
    for (const NamedTriangle& t : fig.triangles)
      total += polygon_area({fig.point(t.vertices[0]), fig.point(t.vertices[1]),
                             fig.point(t.vertices[2])});
    CHECK(total == s * s);
  }
}

TEST_CASE("hypotenuse exceeds the side, symbolically") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    BigRational s = random_side(rng);
    QuadValue hyp(BigRational(0), s, 2);            // s sqrt(2)
    QuadValue side = QuadValue::from_rational(s, 2);
    QuadValue half_hyp(BigRational(0), s * BigRational(mpz_class(1), mpz_class(2)), 2);
    CHECK(sign(hyp - side) == 1);
    CHECK(sign(side - half_hyp) == 1);
  }
}
