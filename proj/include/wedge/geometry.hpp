#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wedge/rational.hpp"

namespace wedge {

struct Point {
  BigRational x, y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Line a x + b y = c with (a, b) != (0, 0), stored canonically: integer
/// coefficients cleared of common factors, the first nonzero of (a, b)
/// positive. Equal lines therefore compare equal componentwise.
class Line {
public:
  Line(const BigRational& a, const BigRational& b, const BigRational& c);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }

  friend bool operator==(const Line&, const Line&) = default;

private:
  mpz_class a_, b_, c_;
};

struct NamedTriangle {
  std::string name;
  std::array<std::string, 3> vertices;

  friend bool operator==(const NamedTriangle&, const NamedTriangle&) = default;
};

/// An executed construction: named points plus the drawn segments and the
/// enumerated triangles. side is the base square's side, used by the JSON
/// and SVG emitters.
struct Figure {
  BigRational side;
  std::map<std::string, Point> points;
  std::vector<std::array<std::string, 2>> segments;
  std::vector<NamedTriangle> triangles;

  const Point& point(const std::string& name) const;

  /// Validates that the vertices resolve and are not collinear.
  void add_triangle(const std::string& name, const std::string& v0,
                    const std::string& v1, const std::string& v2);

  friend bool operator==(const Figure&, const Figure&) = default;
};

struct IdentityResult {
  std::string name;
  std::string lhs, rhs;  // exact values, canonical rational text
  bool holds;
};

struct VerificationReport {
  BigRational side;
  BigRational T;  // the common triangle area
  BigRational lm_sq, mn_sq, ln_sq;
  std::vector<IdentityResult> identities;
};

Point midpoint(const Point& p, const Point& q);

/// Throws geometry_error(degenerate_line) for coincident points.
Line line_through(const Point& p, const Point& q);

/// The line through p whose direction is the normal of l.
Line perpendicular_through(const Point& p, const Line& l);

/// Unique intersection point; parallel distinct lines and coincident lines
/// throw geometry_error with distinct kinds.
Point intersect(const Line& l1, const Line& l2);

BigRational sq_dist(const Point& p, const Point& q);

/// Absolute shoelace area. Vertices must describe a simple polygon; fewer
/// than 3 vertices is a domain_error.
BigRational polygon_area(const std::vector<Point>& vertices);

/// Shoelace area with orientation: positive for counterclockwise order.
BigRational signed_polygon_area(const std::vector<Point>& vertices);

/// The 16-wedge figure of BM 15285 problem xii on a square of the given
/// side: vertices A B C D counterclockwise from the origin, center O,
/// diagonal midpoints L M N R, and W X Y Z where consecutive perpendiculars
/// meet (the side midpoints). Triangles are enumerated canonically:
/// 4 inner (OLM OMN ONR ORL), 4 ring (LWM MXN NYR RZL), 8 corner
/// (AWL ALZ BXM BMW CYN CNX DZR DRY), named T1..T16.
///
/// Each perpendicular is taken to the diagonal containing its midpoint
/// (L,N on AC; M,R on BD) -- the transposed assignment would just reproduce
/// the diagonals.
Figure build_bm15285_figure(const BigRational& side);

/// Checks the problem-xii identities exactly and returns the report, or
/// throws verification_error naming the first failing identity and both
/// sides: all 16 areas equal (= T), positive orientation, LM^2 = MN^2 = 4T,
/// LN^2 = 8T, LM^2 + MN^2 = LN^2, and sum of areas = side^2.
VerificationReport verify_problem_xii(const Figure& fig);

/// The YBC 7289 figure: a square with both diagonals, center O and the four
/// triangles OAB OBC OCD ODA (named T1..T4).
Figure build_ybc7289_figure(const BigRational& side);

}  // namespace wedge
