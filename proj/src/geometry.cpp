#include "wedge/geometry.hpp"

#include <utility>

namespace wedge {

Line::Line(const BigRational& a, const BigRational& b, const BigRational& c) {
  if (a.is_zero() && b.is_zero())
    throw geometry_error(geometry_error::kind::degenerate_line,
                         "line has zero normal vector");
  // clear denominators, then divide out the content
  mpz_class l = lcm(lcm(a.den(), b.den()), c.den());
  a_ = a.num() * (l / a.den());
  b_ = b.num() * (l / b.den());
  c_ = c.num() * (l / c.den());
  mpz_class g = gcd(gcd(a_, b_), c_);
  a_ /= g;
  b_ /= g;
  c_ /= g;
  const mpz_class& lead = a_ != 0 ? a_ : b_;
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
}

const Point& Figure::point(const std::string& name) const {
  auto it = points.find(name);
  if (it == points.end()) throw domain_error("unknown point '" + name + "'");
  return it->second;
}

void Figure::add_triangle(const std::string& name, const std::string& v0,
                          const std::string& v1, const std::string& v2) {
  const Point &p0 = point(v0), &p1 = point(v1), &p2 = point(v2);
  if (signed_polygon_area({p0, p1, p2}).is_zero())
    throw domain_error("triangle " + name + " (" + v0 + " " + v1 + " " + v2 +
                       ") is collinear");
  triangles.push_back({name, {v0, v1, v2}});
}

Point midpoint(const Point& p, const Point& q) {
  BigRational half(mpz_class(1), mpz_class(2));
  return {(p.x + q.x) * half, (p.y + q.y) * half};
}

Line line_through(const Point& p, const Point& q) {
  if (p == q)
    throw geometry_error(geometry_error::kind::degenerate_line,
                         "line through coincident points");
  BigRational a = q.y - p.y;
  BigRational b = p.x - q.x;
  return Line(a, b, a * p.x + b * p.y);
}

Line perpendicular_through(const Point& p, const Line& l) {
  // direction of the new line = normal (a, b) of l
  BigRational a(-l.b()), b(l.a());
  return Line(a, b, a * p.x + b * p.y);
}

Point intersect(const Line& l1, const Line& l2) {
  mpz_class det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) {
    if (l1 == l2)
      throw geometry_error(geometry_error::kind::coincident_lines,
                           "lines coincide; intersection not unique");
    throw geometry_error(geometry_error::kind::parallel_lines,
                         "parallel lines do not intersect");
  }
  return {BigRational(l1.c() * l2.b() - l2.c() * l1.b(), det),
          BigRational(l1.a() * l2.c() - l2.a() * l1.c(), det)};
}

BigRational sq_dist(const Point& p, const Point& q) {
  BigRational dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

BigRational signed_polygon_area(const std::vector<Point>& vertices) {
  if (vertices.size() < 3)
    throw domain_error("polygon needs at least 3 vertices");
  BigRational twice;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point& p = vertices[i];
    const Point& q = vertices[(i + 1) % vertices.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice * BigRational(mpz_class(1), mpz_class(2));
}

BigRational polygon_area(const std::vector<Point>& vertices) {
  return abs(signed_polygon_area(vertices));
}

Figure build_bm15285_figure(const BigRational& side) {
  if (!(side > BigRational(0)))
    throw domain_error("square side must be positive, got " + side.str());

  Figure fig;
  fig.side = side;
  BigRational zero(0);
  fig.points["A"] = {zero, zero};
  fig.points["B"] = {side, zero};
  fig.points["C"] = {side, side};
  fig.points["D"] = {zero, side};

  Line ac = line_through(fig.point("A"), fig.point("C"));
  Line bd = line_through(fig.point("B"), fig.point("D"));
  fig.points["O"] = intersect(ac, bd);

  fig.points["L"] = midpoint(fig.point("A"), fig.point("O"));
  fig.points["M"] = midpoint(fig.point("B"), fig.point("O"));
  fig.points["N"] = midpoint(fig.point("C"), fig.point("O"));
  fig.points["R"] = midpoint(fig.point("D"), fig.point("O"));

  // each midpoint's perpendicular goes to the diagonal it sits on
  Line pl = perpendicular_through(fig.point("L"), ac);
  Line pm = perpendicular_through(fig.point("M"), bd);
  Line pn = perpendicular_through(fig.point("N"), ac);
  Line pr = perpendicular_through(fig.point("R"), bd);

  fig.points["W"] = intersect(pl, pm);
  fig.points["X"] = intersect(pm, pn);
  fig.points["Y"] = intersect(pn, pr);
  fig.points["Z"] = intersect(pr, pl);

  fig.segments = {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "A"},
                  {"A", "C"}, {"B", "D"},
                  {"W", "X"}, {"X", "Y"}, {"Y", "Z"}, {"Z", "W"},
                  {"L", "M"}, {"M", "N"}, {"N", "R"}, {"R", "L"}};

  fig.add_triangle("T1", "O", "L", "M");
  fig.add_triangle("T2", "O", "M", "N");
  fig.add_triangle("T3", "O", "N", "R");
  fig.add_triangle("T4", "O", "R", "L");
  fig.add_triangle("T5", "L", "W", "M");
  fig.add_triangle("T6", "M", "X", "N");
  fig.add_triangle("T7", "N", "Y", "R");
  fig.add_triangle("T8", "R", "Z", "L");
  fig.add_triangle("T9", "A", "W", "L");
  fig.add_triangle("T10", "A", "L", "Z");
  fig.add_triangle("T11", "B", "X", "M");
  fig.add_triangle("T12", "B", "M", "W");
  fig.add_triangle("T13", "C", "Y", "N");
  fig.add_triangle("T14", "C", "N", "X");
  fig.add_triangle("T15", "D", "Z", "R");
  fig.add_triangle("T16", "D", "R", "Y");
  return fig;
}

namespace {

std::vector<Point> triangle_points(const Figure& fig, const NamedTriangle& t) {
  return {fig.point(t.vertices[0]), fig.point(t.vertices[1]),
          fig.point(t.vertices[2])};
}

}  // namespace

VerificationReport verify_problem_xii(const Figure& fig) {
  if (fig.triangles.size() != 16)
    throw domain_error("problem-xii figure needs 16 triangles, got " +
                       std::to_string(fig.triangles.size()));

  VerificationReport report;
  report.side = fig.side;

  std::vector<BigRational> signed_areas;
  signed_areas.reserve(16);
  for (const NamedTriangle& t : fig.triangles)
    signed_areas.push_back(signed_polygon_area(triangle_points(fig, t)));

  report.T = abs(signed_areas[0]);
  report.lm_sq = sq_dist(fig.point("L"), fig.point("M"));
  report.mn_sq = sq_dist(fig.point("M"), fig.point("N"));
  report.ln_sq = sq_dist(fig.point("L"), fig.point("N"));

  auto& ids = report.identities;

  {
    IdentityResult r{"equal-areas", report.T.str(), report.T.str(), true};
    for (std::size_t i = 1; i < 16; ++i) {
      BigRational area = abs(signed_areas[i]);
      if (!(area == report.T)) {
        r.holds = false;
        r.lhs = "area(" + fig.triangles[0].name + ") = " + report.T.str();
        r.rhs = "area(" + fig.triangles[i].name + ") = " + area.str();
        break;
      }
    }
    ids.push_back(std::move(r));
  }
  {
    IdentityResult r{"positively-oriented triangles", "16", "16", true};
    for (std::size_t i = 0; i < 16; ++i) {
      if (signed_areas[i].sign() <= 0) {
        r.holds = false;
        r.lhs = "signed area(" + fig.triangles[i].name + ") = " +
                signed_areas[i].str();
        r.rhs = "0";
        break;
      }
    }
    ids.push_back(std::move(r));
  }

  BigRational four_t = BigRational(4) * report.T;
  BigRational eight_t = BigRational(8) * report.T;
  ids.push_back({"LM^2 = 4T", report.lm_sq.str(), four_t.str(),
                 report.lm_sq == four_t});
  ids.push_back({"MN^2 = 4T", report.mn_sq.str(), four_t.str(),
                 report.mn_sq == four_t});
  ids.push_back({"LN^2 = 8T", report.ln_sq.str(), eight_t.str(),
                 report.ln_sq == eight_t});
  BigRational pythagoras = report.lm_sq + report.mn_sq;
  ids.push_back({"LM^2 + MN^2 = LN^2", pythagoras.str(), report.ln_sq.str(),
                 pythagoras == report.ln_sq});

  BigRational total;
  for (const BigRational& s : signed_areas) total += abs(s);
  BigRational side_sq = fig.side * fig.side;
  ids.push_back({"sum of areas = side^2", total.str(), side_sq.str(),
                 total == side_sq});

  for (const IdentityResult& r : ids)
    if (!r.holds) throw verification_error(r.name, r.lhs, r.rhs);
  return report;
}

Figure build_ybc7289_figure(const BigRational& side) {
  if (!(side > BigRational(0)))
    throw domain_error("square side must be positive, got " + side.str());

  Figure fig;
  fig.side = side;
  BigRational zero(0);
  fig.points["A"] = {zero, zero};
  fig.points["B"] = {side, zero};
  fig.points["C"] = {side, side};
  fig.points["D"] = {zero, side};
  fig.points["O"] = intersect(line_through(fig.point("A"), fig.point("C")),
                              line_through(fig.point("B"), fig.point("D")));

  fig.segments = {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "A"},
                  {"A", "C"}, {"B", "D"}};

  fig.add_triangle("T1", "O", "A", "B");
  fig.add_triangle("T2", "O", "B", "C");
  fig.add_triangle("T3", "O", "C", "D");
  fig.add_triangle("T4", "O", "D", "A");
  return fig;
}

}  // namespace wedge
