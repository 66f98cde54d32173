#include "wedge/svg.hpp"

namespace wedge {

namespace {

const char* kInk = "#20201c";
const char* kShadeColors[2] = {"#d9cba8", "#a8916d"};

}  // namespace

std::string render_svg(const Figure& fig, const SvgOptions& options) {
  const BigRational& s = fig.side;
  BigRational half = s * BigRational(mpz_class(1), mpz_class(2));
  auto dec = [](const BigRational& v) { return approx_decimal(v, 6); };
  auto flip = [&](const BigRational& y) { return s - y; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!-- y axis flipped: svg y = side - figure y, so the origin corner "
         "renders bottom-left -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
         dec(s) + " " + dec(s) + "\">\n";

  if (options.shade) {
    out += "  <g stroke=\"none\">\n";
    for (std::size_t i = 0; i < fig.triangles.size(); ++i) {
      const NamedTriangle& t = fig.triangles[i];
      out += "    <polygon fill=\"";
      out += kShadeColors[i % 2];
      out += "\" points=\"";
      for (int v = 0; v < 3; ++v) {
        const Point& p = fig.point(t.vertices[static_cast<std::size_t>(v)]);
        if (v) out += ' ';
        out += dec(p.x) + "," + dec(flip(p.y));
      }
      out += "\"/>\n";
    }
    out += "  </g>\n";
  }

  out += "  <g fill=\"none\" stroke=\"" + std::string(kInk) + "\" stroke-width=\"" +
         dec(s / BigRational(200)) + "\">\n";
  for (const auto& seg : fig.segments) {
    const Point& p = fig.point(seg[0]);
    const Point& q = fig.point(seg[1]);
    out += "    <line x1=\"" + dec(p.x) + "\" y1=\"" + dec(flip(p.y)) +
           "\" x2=\"" + dec(q.x) + "\" y2=\"" + dec(flip(q.y)) + "\"/>\n";
  }
  out += "  </g>\n";

  out += "  <g fill=\"" + std::string(kInk) + "\">\n";
  for (const auto& [name, p] : fig.points)
    out += "    <circle cx=\"" + dec(p.x) + "\" cy=\"" + dec(flip(p.y)) +
           "\" r=\"" + dec(s / BigRational(150)) + "\"/>\n";
  out += "  </g>\n";

  // labels sit toward the figure's interior so they stay inside the viewBox
  BigRational offset = s / BigRational(25);
  out += "  <g font-family=\"monospace\" font-size=\"" + dec(s / BigRational(20)) +
         "\" fill=\"" + std::string(kInk) + "\" text-anchor=\"middle\">\n";
  for (const auto& [name, p] : fig.points) {
    BigRational lx = p.x + (p.x > half ? -offset : offset);
    BigRational ly = p.y + (p.y > half ? -offset : offset);
    out += "    <text x=\"" + dec(lx) + "\" y=\"" + dec(flip(ly)) + "\">" + name +
           "</text>\n";
  }
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace wedge
