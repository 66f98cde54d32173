#include "wedge/json_io.hpp"

#include <json.hpp>

namespace wedge {

using ordered_json = nlohmann::ordered_json;

std::string figure_to_json(const Figure& fig) {
  ordered_json j;
  j["side"] = fig.side.str();
  ordered_json points = ordered_json::object();
  for (const auto& [name, p] : fig.points)  // std::map iterates alphabetically
    points[name] = {{"x", p.x.str()}, {"y", p.y.str()}};
  j["points"] = std::move(points);
  ordered_json segments = ordered_json::array();
  for (const auto& seg : fig.segments) segments.push_back({seg[0], seg[1]});
  j["segments"] = std::move(segments);
  ordered_json triangles = ordered_json::array();
  for (const NamedTriangle& t : fig.triangles) {
    BigRational area = polygon_area({fig.point(t.vertices[0]),
                                     fig.point(t.vertices[1]),
                                     fig.point(t.vertices[2])});
    triangles.push_back({{"name", t.name},
                         {"vertices", {t.vertices[0], t.vertices[1], t.vertices[2]}},
                         {"area", area.str()}});
  }
  j["triangles"] = std::move(triangles);
  return j.dump(2) + "\n";
}

std::string certificate_to_json(const IrrationalityCertificate& cert) {
  ordered_json j;
  j["n"] = cert.n;
  if (cert.is_rational) {
    j["verdict"] = "rational";
    j["root"] = cert.root;
  } else {
    j["verdict"] = "irrational";
    j["exhaustive_bound"] = cert.exhaustive_bound;
    j["min_defect"] = cert.min_defect;
    j["witness"] = {{"H", cert.witness.H}, {"S", cert.witness.S}};
    j["narration"] = cert.narration;
  }
  return j.dump(2) + "\n";
}

}  // namespace wedge
