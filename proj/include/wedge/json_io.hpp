#pragma once

#include <string>

#include "wedge/geometry.hpp"
#include "wedge/proofs.hpp"

namespace wedge {

/// Figure JSON with a fixed key order: side, points (alphabetical),
/// segments, triangles (enumeration order, each with its exact area).
/// Every number is canonical rational text; output is bit-stable.
std::string figure_to_json(const Figure& fig);

/// Certificate JSON: {"n", "verdict", "root"} for rational verdicts,
/// {"n", "verdict", "exhaustive_bound", "min_defect", "witness", "narration"}
/// for irrational ones.
std::string certificate_to_json(const IrrationalityCertificate& cert);

}  // namespace wedge
