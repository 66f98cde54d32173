#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wedge/geometry.hpp"
#include "wedge/rational.hpp"

namespace wedge {

/// One command per script line. Grammar:
///
///   point       NAME rat rat
///   square      NAME NAME NAME NAME "from" rat rat "side" rat
///   line        NAME "through" NAME NAME
///   perp        NAME "through" NAME "to" NAME
///   midpoint    NAME NAME NAME
///   intersect   NAME NAME NAME
///   segment     NAME NAME
///   triangle    NAME NAME NAME NAME
///   assert_area NAME rat
///   assert_sq_dist NAME NAME rat
///
/// with rat := "-"? INT ("/" POSINT)?, NAME := [A-Za-z][A-Za-z0-9_]*, and
/// "#" starting a comment line. Names must be defined before use and are
/// never redefined; both are checked at parse time.
namespace cmd {

struct PointCmd {
  std::string name;
  BigRational x, y;
  friend bool operator==(const PointCmd&, const PointCmd&) = default;
};

struct SquareCmd {
  std::array<std::string, 4> names;  // counterclockwise from the origin corner
  BigRational x, y, side;
  friend bool operator==(const SquareCmd&, const SquareCmd&) = default;
};

struct LineCmd {
  std::string name, p1, p2;
  friend bool operator==(const LineCmd&, const LineCmd&) = default;
};

struct PerpCmd {
  std::string name, through, to;
  friend bool operator==(const PerpCmd&, const PerpCmd&) = default;
};

struct MidpointCmd {
  std::string name, p1, p2;
  friend bool operator==(const MidpointCmd&, const MidpointCmd&) = default;
};

struct IntersectCmd {
  std::string name, l1, l2;
  friend bool operator==(const IntersectCmd&, const IntersectCmd&) = default;
};

struct SegmentCmd {
  std::string p1, p2;
  friend bool operator==(const SegmentCmd&, const SegmentCmd&) = default;
};

struct TriangleCmd {
  std::string name, v1, v2, v3;
  friend bool operator==(const TriangleCmd&, const TriangleCmd&) = default;
};

struct AssertAreaCmd {
  std::string target;
  BigRational expected;
  friend bool operator==(const AssertAreaCmd&, const AssertAreaCmd&) = default;
};

struct AssertSqDistCmd {
  std::string p1, p2;
  BigRational expected;
  friend bool operator==(const AssertSqDistCmd&, const AssertSqDistCmd&) = default;
};

}  // namespace cmd

using Command = std::variant<cmd::PointCmd, cmd::SquareCmd, cmd::LineCmd,
                             cmd::PerpCmd, cmd::MidpointCmd, cmd::IntersectCmd,
                             cmd::SegmentCmd, cmd::TriangleCmd,
                             cmd::AssertAreaCmd, cmd::AssertSqDistCmd>;

struct SpannedCommand {
  int line = 0;    // 1-based
  int column = 0;  // 1-based column of the command keyword
  Command command;
};

struct Script {
  std::vector<SpannedCommand> commands;

  /// Scripts compare by command content; source spans are ignored, so a
  /// reformatted script equals its original.
  friend bool operator==(const Script& a, const Script& b) {
    if (a.commands.size() != b.commands.size()) return false;
    for (std::size_t i = 0; i < a.commands.size(); ++i)
      if (!(a.commands[i].command == b.commands[i].command)) return false;
    return true;
  }
};

/// Parses and statically checks a script (grammar, arity, literals,
/// definition before use, no redefinition, point/line/triangle kinds).
/// Throws parse_error carrying the 1-based line:column of the offense.
Script parse_script(const std::string& text);

/// Canonical pretty-printer: one command per line, single spaces, canonical
/// rational literals, comments dropped.
std::string format_script(const Script& script);

struct AssertionResult {
  int line = 0;
  std::string description;
  std::string expected, actual;
  bool passed = false;
};

struct ExecutionResult {
  Figure figure;
  std::vector<AssertionResult> assertions;

  bool all_passed() const {
    for (const AssertionResult& a : assertions)
      if (!a.passed) return false;
    return true;
  }
};

/// Runs the script against the geometry kernel. Geometric failures throw
/// execution_error with the command's span; assert_* failures are collected,
/// not fatal. The figure's side is the first square's side (falling back to
/// the largest coordinate for square-less scripts).
ExecutionResult execute(const Script& script);

/// Bundled construction scripts ("bm15285_p12", "ybc7289"), parameterized by
/// the textual substitution variable $side.
const std::map<std::string, std::string>& builtin_scripts();

/// Replaces every occurrence of $side with the given rational literal.
std::string substitute_side(std::string text, const BigRational& side);

}  // namespace wedge
