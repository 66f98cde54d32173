#include "wedge/construction.hpp"

#include <cctype>
#include <optional>

namespace wedge {

namespace {

enum class NameKind { point, line, triangle };

const char* kind_word(NameKind k) {
  switch (k) {
    case NameKind::point: return "point";
    case NameKind::line: return "line";
    default: return "triangle";
  }
}

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

class Parser {
public:
  Script run(const std::string& text) {
    Script script;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos
                                                                  : nl - pos);
      ++line_no;
      parse_line(line, line_no, script);
      if (nl == std::string::npos) break;
      pos = nl + 1;
    }
    return script;
  }

private:
  std::map<std::string, NameKind> names_;
  std::vector<Token> tokens_;
  int line_ = 0;

  [[noreturn]] void fail(const std::string& msg, int column) const {
    throw parse_error(msg, line_, column);
  }

  const Token& arg(std::size_t index, const char* what) const {
    if (index >= tokens_.size())
      fail(std::string("missing ") + what + " argument for '" +
               tokens_[0].text + "'",
           tokens_.empty() ? 1 : tokens_.back().column);
    return tokens_[index];
  }

  void expect_keyword(std::size_t index, const std::string& word) const {
    const Token& t = arg(index, word.c_str());
    if (t.text != word) fail("expected '" + word + "', got '" + t.text + "'", t.column);
  }

  void expect_arity(std::size_t count) const {
    if (tokens_.size() > count)
      fail("unexpected token '" + tokens_[count].text + "'", tokens_[count].column);
  }

  std::string define(std::size_t index, NameKind kind) {
    const Token& t = arg(index, "name");
    if (!valid_name(t.text)) fail("invalid name '" + t.text + "'", t.column);
    if (names_.count(t.text)) fail("name '" + t.text + "' already defined", t.column);
    names_.emplace(t.text, kind);
    return t.text;
  }

  std::string use(std::size_t index, NameKind kind) {
    const Token& t = arg(index, kind_word(kind));
    auto it = names_.find(t.text);
    if (it == names_.end()) fail("use of undefined name '" + t.text + "'", t.column);
    if (it->second != kind)
      fail("'" + t.text + "' is a " + kind_word(it->second) + ", expected a " +
               kind_word(kind),
           t.column);
    return t.text;
  }

  BigRational rational(std::size_t index) {
    const Token& t = arg(index, "rational");
    try {
      return BigRational::parse(t.text);
    } catch (const parse_error& e) {
      fail(e.what(), t.column);
    }
  }

  void parse_line(const std::string& line, int line_no, Script& script) {
    line_ = line_no;
    tokens_ = tokenize_line(line);
    if (tokens_.empty()) return;
    if (tokens_[0].text[0] == '#') return;

    const std::string& head = tokens_[0].text;
    Command command;
    if (head == "point") {
      cmd::PointCmd c;
      c.name = define(1, NameKind::point);
      c.x = rational(2);
      c.y = rational(3);
      expect_arity(4);
      command = std::move(c);
    } else if (head == "square") {
      cmd::SquareCmd c;
      for (int i = 0; i < 4; ++i)
        c.names[static_cast<std::size_t>(i)] = define(1 + static_cast<std::size_t>(i), NameKind::point);
      expect_keyword(5, "from");
      c.x = rational(6);
      c.y = rational(7);
      expect_keyword(8, "side");
      c.side = rational(9);
      expect_arity(10);
      command = std::move(c);
    } else if (head == "line") {
      cmd::LineCmd c;
      c.name = define(1, NameKind::line);
      expect_keyword(2, "through");
      c.p1 = use(3, NameKind::point);
      c.p2 = use(4, NameKind::point);
      expect_arity(5);
      command = std::move(c);
    } else if (head == "perp") {
      cmd::PerpCmd c;
      c.name = define(1, NameKind::line);
      expect_keyword(2, "through");
      c.through = use(3, NameKind::point);
      expect_keyword(4, "to");
      c.to = use(5, NameKind::line);
      expect_arity(6);
      command = std::move(c);
    } else if (head == "midpoint") {
      cmd::MidpointCmd c;
      c.name = define(1, NameKind::point);
      c.p1 = use(2, NameKind::point);
      c.p2 = use(3, NameKind::point);
      expect_arity(4);
      command = std::move(c);
    } else if (head == "intersect") {
      cmd::IntersectCmd c;
      c.name = define(1, NameKind::point);
      c.l1 = use(2, NameKind::line);
      c.l2 = use(3, NameKind::line);
      expect_arity(4);
      command = std::move(c);
    } else if (head == "segment") {
      cmd::SegmentCmd c;
      c.p1 = use(1, NameKind::point);
      c.p2 = use(2, NameKind::point);
      expect_arity(3);
      command = std::move(c);
    } else if (head == "triangle") {
      cmd::TriangleCmd c;
      c.name = define(1, NameKind::triangle);
      c.v1 = use(2, NameKind::point);
      c.v2 = use(3, NameKind::point);
      c.v3 = use(4, NameKind::point);
      expect_arity(5);
      command = std::move(c);
    } else if (head == "assert_area") {
      cmd::AssertAreaCmd c;
      c.target = use(1, NameKind::triangle);
      c.expected = rational(2);
      expect_arity(3);
      command = std::move(c);
    } else if (head == "assert_sq_dist") {
      cmd::AssertSqDistCmd c;
      c.p1 = use(1, NameKind::point);
      c.p2 = use(2, NameKind::point);
      c.expected = rational(3);
      expect_arity(4);
      command = std::move(c);
    } else {
      fail("unknown command '" + head + "'", tokens_[0].column);
    }
    script.commands.push_back({line_no, tokens_[0].column, std::move(command)});
  }
};

struct Formatter {
  std::string operator()(const cmd::PointCmd& c) const {
    return "point " + c.name + " " + c.x.str() + " " + c.y.str();
  }
  std::string operator()(const cmd::SquareCmd& c) const {
    return "square " + c.names[0] + " " + c.names[1] + " " + c.names[2] + " " +
           c.names[3] + " from " + c.x.str() + " " + c.y.str() + " side " +
           c.side.str();
  }
  std::string operator()(const cmd::LineCmd& c) const {
    return "line " + c.name + " through " + c.p1 + " " + c.p2;
  }
  std::string operator()(const cmd::PerpCmd& c) const {
    return "perp " + c.name + " through " + c.through + " to " + c.to;
  }
  std::string operator()(const cmd::MidpointCmd& c) const {
    return "midpoint " + c.name + " " + c.p1 + " " + c.p2;
  }
  std::string operator()(const cmd::IntersectCmd& c) const {
    return "intersect " + c.name + " " + c.l1 + " " + c.l2;
  }
  std::string operator()(const cmd::SegmentCmd& c) const {
    return "segment " + c.p1 + " " + c.p2;
  }
  std::string operator()(const cmd::TriangleCmd& c) const {
    return "triangle " + c.name + " " + c.v1 + " " + c.v2 + " " + c.v3;
  }
  std::string operator()(const cmd::AssertAreaCmd& c) const {
    return "assert_area " + c.target + " " + c.expected.str();
  }
  std::string operator()(const cmd::AssertSqDistCmd& c) const {
    return "assert_sq_dist " + c.p1 + " " + c.p2 + " " + c.expected.str();
  }
};

class Interpreter {
public:
  ExecutionResult run(const Script& script) {
    for (const SpannedCommand& sc : script.commands) {
      line_ = sc.line;
      column_ = sc.column;
      try {
        std::visit([this](const auto& c) { apply(c); }, sc.command);
      } catch (const geometry_error& e) {
        throw execution_error(e.what(), line_, column_);
      } catch (const domain_error& e) {
        throw execution_error(e.what(), line_, column_);
      }
    }
    if (side_) {
      result_.figure.side = *side_;
    } else {
      // square-less script: cover the figure with the largest coordinate
      BigRational extent(1);
      for (const auto& [name, p] : result_.figure.points) {
        if (p.x > extent) extent = p.x;
        if (p.y > extent) extent = p.y;
      }
      result_.figure.side = extent;
    }
    return std::move(result_);
  }

private:
  ExecutionResult result_;
  std::map<std::string, Line> lines_;
  std::optional<BigRational> side_;
  int line_ = 0, column_ = 0;

  Figure& fig() { return result_.figure; }

  void apply(const cmd::PointCmd& c) { fig().points[c.name] = {c.x, c.y}; }

  void apply(const cmd::SquareCmd& c) {
    if (!(c.side > BigRational(0)))
      throw domain_error("square side must be positive, got " + c.side.str());
    fig().points[c.names[0]] = {c.x, c.y};
    fig().points[c.names[1]] = {c.x + c.side, c.y};
    fig().points[c.names[2]] = {c.x + c.side, c.y + c.side};
    fig().points[c.names[3]] = {c.x, c.y + c.side};
    for (int i = 0; i < 4; ++i)
      fig().segments.push_back({c.names[static_cast<std::size_t>(i)],
                                c.names[static_cast<std::size_t>((i + 1) % 4)]});
    if (!side_) side_ = c.side;
  }

  void apply(const cmd::LineCmd& c) {
    lines_.emplace(c.name, line_through(fig().point(c.p1), fig().point(c.p2)));
  }

  void apply(const cmd::PerpCmd& c) {
    lines_.emplace(c.name,
                   perpendicular_through(fig().point(c.through), lines_.at(c.to)));
  }

  void apply(const cmd::MidpointCmd& c) {
    fig().points[c.name] = midpoint(fig().point(c.p1), fig().point(c.p2));
  }

  void apply(const cmd::IntersectCmd& c) {
    fig().points[c.name] = intersect(lines_.at(c.l1), lines_.at(c.l2));
  }

  void apply(const cmd::SegmentCmd& c) { fig().segments.push_back({c.p1, c.p2}); }

  void apply(const cmd::TriangleCmd& c) {
    fig().add_triangle(c.name, c.v1, c.v2, c.v3);
  }

  void apply(const cmd::AssertAreaCmd& c) {
    const NamedTriangle* found = nullptr;
    for (const NamedTriangle& t : fig().triangles)
      if (t.name == c.target) found = &t;
    if (!found) throw domain_error("unknown triangle '" + c.target + "'");
    BigRational actual = polygon_area({fig().point(found->vertices[0]),
                                       fig().point(found->vertices[1]),
                                       fig().point(found->vertices[2])});
    result_.assertions.push_back({line_, "assert_area " + c.target,
                                  c.expected.str(), actual.str(),
                                  actual == c.expected});
  }

  void apply(const cmd::AssertSqDistCmd& c) {
    BigRational actual = sq_dist(fig().point(c.p1), fig().point(c.p2));
    result_.assertions.push_back({line_, "assert_sq_dist " + c.p1 + " " + c.p2,
                                  c.expected.str(), actual.str(),
                                  actual == c.expected});
  }
};

}  // namespace

Script parse_script(const std::string& text) { return Parser().run(text); }

std::string format_script(const Script& script) {
  std::string out;
  for (const SpannedCommand& sc : script.commands) {
    out += std::visit(Formatter{}, sc.command);
    out += '\n';
  }
  return out;
}

ExecutionResult execute(const Script& script) { return Interpreter().run(script); }

std::string substitute_side(std::string text, const BigRational& side) {
  const std::string var = "$side";
  std::string value = side.str();
  std::size_t pos = 0;
  while ((pos = text.find(var, pos)) != std::string::npos) {
    text.replace(pos, var.size(), value);
    pos += value.size();
  }
  return text;
}

const std::map<std::string, std::string>& builtin_scripts() {
  static const std::map<std::string, std::string> scripts = {
      {"bm15285_p12",
       R"(# BM 15285, problem xii: a square of side $side cut into 16 wedges.
square A B C D from 0 0 side $side
line AC through A C
line BD through B D
segment A C
segment B D
intersect O AC BD
midpoint L A O
midpoint M B O
midpoint N C O
midpoint R D O
perp PL through L to AC
perp PM through M to BD
perp PN through N to AC
perp PR through R to BD
intersect W PL PM
intersect X PM PN
intersect Y PN PR
intersect Z PR PL
segment W X
segment X Y
segment Y Z
segment Z W
segment L M
segment M N
segment N R
segment R L
triangle T1 O L M
triangle T2 O M N
triangle T3 O N R
triangle T4 O R L
triangle T5 L W M
triangle T6 M X N
triangle T7 N Y R
triangle T8 R Z L
triangle T9 A W L
triangle T10 A L Z
triangle T11 B X M
triangle T12 B M W
triangle T13 C Y N
triangle T14 C N X
triangle T15 D Z R
triangle T16 D R Y
)"},
      {"ybc7289",
       R"(# YBC 7289: a square with both diagonals.
# The assert values are the tablet's numbers and hold for side 30.
square A B C D from 0 0 side $side
line AC through A C
line BD through B D
segment A C
segment B D
intersect O AC BD
triangle T1 O A B
triangle T2 O B C
triangle T3 O C D
triangle T4 O D A
assert_sq_dist B D 1800
assert_area T1 225
)"}};
  return scripts;
}

}  // namespace wedge
