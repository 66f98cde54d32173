#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wedge {

/// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Undefined arithmetic: division by zero and friends.
class arithmetic_error : public error {
public:
  using error::error;
};

/// Input outside an operation's domain (negative radicand, side <= 0, ...).
class domain_error : public error {
public:
  using error::error;
};

/// Malformed text. Carries either a character offset (numeral and rational
/// literals) or a 1-based line:column position (construction scripts).
class parse_error : public error {
public:
  parse_error(const std::string& msg, std::size_t offset)
      : error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  parse_error(const std::string& msg, int line, int column)
      : error(msg + " (at " + std::to_string(line) + ":" +
              std::to_string(column) + ")"),
        offset_(0), line_(line), column_(column) {}

  std::size_t offset() const { return offset_; }
  int line() const { return line_; }
  int column() const { return column_; }

private:
  std::size_t offset_ = 0;
  int line_ = 0;
  int column_ = 0;
};

/// Degenerate or impossible geometric operation.
class geometry_error : public error {
public:
  enum class kind { degenerate_line, parallel_lines, coincident_lines };

  geometry_error(kind k, const std::string& msg) : error(msg), kind_(k) {}

  kind which() const { return kind_; }

private:
  kind kind_;
};

/// A checked identity failed. Carries the identity's name and the exact
/// text of both sides.
class verification_error : public error {
public:
  verification_error(const std::string& identity, const std::string& lhs,
                     const std::string& rhs)
      : error("identity '" + identity + "' failed: " + lhs + " != " + rhs),
        identity_(identity), lhs_(lhs), rhs_(rhs) {}

  const std::string& identity() const { return identity_; }
  const std::string& lhs() const { return lhs_; }
  const std::string& rhs() const { return rhs_; }

private:
  std::string identity_, lhs_, rhs_;
};

/// Script command failed while executing; carries the command's source span.
class execution_error : public error {
public:
  execution_error(const std::string& msg, int line, int column)
      : error(msg + " (at " + std::to_string(line) + ":" +
              std::to_string(column) + ")"),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

/// descent_step needs an even hypotenuse; carries the odd witness.
class descent_inapplicable : public error {
public:
  explicit descent_inapplicable(unsigned long long h)
      : error("descent step requires even H, got H = " + std::to_string(h)),
        h_(h) {}

  unsigned long long h() const { return h_; }

private:
  unsigned long long h_;
};

}  // namespace wedge
