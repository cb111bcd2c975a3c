#ifndef HFORGE_ERRORS_HPP
#define HFORGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hforge
{

// Raised when two objects that must share a degree do not.
class DegreeMismatch : public std::invalid_argument
{
public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
  : std::invalid_argument("degree mismatch: " + std::to_string(lhs) +
                          " vs " + std::to_string(rhs))
  {}
};

// Raised when the Riemann-Hurwitz count of a tuple is odd or negative.
// Only corrupted input can trigger this.
class GenusError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Raised when two independent routes disagree, e.g. the 3-cycle criterion says A_d but
// the stabilizer chain order says otherwise. Indicates an engine bug.
class InternalInconsistency : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error
{
public:
  ParseError(std::string const &what, std::size_t line, std::size_t column)
  : std::runtime_error(what), _line(line), _column(column)
  {}

  std::size_t line() const { return _line; }
  std::size_t column() const { return _column; }

private:
  std::size_t _line;
  std::size_t _column;
};

// A well-formed JSON document that does not match the tuple schema.
class SchemaError : public std::runtime_error
{
public:
  explicit SchemaError(std::vector<std::string> issues)
  : std::runtime_error(join(issues)), _issues(std::move(issues))
  {}

  std::vector<std::string> const &issues() const { return _issues; }

private:
  static std::string join(std::vector<std::string> const &issues)
  {
    std::string res = "schema violation";
    for (auto const &issue : issues)
      res += "\n  - " + issue;
    return res;
  }

  std::vector<std::string> _issues;
};

} // namespace hforge

#endif // HFORGE_ERRORS_HPP
