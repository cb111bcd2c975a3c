#ifndef HFORGE_CERTIFICATE_HPP
#define HFORGE_CERTIFICATE_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace hforge
{

enum class Verdict
{
  valid,
  invalid,
  indecomposable,
  inconclusive,
  monodromy_is_Ad,
  infeasible,
  feasible
};

std::string_view to_string(Verdict verdict);

struct Check
{
  std::string name;
  bool passed;
  std::string detail;
};

// A verdict together with everything needed to re-check it.
struct Certificate
{
  Verdict verdict = Verdict::inconclusive;
  std::string rule;
  std::vector<Check> checks;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();

  bool positive() const;

  // nullptr if no check of that name was recorded.
  Check const *find(std::string_view name) const;

  bool passed(std::string_view name) const;

  void add(std::string name, bool passed, std::string detail = {})
  { checks.push_back({std::move(name), passed, std::move(detail)}); }
};

nlohmann::ordered_json to_json(Certificate const &cert);

} // namespace hforge

#endif // HFORGE_CERTIFICATE_HPP
