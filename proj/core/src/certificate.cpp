#include "hforge/certificate.hpp"

namespace hforge
{

std::string_view to_string(Verdict verdict)
{
  switch (verdict) {
    case Verdict::valid: return "valid";
    case Verdict::invalid: return "invalid";
    case Verdict::indecomposable: return "indecomposable";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::monodromy_is_Ad: return "monodromy_is_Ad";
    case Verdict::infeasible: return "infeasible";
    case Verdict::feasible: return "feasible";
  }
  return "unknown";
}

bool Certificate::positive() const
{
  switch (verdict) {
    case Verdict::valid:
    case Verdict::indecomposable:
    case Verdict::monodromy_is_Ad:
    case Verdict::feasible:
      return true;
    default:
      return false;
  }
}

Check const *Certificate::find(std::string_view name) const
{
  for (auto const &check : checks) {
    if (check.name == name)
      return &check;
  }
  return nullptr;
}

bool Certificate::passed(std::string_view name) const
{
  auto check = find(name);
  return check && check->passed;
}

nlohmann::ordered_json to_json(Certificate const &cert)
{
  nlohmann::ordered_json res;
  res["verdict"] = std::string(to_string(cert.verdict));
  res["rule"] = cert.rule;

  auto checks = nlohmann::ordered_json::array();
  for (auto const &check : cert.checks) {
    nlohmann::ordered_json c;
    c["name"] = check.name;
    c["passed"] = check.passed;
    if (!check.detail.empty())
      c["detail"] = check.detail;
    checks.push_back(std::move(c));
  }
  res["checks"] = std::move(checks);
  res["evidence"] = cert.evidence;
  return res;
}

} // namespace hforge
