#include <fstream>
#include <sstream>

#include "hforge/errors.hpp"
#include "hforge/tuple_io.hpp"

namespace hforge
{

using nlohmann::ordered_json;

ordered_json cycles_to_json(Permutation const &perm)
{
  auto res = ordered_json::array();
  for (auto const &cycle : perm.cycles())
    res.push_back(cycle);
  return res;
}

ordered_json permutation_to_json(Permutation const &perm)
{
  ordered_json res;
  res["degree"] = perm.degree();
  res["cycles"] = cycles_to_json(perm);
  return res;
}

ordered_json tuple_to_json(HurwitzTuple const &t)
{
  ordered_json res;
  res["degree"] = t.degree();
  auto entries = ordered_json::array();
  for (auto const &p : t.entries())
    entries.push_back(cycles_to_json(p));
  res["entries"] = std::move(entries);
  if (t.infinity_index())
    res["infinity_index"] = *t.infinity_index() + 1u;
  else
    res["infinity_index"] = nullptr;
  return res;
}

namespace
{

// Validates a cycle list against `degree`, appending problems to `issues`.
std::optional<Permutation> cycles_from_json(ordered_json const &cycles,
                                            std::size_t degree,
                                            std::string const &where,
                                            std::vector<std::string> &issues)
{
  if (!cycles.is_array()) {
    issues.push_back(where + ": expected an array of cycles");
    return std::nullopt;
  }

  std::vector<Cycle> parsed;
  std::vector<bool> used(degree + 1u, false);
  bool ok = true;

  for (std::size_t c = 0u; c < cycles.size(); ++c) {
    auto const &cycle = cycles[c];
    std::string cwhere = where + "[" + std::to_string(c) + "]";
    if (!cycle.is_array() || cycle.empty()) {
      issues.push_back(cwhere + ": expected a nonempty array of points");
      ok = false;
      continue;
    }

    Cycle pts;
    for (auto const &x : cycle) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 1 ||
          x.get<std::int64_t>() > static_cast<std::int64_t>(degree)) {
        issues.push_back(cwhere + ": point " + x.dump() +
                         " is not an integer in 1.." + std::to_string(degree));
        ok = false;
        continue;
      }
      auto p = x.get<Point>();
      if (used[p]) {
        issues.push_back(cwhere + ": point " + std::to_string(p) +
                         " repeated; cycles must be disjoint");
        ok = false;
        continue;
      }
      used[p] = true;
      pts.push_back(p);
    }
    parsed.push_back(std::move(pts));
  }

  if (!ok)
    return std::nullopt;
  return Permutation::from_cycles(degree, parsed);
}

std::optional<std::size_t> degree_from_json(ordered_json const &doc,
                                            std::vector<std::string> &issues)
{
  if (!doc.contains("degree")) {
    issues.push_back("missing field \"degree\"");
    return std::nullopt;
  }
  auto const &deg = doc["degree"];
  if (!deg.is_number_integer() || deg.get<std::int64_t>() < 1 ||
      deg.get<std::int64_t>() > static_cast<std::int64_t>(Permutation::max_degree)) {
    issues.push_back("\"degree\" must be an integer in 1.." +
                     std::to_string(Permutation::max_degree));
    return std::nullopt;
  }
  return deg.get<std::size_t>();
}

} // namespace

Permutation permutation_from_json(ordered_json const &doc)
{
  std::vector<std::string> issues;
  if (!doc.is_object())
    throw SchemaError({"permutation must be a JSON object"});

  auto degree = degree_from_json(doc, issues);
  std::optional<Permutation> perm;
  if (!doc.contains("cycles"))
    issues.push_back("missing field \"cycles\"");
  else if (degree)
    perm = cycles_from_json(doc["cycles"], *degree, "cycles", issues);

  if (!issues.empty() || !perm)
    throw SchemaError(std::move(issues));
  return *perm;
}

std::string emit_tuple(HurwitzTuple const &t, ordered_json const &meta)
{
  std::ostringstream ss;
  ss << "{\n";
  ss << "  \"degree\": " << t.degree() << ",\n";

  if (t.size() == 0u) {
    ss << "  \"entries\": [],\n";
  } else {
    ss << "  \"entries\": [\n";
    for (std::size_t i = 0u; i < t.size(); ++i)
      ss << "    " << cycles_to_json(t[i]).dump()
         << (i + 1u < t.size() ? ",\n" : "\n");
    ss << "  ],\n";
  }

  ss << "  \"infinity_index\": ";
  if (t.infinity_index())
    ss << *t.infinity_index() + 1u;
  else
    ss << "null";
  ss << ",\n";

  // nest the pretty-printed meta object two spaces deeper
  std::string meta_text = (meta.is_null() ? ordered_json::object() : meta).dump(2);
  std::string indented;
  for (char c : meta_text) {
    indented += c;
    if (c == '\n')
      indented += "  ";
  }
  ss << "  \"meta\": " << indented << "\n";
  ss << "}\n";
  return ss.str();
}

TupleDocument parse_tuple(std::string_view text)
{
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (nlohmann::json::parse_error const &e) {
    // e.byte is 1-based; translate into line and column
    std::size_t line = 1u, column = 1u;
    std::size_t limit = e.byte == 0u ? 0u : std::min(e.byte - 1u, text.size());
    for (std::size_t i = 0u; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1u;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) +
                       ", column " + std::to_string(column) + ": " + e.what(),
                     line, column);
  }

  std::vector<std::string> issues;
  if (!doc.is_object())
    throw SchemaError({"tuple document must be a JSON object"});

  for (auto const &[key, value] : doc.items()) {
    if (key != "degree" && key != "entries" && key != "infinity_index" &&
        key != "meta")
      issues.push_back("unknown field \"" + key + "\"");
  }

  auto degree = degree_from_json(doc, issues);

  std::vector<Permutation> entries;
  if (!doc.contains("entries")) {
    issues.push_back("missing field \"entries\"");
  } else if (!doc["entries"].is_array()) {
    issues.push_back("\"entries\" must be an array");
  } else if (degree) {
    auto const &arr = doc["entries"];
    for (std::size_t i = 0u; i < arr.size(); ++i) {
      auto perm = cycles_from_json(arr[i], *degree,
                                   "entries[" + std::to_string(i) + "]", issues);
      if (perm)
        entries.push_back(std::move(*perm));
    }
  }

  std::optional<std::size_t> infinity;
  if (doc.contains("infinity_index") && !doc["infinity_index"].is_null()) {
    auto const &inf = doc["infinity_index"];
    std::size_t count = doc.contains("entries") && doc["entries"].is_array()
                          ? doc["entries"].size()
                          : 0u;
    if (!inf.is_number_integer() || inf.get<std::int64_t>() < 1 ||
        inf.get<std::int64_t>() > static_cast<std::int64_t>(count))
      issues.push_back("\"infinity_index\" must be null or an integer in 1.." +
                       std::to_string(count));
    else
      infinity = inf.get<std::size_t>() - 1u;
  }

  ordered_json meta = ordered_json::object();
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object())
      issues.push_back("\"meta\" must be an object");
    else
      meta = doc["meta"];
  }

  if (!issues.empty())
    throw SchemaError(std::move(issues));

  return {HurwitzTuple(*degree, std::move(entries), infinity), std::move(meta)};
}

TupleDocument read_tuple_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());

  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_tuple(ss.str());
}

} // namespace hforge
