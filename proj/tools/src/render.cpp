#include <algorithm>
#include <sstream>

#include "hforge_tools/render.hpp"

namespace hforge::tools
{

using nlohmann::ordered_json;

std::string cell(ordered_json const &value)
{
  if (value.is_string())
    return value.get<std::string>();
  if (value.is_null())
    return "-";
  return value.dump();
}

std::string render_table(std::vector<std::string> const &headers,
                         std::vector<std::vector<std::string>> const &rows)
{
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0u; c < headers.size(); ++c)
    width[c] = headers[c].size();
  for (auto const &row : rows) {
    for (std::size_t c = 0u; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream ss;
  auto line = [&](std::vector<std::string> const &cells) {
    std::string text;
    for (std::size_t c = 0u; c < width.size(); ++c) {
      std::string v = c < cells.size() ? cells[c] : "";
      text += v;
      if (c + 1u < width.size())
        text += std::string(width[c] - v.size() + 2u, ' ');
    }
    while (!text.empty() && text.back() == ' ')
      text.pop_back();
    ss << text << '\n';
  };

  line(headers);
  std::vector<std::string> rule;
  for (auto w : width)
    rule.push_back(std::string(w, '-'));
  line(rule);
  for (auto const &row : rows)
    line(row);
  return ss.str();
}

namespace
{

bool is_object_array(ordered_json const &v)
{
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(),
                     [](ordered_json const &e) { return e.is_object(); });
}

void render_into(std::ostringstream &ss, ordered_json const &obj,
                 std::string const &indent)
{
  for (auto const &[key, value] : obj.items()) {
    if (value.is_object() && !value.empty()) {
      ss << indent << key << ":\n";
      render_into(ss, value, indent + "  ");
    } else if (is_object_array(value)) {
      std::vector<std::string> headers;
      for (auto const &row : value) {
        for (auto const &[k, v] : row.items()) {
          if (std::find(headers.begin(), headers.end(), k) == headers.end())
            headers.push_back(k);
        }
      }
      std::vector<std::vector<std::string>> rows;
      for (auto const &row : value) {
        std::vector<std::string> cells;
        for (auto const &h : headers)
          cells.push_back(row.contains(h) ? cell(row[h]) : "");
        rows.push_back(std::move(cells));
      }

      ss << indent << key << ":\n";
      std::istringstream table(render_table(headers, rows));
      for (std::string l; std::getline(table, l);)
        ss << indent << "  " << l << '\n';
    } else {
      ss << indent << key << ": " << cell(value) << '\n';
    }
  }
}

} // namespace

std::string render_text(ordered_json const &report)
{
  std::ostringstream ss;
  if (report.is_object())
    render_into(ss, report, "");
  else
    ss << cell(report) << '\n';
  return ss.str();
}

} // namespace hforge::tools
