#ifndef HFORGE_TOOLS_RENDER_HPP
#define HFORGE_TOOLS_RENDER_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hforge::tools
{

// Column-aligned plain-text table.
std::string render_table(std::vector<std::string> const &headers,
                         std::vector<std::vector<std::string>> const &rows);

// Human-readable rendering of a JSON report: scalars as "key: value",
// nested objects as indented sections, arrays of objects as tables.
std::string render_text(nlohmann::ordered_json const &report);

// Strings unquoted, everything else compact JSON.
std::string cell(nlohmann::ordered_json const &value);

} // namespace hforge::tools

#endif // HFORGE_TOOLS_RENDER_HPP
