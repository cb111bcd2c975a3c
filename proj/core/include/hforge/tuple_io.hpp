#ifndef HFORGE_TUPLE_IO_HPP
#define HFORGE_TUPLE_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hurwitz_tuple.hpp"
#include "permutation.hpp"

namespace hforge
{

// Wire form of a permutation: disjoint cycles in normal form, e.g.
// [[1,2,3],[4,5]], with fixed points implied by the degree.
nlohmann::ordered_json cycles_to_json(Permutation const &perm);

// {"degree": d, "cycles": [...]}
nlohmann::ordered_json permutation_to_json(Permutation const &perm);
Permutation permutation_from_json(nlohmann::ordered_json const &doc);

// {"degree", "entries", "infinity_index"} with a 1-based infinity_index.
nlohmann::ordered_json tuple_to_json(HurwitzTuple const &t);

struct TupleDocument
{
  HurwitzTuple tuple;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

// Tuple file:
//   {"degree": d, "entries": [cycles...], "infinity_index": k|null,
//    "meta": {...}}
// with a 1-based infinity_index. Parsing an emitted document and emitting
// it again reproduces it byte for byte.
std::string emit_tuple(HurwitzTuple const &t,
                       nlohmann::ordered_json const &meta =
                         nlohmann::ordered_json::object());

// Throws ParseError (with line/column) on malformed JSON and SchemaError
// listing every violation on well-formed JSON of the wrong shape.
TupleDocument parse_tuple(std::string_view text);

TupleDocument read_tuple_file(std::filesystem::path const &path);

} // namespace hforge

#endif // HFORGE_TUPLE_IO_HPP
