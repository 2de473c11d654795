#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "relfix/space.hpp"
#include "relfix/validator.hpp"

namespace relfix {

/// JSON instance documents.
///
/// {
///   "points":   ["a", "b", "c"],
///   "sigma":    [["a","a","0"], ["a","b","1"], ...],   // string rationals
///   "relation": [["a","a"], ["a","b"], ...],
///   "map":      {"a": "b", "b": "b", "c": "a"},
///   "Y":        ["a", "b"],                            // optional, default: all points
///   "x0":       "a",                                   // optional
///   "k":        "1/2",                                 // optional
///   "rho":      {"kind": "power", "params": {"c": "1", "alpha": "1"}} // optional
/// }
///
/// Values are string rationals ("p/q" or integers); no floating point in
/// files. Sigma entries complete symmetrically; with `strict` every ordered
/// pair must be listed. Malformed documents raise InstanceError with a
/// field diagnostic.
Instance parse_instance(std::string_view jsonText, bool strict = false);
Instance load_instance(const std::filesystem::path& path, bool strict = false);

/// Documents with only "points" and "sigma" (enough for axiom checking).
FiniteDistanceSpace parse_space_document(std::string_view jsonText, bool strict = false);
FiniteDistanceSpace load_space_document(const std::filesystem::path& path, bool strict = false);

/// Canonical serialization: stable key order, entries in carrier order,
/// upper-triangular sigma listing. load(serialize(i)) reproduces i exactly.
std::string serialize_instance(const Instance& instance);

} // namespace relfix
