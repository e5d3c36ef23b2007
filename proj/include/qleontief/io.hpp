#pragma once

// JSON loaders for posets, utilities, down-sets and points.
//
// Poset:     {"elements": [...], "covers": [[lo, hi], ...]}
//            {"leq": [[a, b], ...]}          (reflexive pairs may be omitted)
//            {"chain": [...]} | {"antichain": [...]}
//            {"product": [<poset>, ...]} | {"grid": [[v, ...], ...]}
// Utility:   {"kind": "tabulated", "poset": <poset>, "values": {id: "p/q"} | [...]}
//            {"kind": "classical", "a": [...], "grid": [[v, ...], ...]}
//            {"kind": "min_product", "factors": [<utility>, ...]}
//            {"kind": "affine", "base": <utility>, "scale": s, "shift": b}
// Down-set:  {"generators": [<point>, ...]} | {"members": [<point>, ...]}
// Point:     "id" | [coordinate ids] | {"point": <point>}

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qleontief/closed_form.hpp"
#include "qleontief/product.hpp"
#include "qleontief/utility.hpp"

namespace qleontief::io {

/// Malformed or inconsistent input. The message names the file and, where
/// known, the JSON location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedUtility {
  Utility utility;
  /// Present when the domain is a product.
  std::optional<ProductSpace> space;
  /// Present for the classical kind.
  std::optional<ClassicalLeontief<Rational>> classical;
};

nlohmann::json read_json(const std::filesystem::path& path);

/// The poset described by `doc`; products are returned through `space`.
FinitePoset parse_poset(const nlohmann::json& doc, std::optional<ProductSpace>* space = nullptr);
LoadedUtility parse_utility(const nlohmann::json& doc);
Element parse_point(const nlohmann::json& doc, const FinitePoset& poset);
DownSet parse_downset(const nlohmann::json& doc, const FinitePoset& poset);
Rational parse_scalar(const nlohmann::json& doc);

/// File loaders; every failure becomes an InputError prefixed by the path.
LoadedUtility load_utility(const std::filesystem::path& path);
Element load_point(const std::filesystem::path& path, const FinitePoset& poset);
DownSet load_downset(const std::filesystem::path& path, const FinitePoset& poset);

}  // namespace qleontief::io
