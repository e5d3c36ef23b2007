#include "qleontief/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qleontief/combinators.hpp"
#include "qleontief/oracle.hpp"

namespace qleontief::io {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where.empty() ? what : where + ": " + what);
}

const json& member(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

std::vector<std::string> id_list(const json& doc, const std::string& where) {
  if (!doc.is_array()) fail(where, "expected an array of ids");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_string()) fail(where + "/" + std::to_string(i), "expected a string id");
    ids.push_back(doc[i].get<std::string>());
  }
  return ids;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& doc, const std::string& where) {
  if (!doc.is_array()) fail(where, "expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& p = doc[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      fail(where + "/" + std::to_string(i), "expected a pair of string ids");
    }
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

Element lookup(const FinitePoset& p, const std::string& id, const std::string& where) {
  if (auto e = p.find(id)) return *e;
  fail(where, "unknown element \"" + id + "\"");
}

Rational scalar_at(const json& doc, const std::string& where) {
  try {
    return parse_scalar(doc);
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

std::vector<std::vector<Rational>> grid_axes(const json& doc, const std::string& where) {
  if (!doc.is_array() || doc.empty()) fail(where, "expected a nonempty array of axes");
  std::vector<std::vector<Rational>> axes;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!doc[i].is_array() || doc[i].empty()) fail(at, "expected a nonempty array of values");
    std::vector<Rational> axis;
    for (std::size_t k = 0; k < doc[i].size(); ++k) axis.push_back(scalar_at(doc[i][k], at + "/" + std::to_string(k)));
    for (std::size_t k = 1; k < axis.size(); ++k) {
      if (!(axis[k - 1] < axis[k])) fail(at, "grid values must be strictly increasing");
    }
    axes.push_back(std::move(axis));
  }
  return axes;
}

FinitePoset poset_at(const json& doc, const std::string& where, std::optional<ProductSpace>* space);

ProductSpace product_at(const json& doc, const std::string& where) {
  if (doc.contains("grid")) return ProductSpace::grid(grid_axes(doc["grid"], where + "/grid"));
  const auto& factors = member(doc, "product", where);
  if (!factors.is_array() || factors.empty()) fail(where + "/product", "expected a nonempty array of posets");
  std::vector<FinitePoset> posets;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    posets.push_back(poset_at(factors[i], where + "/product/" + std::to_string(i), nullptr));
  }
  return ProductSpace(std::move(posets));
}

FinitePoset poset_at(const json& doc, const std::string& where, std::optional<ProductSpace>* space) {
  if (!doc.is_object()) fail(where, "expected a poset object");
  try {
    if (doc.contains("product") || doc.contains("grid")) {
      ProductSpace product = product_at(doc, where);
      FinitePoset p = product.poset();
      if (space) *space = std::move(product);
      return p;
    }
    if (doc.contains("chain")) return FinitePoset::chain(id_list(doc["chain"], where + "/chain"));
    if (doc.contains("antichain")) return FinitePoset::antichain(id_list(doc["antichain"], where + "/antichain"));
    if (doc.contains("leq")) {
      const auto pairs = pair_list(doc["leq"], where + "/leq");
      std::vector<std::string> ids;
      if (doc.contains("elements")) ids = id_list(doc["elements"], where + "/elements");
      std::map<std::string, std::size_t> index;
      for (const auto& id : ids) index.emplace(id, index.size());
      for (const auto& [a, b] : pairs) {
        for (const auto& id : {a, b}) {
          if (index.emplace(id, index.size()).second) ids.push_back(id);
        }
      }
      if (index.size() != ids.size()) fail(where + "/elements", "duplicate element id");
      Relation leq(ids.size(), boost::dynamic_bitset<>(ids.size()));
      for (std::size_t i = 0; i < ids.size(); ++i) leq[i].set(i);
      for (const auto& [a, b] : pairs) leq[index.at(a)].set(index.at(b));
      return FinitePoset::from_relation(ids, leq);
    }
    if (doc.contains("elements")) {
      const auto ids = id_list(doc["elements"], where + "/elements");
      std::map<std::string, Element> index;
      for (const auto& id : ids) {
        if (!index.emplace(id, index.size()).second) fail(where + "/elements", "duplicate element id \"" + id + "\"");
      }
      std::vector<std::pair<Element, Element>> covers;
      if (doc.contains("covers")) {
        for (const auto& [a, b] : pair_list(doc["covers"], where + "/covers")) {
          for (const auto& id : {a, b}) {
            if (!index.count(id)) fail(where + "/covers", "unknown element \"" + id + "\"");
          }
          covers.emplace_back(index.at(a), index.at(b));
        }
      }
      return FinitePoset::from_covers(ids, covers);
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where, "poset needs one of \"elements\", \"leq\", \"chain\", \"antichain\", \"product\", \"grid\"");
}

std::vector<Element> point_list(const json& doc, const FinitePoset& poset, const std::string& where) {
  if (!doc.is_array()) fail(where, "expected an array of points");
  std::vector<Element> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    try {
      out.push_back(parse_point(doc[i], poset));
    } catch (const InputError& e) {
      fail(at, e.what());
    }
  }
  return out;
}

LoadedUtility utility_at(const json& doc, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected a utility object");
  const std::string kind = doc.value("kind", std::string(doc.contains("poset") ? "tabulated" : ""));
  try {
    if (kind == "tabulated") {
      std::optional<ProductSpace> space;
      auto poset = std::make_shared<const FinitePoset>(poset_at(member(doc, "poset", where), where + "/poset", &space));
      const auto& values = member(doc, "values", where);
      std::vector<std::optional<Rational>> table(poset->size());
      if (values.is_array()) {
        if (values.size() != poset->size()) fail(where + "/values", "expected one value per element");
        for (std::size_t i = 0; i < values.size(); ++i) table[i] = scalar_at(values[i], where + "/values/" + std::to_string(i));
      } else if (values.is_object()) {
        for (const auto& [id, v] : values.items()) {
          table[lookup(*poset, id, where + "/values")] = scalar_at(v, where + "/values/" + id);
        }
      } else {
        fail(where + "/values", "expected an array or an object");
      }
      std::vector<Rational> resolved;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (!table[i]) fail(where + "/values", "no value for \"" + poset->id(i) + "\"");
        resolved.push_back(*table[i]);
      }
      Utility u(space ? space->poset_ptr() : poset, std::move(resolved));
      return LoadedUtility{std::move(u), std::move(space), std::nullopt};
    }
    if (kind == "classical") {
      std::vector<Rational> a;
      const auto& coeffs = member(doc, "a", where);
      if (!coeffs.is_array()) fail(where + "/a", "expected an array");
      for (std::size_t i = 0; i < coeffs.size(); ++i) a.push_back(scalar_at(coeffs[i], where + "/a/" + std::to_string(i)));
      ProductSpace space = ProductSpace::grid(grid_axes(member(doc, "grid", where), where + "/grid"));
      ClassicalLeontief<Rational> form(a);
      if (form.dimension() != space.arity()) fail(where, "coefficient and grid dimensions differ");
      return LoadedUtility{tabulate(form, space), space, form};
    }
    if (kind == "min_product") {
      const auto& factors = member(doc, "factors", where);
      if (!factors.is_array() || factors.empty()) fail(where + "/factors", "expected a nonempty array");
      std::vector<Utility> parts;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        parts.push_back(certify(utility_at(factors[i], where + "/factors/" + std::to_string(i)).utility));
      }
      auto product = min_product(parts);
      return LoadedUtility{std::move(product.utility), std::move(product.space), std::nullopt};
    }
    if (kind == "affine") {
      LoadedUtility base = utility_at(member(doc, "base", where), where + "/base");
      const Rational scale = scalar_at(member(doc, "scale", where), where + "/scale");
      const Rational shift = doc.contains("shift") ? scalar_at(doc["shift"], where + "/shift") : Rational(0);
      Utility certified = certify(base.utility);
      base.utility = affine_transform(certified, scale, shift);
      base.classical.reset();
      return base;
    }
  } catch (const InputError&) {
    throw;
  } catch (const CertificationError& e) {
    fail(where, std::string("component is not quasi-Leontief: ") + e.what());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where, "unknown utility kind \"" + kind + "\"");
}

}  // namespace

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Rational parse_scalar(const nlohmann::json& doc) {
  if (doc.is_number_integer()) return Rational(doc.get<std::int64_t>());
  if (doc.is_string()) return parse_rational(doc.get<std::string>());
  if (doc.is_number_float()) return parse_rational(doc.dump());
  throw std::invalid_argument("expected a number or a \"p/q\" string");
}

FinitePoset parse_poset(const nlohmann::json& doc, std::optional<ProductSpace>* space) {
  return poset_at(doc, "", space);
}

LoadedUtility parse_utility(const nlohmann::json& doc) { return utility_at(doc, ""); }

Element parse_point(const nlohmann::json& doc, const FinitePoset& poset) {
  if (doc.is_object() && doc.contains("point")) return parse_point(doc["point"], poset);
  if (doc.is_string()) return lookup(poset, doc.get<std::string>(), "");
  if (doc.is_array()) {
    std::string id = "(";
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (!doc[i].is_string() && !doc[i].is_number()) fail("/" + std::to_string(i), "expected a coordinate id");
      id += (i ? "," : "") + (doc[i].is_string() ? doc[i].get<std::string>() : doc[i].dump());
    }
    return lookup(poset, id + ")", "");
  }
  fail("", "expected a point id or an array of coordinate ids");
}

DownSet parse_downset(const nlohmann::json& doc, const FinitePoset& poset) {
  if (!doc.is_object()) fail("", "expected a down-set object");
  try {
    if (doc.contains("generators")) return DownSet::from_generators(poset, make_set(point_list(doc["generators"], poset, "/generators")));
    if (doc.contains("members")) return DownSet::from_members(poset, make_set(point_list(doc["members"], poset, "/members")));
  } catch (const NotComprehensiveError& e) {
    fail("/members", e.what());
  }
  fail("", "down-set needs \"generators\" or \"members\"");
}

namespace {

template <class F>
auto with_path(const std::filesystem::path& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind(path.string(), 0) == 0) throw;
    throw InputError(path.string() + ": " + what);
  }
}

}  // namespace

LoadedUtility load_utility(const std::filesystem::path& path) {
  return with_path(path, [&] { return parse_utility(read_json(path)); });
}

Element load_point(const std::filesystem::path& path, const FinitePoset& poset) {
  return with_path(path, [&] { return parse_point(read_json(path), poset); });
}

DownSet load_downset(const std::filesystem::path& path, const FinitePoset& poset) {
  return with_path(path, [&] { return parse_downset(read_json(path), poset); });
}

}  // namespace qleontief::io
