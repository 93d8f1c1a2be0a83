#pragma once

/// @file field_json.hpp
/// JSON exchange format for exact polynomial fields.
///
/// A field document looks like
/// {
///   "fields": {
///     "sigma": {
///       "rank": "tensor",
///       "components": [ [ [mono...], [mono...], [mono...] ], ... ]
///     },
///     "f":   { "rank": "vector", "components": [ [mono...], x3 ] },
///     "phi": { "rank": "scalar", "components": [mono...] }
///   }
/// }
/// where each monomial is {"coeff": "p/q", "exps": [e1, e2, e3]} with the
/// coefficient written as a canonical rational string and non-negative
/// integer exponents. Parsing accepts repeated exponent triples (they are
/// summed) and any monomial order; serialization is canonical — field names
/// sorted, monomials in lexicographic exponent order, zero terms dropped,
/// two-space indentation — so serialize(parse(serialize(d))) is
/// byte-identical to serialize(d).
///
/// All structural errors carry a JSON-pointer-style path to the offending
/// element, e.g. "/fields/sigma/components/0/1/2/coeff".

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "polarity/field.hpp"
#include "polarity/rational.hpp"

namespace polarity {

class FieldParseError : public std::runtime_error {
 public:
  FieldParseError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class FieldRank { Scalar, Vector, Tensor };

inline const char* to_string(FieldRank r) {
  switch (r) {
    case FieldRank::Scalar: return "scalar";
    case FieldRank::Vector: return "vector";
    case FieldRank::Tensor: return "tensor";
  }
  return "?";
}

struct FieldEntry {
  FieldRank rank = FieldRank::Scalar;
  PolyScalarField scalar;
  PolyVec3Field vector;
  PolyMat3Field tensor;
};

struct FieldDocument {
  std::map<std::string, FieldEntry> fields;

  bool has(const std::string& name) const { return fields.count(name) != 0; }
  const FieldEntry& at(const std::string& name) const {
    auto it = fields.find(name);
    if (it == fields.end()) throw std::out_of_range("field document has no entry '" + name + "'");
    return it->second;
  }
};

namespace detail {

using Json = nlohmann::ordered_json;

inline PolyScalarField parse_monomial_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw FieldParseError(path, "expected an array of monomials");
  PolyScalarField f;
  int idx = 0;
  for (const Json& mono : j) {
    const std::string mpath = path + "/" + std::to_string(idx++);
    if (!mono.is_object()) throw FieldParseError(mpath, "expected a monomial object");
    if (!mono.contains("coeff")) throw FieldParseError(mpath, "missing \"coeff\"");
    if (!mono.contains("exps")) throw FieldParseError(mpath, "missing \"exps\"");
    for (auto it = mono.begin(); it != mono.end(); ++it)
      if (it.key() != "coeff" && it.key() != "exps")
        throw FieldParseError(mpath + "/" + it.key(), "unknown monomial key");
    const Json& jc = mono["coeff"];
    if (!jc.is_string()) throw FieldParseError(mpath + "/coeff", "expected a rational string \"p/q\"");
    Rational c;
    try {
      c = Rational::from_string(jc.get<std::string>());
    } catch (const std::exception& e) {
      throw FieldParseError(mpath + "/coeff", e.what());
    }
    const Json& je = mono["exps"];
    if (!je.is_array() || je.size() != 3)
      throw FieldParseError(mpath + "/exps", "expected an array of three exponents");
    Exponents e{};
    for (int k = 0; k < 3; ++k) {
      const Json& jk = je[static_cast<std::size_t>(k)];
      if (!jk.is_number_integer() || jk.get<long long>() < 0)
        throw FieldParseError(mpath + "/exps/" + std::to_string(k),
                              "expected a non-negative integer exponent");
      e[static_cast<std::size_t>(k)] = jk.get<int>();
    }
    f = f + PolyScalarField::monomial(c, e);
  }
  return f;
}

inline Json monomial_list_to_json(const PolyScalarField& f) {
  Json arr = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json mono;
    mono["coeff"] = c.to_string();
    mono["exps"] = {e[0], e[1], e[2]};
    arr.push_back(std::move(mono));
  }
  return arr;
}

}  // namespace detail

inline FieldDocument parse_field_document(const std::string& text) {
  detail::Json root;
  try {
    root = detail::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FieldParseError("/", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw FieldParseError("/", "expected a top-level object");
  if (!root.contains("fields")) throw FieldParseError("/", "missing \"fields\"");
  const detail::Json& jf = root["fields"];
  if (!jf.is_object()) throw FieldParseError("/fields", "expected an object of named fields");

  FieldDocument doc;
  for (auto it = jf.begin(); it != jf.end(); ++it) {
    const std::string path = "/fields/" + it.key();
    const detail::Json& je = it.value();
    if (!je.is_object()) throw FieldParseError(path, "expected a field object");
    if (!je.contains("rank")) throw FieldParseError(path, "missing \"rank\"");
    if (!je.contains("components")) throw FieldParseError(path, "missing \"components\"");
    const detail::Json& jr = je["rank"];
    if (!jr.is_string())
      throw FieldParseError(path + "/rank", "expected \"scalar\", \"vector\" or \"tensor\"");
    const std::string rank = jr.get<std::string>();
    const detail::Json& jc = je["components"];
    const std::string cpath = path + "/components";
    FieldEntry entry;
    if (rank == "scalar") {
      entry.rank = FieldRank::Scalar;
      entry.scalar = detail::parse_monomial_list(jc, cpath);
    } else if (rank == "vector") {
      entry.rank = FieldRank::Vector;
      if (!jc.is_array() || jc.size() != 3)
        throw FieldParseError(cpath, "expected an array of three component lists");
      for (int i = 0; i < 3; ++i)
        entry.vector[i] = detail::parse_monomial_list(jc[static_cast<std::size_t>(i)],
                                                      cpath + "/" + std::to_string(i));
    } else if (rank == "tensor") {
      entry.rank = FieldRank::Tensor;
      if (!jc.is_array() || jc.size() != 3)
        throw FieldParseError(cpath, "expected an array of three rows");
      for (int i = 0; i < 3; ++i) {
        const detail::Json& jrow = jc[static_cast<std::size_t>(i)];
        const std::string rpath = cpath + "/" + std::to_string(i);
        if (!jrow.is_array() || jrow.size() != 3)
          throw FieldParseError(rpath, "expected a row of three component lists");
        for (int j = 0; j < 3; ++j)
          entry.tensor(i, j) = detail::parse_monomial_list(jrow[static_cast<std::size_t>(j)],
                                                           rpath + "/" + std::to_string(j));
      }
    } else {
      throw FieldParseError(path + "/rank", "unknown rank \"" + rank + "\"");
    }
    doc.fields.emplace(it.key(), std::move(entry));
  }
  return doc;
}

inline std::string serialize_field_document(const FieldDocument& doc) {
  detail::Json jf = detail::Json::object();
  for (const auto& [name, entry] : doc.fields) {
    detail::Json je;
    je["rank"] = to_string(entry.rank);
    switch (entry.rank) {
      case FieldRank::Scalar:
        je["components"] = detail::monomial_list_to_json(entry.scalar);
        break;
      case FieldRank::Vector: {
        detail::Json arr = detail::Json::array();
        for (int i = 0; i < 3; ++i) arr.push_back(detail::monomial_list_to_json(entry.vector[i]));
        je["components"] = std::move(arr);
        break;
      }
      case FieldRank::Tensor: {
        detail::Json rows = detail::Json::array();
        for (int i = 0; i < 3; ++i) {
          detail::Json row = detail::Json::array();
          for (int j = 0; j < 3; ++j) row.push_back(detail::monomial_list_to_json(entry.tensor(i, j)));
          rows.push_back(std::move(row));
        }
        je["components"] = std::move(rows);
        break;
      }
    }
    jf[name] = std::move(je);
  }
  detail::Json root;
  root["fields"] = std::move(jf);
  return root.dump(2) + "\n";
}

}  // namespace polarity
