#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "tautint/engine.hpp"
#include "tautint/graph.hpp"
#include "tautint/hodge.hpp"
#include "tautint/symbolic.hpp"

namespace tautint {

namespace detail {

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return doc;
}

inline int require_int(const nlohmann::json& doc, const char* field,
                       const std::string& path) {
  if (!doc.contains(field) || !doc[field].is_number_integer()) {
    throw std::invalid_argument(path + ": missing integer field '" +
                                field + "'");
  }
  return doc[field].get<int>();
}

// Fractions travel as strings only; raw JSON numbers would invite floats.
inline Rational require_fraction(const nlohmann::json& value,
                                 const std::string& context) {
  if (!value.is_string()) {
    throw std::invalid_argument(context + ": fractions must be strings");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(context + ": " + e.what());
  }
}

}  // namespace detail

/// Graph file: {"vertices": r, "edges": [[j, k], ...]}; loops as [j, j].
inline IntersectionGraph load_graph_file(const std::string& path) {
  const auto doc = detail::load_json(path);
  const int vertices = detail::require_int(doc, "vertices", path);
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw std::invalid_argument(path + ": missing edge list");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& edge : doc["edges"]) {
    if (!edge.is_array() || edge.size() != 2 ||
        !edge[0].is_number_integer() || !edge[1].is_number_integer()) {
      throw std::invalid_argument(path + ": edges must be integer pairs");
    }
    edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
  }
  try {
    return IntersectionGraph(vertices, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

/// Tensor file: {"r": .., "factors": .., "entries": [{"l","j","k","t"}]}.
/// Omitted entries are zero; the symmetric mirror of each entry is filled in
/// and conflicting duplicates are rejected.
inline CoefficientTensor load_tensor_file(const std::string& path) {
  const auto doc = detail::load_json(path);
  const int r = detail::require_int(doc, "r", path);
  const int n = detail::require_int(doc, "factors", path);
  if (r < 1 || n < 1) {
    throw std::invalid_argument(path + ": r and factors must be >= 1");
  }
  CoefficientTensor tensor(r, n);
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw std::invalid_argument(path + ": missing entry list");
  }
  std::map<std::tuple<int, int, int>, Rational> seen;
  for (const auto& entry : doc["entries"]) {
    if (!entry.is_object()) {
      throw std::invalid_argument(path + ": entries must be objects");
    }
    const int l = detail::require_int(entry, "l", path);
    const int j = detail::require_int(entry, "j", path);
    const int k = detail::require_int(entry, "k", path);
    if (l < 1 || l > n || j < 1 || j > r || k < 1 || k > r) {
      throw std::invalid_argument(path + ": entry index out of range");
    }
    if (!entry.contains("t")) {
      throw std::invalid_argument(path + ": entry is missing 't'");
    }
    const Rational value = detail::require_fraction(entry["t"], path);
    const std::tuple<int, int, int> key{l, std::min(j, k), std::max(j, k)};
    const auto [it, inserted] = seen.emplace(key, value);
    if (!inserted && it->second != value) {
      throw std::invalid_argument(path + ": conflicting duplicate entry");
    }
    tensor.set(l, j, k, value);
  }
  return tensor;
}

/// Matrix file: {"r": .., "t": [row-major fraction strings]}; symmetry is
/// validated on load.
inline BoundMatrix load_bound_matrix_file(const std::string& path) {
  const auto doc = detail::load_json(path);
  const int r = detail::require_int(doc, "r", path);
  if (!doc.contains("t") || !doc["t"].is_array()) {
    throw std::invalid_argument(path + ": missing entry list 't'");
  }
  std::vector<Rational> entries;
  for (const auto& value : doc["t"]) {
    entries.push_back(detail::require_fraction(value, path));
  }
  try {
    return BoundMatrix(r, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

/// "1,-1,2" -> {1, -1, 2}; every element must be a nonzero integer.
inline std::vector<long> parse_multipliers(const std::string& text) {
  std::vector<long> out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const Rational value = parse_rational(token);
    if (denominator(value) != 1) {
      throw std::invalid_argument("multipliers must be integers: " + token);
    }
    out.push_back(numerator(value).convert_to<long>());
  }
  if (out.empty()) {
    throw std::invalid_argument("empty multiplier list");
  }
  return out;
}

/// "omega2=4,phi=5/2,hnt=0" -> InvariantValues; all three names required.
inline InvariantValues parse_invariants(const std::string& text) {
  InvariantValues out;
  bool have_omega2 = false;
  bool have_phi = false;
  bool have_hnt = false;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("expected name=fraction: " + token);
    }
    const std::string name = token.substr(0, eq);
    const Rational value = parse_rational(token.substr(eq + 1));
    if (name == "omega2") {
      out.omega2 = value;
      have_omega2 = true;
    } else if (name == "phi") {
      out.phi = value;
      have_phi = true;
    } else if (name == "hnt") {
      out.hnt = value;
      have_hnt = true;
    } else {
      throw std::invalid_argument("unknown invariant name: " + name);
    }
  }
  if (!have_omega2 || !have_phi || !have_hnt) {
    throw std::invalid_argument(
        "evaluation needs all of omega2=, phi=, hnt=");
  }
  return out;
}

}  // namespace tautint
