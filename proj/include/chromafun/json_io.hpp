#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "chromafun/functor.hpp"
#include "chromafun/infinite.hpp"
#include "chromafun/partitions.hpp"
#include "chromafun/polynomial.hpp"

namespace chromafun {

using nlohmann::json;

// Big integers travel as decimal strings so that no consumer silently
// truncates them.

inline json polynomial_to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return json{{"coeffs", coeffs}};
}

inline IntPolynomial polynomial_from_json(const json& j) {
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw parse_error("polynomial JSON must contain a \"coeffs\" array", 0);
  }
  std::vector<BigInt> coeffs;
  for (const auto& entry : j["coeffs"]) {
    coeffs.emplace_back(entry.get<std::string>());
  }
  return IntPolynomial::from_coefficients(std::move(coeffs));
}

inline json st_vector_to_json(const StVector& st) {
  json counts = json::object();
  for (const auto& [k, c] : st.counts) counts[std::to_string(k)] = c.str();
  return json{{"st", counts}};
}

inline StVector st_vector_from_json(const json& j) {
  if (!j.contains("st") || !j["st"].is_object()) {
    throw parse_error("StVector JSON must contain an \"st\" object", 0);
  }
  StVector st;
  for (const auto& [key, value] : j["st"].items()) {
    st.set(std::stoi(key), BigInt(value.get<std::string>()));
  }
  return st;
}

/// Partitions serialize as sorted lists of sorted vertex lists.
inline json partition_to_json(const Partition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks()) blocks.push_back(block);
  return blocks;
}

inline Partition partition_from_json(const json& j, int element_count) {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : j) blocks.push_back(block.get<std::vector<int>>());
  return Partition::from_blocks(element_count, blocks);
}

inline json matching_to_json(const NaturalBijection& bijection) {
  json out = json::object();
  for (const auto& [k, match] : bijection.matching()) {
    json pairs = json::array();
    for (std::size_t i = 0; i < match.size(); ++i) {
      pairs.push_back(json::array({i, match[i]}));
    }
    out[std::to_string(k)] = pairs;
  }
  return out;
}

inline json cardinality_to_json(const Cardinality& c) {
  switch (c.kind) {
    case Cardinality::Kind::Finite:
      return json{{"finite", c.count.str()}};
    case Cardinality::Kind::Aleph0:
      return json("aleph0");
    default:
      return json("continuum");
  }
}

inline Cardinality cardinality_from_json(const json& j) {
  if (j.is_string()) {
    if (j == "aleph0") return Cardinality::aleph0();
    if (j == "continuum") return Cardinality::continuum();
    throw parse_error("unknown cardinality tag", 0);
  }
  if (j.is_object() && j.contains("finite")) {
    return Cardinality::finite(BigInt(j["finite"].get<std::string>()));
  }
  throw parse_error("malformed cardinality JSON", 0);
}

inline json strip_spec_to_json(const StripSpec& s) {
  json intra = json::array();
  for (auto [u, v] : s.intra) intra.push_back(json::array({u, v}));
  json inter = json::array();
  for (auto [u, v] : s.inter) inter.push_back(json::array({u, v}));
  json out{{"cell", s.cell_size},
           {"intra", intra},
           {"inter", inter},
           {"two_way", s.two_way}};
  if (s.head) out["head"] = emit_graph6(*s.head);
  return out;
}

inline StripSpec strip_spec_from_json(const json& j) {
  StripSpec s;
  try {
    s.cell_size = j.at("cell").get<int>();
    for (const auto& e : j.at("intra")) {
      s.intra.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    for (const auto& e : j.at("inter")) {
      s.inter.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    s.two_way = j.value("two_way", false);
    if (j.contains("head")) {
      s.head = parse_graph6(j["head"].get<std::string>());
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed StripSpec JSON: ") + e.what(), 0);
  }
  s.validate();
  return s;
}

inline json periodic_coloring_to_json(const EventuallyPeriodicColoring& c) {
  json out;
  out["two_way"] = c.two_way;
  if (c.head_coloring) out["head"] = *c.head_coloring;
  if (!c.back_cycle.empty()) out["back_cycle"] = c.back_cycle;
  out["prefix"] = c.prefix;
  out["cycle"] = c.cycle;
  return out;
}

}  // namespace chromafun
