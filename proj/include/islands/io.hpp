#pragma once

// JSON file formats: domains (explicit / grid / graph / boxes / eta
// backends), height functions, and set families, plus deterministic
// serialization (families ordered by size, then by member-name lists).

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "islands/core.hpp"
#include "islands/domains.hpp"
#include "islands/eta.hpp"

namespace islands::io {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw island_error(errc::bad_input, "cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw island_error(errc::bad_input, "cannot write file: " + path);
  out << text;
}

inline json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw island_error(errc::bad_input, "malformed JSON");
  return j;
}

namespace detail {

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw island_error(errc::bad_input, std::string("missing key: ") + key);
  return j.at(key);
}

inline int require_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw island_error(errc::bad_input, std::string(what) + " must be an integer");
  return j.get<int>();
}

inline std::string require_string(const json& j, const char* what) {
  if (!j.is_string())
    throw island_error(errc::bad_input, std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace detail

inline GroundSet parse_ground(const json& j) {
  if (!j.is_array() || j.empty())
    throw island_error(errc::bad_input, "universe must be a nonempty array of names");
  std::vector<std::string> names;
  for (const auto& e : j) names.push_back(detail::require_string(e, "point name"));
  return GroundSet(std::move(names));
}

inline Subset parse_set(const json& j, const GroundSet& ground) {
  if (!j.is_array())
    throw island_error(errc::bad_input, "a set must be an array of point names");
  Subset s(ground.size());
  for (const auto& e : j)
    s.add(ground.index_of(detail::require_string(e, "point name")));
  return s;
}

// strict = reject duplicate entries (domain families, where positions matter)
inline SetFamily parse_family(const json& j, const GroundSet& ground,
                              bool strict = false) {
  if (!j.is_array())
    throw island_error(errc::bad_input, "a family must be an array of sets");
  SetFamily fam(ground.size());
  for (const auto& e : j)
    if (!fam.add(parse_set(e, ground)) && strict)
      throw island_error(errc::bad_input, "duplicate family member");
  return fam;
}

inline HeightFunction parse_heights(const json& j, const GroundSet& ground) {
  if (!j.is_object())
    throw island_error(errc::bad_input, "heights must be an object of name -> integer");
  std::vector<int> h(static_cast<std::size_t>(ground.size()));
  for (int i = 0; i < ground.size(); ++i) {
    const std::string& name = ground.name(i);
    if (!j.contains(name))
      throw island_error(errc::bad_input, "heights missing point: " + name);
    h[static_cast<std::size_t>(i)] = detail::require_int(j.at(name), "height");
  }
  if (j.size() != static_cast<std::size_t>(ground.size()))
    throw island_error(errc::bad_input, "heights mention unknown points");
  return HeightFunction(std::move(h));
}

inline GridSpec parse_grid_spec(const json& j) {
  GridSpec spec;
  spec.rows = detail::require_int(detail::require(j, "rows"), "rows");
  spec.cols = detail::require_int(detail::require(j, "cols"), "cols");
  std::string topology =
      j.contains("topology") ? detail::require_string(j.at("topology"), "topology")
                             : "rect";
  if (topology == "rect")
    spec.topology = GridSpec::Topology::rect;
  else if (topology == "cyl")
    spec.topology = GridSpec::Topology::cyl;
  else if (topology == "torus")
    spec.topology = GridSpec::Topology::torus;
  else
    throw island_error(errc::bad_input, "topology must be rect, cyl, or torus");
  std::string shape =
      j.contains("shape") ? detail::require_string(j.at("shape"), "shape") : "rect";
  if (shape == "rect")
    spec.shape = GridSpec::Shape::rectangles;
  else if (shape == "square")
    spec.shape = GridSpec::Shape::squares;
  else
    throw island_error(errc::bad_input, "shape must be rect or square");
  return spec;
}

inline ContextSpec parse_context_spec(const json& j) {
  ContextSpec spec;
  const json& factors = detail::require(j, "factors");
  if (!factors.is_array() || factors.empty())
    throw island_error(errc::bad_input, "factors must be a nonempty array");
  for (const auto& f : factors) {
    if (!f.is_array() || f.empty())
      throw island_error(errc::bad_input, "each factor must be a nonempty label array");
    std::vector<std::string> labels;
    for (const auto& e : f) labels.push_back(detail::require_string(e, "label"));
    spec.factors.push_back(std::move(labels));
  }
  const json& relation = detail::require(j, "relation");
  if (!relation.is_array())
    throw island_error(errc::bad_input, "relation must be an array of tuples");
  for (const auto& t : relation) {
    if (!t.is_array() || t.size() != spec.factors.size())
      throw island_error(errc::bad_input, "relation tuple arity mismatch");
    std::vector<int> tuple;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      std::string label = detail::require_string(t.at(i), "label");
      const auto& f = spec.factors[i];
      auto it = std::find(f.begin(), f.end(), label);
      if (it == f.end())
        throw island_error(errc::bad_input, "unknown label in relation: " + label);
      tuple.push_back(static_cast<int>(it - f.begin()));
    }
    spec.relation.push_back(std::move(tuple));
  }
  return spec;
}

// A parsed domain file: K-backed or η-backed, with the grid spec kept
// around when the file declared one (rendering needs the board shape).
struct LoadedDomain {
  std::variant<IslandDomain, EtaDomain> value;
  std::optional<GridSpec> grid;

  bool is_eta() const { return std::holds_alternative<EtaDomain>(value); }
  const IslandDomain& island() const {
    if (is_eta())
      throw island_error(errc::bad_input,
                         "this operation needs a K-backed domain, not an eta table");
    return std::get<IslandDomain>(value);
  }
  const EtaDomain& eta() const {
    if (!is_eta())
      throw island_error(errc::bad_input, "this operation needs an eta-backed domain");
    return std::get<EtaDomain>(value);
  }
  const GroundSet& ground() const {
    return is_eta() ? eta().ground() : island().ground;
  }
  const SetFamily& candidates() const { return is_eta() ? eta().C() : island().C; }
};

inline LoadedDomain parse_domain(const json& j) {
  GroundSet ground = parse_ground(detail::require(j, "universe"));
  SetFamily C = parse_family(detail::require(j, "C"), ground, /*strict=*/true);
  const json& kj = detail::require(j, "K");
  if (!kj.is_object() || kj.size() != 1)
    throw island_error(errc::bad_input, "K must be an object with exactly one backend");

  if (kj.contains("explicit")) {
    SetFamily K = parse_family(kj.at("explicit"), ground, /*strict=*/true);
    return {validate_domain(std::move(C), KBackend::explicit_family(std::move(K)),
                            std::move(ground)),
            std::nullopt};
  }
  if (kj.contains("grid")) {
    GridSpec spec = parse_grid_spec(kj.at("grid"));
    if (spec.rows < 1 || spec.cols < 1 || spec.rows * spec.cols != ground.size())
      throw island_error(errc::bad_input, "grid dimensions do not match the universe");
    return {validate_domain(std::move(C), grid_k(spec), std::move(ground)), spec};
  }
  if (kj.contains("graph")) {
    const json& edges_j = detail::require(kj.at("graph"), "edges");
    if (!edges_j.is_array())
      throw island_error(errc::bad_input, "edges must be an array of name pairs");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : edges_j) {
      if (!e.is_array() || e.size() != 2)
        throw island_error(errc::bad_input, "each edge must be a pair of names");
      edges.emplace_back(ground.index_of(detail::require_string(e.at(0), "endpoint")),
                         ground.index_of(detail::require_string(e.at(1), "endpoint")));
    }
    return {graph_domain(std::move(ground), edges, std::move(C)), std::nullopt};
  }
  if (kj.contains("boxes")) {
    ContextSpec spec = parse_context_spec(kj.at("boxes"));
    long long total = 1;
    for (const auto& f : spec.factors) total *= static_cast<long long>(f.size());
    if (total != ground.size())
      throw island_error(errc::bad_input, "factor product does not match the universe");
    return {validate_domain(std::move(C), box_k(spec), std::move(ground)), std::nullopt};
  }
  if (kj.contains("eta")) {
    const json& table = detail::require(kj.at("eta"), "table");
    if (!table.is_array())
      throw island_error(errc::bad_input, "eta table must be an array of pairs");
    std::vector<Subset> eta;
    for (const Subset& c : C.members()) eta.push_back(c);  // axiom baseline
    for (const auto& e : table) {
      if (!e.is_array() || e.size() != 2)
        throw island_error(errc::bad_input,
                           "eta entries must be [member-index, point-name] pairs");
      int idx = detail::require_int(e.at(0), "member index");
      if (idx < 0 || static_cast<std::size_t>(idx) >= C.size())
        throw island_error(errc::bad_input, "eta member index out of range");
      eta[static_cast<std::size_t>(idx)].add(
          ground.index_of(detail::require_string(e.at(1), "point name")));
    }
    return {EtaDomain(std::move(ground), std::move(C), std::move(eta)), std::nullopt};
  }
  throw island_error(errc::bad_input,
                     "K backend must be explicit, grid, graph, boxes, or eta");
}

// ---------------------------------------------------------------------------
// Serialization

inline std::vector<std::string> set_names(const GroundSet& ground, const Subset& s) {
  std::vector<std::string> names;
  s.for_each_member([&](int i) { names.push_back(ground.name(i)); });
  std::sort(names.begin(), names.end());
  return names;
}

inline json family_json(const GroundSet& ground, const SetFamily& fam) {
  std::vector<std::vector<std::string>> lists;
  for (const Subset& s : fam.members()) lists.push_back(set_names(ground, s));
  std::sort(lists.begin(), lists.end(),
            [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  json out = json::array();
  for (const auto& l : lists) out.push_back(l);
  return out;
}

inline json heights_json(const GroundSet& ground, const HeightFunction& h) {
  json out = json::object();
  for (int i = 0; i < ground.size(); ++i) out[ground.name(i)] = h.at(i);
  return out;
}

inline json universe_json(const GroundSet& ground) {
  json out = json::array();
  for (const auto& name : ground.names()) out.push_back(name);
  return out;
}

inline json domain_json_explicit(const IslandDomain& domain) {
  json out;
  out["universe"] = universe_json(domain.ground);
  out["C"] = family_json(domain.ground, domain.C);
  out["K"] = {{"explicit", family_json(domain.ground, domain.K.family())}};
  return out;
}

inline const char* topology_name(GridSpec::Topology t) {
  switch (t) {
    case GridSpec::Topology::rect: return "rect";
    case GridSpec::Topology::cyl: return "cyl";
    default: return "torus";
  }
}

inline const char* shape_name(GridSpec::Shape s) {
  return s == GridSpec::Shape::rectangles ? "rect" : "square";
}

inline json domain_json_grid(const IslandDomain& domain, const GridSpec& spec) {
  json out;
  out["universe"] = universe_json(domain.ground);
  out["C"] = family_json(domain.ground, domain.C);
  out["K"] = {{"grid",
               {{"rows", spec.rows},
                {"cols", spec.cols},
                {"topology", topology_name(spec.topology)},
                {"shape", shape_name(spec.shape)}}}};
  return out;
}

inline json domain_json_boxes(const IslandDomain& domain, const ContextSpec& spec) {
  json factors = json::array();
  for (const auto& f : spec.factors) {
    json labels = json::array();
    for (const auto& l : f) labels.push_back(l);
    factors.push_back(labels);
  }
  json relation = json::array();
  for (const auto& t : spec.relation) {
    json tuple = json::array();
    for (std::size_t i = 0; i < t.size(); ++i)
      tuple.push_back(spec.factors[i][static_cast<std::size_t>(t[i])]);
    relation.push_back(tuple);
  }
  json out;
  out["universe"] = universe_json(domain.ground);
  out["C"] = family_json(domain.ground, domain.C);
  out["K"] = {{"boxes", {{"factors", factors}, {"relation", relation}}}};
  return out;
}

inline json layers_json(const GroundSet& ground, const LayerPartition& part) {
  json out = json::array();
  for (const SetFamily& layer : part.layers) out.push_back(family_json(ground, layer));
  return out;
}

}  // namespace islands::io
