#pragma once

// Generators for the stock domain classes: grid boards, graphs with
// connected-set surroundings, box domains over formal contexts and Boolean
// functions, projective planes over prime fields, and source-set digraphs.

#include <array>
#include <memory>

#include "islands/analysis.hpp"
#include "islands/core.hpp"

namespace islands {

namespace detail {

// Neighbor bitmasks define the graph; connectivity by mask-BFS.
inline bool connected_in(const std::vector<Subset>& nbr, const Subset& s) {
  if (s.is_empty()) return false;
  int n = s.universe_size();
  int start = s.members().front();
  Subset seen = Subset::single(n, start);
  Subset frontier = seen;
  while (!frontier.is_empty()) {
    Subset grow(n);
    frontier.for_each_member([&](int v) { grow |= nbr[static_cast<std::size_t>(v)]; });
    frontier = (grow & s) - seen;
    seen |= frontier;
  }
  return seen == s;
}

inline Subset neighborhood(const std::vector<Subset>& nbr, const Subset& s) {
  Subset out(s.universe_size());
  s.for_each_member([&](int v) { out |= nbr[static_cast<std::size_t>(v)]; });
  return out - s;
}

// K = nonempty connected vertex sets; covers attach one adjacent vertex.
inline KBackend graph_k(std::shared_ptr<std::vector<Subset>> nbr) {
  KBackend::Implicit k;
  k.contains = [nbr](const Subset& s) { return connected_in(*nbr, s); };
  k.covers = [nbr](const Subset& s) {
    if (!connected_in(*nbr, s))
      throw island_error(errc::not_in_k, "set is not a member of K");
    std::vector<Subset> out;
    neighborhood(*nbr, s).for_each_member([&](int v) {
      Subset k2 = s;
      k2.add(v);
      out.push_back(std::move(k2));
    });
    return out;
  };
  k.union_closed = true;  // overlapping connected sets have connected union
  k.unit_covers = true;
  return KBackend::implicit(std::move(k));
}

inline std::vector<Subset> adjacency_from_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Subset> nbr(static_cast<std::size_t>(n), Subset(n));
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw island_error(errc::bad_input, "edge endpoint out of range");
    if (a == b) continue;
    nbr[static_cast<std::size_t>(a)].add(b);
    nbr[static_cast<std::size_t>(b)].add(a);
  }
  return nbr;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Grid boards

struct GridSpec {
  enum class Topology { rect, cyl, torus };
  enum class Shape { rectangles, squares };
  int rows = 1;
  int cols = 1;
  Topology topology = Topology::rect;
  Shape shape = Shape::rectangles;
};

namespace detail {

// Arcs along one axis: plain intervals, or — when the axis is cyclic — all
// wrapped proper arcs plus the full cycle (bands spanning the axis).
inline std::vector<std::vector<int>> axis_arcs(int len, bool cyclic) {
  std::vector<std::vector<int>> out;
  if (!cyclic) {
    for (int i = 0; i < len; ++i)
      for (int j = i; j < len; ++j) {
        std::vector<int> arc;
        for (int k = i; k <= j; ++k) arc.push_back(k);
        out.push_back(std::move(arc));
      }
    return out;
  }
  for (int start = 0; start < len; ++start)
    for (int L = 1; L < len; ++L) {
      std::vector<int> arc;
      for (int k = 0; k < L; ++k) arc.push_back((start + k) % len);
      out.push_back(std::move(arc));
    }
  std::vector<int> full;
  for (int k = 0; k < len; ++k) full.push_back(k);
  out.push_back(std::move(full));
  return out;
}

}  // namespace detail

namespace detail {

// Row-major grid adjacency (4-neighborhood), wrapping per topology.
inline std::shared_ptr<std::vector<Subset>> grid_neighbors(int rows, int cols,
                                                           bool wrap_rows,
                                                           bool wrap_cols) {
  int n = rows * cols;
  auto nbr = std::make_shared<std::vector<Subset>>(static_cast<std::size_t>(n),
                                                   Subset(n));
  auto cell = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      auto link = [&](int r2, int c2) {
        if (wrap_rows) r2 = (r2 + rows) % rows;
        if (wrap_cols) c2 = (c2 + cols) % cols;
        if (r2 < 0 || r2 >= rows || c2 < 0 || c2 >= cols) return;
        int a = cell(r, c), b = cell(r2, c2);
        if (a == b) return;
        (*nbr)[static_cast<std::size_t>(a)].add(b);
        (*nbr)[static_cast<std::size_t>(b)].add(a);
      };
      link(r + 1, c);
      link(r, c + 1);
    }
  return nbr;
}

}  // namespace detail

// K of a grid board: connected cell sets of the grid graph.
inline KBackend grid_k(const GridSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1)
    throw island_error(errc::invalid_spec, "grid needs positive dimensions");
  bool wrap_cols = spec.topology != GridSpec::Topology::rect && spec.cols > 1;
  bool wrap_rows = spec.topology == GridSpec::Topology::torus && spec.rows > 1;
  return detail::graph_k(detail::grid_neighbors(spec.rows, spec.cols, wrap_rows, wrap_cols));
}

// Cells are named c1..c(rows*cols) in row-major order. C holds the
// axis-aligned rectangles (or squares) of the chosen topology plus U;
// K holds the connected cell sets of the grid graph.
inline IslandDomain grid_domain(const GridSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1)
    throw island_error(errc::invalid_spec, "grid needs positive dimensions");
  int rows = spec.rows, cols = spec.cols;
  int n = rows * cols;
  bool wrap_cols = spec.topology != GridSpec::Topology::rect && cols > 1;
  bool wrap_rows = spec.topology == GridSpec::Topology::torus && rows > 1;

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i + 1));
  GroundSet ground(std::move(names));

  auto cell = [cols](int r, int c) { return r * cols + c; };

  SetFamily C(n);
  auto row_arcs = detail::axis_arcs(rows, wrap_rows);
  auto col_arcs = detail::axis_arcs(cols, wrap_cols);
  for (const auto& ra : row_arcs)
    for (const auto& ca : col_arcs) {
      if (spec.shape == GridSpec::Shape::squares && ra.size() != ca.size()) continue;
      Subset s(n);
      for (int r : ra)
        for (int c : ca) s.add(cell(r, c));
      C.add(s);
    }
  C.add(Subset::universe(n));

  return validate_domain(std::move(C), grid_k(spec), std::move(ground));
}

// ---------------------------------------------------------------------------
// Graphs with connected-set surroundings

// Explicit candidate family over the connected-set backend. The graph and
// every candidate must be connected.
inline IslandDomain graph_domain(GroundSet ground,
                                 const std::vector<std::pair<int, int>>& edges,
                                 SetFamily C) {
  int n = ground.size();
  auto nbr = std::make_shared<std::vector<Subset>>(detail::adjacency_from_edges(n, edges));
  if (!detail::connected_in(*nbr, Subset::universe(n)))
    throw island_error(errc::disconnected_graph, "graph is not connected");
  for (const Subset& s : C.members())
    if (!detail::connected_in(*nbr, s))
      throw island_error(errc::disconnected_candidate,
                         "candidate set is not connected");
  return validate_domain(std::move(C), detail::graph_k(nbr), std::move(ground));
}

// S is convex when it contains every vertex on every shortest path between
// two of its members.
inline SetFamily connected_convex_family(const GroundSet& ground,
                                         const std::vector<std::pair<int, int>>& edges) {
  int n = ground.size();
  if (n > 20)
    throw island_error(errc::too_large, "convex-set enumeration capped at 20 vertices");
  auto nbr = detail::adjacency_from_edges(n, edges);
  if (!detail::connected_in(nbr, Subset::universe(n)))
    throw island_error(errc::disconnected_graph, "graph is not connected");

  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& d = dist[static_cast<std::size_t>(s)];
    d[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      nbr[static_cast<std::size_t>(v)].for_each_member([&](int w) {
        if (d[static_cast<std::size_t>(w)] < 0) {
          d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      });
    }
  }
  auto convex = [&](const Subset& s) {
    auto mem = s.members();
    for (int u : mem)
      for (int v : mem) {
        if (u >= v) continue;
        int duv = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        for (int w = 0; w < n; ++w) {
          if (s.test(w)) continue;
          if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] +
                  dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] ==
              duv)
            return false;
        }
      }
    return true;
  };

  SetFamily C(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.add(i);
    if (detail::connected_in(nbr, s) && convex(s)) C.add(s);
  }
  return C;
}

inline IslandDomain graph_domain_convex(GroundSet ground,
                                        const std::vector<std::pair<int, int>>& edges) {
  SetFamily C = connected_convex_family(ground, edges);
  return graph_domain(std::move(ground), edges, std::move(C));
}

// ---------------------------------------------------------------------------
// Box domains (formal contexts, Boolean functions)

struct ContextSpec {
  std::vector<std::vector<std::string>> factors;  // labels per factor
  std::vector<std::vector<int>> relation;         // tuples of label indices

  // mixed-radix tuple index, last factor fastest
  int tuple_index(const std::vector<int>& tuple) const {
    int idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
      idx = idx * static_cast<int>(factors[i].size()) + tuple[i];
    return idx;
  }
};

// Truth table bit k corresponds to the input tuple whose bits spell k with
// the first variable most significant.
inline ContextSpec boolean_context(int nvars, const std::vector<bool>& truth_table) {
  if (nvars < 1 || truth_table.size() != (std::size_t{1} << nvars))
    throw island_error(errc::invalid_spec, "truth table size must be 2^nvars");
  ContextSpec spec;
  for (int i = 0; i < nvars; ++i) spec.factors.push_back({"0", "1"});
  for (std::size_t k = 0; k < truth_table.size(); ++k) {
    if (!truth_table[k]) continue;
    std::vector<int> tuple(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i)
      tuple[static_cast<std::size_t>(i)] = static_cast<int>((k >> (nvars - 1 - i)) & 1);
    spec.relation.push_back(std::move(tuple));
  }
  return spec;
}

namespace detail {

struct BoxGeometry {
  std::vector<int> radix;
  int total = 1;

  explicit BoxGeometry(const ContextSpec& spec) {
    if (spec.factors.empty())
      throw island_error(errc::invalid_spec, "context needs at least one factor");
    long long prod = 1;
    for (const auto& f : spec.factors) {
      if (f.empty())
        throw island_error(errc::invalid_spec, "context factors must be nonempty");
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
          if (f[i] == f[j])
            throw island_error(errc::invalid_spec, "duplicate label in factor");
      radix.push_back(static_cast<int>(f.size()));
      prod *= static_cast<long long>(f.size());
      if (prod > 1'000'000)
        throw island_error(errc::too_large, "context product too large");
    }
    total = static_cast<int>(prod);
  }

  std::vector<int> decode(int idx) const {
    std::vector<int> tuple(radix.size());
    for (std::size_t i = radix.size(); i-- > 0;) {
      tuple[i] = idx % radix[i];
      idx /= radix[i];
    }
    return tuple;
  }

  int encode(const std::vector<int>& tuple) const {
    int idx = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) idx = idx * radix[i] + tuple[i];
    return idx;
  }

  // the box spanned by per-factor index sets
  Subset box(const std::vector<std::vector<int>>& parts) const {
    Subset s(total);
    long long combos = 1;
    for (const auto& p : parts) combos *= static_cast<long long>(p.size());
    for (long long t = 0; t < combos; ++t) {
      long long rem = t;
      std::vector<int> tuple(parts.size());
      for (std::size_t i = parts.size(); i-- > 0;) {
        tuple[i] = parts[i][static_cast<std::size_t>(
            rem % static_cast<long long>(parts[i].size()))];
        rem /= static_cast<long long>(parts[i].size());
      }
      s.add(encode(tuple));
    }
    return s;
  }

  std::vector<std::vector<int>> projections(const Subset& s) const {
    std::vector<std::vector<bool>> seen(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i)
      seen[i].assign(static_cast<std::size_t>(radix[i]), false);
    s.for_each_member([&](int idx) {
      auto t = decode(idx);
      for (std::size_t i = 0; i < t.size(); ++i)
        seen[i][static_cast<std::size_t>(t[i])] = true;
    });
    std::vector<std::vector<int>> parts(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i)
      for (int v = 0; v < radix[i]; ++v)
        if (seen[i][static_cast<std::size_t>(v)]) parts[i].push_back(v);
    return parts;
  }

  bool is_box(const Subset& s) const {
    if (s.is_empty()) return false;
    auto parts = projections(s);
    long long prod = 1;
    for (const auto& p : parts) prod *= static_cast<long long>(p.size());
    return prod == s.count();
  }
};

}  // namespace detail

// K of a context: all nonempty boxes; covers grow one factor by one element.
inline KBackend box_k(const ContextSpec& spec) {
  auto geom = std::make_shared<detail::BoxGeometry>(spec);
  int big_factors = 0;
  for (int r : geom->radix)
    if (r >= 2) ++big_factors;

  KBackend::Implicit k;
  k.contains = [geom](const Subset& s) {
    return s.universe_size() == geom->total && geom->is_box(s);
  };
  k.covers = [geom](const Subset& s) {
    if (!geom->is_box(s))
      throw island_error(errc::not_in_k, "set is not a member of K");
    auto parts = geom->projections(s);
    std::vector<Subset> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<bool> in(static_cast<std::size_t>(geom->radix[i]), false);
      for (int v : parts[i]) in[static_cast<std::size_t>(v)] = true;
      for (int v = 0; v < geom->radix[i]; ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        auto grown = parts;
        grown[i].insert(std::lower_bound(grown[i].begin(), grown[i].end(), v), v);
        out.push_back(geom->box(grown));
      }
    }
    return out;
  };
  k.union_closed = (big_factors <= 1);
  if (big_factors <= 1) k.unit_covers = true;
  return KBackend::implicit(std::move(k));
}

// Ground set = the full product, points named by their comma-joined labels;
// K = all nonempty boxes (cover: grow one factor by one element); C = the
// boxes inside the relation, plus U; the returned height function is the
// relation's indicator.
inline std::pair<IslandDomain, HeightFunction> box_domain(const ContextSpec& spec) {
  auto geom = std::make_shared<detail::BoxGeometry>(spec);
  int n = geom->total;

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int idx = 0; idx < n; ++idx) {
    auto t = geom->decode(idx);
    std::string name;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) name += ",";
      name += spec.factors[i][static_cast<std::size_t>(t[i])];
    }
    names.push_back(std::move(name));
  }
  GroundSet ground(std::move(names));

  Subset relation(n);
  for (const auto& tuple : spec.relation) {
    if (tuple.size() != spec.factors.size())
      throw island_error(errc::invalid_spec, "relation tuple arity mismatch");
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (tuple[i] < 0 || tuple[i] >= geom->radix[i])
        throw island_error(errc::invalid_spec, "relation tuple out of range");
    relation.add(geom->encode(tuple));
  }

  // every nonempty sub-box, kept when inside the relation
  SetFamily C(n);
  std::vector<std::vector<std::vector<int>>> factor_subsets(geom->radix.size());
  for (std::size_t i = 0; i < geom->radix.size(); ++i) {
    int r = geom->radix[i];
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
      std::vector<int> part;
      for (int v = 0; v < r; ++v)
        if ((mask >> v) & 1) part.push_back(v);
      factor_subsets[i].push_back(std::move(part));
    }
  }
  std::vector<std::size_t> pick(geom->radix.size(), 0);
  while (true) {
    std::vector<std::vector<int>> parts(geom->radix.size());
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = factor_subsets[i][pick[i]];
    Subset b = geom->box(parts);
    if (b.is_subset_of(relation)) C.add(b);
    std::size_t i = parts.size();
    bool done = true;
    while (i-- > 0) {
      if (++pick[i] < factor_subsets[i].size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (done) break;
  }
  C.add(Subset::universe(n));

  std::vector<int> h(static_cast<std::size_t>(n), 0);
  relation.for_each_member([&](int i) { h[static_cast<std::size_t>(i)] = 1; });

  IslandDomain domain = validate_domain(std::move(C), box_k(spec), std::move(ground));
  return {std::move(domain), HeightFunction(std::move(h))};
}

// ---------------------------------------------------------------------------
// Projective planes over prime fields

// Points of PG(2,p) as normalized homogeneous triples x:y:z (first nonzero
// coordinate scaled to 1); C = K = {∅} ∪ points ∪ lines ∪ {U}.
inline IslandDomain projective_plane_domain(int p) {
  if (p < 2) throw island_error(errc::not_prime, "order must be a prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw island_error(errc::not_prime, "order must be a prime");

  std::vector<std::array<int, 3>> reps;
  for (int y = 0; y < p; ++y)
    for (int z = 0; z < p; ++z) reps.push_back({1, y, z});
  for (int z = 0; z < p; ++z) reps.push_back({0, 1, z});
  reps.push_back({0, 0, 1});

  int n = static_cast<int>(reps.size());
  std::vector<std::string> names;
  for (const auto& r : reps)
    names.push_back(std::to_string(r[0]) + ":" + std::to_string(r[1]) + ":" +
                    std::to_string(r[2]));
  GroundSet ground(std::move(names));

  SetFamily C(n);
  C.add(Subset(n));
  for (int i = 0; i < n; ++i) C.add(Subset::single(n, i));
  for (const auto& line : reps) {
    Subset s(n);
    for (int i = 0; i < n; ++i) {
      int dot = line[0] * reps[static_cast<std::size_t>(i)][0] +
                line[1] * reps[static_cast<std::size_t>(i)][1] +
                line[2] * reps[static_cast<std::size_t>(i)][2];
      if (dot % p == 0) s.add(i);
    }
    C.add(s);
  }
  C.add(Subset::universe(n));

  return validate_domain(C, KBackend::explicit_family(C), std::move(ground));
}

// ---------------------------------------------------------------------------
// Source-set digraphs

// C = K = {U} plus every vertex set owning a source that reaches the whole
// set without leaving it.
inline IslandDomain source_set_domain(GroundSet ground,
                                      const std::vector<std::pair<int, int>>& edges) {
  int n = ground.size();
  if (n > 20)
    throw island_error(errc::too_large, "source-set enumeration capped at 20 vertices");
  std::vector<Subset> out(static_cast<std::size_t>(n), Subset(n));
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw island_error(errc::bad_input, "edge endpoint out of range");
    if (a != b) out[static_cast<std::size_t>(a)].add(b);
  }

  auto has_source = [&](const Subset& s) {
    bool found = false;
    s.for_each_member([&](int src) {
      if (found) return;
      Subset seen = Subset::single(n, src);
      Subset frontier = seen;
      while (!frontier.is_empty()) {
        Subset grow(n);
        frontier.for_each_member(
            [&](int v) { grow |= out[static_cast<std::size_t>(v)]; });
        frontier = (grow & s) - seen;
        seen |= frontier;
      }
      if (seen == s) found = true;
    });
    return found;
  };

  SetFamily C(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.add(i);
    if (has_source(s)) C.add(s);
  }
  C.add(Subset::universe(n));

  return validate_domain(C, KBackend::explicit_family(C), std::move(ground));
}

}  // namespace islands
