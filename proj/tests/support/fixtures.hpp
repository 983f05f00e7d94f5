#pragma once

// Shared fixtures used across the test suite.

#include "islands/islands.hpp"

namespace fixtures {

using namespace islands;

inline Subset by_names(const GroundSet& g, std::initializer_list<const char*> names) {
  Subset s(g.size());
  for (const char* n : names) s.add(g.index_of(n));
  return s;
}

// U={a..e}; C=K={{a,b},{a,c},{b,d},{c,d},U}. With h1 every member of C is a
// pre-island, yet {a,b},{a,c} overlap incomparably.
inline IslandDomain not_cd_domain() {
  GroundSet g({"a", "b", "c", "d", "e"});
  SetFamily C(5);
  C.add(by_names(g, {"a", "b"}));
  C.add(by_names(g, {"a", "c"}));
  C.add(by_names(g, {"b", "d"}));
  C.add(by_names(g, {"c", "d"}));
  C.add(Subset::universe(5));
  return validate_domain(C, KBackend::explicit_family(C), g);
}

inline HeightFunction not_cd_h1() { return HeightFunction({1, 1, 1, 1, 0}); }

// U={a,b,c,d}; A={a}, B={b,c}; C={A,B,U}; K adds Kx={a,c}. The canonical and
// standard heights of {A,B,U} differ here.
inline IslandDomain not_std_domain() {
  GroundSet g({"a", "b", "c", "d"});
  SetFamily C(4);
  C.add(by_names(g, {"a"}));
  C.add(by_names(g, {"b", "c"}));
  C.add(Subset::universe(4));
  SetFamily K = C;
  K.add(by_names(g, {"a", "c"}));
  return validate_domain(C, KBackend::explicit_family(K), g);
}

// not_std with L={a,b,c} also in K: connective and CDW, yet {A,B,U} is not
// admissible.
inline IslandDomain cdnt_domain() {
  GroundSet g({"a", "b", "c", "d"});
  SetFamily C(4);
  C.add(by_names(g, {"a"}));
  C.add(by_names(g, {"b", "c"}));
  C.add(Subset::universe(4));
  SetFamily K = C;
  K.add(by_names(g, {"a", "c"}));
  K.add(by_names(g, {"a", "b", "c"}));
  return validate_domain(C, KBackend::explicit_family(K), g);
}

inline IslandDomain fano_domain() { return projective_plane_domain(2); }

// 1×3 board: C = K-relevant candidates are the cell intervals.
inline IslandDomain seg3_domain() {
  GridSpec spec;
  spec.rows = 1;
  spec.cols = 3;
  return grid_domain(spec);
}

// 2×2 board with all rectangles as candidates.
inline IslandDomain grid22_domain() {
  GridSpec spec;
  spec.rows = 2;
  spec.cols = 2;
  return grid_domain(spec);
}

// a→b→c←d←e; C = K = U plus every vertex set with a source.
inline IslandDomain digraph_domain() {
  GroundSet g({"a", "b", "c", "d", "e"});
  return source_set_domain(g, {{0, 1}, {1, 2}, {3, 2}, {4, 3}});
}

}  // namespace fixtures
