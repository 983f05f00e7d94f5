#pragma once

// Admissibility of candidate families, the layer-peeling canonical height
// construction, and the containment-count standard height function.

#include "islands/core.hpp"

namespace islands {

namespace detail {

inline void check_system_input(const IslandDomain& domain, const SetFamily& H) {
  Subset u = domain.universe();
  if (!H.contains(u))
    throw island_error(errc::missing_universe, "family must contain U");
  for (const Subset& s : H.members()) {
    if (s.is_empty())
      throw island_error(errc::empty_set_member, "family must not contain the empty set");
    if (!domain.C.contains(s))
      throw island_error(errc::not_in_c, "family member outside C");
  }
}

// Calls fn(antichain member indices) for every nonempty antichain of the
// given sets; fn may return false to abort the sweep early.
template <typename F>
inline bool for_each_antichain(const std::vector<Subset>& sets, F&& fn) {
  std::size_t n = sets.size();
  std::vector<std::vector<bool>> comparable(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      comparable[i][j] =
          sets[i].is_subset_of(sets[j]) || sets[j].is_subset_of(sets[i]);

  std::vector<std::size_t> picked;
  // depth-first over indices in order; every picked prefix is an antichain
  std::function<bool(std::size_t)> walk = [&](std::size_t from) -> bool {
    if (!picked.empty() && !fn(picked)) return false;
    for (std::size_t i = from; i < n; ++i) {
      bool ok = true;
      for (std::size_t j : picked)
        if (comparable[i][j]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      picked.push_back(i);
      if (!walk(i + 1)) return false;
      picked.pop_back();
    }
    return true;
  };
  return walk(0);
}

}  // namespace detail

// A family H (with U ∈ H, ∅ ∉ H) is admissible when every nonempty
// antichain A ⊆ H has a member H whose K-supersets all poke out of ∪A.
// Quantifying over covers of H suffices: any K ⊃ H contains a cover of H,
// and K ⊆ ∪A forces that cover inside ∪A too.
inline bool is_admissible(const IslandDomain& domain, const SetFamily& H) {
  detail::check_system_input(domain, H);
  std::vector<Subset> sets = H.members();
  std::vector<std::vector<Subset>> covers_of(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    covers_of[i] = domain.K.covers_of(sets[i]);

  return detail::for_each_antichain(sets, [&](const std::vector<std::size_t>& a) {
    Subset un(domain.ground.size());
    for (std::size_t i : a) un |= sets[i];
    for (std::size_t i : a) {
      bool all_escape = true;
      for (const Subset& k : covers_of[i])
        if (k.is_subset_of(un)) {
          all_escape = false;
          break;
        }
      if (all_escape) return true;  // this antichain is fine
    }
    return false;  // no witness member; abort as inadmissible
  });
}

// The universal-quantifier variant: EVERY member of every nonempty antichain
// must have all of its covers poke out of the antichain's union.
inline bool is_strongly_admissible(const IslandDomain& domain, const SetFamily& H) {
  detail::check_system_input(domain, H);
  std::vector<Subset> sets = H.members();
  std::vector<std::vector<Subset>> covers_of(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    covers_of[i] = domain.K.covers_of(sets[i]);

  return detail::for_each_antichain(sets, [&](const std::vector<std::size_t>& a) {
    Subset un(domain.ground.size());
    for (std::size_t i : a) un |= sets[i];
    for (std::size_t i : a)
      for (const Subset& k : covers_of[i])
        if (k.is_subset_of(un)) return false;
    return true;
  });
}

struct LayerPartition {
  std::vector<SetFamily> layers;  // layers[0] = {U}
};

// Layer peeling: layer i collects the residue members all of whose covers
// escape the residue's union; repeats until the residue empties. A stuck
// round (empty layer, nonempty residue) certifies inadmissibility. The
// height of a point is the index of the deepest layer whose union contains
// it, with layer 0 contributing height 0.
inline std::pair<LayerPartition, HeightFunction> canonical_height(
    const IslandDomain& domain, const SetFamily& H) {
  detail::check_system_input(domain, H);
  int n = domain.ground.size();
  Subset u = domain.universe();

  LayerPartition part;
  SetFamily layer0(n);
  layer0.add(u);
  part.layers.push_back(layer0);

  SetFamily residue(n);
  for (const Subset& s : H.members())
    if (s != u) residue.add(s);

  std::vector<int> heights(static_cast<std::size_t>(n), 0);
  int level = 0;
  while (!residue.empty()) {
    ++level;
    Subset residue_union(n);
    for (const Subset& s : residue.members()) residue_union |= s;

    SetFamily layer(n);
    for (const Subset& s : residue.members()) {
      bool all_escape = true;
      for (const Subset& k : domain.K.covers_of(s))
        if (k.is_subset_of(residue_union)) {
          all_escape = false;
          break;
        }
      if (all_escape) layer.add(s);
    }
    if (layer.empty())
      throw island_error(errc::not_admissible,
                         "layer construction stalled: family is not admissible");

    SetFamily next(n);
    for (const Subset& s : residue.members())
      if (!layer.contains(s)) next.add(s);
    residue = std::move(next);

    for (const Subset& s : layer.members())
      s.for_each_member([&](int i) { heights[static_cast<std::size_t>(i)] = level; });
    part.layers.push_back(std::move(layer));
  }
  return {std::move(part), HeightFunction(std::move(heights))};
}

// h(u) = (number of members containing u) - 1; U ∈ H keeps this total.
inline HeightFunction standard_height(const SetFamily& H) {
  int n = H.universe_size();
  if (!H.contains(Subset::universe(n)))
    throw island_error(errc::missing_universe, "family must contain U");
  std::vector<int> heights(static_cast<std::size_t>(n), -1);
  for (const Subset& s : H.members())
    s.for_each_member([&](int i) { ++heights[static_cast<std::size_t>(i)]; });
  return HeightFunction(std::move(heights));
}

}  // namespace islands
