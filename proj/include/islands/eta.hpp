#pragma once

// Point-to-set proximity framework: a relation η over (point, candidate)
// with u∈C ⟹ uηC, boundaries ∂C, η-islands, and the η-versions of
// admissibility, connectivity, δ, and distantness.

#include "islands/admissibility.hpp"
#include "islands/core.hpp"
#include "islands/domains.hpp"
#include "islands/engine.hpp"

namespace islands {

// η is stored extensionally: one point set per member of C, in C's order.
class EtaDomain {
public:
  EtaDomain(GroundSet ground, SetFamily C, std::vector<Subset> eta)
      : ground_(std::move(ground)), C_(std::move(C)), eta_(std::move(eta)) {
    int n = ground_.size();
    if (C_.universe_size() != n)
      throw island_error(errc::bad_input, "C is over a different ground set");
    if (!C_.contains(Subset::universe(n)))
      throw island_error(errc::missing_universe, "U is not a member of C");
    if (eta_.size() != C_.size())
      throw island_error(errc::bad_input, "eta table size must match C");
    for (std::size_t i = 0; i < eta_.size(); ++i)
      if (!C_[i].is_subset_of(eta_[i]))
        throw island_error(errc::bad_input,
                           "eta must relate every member to its own points");
  }

  const GroundSet& ground() const { return ground_; }
  const SetFamily& C() const { return C_; }

  // {u : u η C} for a member of C
  const Subset& eta_set(const Subset& c) const {
    auto idx = C_.index_of(c);
    if (!idx) throw island_error(errc::not_in_c, "set is not a member of C");
    return eta_[*idx];
  }

  const Subset& eta_set(std::size_t index) const { return eta_.at(index); }

private:
  GroundSet ground_;
  SetFamily C_;
  std::vector<Subset> eta_;
};

// ∂C: points close to C from the outside.
inline Subset boundary(const EtaDomain& ed, const Subset& c) {
  return ed.eta_set(c) - c;
}

// uηC ⟺ some K-member ≽ C holds u, i.e. u ∈ C or u lies in a cover of C.
inline EtaDomain eta_from_K(const IslandDomain& domain) {
  std::vector<Subset> eta;
  eta.reserve(domain.C.size());
  for (const Subset& c : domain.C.members()) {
    Subset e = c;
    for (const Subset& k : domain.K.covers_of(c)) e |= k;
    eta.push_back(std::move(e));
  }
  return EtaDomain(domain.ground, domain.C, std::move(eta));
}

// uηC ⟺ u ∈ C or u has a graph neighbor in C.
inline EtaDomain graph_eta(GroundSet ground,
                           const std::vector<std::pair<int, int>>& edges,
                           SetFamily C) {
  auto nbr = detail::adjacency_from_edges(ground.size(), edges);
  std::vector<Subset> eta;
  eta.reserve(C.size());
  for (const Subset& c : C.members()) eta.push_back(c | detail::neighborhood(nbr, c));
  return EtaDomain(std::move(ground), std::move(C), std::move(eta));
}

inline bool is_island_eta(const EtaDomain& ed, const HeightFunction& h,
                          const Subset& s) {
  if (h.size() != ed.ground().size())
    throw island_error(errc::bad_input, "height function over wrong ground set");
  if (s.is_empty())
    throw island_error(errc::empty_candidate, "island predicates need a nonempty set");
  Subset rim = boundary(ed, s);
  if (rim.is_empty()) return true;
  return h.max_over(rim) < h.min_over(s);
}

inline SetFamily island_system_eta(const EtaDomain& ed, const HeightFunction& h) {
  SetFamily out(ed.ground().size());
  for (const Subset& c : ed.C().members()) {
    if (c.is_empty()) continue;
    if (is_island_eta(ed, h, c)) out.add(c);
  }
  return out;
}

// Every nonempty antichain A ⊆ H has a member whose boundary avoids ∪A.
inline bool eta_is_admissible(const EtaDomain& ed, const SetFamily& H) {
  int n = ed.ground().size();
  if (!H.contains(Subset::universe(n)))
    throw island_error(errc::missing_universe, "family must contain U");
  std::vector<Subset> bounds;
  for (const Subset& s : H.members()) {
    if (s.is_empty())
      throw island_error(errc::empty_set_member, "family must not contain the empty set");
    bounds.push_back(boundary(ed, s));  // throws NotInC for members outside C
  }
  std::vector<Subset> sets = H.members();
  return detail::for_each_antichain(sets, [&](const std::vector<std::size_t>& a) {
    Subset un(n);
    for (std::size_t i : a) un |= sets[i];
    for (std::size_t i : a)
      if (!bounds[i].intersects(un)) return true;
    return false;
  });
}

// Overlapping, incomparable A,B always leave a point of B∖A close to A.
// Nested pairs are exempt: a gap there can never force two islands to
// overlap without nesting, so only incomparable pairs decide the property.
inline bool eta_is_connective(const EtaDomain& ed) {
  const auto& m = ed.C().members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Subset& a = m[i];
    const Subset& ea = ed.eta_set(i);
    for (const Subset& b : m) {
      if (!a.intersects(b) || b.is_subset_of(a) || a.is_subset_of(b)) continue;
      if (!(b - a).intersects(ea)) return false;
    }
  }
  return true;
}

// AδB: some point of B is close to A.
inline bool eta_delta(const EtaDomain& ed, const Subset& a, const Subset& b) {
  if (!ed.C().contains(b))
    throw island_error(errc::not_in_c, "set is not a member of C");
  return ed.eta_set(a).intersects(b);
}

inline bool eta_is_distant_family(const EtaDomain& ed, const SetFamily& H) {
  if (H.empty())
    throw island_error(errc::bad_input, "distant-family check needs a nonempty family");
  const auto& m = H.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i].is_subset_of(m[j]) || m[j].is_subset_of(m[i])) continue;
      if (eta_delta(ed, m[i], m[j]) || eta_delta(ed, m[j], m[i])) return false;
    }
  return true;
}

}  // namespace islands
