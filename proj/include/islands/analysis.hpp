#pragma once

// Independence notions for set families, the δ proximity relation, distant
// families, and the domain-level classifications built from them.

#include "islands/core.hpp"

namespace islands {

// Every pair of members is comparable or disjoint (laminar family).
inline bool is_cd_independent(const SetFamily& H) {
  const auto& m = H.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!m[i].intersects(m[j])) continue;
      if (!m[i].is_subset_of(m[j]) && !m[j].is_subset_of(m[i])) return false;
    }
  return true;
}

// No member is covered by a union of members unless one of them already
// contains it. H violates iff H ⊆ ∪{G ∈ H : H ⊈ G}, so a pairwise-union scan
// decides it. For laminar families only proper subsets can matter, which is
// the cheaper criterion below; ∅ fails either way (it is covered by the
// union of no members at all).
inline bool is_weakly_independent(const SetFamily& H) {
  const auto& m = H.members();
  int n = H.universe_size();
  if (is_cd_independent(H)) {
    for (const Subset& h : m) {
      Subset below(n);
      for (const Subset& g : m)
        if (g.is_proper_subset_of(h)) below |= g;
      if (below == h) return false;
    }
    return true;
  }
  for (const Subset& h : m) {
    Subset others(n);
    for (const Subset& g : m)
      if (!h.is_subset_of(g)) others |= g;
    if (h.is_subset_of(others)) return false;
  }
  return true;
}

inline bool is_cdw_independent(const SetFamily& H) {
  return is_cd_independent(H) && is_weakly_independent(H);
}

namespace detail {

inline void check_in_c(const IslandDomain& domain, const Subset& s) {
  if (!domain.C.contains(s))
    throw island_error(errc::not_in_c, "set is not a member of C");
}

}  // namespace detail

// AδB: some K ∈ K with A ≼ K meets B, i.e. A itself meets B or one of A's
// covers does.
inline bool delta(const IslandDomain& domain, const Subset& a, const Subset& b) {
  detail::check_in_c(domain, a);
  detail::check_in_c(domain, b);
  if (a.intersects(b)) return true;
  for (const Subset& k : domain.K.covers_of(a))
    if (k.intersects(b)) return true;
  return false;
}

// Every incomparable pair of members is distant: unrelated by δ both ways.
inline bool is_distant_family(const IslandDomain& domain, const SetFamily& H) {
  if (H.empty())
    throw island_error(errc::bad_input, "distant-family check needs a nonempty family");
  const auto& m = H.members();
  for (const Subset& s : m) detail::check_in_c(domain, s);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i].is_subset_of(m[j]) || m[j].is_subset_of(m[i])) continue;
      if (delta(domain, m[i], m[j]) || delta(domain, m[j], m[i])) return false;
    }
  return true;
}

// A failing pair for connectivity: A,B ∈ C overlapping, B ⊈ A, with no
// K-member strictly between A and A∪B. A minimal such K-member would be a
// cover of A, so only covers need scanning. Pairs with A ⊆ B satisfy the
// condition through K = B itself and are skipped.
inline std::optional<std::pair<Subset, Subset>> connectivity_gap(
    const IslandDomain& domain) {
  const auto& m = domain.C.members();
  for (const Subset& a : m) {
    std::vector<Subset> cov;
    bool cov_ready = false;
    for (const Subset& b : m) {
      if (!a.intersects(b) || b.is_subset_of(a) || a.is_subset_of(b)) continue;
      if (!cov_ready) {
        cov = domain.K.covers_of(a);
        cov_ready = true;
      }
      Subset target = a | b;
      bool found = false;
      for (const Subset& k : cov)
        if (k.is_subset_of(target)) {
          found = true;
          break;
        }
      if (!found) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

// Overlapping, non-nested candidates always admit a K-member strictly
// between one of them and their union.
inline bool is_connective(const IslandDomain& domain) {
  return !connectivity_gap(domain).has_value();
}

// Connective, and δ symmetric on nonempty members of C.
inline bool is_proximity_domain(const IslandDomain& domain) {
  if (!is_connective(domain)) return false;
  const auto& m = domain.C.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].is_empty()) continue;
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[j].is_empty()) continue;
      if (delta(domain, m[i], m[j]) != delta(domain, m[j], m[i])) return false;
    }
  }
  return true;
}

// The union of any two overlapping K-members is again a K-member. Explicit
// backends get the pair scan; implicit ones answer from their certificate or
// refuse.
inline bool is_union_closed(const IslandDomain& domain) {
  if (!domain.K.is_explicit()) {
    auto cert = domain.K.union_closed_certificate();
    if (!cert)
      throw island_error(errc::undecidable,
                         "union-closure is undecidable without a certificate");
    return *cert;
  }
  const auto& m = domain.K.family().members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!m[i].intersects(m[j])) continue;
      if (!domain.K.family().contains(m[i] | m[j])) return false;
    }
  return true;
}

// Every cover of every nonempty candidate adds exactly one point.
inline bool has_unit_covers(const IslandDomain& domain) {
  auto cert = domain.K.unit_covers_certificate();
  if (cert) return *cert;
  for (const Subset& c : domain.C.members()) {
    if (c.is_empty()) continue;
    for (const Subset& k : domain.K.covers_of(c))
      if ((k - c).count() != 1) return false;
  }
  return true;
}

}  // namespace islands
