#pragma once

// Island and pre-island predicates and the systems they induce, plus the
// refinement that turns any realizing height function into an injective one
// with the same system.

#include <numeric>

#include "islands/core.hpp"

namespace islands {

namespace detail {

inline void check_candidate(const IslandDomain& domain, const Subset& s) {
  if (!domain.C.contains(s))
    throw island_error(errc::not_in_c, "set is not a member of C");
  if (s.is_empty())
    throw island_error(errc::empty_candidate, "island predicates need a nonempty set");
}

inline void check_heights(const IslandDomain& domain, const HeightFunction& h) {
  if (h.size() != domain.ground.size())
    throw island_error(errc::bad_input, "height function over wrong ground set");
}

}  // namespace detail

// S is a pre-island iff every K-cover of S reaches strictly below min h(S)
// outside S. (A cover K > S always has K \ S nonempty.)
inline bool is_pre_island(const IslandDomain& domain, const HeightFunction& h,
                          const Subset& s) {
  detail::check_candidate(domain, s);
  detail::check_heights(domain, h);
  int floor = h.min_over(s);
  for (const Subset& k : domain.K.covers_of(s)) {
    Subset rim = k - s;
    if (rim.is_empty() || h.min_over(rim) >= floor) return false;
  }
  return true;
}

// Points adjacent to S through its covers: the union of K \ S over all
// K-covers K of S.
inline Subset halo(const IslandDomain& domain, const Subset& s) {
  Subset out(domain.ground.size());
  for (const Subset& k : domain.K.covers_of(s)) out |= (k - s);
  return out;
}

// S is an island iff everything in its halo lies strictly below min h(S).
// Equivalent to the per-cover form: every point of every cover outside S is
// lower than all of S.
inline bool is_island(const IslandDomain& domain, const HeightFunction& h,
                      const Subset& s) {
  detail::check_candidate(domain, s);
  detail::check_heights(domain, h);
  Subset rim = halo(domain, s);
  if (rim.is_empty()) return true;
  return h.max_over(rim) < h.min_over(s);
}

// Precomputed per-candidate cover rims shared across many height functions.
// Built once per domain; evaluating a system is then a pass over the table.
class SystemEvaluator {
public:
  explicit SystemEvaluator(const IslandDomain& domain) : domain_(&domain) {
    int n = domain.ground.size();
    for (const Subset& c : domain.C.members()) {
      if (c.is_empty()) continue;
      Entry e;
      e.candidate = c;
      e.halo = Subset(n);
      for (const Subset& k : domain.K.covers_of(c)) {
        e.rims.push_back(k - c);
        e.halo |= e.rims.back();
      }
      entries_.push_back(std::move(e));
    }
  }

  const IslandDomain& domain() const { return *domain_; }

  SetFamily pre_island_system(const HeightFunction& h) const {
    detail::check_heights(*domain_, h);
    SetFamily out(domain_->ground.size());
    for (const Entry& e : entries_) {
      int floor = h.min_over(e.candidate);
      bool ok = true;
      for (const Subset& rim : e.rims)
        if (rim.is_empty() || h.min_over(rim) >= floor) {
          ok = false;
          break;
        }
      if (ok) out.add(e.candidate);
    }
    return out;
  }

  SetFamily island_system(const HeightFunction& h) const {
    detail::check_heights(*domain_, h);
    SetFamily out(domain_->ground.size());
    for (const Entry& e : entries_) {
      if (e.halo.is_empty() ||
          h.max_over(e.halo) < h.min_over(e.candidate))
        out.add(e.candidate);
    }
    return out;
  }

private:
  struct Entry {
    Subset candidate;
    std::vector<Subset> rims;
    Subset halo;
  };

  const IslandDomain* domain_;
  std::vector<Entry> entries_;
};

// All nonempty members of C that are pre-islands of h.
inline SetFamily pre_island_system(const IslandDomain& domain, const HeightFunction& h) {
  return SystemEvaluator(domain).pre_island_system(h);
}

// All nonempty members of C that are islands of h.
inline SetFamily island_system(const IslandDomain& domain, const HeightFunction& h) {
  return SystemEvaluator(domain).island_system(h);
}

// Splits ties one level set at a time, lowest tied value first: the m points
// at value z move to fresh distinct values y + i(w-y)/(m+1), i = 1..m (by
// ground index), where y and w are the neighbouring levels below and above z.
// Every (pre-)island of the input stays a (pre-)island of the result. Output
// is injective and rank-normalized; division stays exact by scaling all
// heights by m+1 before the split.
inline HeightFunction refine_to_injective(const IslandDomain& domain,
                                          const HeightFunction& h0) {
  detail::check_heights(domain, h0);
  HeightFunction h = normalize_heights(h0);
  int n = h.size();
  while (!h.is_injective()) {
    // normalized values are contiguous from 0; find the lowest tied one
    std::vector<int> holders;
    int z = 0;
    {
      std::vector<std::vector<int>> by_value(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        by_value[static_cast<std::size_t>(h.at(i))].push_back(i);
      for (int v = 0; v < n; ++v)
        if (by_value[static_cast<std::size_t>(v)].size() > 1) {
          z = v;
          holders = by_value[static_cast<std::size_t>(v)];
          break;
        }
    }
    int m = static_cast<int>(holders.size());
    int y = z - 1;
    int w = z + 1;
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = h.at(i) * (m + 1);
    for (int j = 0; j < m; ++j)
      out[static_cast<std::size_t>(holders[static_cast<std::size_t>(j)])] =
          y * (m + 1) + (j + 1) * (w - y);
    h = normalize_heights(HeightFunction(std::move(out)));
  }
  return h;
}

}  // namespace islands
