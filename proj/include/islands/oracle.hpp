#pragma once

// Brute-force ground truth: exhaustive height-function enumeration (one
// representative per weak order), realizability and maximum-system searches,
// prime-implicant and formal-concept oracles, and a seeded random-domain
// generator for property suites.

#include <numeric>
#include <random>

#include "islands/core.hpp"
#include "islands/domains.hpp"
#include "islands/engine.hpp"

namespace islands {

inline constexpr int kDefaultOracleCap = 8;

namespace detail {

inline void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw island_error(errc::too_large,
                       std::string(what) + " capped at " + std::to_string(cap) +
                           " points");
}

}  // namespace detail

// Visits one normalized height function per ordered set partition of
// {0..n-1} (Fubini(n) many): each element in turn joins an existing level or
// opens a new level at any position. fn returning false stops the sweep.
template <typename F>
inline bool for_each_weak_order(int n, F&& fn) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> h(static_cast<std::size_t>(n));
  std::function<bool(int)> place = [&](int e) -> bool {
    if (e == n) {
      for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) h[static_cast<std::size_t>(v)] = static_cast<int>(b);
      return fn(HeightFunction(h));
    }
    // index-based: the recursive call temporarily grows `blocks`, which can
    // reallocate and would invalidate a range-for reference
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(e);
      if (!place(e + 1)) return false;
      blocks[i].pop_back();
    }
    for (std::size_t pos = 0; pos <= blocks.size(); ++pos) {
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(pos), {e});
      if (!place(e + 1)) return false;
      blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return true;
  };
  return place(0);
}

inline std::vector<HeightFunction> weak_orders(const GroundSet& ground,
                                               int cap = kDefaultOracleCap) {
  detail::check_cap(ground.size(), cap, "weak-order enumeration");
  std::vector<HeightFunction> out;
  for_each_weak_order(ground.size(), [&](const HeightFunction& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

// First weak order whose system (by the given evaluator) is exactly H.
template <typename SystemFn>
inline std::optional<HeightFunction> find_realizing_height_for(
    int n, SystemFn&& system_of, const SetFamily& H, int cap = kDefaultOracleCap) {
  detail::check_cap(n, cap, "realizability search");
  std::optional<HeightFunction> found;
  for_each_weak_order(n, [&](const HeightFunction& h) {
    if (system_of(h) == H) {
      found = h;
      return false;
    }
    return true;
  });
  return found;
}

inline std::optional<HeightFunction> find_realizing_height(
    const IslandDomain& domain, const SetFamily& H, bool strict,
    int cap = kDefaultOracleCap) {
  SystemEvaluator eval(domain);
  return find_realizing_height_for(
      domain.ground.size(),
      [&](const HeightFunction& h) {
        return strict ? eval.island_system(h) : eval.pre_island_system(h);
      },
      H, cap);
}

// Largest system over all injective height functions, with a witness.
// Maximal systems are always realized injectively, so this is the maximum
// over all height functions as well.
template <typename SystemFn>
inline std::pair<int, HeightFunction> max_system_for(int n, SystemFn&& system_of,
                                                     int cap = kDefaultOracleCap) {
  detail::check_cap(n, cap, "maximum-system search");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = -1;
  HeightFunction witness;
  do {
    HeightFunction h(perm);
    int count = static_cast<int>(system_of(h).size());
    if (count > best) {
      best = count;
      witness = h;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, witness};
}

inline std::pair<int, HeightFunction> max_system(const IslandDomain& domain,
                                                 bool strict,
                                                 int cap = kDefaultOracleCap) {
  SystemEvaluator eval(domain);
  return max_system_for(
      domain.ground.size(),
      [&](const HeightFunction& h) {
        return strict ? eval.island_system(h) : eval.pre_island_system(h);
      },
      cap);
}

// Maximal subcubes inside the true-set of a Boolean function, as subsets of
// the 2^n minterm indices (first variable most significant). Scans all 3^n
// patterns over {0,1,*}.
inline SetFamily prime_implicants_bruteforce(const std::vector<bool>& truth_table) {
  int n = 0;
  while ((std::size_t{1} << n) < truth_table.size()) ++n;
  if (truth_table.size() != (std::size_t{1} << n) || truth_table.empty())
    throw island_error(errc::bad_input, "truth table length must be a power of two");
  int points = static_cast<int>(truth_table.size());

  Subset trueset(points);
  for (int k = 0; k < points; ++k)
    if (truth_table[static_cast<std::size_t>(k)]) trueset.add(k);

  auto cube_of = [&](const std::vector<int>& pattern) {
    Subset cube(points);
    for (int k = 0; k < points; ++k) {
      bool match = true;
      for (int i = 0; i < n; ++i) {
        int bit = (k >> (n - 1 - i)) & 1;
        if (pattern[static_cast<std::size_t>(i)] != 2 &&
            pattern[static_cast<std::size_t>(i)] != bit) {
          match = false;
          break;
        }
      }
      if (match) cube.add(k);
    }
    return cube;
  };

  SetFamily out(points);
  std::vector<int> pattern(static_cast<std::size_t>(n), 0);
  while (true) {
    Subset cube = cube_of(pattern);
    if (cube.is_subset_of(trueset)) {
      bool prime = true;
      for (int i = 0; i < n && prime; ++i) {
        if (pattern[static_cast<std::size_t>(i)] == 2) continue;
        auto widened = pattern;
        widened[static_cast<std::size_t>(i)] = 2;
        if (cube_of(widened).is_subset_of(trueset)) prime = false;
      }
      if (prime) out.add(cube);
    }
    int i = n - 1;
    while (i >= 0 && pattern[static_cast<std::size_t>(i)] == 2) {
      pattern[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++pattern[static_cast<std::size_t>(i)];
  }
  return out;
}

// All formal concepts (extent, intent) of a two-factor context, via closure
// of every object subset; returned as per-factor index lists, extents in
// subset-lex order.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>>
formal_concepts_bruteforce(const ContextSpec& spec) {
  if (spec.factors.size() != 2)
    throw island_error(errc::invalid_spec, "concept oracle needs a two-factor context");
  int ng = static_cast<int>(spec.factors[0].size());
  int nm = static_cast<int>(spec.factors[1].size());
  if (ng > 20 || nm > 20)
    throw island_error(errc::too_large, "concept oracle capped at 20x20 contexts");

  std::vector<std::uint64_t> row(static_cast<std::size_t>(ng), 0);
  for (const auto& t : spec.relation) {
    if (t.size() != 2 || t[0] < 0 || t[0] >= ng || t[1] < 0 || t[1] >= nm)
      throw island_error(errc::invalid_spec, "relation tuple out of range");
    row[static_cast<std::size_t>(t[0])] |= (std::uint64_t{1} << t[1]);
  }

  auto derive_up = [&](std::uint64_t objs) {  // common attributes
    std::uint64_t attrs = (nm == 64) ? ~std::uint64_t{0}
                                     : ((std::uint64_t{1} << nm) - 1);
    for (int g = 0; g < ng; ++g)
      if ((objs >> g) & 1) attrs &= row[static_cast<std::size_t>(g)];
    return attrs;
  };
  auto derive_down = [&](std::uint64_t attrs) {  // objects having them all
    std::uint64_t objs = 0;
    for (int g = 0; g < ng; ++g)
      if ((row[static_cast<std::size_t>(g)] & attrs) == attrs)
        objs |= (std::uint64_t{1} << g);
    return objs;
  };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (std::uint64_t objs = 0; objs < (std::uint64_t{1} << ng); ++objs) {
    std::uint64_t intent = derive_up(objs);
    std::uint64_t extent = derive_down(intent);
    seen.emplace_back(extent, intent);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (auto [extent, intent] : seen) {
    std::vector<int> e, i;
    for (int g = 0; g < ng; ++g)
      if ((extent >> g) & 1) e.push_back(g);
    for (int m = 0; m < nm; ++m)
      if ((intent >> m) & 1) i.push_back(m);
    out.emplace_back(std::move(e), std::move(i));
  }
  return out;
}

// The box extent×intent inside the context's product ground set.
inline Subset concept_box(const ContextSpec& spec, const std::vector<int>& extent,
                          const std::vector<int>& intent) {
  int total = static_cast<int>(spec.factors[0].size() * spec.factors[1].size());
  Subset s(total);
  for (int g : extent)
    for (int m : intent) s.add(spec.tuple_index({g, m}));
  return s;
}

// Seeded explicit domain: K is a random subfamily of P(U) (U forced, ∅
// sometimes), C a random subfamily of K with U forced.
inline IslandDomain random_domain(std::mt19937_64& rng, int min_points = 2,
                                  int max_points = 5) {
  int n = min_points + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                            max_points - min_points + 1));
  GroundSet ground = GroundSet::numbered(n);

  SetFamily K(n);
  Subset u = Subset::universe(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (rng() % 100 >= 40) continue;
    Subset s(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.add(i);
    K.add(s);
  }
  K.add(u);
  if (rng() % 100 < 15) K.add(Subset(n));

  SetFamily C(n);
  for (const Subset& s : K.members())
    if (rng() % 100 < 50) C.add(s);
  C.add(u);
  return validate_domain(std::move(C), KBackend::explicit_family(std::move(K)),
                         std::move(ground));
}

inline HeightFunction random_height(std::mt19937_64& rng, int n) {
  std::vector<int> h(static_cast<std::size_t>(n));
  for (auto& v : h) v = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
  return HeightFunction(std::move(h));
}

}  // namespace islands
