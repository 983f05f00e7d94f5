#pragma once

// Ground sets, index-based subsets, set families, and the island-domain
// container (candidate family C over a surroundings family K, where K is
// either an explicit family or an implicit membership/cover backend).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace islands {

enum class errc {
  empty_ground,
  missing_universe,
  not_subfamily,
  not_in_k,
  not_in_c,
  empty_candidate,
  empty_set_member,
  not_admissible,
  undecidable,
  too_large,
  invalid_spec,
  not_prime,
  disconnected_graph,
  disconnected_candidate,
  bad_input,
};

class island_error : public std::runtime_error {
public:
  island_error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

// Finite universe with distinct point names; points are addressed by index.
class GroundSet {
public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
      throw island_error(errc::empty_ground, "ground set must be nonempty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
      if (!fresh)
        throw island_error(errc::bad_input, "duplicate point name: " + names_[i]);
    }
  }

  static GroundSet numbered(int n, const std::string& prefix = "u") {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return GroundSet(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw island_error(errc::bad_input, "unknown point name: " + name);
    return it->second;
  }

  bool has_name(const std::string& name) const { return index_.count(name) != 0; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// Subset of a fixed-size universe, stored as a bit vector. Equality is
// extensional; all binary operations require matching universe sizes.
class Subset {
public:
  Subset() = default;

  explicit Subset(int universe_size)
      : n_(universe_size), words_(word_count(universe_size), 0) {}

  static Subset empty(int n) { return Subset(n); }

  static Subset universe(int n) {
    Subset s(n);
    for (int i = 0; i < n; ++i) s.add(i);
    return s;
  }

  static Subset single(int n, int i) {
    Subset s(n);
    s.add(i);
    return s;
  }

  static Subset of(int n, std::initializer_list<int> members) {
    Subset s(n);
    for (int i : members) s.add(i);
    return s;
  }

  static Subset of(int n, const std::vector<int>& members) {
    Subset s(n);
    for (int i : members) s.add(i);
    return s;
  }

  int universe_size() const { return n_; }

  bool test(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void add(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) >> 6] |= (std::uint64_t{1} << (i & 63));
  }

  void remove(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool is_empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool operator==(const Subset& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  bool is_subset_of(const Subset& o) const {
    check_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool is_proper_subset_of(const Subset& o) const {
    return is_subset_of(o) && *this != o;
  }

  bool intersects(const Subset& o) const {
    check_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Subset operator|(const Subset& o) const {
    check_universe(o);
    Subset r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | o.words_[k];
    return r;
  }

  Subset operator&(const Subset& o) const {
    check_universe(o);
    Subset r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
    return r;
  }

  // set difference
  Subset operator-(const Subset& o) const {
    check_universe(o);
    Subset r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~o.words_[k];
    return r;
  }

  Subset& operator|=(const Subset& o) {
    check_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  std::vector<int> members() const {
    std::vector<int> m;
    m.reserve(static_cast<std::size_t>(count()));
    for_each_member([&](int i) { m.push_back(i); });
    return m;
  }

  template <typename F>
  void for_each_member(F&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int bit = __builtin_ctzll(w);
        fn(static_cast<int>(k * 64) + bit);
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(n_);
    for (std::uint64_t w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  // total order used for deterministic family listings: by size, then by
  // member indices lexicographically
  bool precedes(const Subset& o) const {
    int ca = count(), cb = o.count();
    if (ca != cb) return ca < cb;
    auto ma = members(), mb = o.members();
    return ma < mb;
  }

private:
  static std::size_t word_count(int n) {
    if (n < 0) throw island_error(errc::bad_input, "negative universe size");
    return static_cast<std::size_t>((n + 63) / 64);
  }

  void check_index(int i) const {
    if (i < 0 || i >= n_)
      throw island_error(errc::bad_input, "point index out of range");
  }

  void check_universe(const Subset& o) const {
    if (n_ != o.n_)
      throw island_error(errc::bad_input, "subsets over different ground sets");
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

// Duplicate-free ordered family of subsets over one ground set.
class SetFamily {
public:
  SetFamily() = default;
  explicit SetFamily(int universe_size) : n_(universe_size) {}

  explicit SetFamily(int universe_size, const std::vector<Subset>& members)
      : n_(universe_size) {
    for (const Subset& s : members) add(s);
  }

  int universe_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Subset& operator[](std::size_t i) const { return members_.at(i); }
  const std::vector<Subset>& members() const { return members_; }

  // returns false when the subset was already present
  bool add(const Subset& s) {
    if (s.universe_size() != n_)
      throw island_error(errc::bad_input, "family member over wrong ground set");
    auto [it, fresh] = positions_.emplace(s, members_.size());
    if (fresh) members_.push_back(s);
    return fresh;
  }

  bool contains(const Subset& s) const {
    return s.universe_size() == n_ && positions_.count(s) != 0;
  }

  std::optional<std::size_t> index_of(const Subset& s) const {
    auto it = positions_.find(s);
    if (it == positions_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const SetFamily& o) const {
    if (n_ != o.n_ || members_.size() != o.members_.size()) return false;
    for (const Subset& s : members_)
      if (!o.contains(s)) return false;
    return true;
  }
  bool operator!=(const SetFamily& o) const { return !(*this == o); }

  bool is_subfamily_of(const SetFamily& o) const {
    for (const Subset& s : members_)
      if (!o.contains(s)) return false;
    return true;
  }

  // deterministic listing order: by (size, lexicographic member indices)
  std::vector<Subset> sorted_members() const {
    std::vector<Subset> out = members_;
    std::sort(out.begin(), out.end(),
              [](const Subset& a, const Subset& b) { return a.precedes(b); });
    return out;
  }

  std::size_t hash() const {
    // order-independent
    std::size_t h = std::hash<int>{}(n_);
    for (const Subset& s : members_) h ^= s.hash();
    return h;
  }

private:
  int n_ = 0;
  std::vector<Subset> members_;
  std::unordered_map<Subset, std::size_t, SubsetHash> positions_;
};

struct SetFamilyHash {
  std::size_t operator()(const SetFamily& f) const { return f.hash(); }
};

// Surroundings family K. Either an explicit family, or an implicit backend
// given by a membership predicate and a cover generator. Implicit backends
// may carry property certificates for checks that would otherwise need a
// full enumeration of K.
class KBackend {
public:
  struct Implicit {
    std::function<bool(const Subset&)> contains;
    std::function<std::vector<Subset>(const Subset&)> covers;
    std::optional<bool> union_closed;
    std::optional<bool> unit_covers;
  };

  static KBackend explicit_family(SetFamily family) {
    KBackend k;
    k.repr_ = std::move(family);
    return k;
  }

  static KBackend implicit(Implicit backend) {
    KBackend k;
    k.repr_ = std::move(backend);
    return k;
  }

  bool is_explicit() const { return std::holds_alternative<SetFamily>(repr_); }

  const SetFamily& family() const {
    if (!is_explicit())
      throw island_error(errc::undecidable, "implicit K backend has no explicit family");
    return std::get<SetFamily>(repr_);
  }

  bool contains(const Subset& s) const {
    if (is_explicit()) return std::get<SetFamily>(repr_).contains(s);
    return std::get<Implicit>(repr_).contains(s);
  }

  // Covers of s in the poset (K, subseteq). Explicit backends scan for
  // minimal proper supersets; implicit backends delegate to the generator.
  std::vector<Subset> covers_of(const Subset& s) const {
    if (!is_explicit()) return std::get<Implicit>(repr_).covers(s);
    const SetFamily& fam = std::get<SetFamily>(repr_);
    std::vector<Subset> supersets;
    for (const Subset& k : fam.members())
      if (s.is_proper_subset_of(k)) supersets.push_back(k);
    std::vector<Subset> minimal;
    for (const Subset& k : supersets) {
      bool is_min = true;
      for (const Subset& k2 : supersets)
        if (k2 != k && k2.is_proper_subset_of(k)) {
          is_min = false;
          break;
        }
      if (is_min) minimal.push_back(k);
    }
    return minimal;
  }

  std::optional<bool> union_closed_certificate() const {
    if (is_explicit()) return std::nullopt;
    return std::get<Implicit>(repr_).union_closed;
  }

  std::optional<bool> unit_covers_certificate() const {
    if (is_explicit()) return std::nullopt;
    return std::get<Implicit>(repr_).unit_covers;
  }

private:
  KBackend() = default;
  std::variant<SetFamily, Implicit> repr_;
};

// The pair (C, K) over a named ground set, with U in C and C a subfamily
// of K. The empty set is a legitimate member of both families; island
// predicates simply never apply to it.
struct IslandDomain {
  GroundSet ground;
  SetFamily C;
  KBackend K;

  Subset universe() const { return Subset::universe(ground.size()); }
};

// Total integer heights over the ground set. Only the induced weak order
// matters; normalize_heights produces the canonical rank form.
class HeightFunction {
public:
  HeightFunction() = default;

  explicit HeightFunction(std::vector<int> heights) : values_(std::move(heights)) {}

  static HeightFunction constant(int n, int value) {
    return HeightFunction(std::vector<int>(static_cast<std::size_t>(n), value));
  }

  int size() const { return static_cast<int>(values_.size()); }
  int at(int i) const { return values_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const HeightFunction& o) const { return values_ == o.values_; }
  bool operator!=(const HeightFunction& o) const { return values_ != o.values_; }

  // min over a nonempty subset
  int min_over(const Subset& s) const {
    check_domain(s);
    bool seen = false;
    int best = 0;
    s.for_each_member([&](int i) {
      int v = values_[static_cast<std::size_t>(i)];
      if (!seen || v < best) best = v;
      seen = true;
    });
    if (!seen) throw island_error(errc::empty_candidate, "min over empty set");
    return best;
  }

  int max_over(const Subset& s) const {
    check_domain(s);
    bool seen = false;
    int best = 0;
    s.for_each_member([&](int i) {
      int v = values_[static_cast<std::size_t>(i)];
      if (!seen || v > best) best = v;
      seen = true;
    });
    if (!seen) throw island_error(errc::empty_candidate, "max over empty set");
    return best;
  }

  bool is_injective() const {
    std::vector<int> v = values_;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  }

private:
  void check_domain(const Subset& s) const {
    if (s.universe_size() != size())
      throw island_error(errc::bad_input, "height function over wrong ground set");
  }

  std::vector<int> values_;
};

// Rank compression: order-isomorphic heights with range {0,...,k-1} for k
// distinct input values. Idempotent.
inline HeightFunction normalize_heights(const HeightFunction& h) {
  std::vector<int> distinct = h.values();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out(h.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), h.values()[i]);
    out[i] = static_cast<int>(it - distinct.begin());
  }
  return HeightFunction(std::move(out));
}

// Validates U in C and C subseteq K (via the K membership predicate).
inline IslandDomain validate_domain(SetFamily C, KBackend K, GroundSet ground) {
  if (ground.size() < 1)
    throw island_error(errc::empty_ground, "empty ground set");
  if (C.universe_size() != ground.size())
    throw island_error(errc::bad_input, "C is over a different ground set");
  Subset u = Subset::universe(ground.size());
  if (!C.contains(u))
    throw island_error(errc::missing_universe, "U is not a member of C");
  for (const Subset& c : C.members())
    if (!K.contains(c))
      throw island_error(errc::not_subfamily, "a member of C is not a member of K");
  return IslandDomain{std::move(ground), std::move(C), std::move(K)};
}

// All K-members covering S in (K, subseteq). S must itself belong to K.
inline SetFamily covers(const IslandDomain& domain, const Subset& s) {
  if (!domain.K.contains(s))
    throw island_error(errc::not_in_k, "set is not a member of K");
  SetFamily out(domain.ground.size());
  for (const Subset& k : domain.K.covers_of(s)) out.add(k);
  return out;
}

}  // namespace islands
