#pragma once

// Seeded generators for multisets, their arrangements, and trees.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ordcalc/cardinal.hpp"
#include "ordcalc/invariant_sum.hpp"
#include "ordcalc/random.hpp"
#include "ordcalc/sequence.hpp"
#include "ordcalc/tree_size.hpp"

namespace ordcalc {

/// A countable multiset with exactly one nonzero value of multiplicity ℵ₀,
/// up to three other nonzero values of finite multiplicity, and zero with
/// multiplicity 2 or 3.
struct OmegaMultiset {
  OrdMultiset multiset;
  Ordinal repeated;                // the ℵ₀ value
  std::vector<Ordinal> finite;     // nonzero finite members, with repetition
  std::size_t zeros = 0;
};

inline OmegaMultiset random_omega_multiset(Rng& rng, const OrdinalSpec& spec = OrdinalSpec{1, 3, 2, 3, 0}) {
  OmegaMultiset out;
  out.repeated = random_nonzero_ordinal(rng, spec);
  out.multiset.entries.push_back(MultisetEntry{out.repeated, Cardinal::aleph(0)});
  const auto others = rng.below(4);
  for (std::uint64_t i = 0; i < others; ++i) {
    const Ordinal v = random_nonzero_ordinal(rng, spec);
    const bool taken = std::any_of(out.multiset.entries.begin(), out.multiset.entries.end(),
                                   [&](const MultisetEntry& e) { return e.value == v; });
    if (taken) continue;
    const auto k = rng.between(1, 2);
    out.multiset.entries.push_back(MultisetEntry{v, Cardinal(static_cast<int>(k))});
    out.finite.insert(out.finite.end(), k, v);
  }
  out.zeros = rng.between(2, 3);
  out.multiset.entries.push_back(MultisetEntry{Ordinal(), Cardinal(static_cast<int>(out.zeros))});
  return out;
}

namespace detail {

/// Drops copies of v at the end of an explicit prefix that a following
/// Repeat(v, ω) would absorb, so equal sequences compare equal.
inline std::vector<Ordinal> canonical_prefix(std::vector<Ordinal> prefix, const Ordinal& v) {
  while (!prefix.empty() && prefix.back() == v) prefix.pop_back();
  return prefix;
}

inline void insert_copies(Rng& rng, std::vector<Ordinal>& values, const Ordinal& v, std::uint64_t copies) {
  for (std::uint64_t c = 0; c < copies; ++c) {
    values.insert(values.begin() + static_cast<std::ptrdiff_t>(rng.below(values.size() + 1)), v);
  }
}

}  // namespace detail

/// Distinct arrangements of length ω: an explicit prefix holding every
/// finite member and a few copies of the ℵ₀ value, then Repeat(v, ω).
inline std::vector<SeqDesc> omega_arrangements(Rng& rng, const OmegaMultiset& m, std::size_t count) {
  std::vector<std::vector<Ordinal>> seen;
  std::vector<SeqDesc> out;
  for (std::size_t attempt = 0; attempt < 200 * count && out.size() < count; ++attempt) {
    std::vector<Ordinal> prefix = m.finite;
    prefix.insert(prefix.end(), m.zeros, Ordinal());
    rng.shuffle(prefix);
    detail::insert_copies(rng, prefix, m.repeated, rng.below(5));
    auto key = detail::canonical_prefix(prefix, m.repeated);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.push_back(SeqDesc{{Explicit{prefix}, Repeat{m.repeated, Ordinal::omega()}}});
  }
  return out;
}

/// Distinct countable arrangements longer than ω: as above, but at least one
/// zero is held back and placed after the infinite run.
inline std::vector<SeqDesc> long_arrangements(Rng& rng, const OmegaMultiset& m, std::size_t count) {
  std::vector<std::pair<std::vector<Ordinal>, std::size_t>> seen;
  std::vector<SeqDesc> out;
  for (std::size_t attempt = 0; attempt < 200 * count && out.size() < count; ++attempt) {
    const auto after = static_cast<std::size_t>(rng.between(1, m.zeros));
    std::vector<Ordinal> prefix = m.finite;
    prefix.insert(prefix.end(), m.zeros - after, Ordinal());
    rng.shuffle(prefix);
    detail::insert_copies(rng, prefix, m.repeated, rng.below(5));
    auto key = std::make_pair(detail::canonical_prefix(prefix, m.repeated), after);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    SeqDesc s{{Explicit{prefix}, Repeat{m.repeated, Ordinal::omega()}}};
    if (rng.chance(1, 2)) {
      s.segments.emplace_back(Explicit{std::vector<Ordinal>(after, Ordinal())});
    } else {
      s.segments.emplace_back(Repeat{Ordinal(), Ordinal(Natural(after))});
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Any countable arrangement of m: members split between a prefix and a
/// suffix around the infinite run, in random order.
inline SeqDesc random_countable_arrangement(Rng& rng, const OmegaMultiset& m) {
  std::vector<Ordinal> members = m.finite;
  members.insert(members.end(), m.zeros, Ordinal());
  rng.shuffle(members);
  const auto cut = static_cast<std::ptrdiff_t>(rng.below(members.size() + 1));
  std::vector<Ordinal> head(members.begin(), members.begin() + cut);
  std::vector<Ordinal> tail(members.begin() + cut, members.end());
  detail::insert_copies(rng, head, m.repeated, rng.below(3));
  detail::insert_copies(rng, tail, m.repeated, rng.below(3));
  return SeqDesc{{Explicit{head}, Repeat{m.repeated, Ordinal::omega()}, Explicit{tail}}};
}

// ---------------------------------------------------------------------------
// Trees

/// A finite tree with between 1 and max_nodes nodes, built by attaching each
/// new node below a uniformly chosen earlier one.
inline TreeDesc random_finite_tree(Rng& rng, std::size_t max_nodes) {
  const auto n = static_cast<std::size_t>(rng.between(1, max_nodes));
  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t i = 1; i < n; ++i) kids[rng.below(i)].push_back(i);
  std::vector<TreeDesc> built(n);
  for (std::size_t i = n; i-- > 0;) {
    for (auto k : kids[i]) built[i].children.push_back(TreeChild{std::move(built[k]), 1});
  }
  return built[0];
}

/// A tree of bounded depth whose child entries have multiplicity 1, 2 or ℵ₀.
inline TreeDesc random_tree(Rng& rng, int depth) {
  TreeDesc t;
  if (depth <= 0) return t;
  const auto n = rng.below(4);
  for (std::uint64_t i = 0; i < n; ++i) {
    Cardinal k = rng.chance(1, 3) ? Cardinal::aleph(0) : Cardinal(static_cast<int>(rng.between(1, 2)));
    t.children.push_back(TreeChild{random_tree(rng, depth - 1 - static_cast<int>(rng.below(2))), k});
  }
  return t;
}

}  // namespace ordcalc
