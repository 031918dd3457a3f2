#pragma once

// Order-free natural sums of a multiset of ordinals.
//
//   ⊎   least ∑♮ over all arrangements of the multiset, of any length
//   ⊎•  least ∑♮ over arrangements whose length is the initial ordinal of
//       the multiset's cardinality
//
// For a countable multiset both equal countable_nsum.  For the multiset with
// ℵ₁ copies of 1 and ℵ₀ copies of ω₁ they are ω₁·ω and ω₁·(ω+1).  Anything
// else only gets bounds from a seeded family of arrangements.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ordcalc/cardinal.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/random.hpp"
#include "ordcalc/sequence.hpp"
#include "ordcalc/transfinite_sum.hpp"

namespace ordcalc {

struct MultisetEntry {
  Ordinal value;
  Cardinal multiplicity;
};

struct OrdMultiset {
  std::vector<MultisetEntry> entries;
};

inline void validate(const OrdMultiset& m) {
  std::set<Ordinal> seen;
  for (const auto& e : m.entries) {
    if (e.multiplicity == Cardinal(0)) throw DomainError("multiset multiplicities must be positive");
    if (!seen.insert(e.value).second) throw DomainError("multiset values must be distinct");
  }
}

/// |I|: the total number of members.
inline Cardinal total_cardinality(const OrdMultiset& m) {
  Cardinal total;
  for (const auto& e : m.entries) total = card_add(total, e.multiplicity);
  return total;
}

inline bool is_countable(const OrdMultiset& m) {
  return std::all_of(m.entries.begin(), m.entries.end(),
                     [](const MultisetEntry& e) { return e.multiplicity.is_countable(); });
}

/// ⊎ of a countable multiset.  With ξ least such that only finitely many
/// members are ≥ ω^ξ, the value is the ⊕ of those members cut at ξ, ⊕ ω^ξ.
inline Ordinal countable_nsum(const OrdMultiset& m) {
  validate(m);
  if (!is_countable(m)) throw DomainError("uncountable multiplicity: use an explicit arrangement");
  std::optional<Ordinal> xi;
  for (const auto& e : m.entries) {
    if (e.multiplicity.is_finite() || e.value.is_zero()) continue;
    const Ordinal need = ord_add(leading_exponent(e.value), 1);
    if (!xi || *xi < need) xi = need;
  }
  Ordinal out;
  for (const auto& e : m.entries) {
    if (!e.multiplicity.is_finite()) continue;
    const Ordinal part = xi ? truncate(e.value, *xi) : e.value;
    out = nat_add(out, nat_mul_fin(part, e.multiplicity.count()));
  }
  if (xi) out = nat_add(out, omega_pow(*xi));
  return out;
}

/// Per-value member counts of an arrangement; a run of length λ contributes
/// |λ| copies.
inline std::map<Ordinal, Cardinal> arrangement_counts(const SeqDesc& s) {
  std::map<Ordinal, Cardinal> counts;
  for (const auto& seg : s.segments) {
    if (const auto* e = std::get_if<Explicit>(&seg)) {
      for (const auto& v : e->values) counts[v] = card_add(counts[v], Cardinal(1));
    } else {
      const auto& r = std::get<Repeat>(seg);
      counts[r.value] = card_add(counts[r.value], cardinality(r.length));
    }
  }
  return counts;
}

inline bool arranges(const OrdMultiset& m, const SeqDesc& s) {
  std::map<Ordinal, Cardinal> want;
  for (const auto& e : m.entries) want[e.value] = e.multiplicity;
  return arrangement_counts(s) == want;
}

/// ∑♮ of an arrangement of m.
inline Ordinal arrangement_nat_sum(const OrdMultiset& m, const SeqDesc& arrangement) {
  validate(m);
  validate(arrangement);
  if (!arranges(m, arrangement)) throw DomainError("arrangement does not enumerate the multiset");
  return iter_nat_sum(arrangement);
}

// ---------------------------------------------------------------------------
// The two-valued uncountable example

/// ℵ₁ copies of 1 and ℵ₀ copies of ω₁.
inline OrdMultiset count_example() {
  return OrdMultiset{{{Ordinal(1), Cardinal::aleph(1)}, {Ordinal::atom(1), Cardinal::aleph(0)}}};
}

inline bool is_count_example(const OrdMultiset& m) {
  const auto want = count_example();
  if (m.entries.size() != want.entries.size()) return false;
  return std::all_of(want.entries.begin(), want.entries.end(), [&](const MultisetEntry& w) {
    return std::any_of(m.entries.begin(), m.entries.end(), [&](const MultisetEntry& e) {
      return e.value == w.value && e.multiplicity == w.multiplicity;
    });
  });
}

/// The arrangement of length ω₁ + ω attaining ⊎ = ω₁·ω.
inline SeqDesc count_example_any_witness() {
  return SeqDesc{{Repeat{1, Ordinal::atom(1)}, Repeat{Ordinal::atom(1), Ordinal::omega()}}};
}

/// The arrangement of length ω₁ attaining ⊎• = ω₁·(ω+1).
inline SeqDesc count_example_initial_witness() {
  return SeqDesc{{Repeat{Ordinal::atom(1), Ordinal::omega()}, Repeat{1, Ordinal::atom(1)}}};
}

struct ExactNsum {
  Ordinal any_length;      // ⊎
  Ordinal initial_length;  // ⊎•
};

/// Exact ⊎ and ⊎•, when a method exists: countable multisets and the
/// two-valued uncountable example.
inline std::optional<ExactNsum> exact_nsum(const OrdMultiset& m) {
  validate(m);
  if (is_countable(m)) {
    const Ordinal v = countable_nsum(m);
    return ExactNsum{v, v};
  }
  if (is_count_example(m)) {
    return ExactNsum{arrangement_nat_sum(m, count_example_any_witness()),
                     arrangement_nat_sum(m, count_example_initial_witness())};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Arrangement families

namespace detail {

struct Run {
  Ordinal value;
  Ordinal length;
};

inline bool operator==(const Run& a, const Run& b) { return a.value == b.value && a.length == b.length; }

/// Merges adjacent runs of the same value and drops empty runs.
inline std::vector<Run> normalize_runs(const std::vector<Run>& runs) {
  std::vector<Run> out;
  for (const auto& r : runs) {
    if (r.length.is_zero()) continue;
    if (!out.empty() && out.back().value == r.value) {
      out.back().length = ord_add(out.back().length, r.length);
    } else {
      out.push_back(r);
    }
  }
  return out;
}

inline SeqDesc runs_to_sequence(const std::vector<Run>& runs) {
  constexpr unsigned kExplicitUpTo = 8;
  SeqDesc s;
  for (const auto& r : runs) {
    if (is_finite(r.length) && r.length <= Ordinal(kExplicitUpTo)) {
      const auto n = finite_value(r.length).convert_to<std::size_t>();
      s.segments.emplace_back(Explicit{std::vector<Ordinal>(n, r.value)});
    } else {
      s.segments.emplace_back(Repeat{r.value, r.length});
    }
  }
  return s;
}

/// Splits one entry into runs: an infinite entry keeps one run of its
/// initial ordinal (possibly lengthened) and may shed finitely many copies
/// into extra runs; a finite entry is cut into up to three chunks.
inline std::vector<Run> split_entry(Rng& rng, const MultisetEntry& e, bool keep_initial) {
  std::vector<Run> out;
  if (e.multiplicity.is_finite()) {
    Natural left = e.multiplicity.count();
    while (left > 0) {
      const Natural take = out.size() == 2 ? left : Natural(1 + rng.below(left.convert_to<std::uint64_t>()));
      out.push_back(Run{e.value, Ordinal(take)});
      left -= take;
    }
    return out;
  }
  const Ordinal kappa = initial_ordinal(e.multiplicity);
  const auto extra = rng.below(3);
  for (std::uint64_t i = 0; i < extra; ++i) out.push_back(Run{e.value, Ordinal(Natural(rng.between(1, 2)))});
  Ordinal main = kappa;
  if (!keep_initial) {
    switch (rng.below(4)) {
      case 0: main = ord_add(kappa, kappa); break;
      case 1: main = ord_add(kappa, Ordinal(Natural(rng.between(1, 2)))); break;
      default: break;
    }
  }
  out.push_back(Run{e.value, main});
  return out;
}

inline std::vector<Run> whole_runs(const std::vector<MultisetEntry>& entries) {
  std::vector<Run> out;
  for (const auto& e : entries) out.push_back(Run{e.value, initial_ordinal(e.multiplicity)});
  return out;
}

}  // namespace detail

struct ArrangementFamilies {
  /// Arrangements of any length.
  std::vector<SeqDesc> any_length;
  /// Arrangements whose length is the initial ordinal of |I|; empty when the
  /// family cannot produce one (two values of the top infinite multiplicity
  /// would have to interleave).
  std::vector<SeqDesc> initial_length;
};

/// Deterministic arrangement families: ascending and descending by value,
/// alternating smallest/largest, then seeded random splittings.  Each family
/// is deduplicated and holds at most `count` members.
inline ArrangementFamilies generate_arrangements(const OrdMultiset& m, std::uint64_t seed, std::size_t count) {
  validate(m);
  Rng rng(seed);
  auto ascending = m.entries;
  std::sort(ascending.begin(), ascending.end(),
            [](const MultisetEntry& a, const MultisetEntry& b) { return a.value < b.value; });
  auto descending = ascending;
  std::reverse(descending.begin(), descending.end());
  std::vector<MultisetEntry> alternating;
  for (std::size_t lo = 0, hi = ascending.size(); lo < hi;) {
    alternating.push_back(ascending[lo++]);
    if (lo < hi) alternating.push_back(ascending[--hi]);
  }

  const Cardinal total = total_cardinality(m);
  const Ordinal target = initial_ordinal(total);
  // The entry that must close an initial-length arrangement.
  const std::size_t none = m.entries.size();
  std::size_t top = none;
  if (!total.is_finite()) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
      if (m.entries[i].multiplicity == total) {
        top = i;
        ++hits;
      }
    }
    if (hits != 1) top = none;
  }

  std::vector<std::vector<detail::Run>> any;
  std::vector<std::vector<detail::Run>> initial;
  const auto offer = [&](std::vector<detail::Run> runs) {
    runs = detail::normalize_runs(runs);
    const SeqDesc s = detail::runs_to_sequence(runs);
    if (any.size() < count && std::find(any.begin(), any.end(), runs) == any.end()) any.push_back(runs);
    if (initial.size() < count && seq_length(s) == target &&
        std::find(initial.begin(), initial.end(), runs) == initial.end()) {
      initial.push_back(runs);
    }
  };
  offer(detail::whole_runs(ascending));
  offer(detail::whole_runs(descending));
  offer(detail::whole_runs(alternating));

  const std::size_t attempts = 40 * count + 40;
  for (std::size_t a = 0; a < attempts && (any.size() < count || initial.size() < count); ++a) {
    const bool aim_initial = (total.is_finite() || top != none) && a % 2 == 1;
    std::vector<detail::Run> body;
    std::vector<detail::Run> closing;
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
      auto runs = detail::split_entry(rng, m.entries[i], aim_initial);
      if (aim_initial && top == i) {
        closing.push_back(runs.back());
        runs.pop_back();
      }
      body.insert(body.end(), runs.begin(), runs.end());
    }
    rng.shuffle(body);
    body.insert(body.end(), closing.begin(), closing.end());
    offer(std::move(body));
  }

  ArrangementFamilies out;
  for (const auto& r : any) out.any_length.push_back(detail::runs_to_sequence(r));
  for (const auto& r : initial) out.initial_length.push_back(detail::runs_to_sequence(r));
  return out;
}

struct NsumBounds {
  /// ⊎ of the countable reduction (every infinite multiplicity read as ℵ₀);
  /// a lower bound for ⊎ and ⊎•.
  Ordinal lower;
  /// Least ∑♮ over the generated any-length family: an upper bound for ⊎.
  std::optional<Ordinal> upper_any_length;
  /// Least ∑♮ over the generated initial-length family: an upper bound for ⊎•.
  std::optional<Ordinal> upper_initial_length;
  std::size_t any_length_count = 0;
  std::size_t initial_length_count = 0;
};

/// Every member of the countable reduction occurs in the multiset, and ∑♮
/// over a subfamily never exceeds ∑♮ over the whole, so its ⊎ bounds ⊎ below.
inline Ordinal countable_lower_bound(const OrdMultiset& m) {
  OrdMultiset reduced = m;
  for (auto& e : reduced.entries) {
    if (!e.multiplicity.is_finite()) e.multiplicity = Cardinal::aleph(0);
  }
  return countable_nsum(reduced);
}

inline NsumBounds nsum_bounds(const OrdMultiset& m, std::uint64_t seed, std::size_t count) {
  NsumBounds out;
  out.lower = countable_lower_bound(m);
  const auto families = generate_arrangements(m, seed, count);
  for (const auto& s : families.any_length) {
    const Ordinal v = iter_nat_sum(s);
    if (!out.upper_any_length || v < *out.upper_any_length) out.upper_any_length = v;
  }
  for (const auto& s : families.initial_length) {
    const Ordinal v = iter_nat_sum(s);
    if (!out.upper_initial_length || v < *out.upper_initial_length) out.upper_initial_length = v;
  }
  out.any_length_count = families.any_length.size();
  out.initial_length_count = families.initial_length.size();
  return out;
}

// ---------------------------------------------------------------------------
// Rearrangement harnesses

namespace detail {

/// Copy of s with the values at the given (Explicit) indices replaced.
inline SeqDesc with_values(const SeqDesc& s, const std::vector<std::pair<Ordinal, Ordinal>>& updates) {
  SeqDesc out = s;
  for (const auto& [index, value] : updates) {
    const Position p = position_of(s, index);
    auto* e = std::get_if<Explicit>(&out.segments[p.segment]);
    if (!e) throw DomainError("only explicitly listed positions can be rearranged");
    e->values[finite_value(p.offset).convert_to<std::size_t>()] = value;
  }
  return out;
}

inline void check_explicit_index(const SeqDesc& s, const Ordinal& index) {
  const Position p = position_of(s, index);
  if (!std::holds_alternative<Explicit>(s.segments[p.segment])) {
    throw DomainError("only explicitly listed positions can be rearranged");
  }
}

}  // namespace detail

/// A finite-support permutation of indices, as the pairs γ ↦ π(γ).
struct FinitePermutation {
  std::vector<std::pair<Ordinal, Ordinal>> maps;
};

/// Applies a permutation that keeps every index in its component and reports
/// whether ∑♮ is unchanged.
inline bool component_permutation_check(const SeqDesc& s, const FinitePermutation& pi) {
  validate(s);
  const Ordinal zeta = seq_length(s);
  std::set<Ordinal> from;
  std::set<Ordinal> to;
  for (const auto& [a, b] : pi.maps) {
    detail::check_explicit_index(s, a);
    detail::check_explicit_index(s, b);
    if (!same_component(zeta, a, b)) throw DomainError("permutation moves an index out of its component");
    if (!from.insert(a).second || !to.insert(b).second) throw DomainError("permutation is not injective");
  }
  if (from != to) throw DomainError("permutation does not map its support onto itself");
  std::vector<std::pair<Ordinal, Ordinal>> updates;
  for (const auto& [a, b] : pi.maps) updates.emplace_back(b, value_at(s, position_of(s, a)));
  return iter_nat_sum(detail::with_values(s, updates)) == iter_nat_sum(s);
}

/// Replaces each finite cell of indices by the ⊕ of its values (placed at the
/// cell's least index, zeros elsewhere in the cell) and reports whether ∑♮ is
/// unchanged.  Cells must be disjoint and lie inside one component each.
inline bool finite_grouping_check(const SeqDesc& s, const std::vector<std::vector<Ordinal>>& cells) {
  validate(s);
  const Ordinal zeta = seq_length(s);
  std::set<Ordinal> used;
  std::vector<std::pair<Ordinal, Ordinal>> updates;
  for (const auto& cell : cells) {
    if (cell.empty()) throw DomainError("grouping cells must be nonempty");
    Ordinal least = cell.front();
    Ordinal sum;
    for (const auto& g : cell) {
      detail::check_explicit_index(s, g);
      if (!same_component(zeta, cell.front(), g)) throw DomainError("grouping cell spans two components");
      if (!used.insert(g).second) throw DomainError("grouping cells overlap");
      least = min(least, g);
      sum = nat_add(sum, value_at(s, position_of(s, g)));
    }
    for (const auto& g : cell) updates.emplace_back(g, g == least ? sum : Ordinal());
  }
  return iter_nat_sum(detail::with_values(s, updates)) == iter_nat_sum(s);
}

}  // namespace ordcalc
