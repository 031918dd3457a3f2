#pragma once

// Seeded property suites behind `ordcalc check`.  Case i of a suite draws
// from its own generator seeded with (seed, i), so a failing case can be
// replayed alone and results do not depend on evaluation order.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordcalc/generators.hpp"
#include "ordcalc/invariant_sum.hpp"
#include "ordcalc/mixed_sum.hpp"
#include "ordcalc/notation.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/random.hpp"
#include "ordcalc/transfinite_sum.hpp"
#include "ordcalc/tree_size.hpp"

namespace ordcalc {

struct CheckFailure {
  std::size_t case_index;
  std::string message;
};

struct CheckReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// One case: returns a description of the violation, or nothing.
using CaseCheck = std::function<std::optional<std::string>(Rng&)>;

inline std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 step over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline CheckReport run_cases(const std::string& suite, std::uint64_t seed, std::size_t cases, const CaseCheck& check) {
  CheckReport report{suite, cases, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    Rng rng(case_seed(seed, i));
    try {
      if (auto failure = check(rng)) report.failures.push_back(CheckFailure{i, *failure});
    } catch (const std::exception& e) {
      report.failures.push_back(CheckFailure{i, std::string("exception: ") + e.what()});
    }
  }
  return report;
}

namespace properties {

inline std::string show(const Ordinal& a) { return print_ordinal(a); }

/// Laws of ⊕ and + on triples below ω^{ω^2}.
inline std::optional<std::string> algebra_case(Rng& rng) {
  const OrdinalSpec spec{2, 2, 3, 3, 0};
  const Ordinal a = random_ordinal(rng, spec);
  const Ordinal b = random_ordinal(rng, spec);
  const Ordinal c = random_ordinal(rng, spec);
  const auto ctx = "a=" + show(a) + " b=" + show(b) + " c=" + show(c);
  if (nat_add(a, b) != nat_add(b, a)) return "commutativity: " + ctx;
  if (nat_add(nat_add(a, b), c) != nat_add(a, nat_add(b, c))) return "associativity: " + ctx;
  if (b != c && nat_add(a, b) == nat_add(a, c)) return "cancellation: " + ctx;
  if (b < c && !(nat_add(a, b) < nat_add(a, c))) return "strict monotonicity: " + ctx;
  if (!(max(a, b) <= ord_add(a, b)) || !(ord_add(a, b) <= nat_add(a, b))) return "sup <= + <= #: " + ctx;
  if (!b.is_zero()) {
    const Ordinal& eta = leading_exponent(b);
    // β < ω^{η+1}: the sum stays below α + ω^{η+1}
    const Ordinal bound = omega_pow(ord_add(eta, 1));
    if (!(nat_add(a, b) < ord_add(a, bound))) return "bounded by a + w^eta: " + ctx;
    const Ordinal cut = truncate(a, eta);
    if (ord_add(a, b) != ord_add(cut, b) || ord_add(cut, b) != nat_add(cut, b)) return "truncation identity: " + ctx;
  }
  if (!(ord_add(a, nat_add(b, c)) <= nat_add(ord_add(a, b), c))) return "(a+b)#c >= a+(b#c): " + ctx;
  if (!(ord_add(nat_add(a, b), c) <= nat_add(a, ord_add(b, c)))) return "a#(b+c) >= (a#b)+c: " + ctx;
  // Splitting ω^η·r between the summands.
  const Ordinal ab = nat_add(a, b);
  const auto t = ab.terms();
  if (t.size() > 0) {
    const Ordinal eta = t.exponent(rng.below(t.size()));
    const Natural r = coefficient_at(ab, eta);
    bool found = false;
    for (Natural r1 = 0; r1 <= r && !found; ++r1) {
      found = !(a < monomial(eta, r1)) && !(b < monomial(eta, r - r1));
    }
    if (!found) return "coefficient split: " + ctx;
  }
  return std::nullopt;
}

inline std::optional<std::string> roundtrip_case(Rng& rng) {
  const Ordinal a = random_ordinal(rng, OrdinalSpec{2, 3, 3, 9, 0});
  const std::string text = print_ordinal(a);
  if (parse_ordinal(text) != a) return "parse(print(a)) != a for " + text;
  return std::nullopt;
}

/// S♮_{δ′} ⊕ S♮_{[δ′,δ)} ≥ S♮_δ ≥ S♮_{δ′} + S♮_{[δ′,δ)}, and the same for S^G.
inline std::optional<std::string> sandwich_case(Rng& rng) {
  const SeqDesc s = random_sequence(rng, SequenceSpec{});
  const Ordinal delta = random_split_point(rng, s);
  const Ordinal delta1 = random_split_point(rng, split_at(s, delta).first);
  const StepSet g = random_step_set(rng, s);
  const auto check = [&](const Ordinal& head, const Ordinal& range, const Ordinal& whole,
                         const char* what) -> std::optional<std::string> {
    if (!(whole <= nat_add(head, range)) || !(ord_add(head, range) <= whole)) {
      return std::string(what) + " sandwich fails at delta'=" + show(delta1) + " delta=" + show(delta);
    }
    return std::nullopt;
  };
  if (auto f = check(partial_nat_sum(s, delta1), range_nat_sum(s, delta1, delta), partial_nat_sum(s, delta), "natural")) {
    return f;
  }
  return check(partial_g_sum(s, g, delta1), range_g_sum(s, g, delta1, delta), partial_g_sum(s, g, delta), "G");
}

/// Every monomial of ∑♮ is bounded by the ordinary sum.
inline std::optional<std::string> monomial_case(Rng& rng) {
  const SeqDesc s = random_sequence(rng, SequenceSpec{});
  const Ordinal nat = iter_nat_sum(s);
  const Ordinal ord = iter_ord_sum(s);
  const auto t = nat.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (ord < monomial(t.exponent(i), t.coefficient(i))) {
      return "ordinary sum " + show(ord) + " below monomial of " + show(nat);
    }
  }
  return std::nullopt;
}

inline SeqDesc random_tail_sequence(Rng& rng) {
  for (;;) {
    SeqDesc s = random_sequence(rng, SequenceSpec{4, 3, {1, 3, 2, 2, 0}, 3, false, 4});
    const Ordinal zeta = seq_length(s);
    if (is_limit(zeta) && !is_eventually_zero(s)) return s;
  }
}

/// The tail identity holds from γ̄ on at every supported split point.
inline std::optional<std::string> tail_case(Rng& rng) {
  const SeqDesc s = random_tail_sequence(rng);
  const Ordinal zeta = seq_length(s);
  const auto tc = tail_character(s);
  const Ordinal total = iter_nat_sum(s);
  if (tc.xi != smallest_exponent(total)) return "xi is not the smallest exponent";
  const Ordinal tail = omega_pow(tc.xi);
  for (const auto& eps : supported_split_points(s)) {
    if (eps < tc.gamma_bar) continue;
    if (range_nat_sum(s, eps, zeta) != tail || range_ord_sum(s, eps, zeta) != tail ||
        ord_add(partial_nat_sum(s, eps), tail) != total) {
      return "tail identity fails at eps=" + show(eps) + " (gamma_bar=" + show(tc.gamma_bar) + ")";
    }
  }
  return std::nullopt;
}

/// Pure interleavings of two ordinals below ω^4 peak at a ⊕ b.
inline std::optional<std::string> carruth_case(Rng& rng) {
  for (;;) {
    const Ordinal a = random_ordinal(rng, OrdinalSpec{1, 4, 3, 3, 0});
    const Ordinal b = random_ordinal(rng, OrdinalSpec{1, 4, 3, 3, 0});
    if (detail::block_count(a) + detail::block_count(b) > kDefaultInterleavingBound) continue;
    const auto values = enumerate_pure_interleavings(a, b);
    const Ordinal sum = nat_add(a, b);
    if (values.back() != sum) return "max interleaving of " + show(a) + ", " + show(b) + " is " + show(values.back());
    if (!block_cover_check(a, b)) return "block cover fails for " + show(a) + ", " + show(b);
    return std::nullopt;
  }
}

/// Every sampled ∑^G lies in the computed spectrum.
inline std::optional<std::string> spectrum_case(Rng& rng) {
  SequenceSpec spec;
  spec.length_top = 2;
  const SeqDesc s = random_sequence(rng, spec);
  if (spectrum_candidates(s).size() > 12) return std::nullopt;
  const auto spectrum = g_sum_spectrum(s);
  const StepSet g = random_step_set(rng, s);
  const Ordinal v = g_sum(s, g);
  if (!std::binary_search(spectrum.begin(), spectrum.end(), v)) return "g_sum " + show(v) + " missing from spectrum";
  if (spectrum.front() != iter_ord_sum(s) || spectrum.back() != iter_nat_sum(s)) return "spectrum ends mismatch";
  return std::nullopt;
}

/// Countable multisets: every ω-length arrangement and every generated long
/// zero-tailed arrangement attains countable_nsum; arbitrary countable
/// arrangements never go below it; zero padding changes nothing.
inline std::optional<std::string> invariant_case(Rng& rng) {
  const auto m = random_omega_multiset(rng);
  const Ordinal want = countable_nsum(m.multiset);
  for (const auto& s : omega_arrangements(rng, m, 5)) {
    if (arrangement_nat_sum(m.multiset, s) != want) return "omega arrangement differs from " + show(want);
  }
  for (const auto& s : long_arrangements(rng, m, 3)) {
    if (arrangement_nat_sum(m.multiset, s) != want) return "long arrangement differs from " + show(want);
  }
  SeqDesc s = random_countable_arrangement(rng, m);
  const Ordinal v = arrangement_nat_sum(m.multiset, s);
  if (v < want) return "arrangement below countable_nsum";
  s.segments.emplace_back(Repeat{Ordinal(), random_run_length(rng, SequenceSpec{})});
  if (iter_nat_sum(s) != v) return "zero padding changed the sum";
  return std::nullopt;
}

inline std::optional<std::string> tree_case(Rng& rng) {
  const TreeDesc finite = random_finite_tree(rng, 200);
  if (size(finite) != Ordinal(node_count(finite))) return "size of a finite tree differs from its node count";
  const TreeDesc t = random_tree(rng, 3);
  const Ordinal sigma = size(t);
  if (extension_order_type(t) != sigma) return "extension order type differs from size";
  if (!(ord_add(rank(t), 1) <= sigma)) return "size below rank + 1";
  Ordinal previous;
  for (int n = 1; n <= 6; ++n) {
    const Ordinal cur = size(truncate_tree(t, n));
    if (cur < previous || sigma < cur) return "truncation is not monotone at n=" + std::to_string(n);
    previous = cur;
  }
  return std::nullopt;
}

}  // namespace properties

struct Suite {
  const char* name;
  CaseCheck check;
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"algebra", properties::algebra_case},   {"roundtrip", properties::roundtrip_case},
      {"sandwich", properties::sandwich_case}, {"monomial", properties::monomial_case},
      {"tail", properties::tail_case},         {"carruth", properties::carruth_case},
      {"spectrum", properties::spectrum_case}, {"invariant", properties::invariant_case},
      {"tree", properties::tree_case},
  };
  return all;
}

/// Runs one suite by name, or every suite for "all".
inline std::vector<CheckReport> run_suites(const std::string& name, std::uint64_t seed, std::size_t cases) {
  std::vector<CheckReport> out;
  for (const auto& s : suites()) {
    if (name == "all" || name == s.name) out.push_back(run_cases(s.name, seed, cases, s.check));
  }
  if (out.empty()) throw DomainError("unknown suite '" + name + "'");
  return out;
}

}  // namespace ordcalc
