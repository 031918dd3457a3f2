#pragma once

// Seeded generators for ordinals, sequences and step sets.  Draws use
// mt19937_64 with plain modulo reduction so a seed gives the same cases on
// every platform.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ordcalc/ordinal.hpp"
#include "ordcalc/sequence.hpp"
#include "ordcalc/transfinite_sum.hpp"

namespace ordcalc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish draw from [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Shape of random ordinals.  depth 1 gives ordinals below ω^top, depth 2
/// ordinals below ω^{ω^top}.
struct OrdinalSpec {
  int depth = 1;
  std::uint64_t top = 3;
  std::uint64_t max_terms = 3;
  std::uint64_t max_coeff = 3;
  /// When nonzero, some exponents are Ω_k or Ω_k + 1 with 1 ≤ k ≤ max_atom.
  std::uint32_t max_atom = 0;
};

inline Ordinal random_ordinal(Rng& rng, const OrdinalSpec& spec, int depth) {
  if (depth <= 0) return Ordinal(Natural(rng.below(spec.top)));
  const auto n = rng.below(spec.max_terms + 1);
  std::vector<Ordinal> exps;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (spec.max_atom > 0 && depth == spec.depth && rng.chance(1, 6)) {
      const Ordinal a = Ordinal::atom(static_cast<std::uint32_t>(rng.between(1, spec.max_atom)));
      exps.push_back(rng.chance(1, 2) ? a : ord_add(a, 1));
    } else {
      exps.push_back(random_ordinal(rng, spec, depth - 1));
    }
  }
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Monomial> terms;
  for (auto& e : exps) terms.push_back(Monomial{std::move(e), Natural(rng.between(1, spec.max_coeff))});
  return Ordinal::from_terms(std::move(terms));
}

inline Ordinal random_ordinal(Rng& rng, const OrdinalSpec& spec) { return random_ordinal(rng, spec, spec.depth); }

inline Ordinal random_nonzero_ordinal(Rng& rng, const OrdinalSpec& spec) {
  for (;;) {
    Ordinal a = random_ordinal(rng, spec);
    if (!a.is_zero()) return a;
  }
}

struct SequenceSpec {
  std::uint64_t max_segments = 4;
  std::uint64_t max_explicit = 3;
  OrdinalSpec values{1, 3, 2, 2, 0};
  /// Run lengths: nonzero ordinals below ω^length_top.
  std::uint64_t length_top = 3;
  /// Allow ω₁ and ω₁ + n as run lengths.
  bool uncountable_lengths = false;
  /// One in `zero_rate` values is zero.
  std::uint64_t zero_rate = 4;
};

inline Ordinal random_run_length(Rng& rng, const SequenceSpec& spec) {
  if (spec.uncountable_lengths && rng.chance(1, 6)) {
    return ord_add(Ordinal::atom(1), Ordinal(Natural(rng.below(3))));
  }
  return random_nonzero_ordinal(rng, OrdinalSpec{1, spec.length_top, 2, 2, 0});
}

inline Ordinal random_value(Rng& rng, const SequenceSpec& spec) {
  if (rng.chance(1, spec.zero_rate)) return Ordinal();
  return random_ordinal(rng, spec.values);
}

inline SeqDesc random_sequence(Rng& rng, const SequenceSpec& spec) {
  SeqDesc s;
  const auto n = rng.between(1, spec.max_segments);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (rng.chance(1, 2)) {
      Explicit e;
      const auto k = rng.below(spec.max_explicit + 1);
      for (std::uint64_t j = 0; j < k; ++j) e.values.push_back(random_value(rng, spec));
      s.segments.emplace_back(std::move(e));
    } else {
      s.segments.emplace_back(Repeat{random_value(rng, spec), random_run_length(rng, spec)});
    }
  }
  return s;
}

/// A random Selected step set over spectrum-candidate positions, or one of
/// the two uniform modes.
inline StepSet random_step_set(Rng& rng, const SeqDesc& s) {
  switch (rng.below(6)) {
    case 0: return StepSet::all_natural();
    case 1: return StepSet::all_ordinary();
    default: break;
  }
  StepSet g = StepSet::selected({});
  std::vector<Position> candidates;
  try {
    candidates = spectrum_candidates(s);
  } catch (const DomainError&) {
    return g;
  }
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    // Finite offsets past the first inside infinite runs.
    if (const auto* r = std::get_if<Repeat>(&s.segments[i]); r && !is_finite(r->length)) {
      candidates.push_back(Position{i, Ordinal(Natural(rng.between(1, 3)))});
    }
  }
  for (const auto& p : candidates) {
    if (rng.chance(1, 2)) g.natural_steps.push_back(p);
  }
  return g;
}

/// A random split point: a supported split point or the full length.
inline Ordinal random_split_point(Rng& rng, const SeqDesc& s) {
  auto points = supported_split_points(s);
  points.push_back(seq_length(s));
  return rng.pick(points);
}

}  // namespace ordcalc
