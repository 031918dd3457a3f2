#pragma once

// Evaluators for transfinite sums over a SeqDesc:
//
//   iter_nat_sum   ⊕ at every successor step, supremum at limits
//   iter_ord_sum   the ordinary transfinite sum
//   g_sum          ⊕ at the steps in a StepSet, + elsewhere
//
// A constant run Repeat(α, λ) with α ≠ 0 is evaluated in closed form.  Write
// λ = ω^{η_m}·s_m + … + ω^{η_1}·s_1 + n with every η_j ≥ 1.  Each block of
// length ω^{η_j} adds ω^{lead(α)+η_j} on top of the accumulator with the
// ordinary sum, whichever operation the steps inside the block use, and the
// n trailing steps are taken one at a time.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ordcalc/error.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/sequence.hpp"

namespace ordcalc {

namespace detail {

/// acc + (closed form of the infinite blocks of a constant run).
inline Ordinal add_infinite_blocks(const Ordinal& acc, const Ordinal& value, const Ordinal& infinite_part) {
  if (value.is_zero()) return acc;
  const Ordinal& xi = leading_exponent(value);
  Ordinal out = acc;
  const auto t = infinite_part.terms();
  for (std::size_t j = 0; j < t.size(); ++j) {
    out = ord_add(out, monomial(ord_add(xi, t.exponent(j)), t.coefficient(j)));
  }
  return out;
}

inline Ordinal step(const Ordinal& acc, const Ordinal& value, bool natural) {
  return natural ? nat_add(acc, value) : ord_add(acc, value);
}

}  // namespace detail

/// ∑♮ over the sequence.
inline Ordinal iter_nat_sum(const SeqDesc& s) {
  validate(s);
  Ordinal acc;
  for (const auto& seg : s.segments) {
    if (const auto* e = std::get_if<Explicit>(&seg)) {
      for (const auto& v : e->values) acc = nat_add(acc, v);
      continue;
    }
    const auto& r = std::get<Repeat>(seg);
    if (r.value.is_zero()) continue;
    const auto [inf, n] = detail::split_finite_part(r.length);
    acc = detail::add_infinite_blocks(acc, r.value, inf);
    acc = nat_add(acc, nat_mul_fin(r.value, n));
  }
  return acc;
}

/// The ordinary transfinite sum ∑.
inline Ordinal iter_ord_sum(const SeqDesc& s) {
  validate(s);
  Ordinal acc;
  for (const auto& seg : s.segments) {
    if (const auto* e = std::get_if<Explicit>(&seg)) {
      for (const auto& v : e->values) acc = ord_add(acc, v);
    } else {
      const auto& r = std::get<Repeat>(seg);
      acc = ord_add(acc, ord_mul(r.value, r.length));
    }
  }
  return acc;
}

/// Largest number of individual steps g_sum takes inside one segment.
inline constexpr std::uint64_t kMaxExplicitSteps = 1u << 20;

/// ∑^G: ⊕ at the steps of G, + at the others.
inline Ordinal g_sum(const SeqDesc& s, const StepSet& g) {
  validate(s, g);
  Ordinal acc;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    if (const auto* e = std::get_if<Explicit>(&seg)) {
      for (std::size_t k = 0; k < e->values.size(); ++k) {
        acc = detail::step(acc, e->values[k], is_natural_step(g, i, Ordinal(Natural(k))));
      }
      continue;
    }
    const auto& r = std::get<Repeat>(seg);
    if (r.value.is_zero()) continue;
    const auto [inf, n] = detail::split_finite_part(r.length);
    if (!inf.is_zero()) {
      // Selected finite offsets inside the first block are taken literally;
      // the block's closed form then absorbs them.
      std::uint64_t head = 0;
      if (g.mode == StepSet::Mode::Selected) {
        for (const auto& p : g.natural_steps) {
          if (p.segment == i && is_finite(p.offset)) {
            head = std::max(head, finite_value(p.offset).convert_to<std::uint64_t>() + 1);
          }
        }
      }
      if (head > kMaxExplicitSteps) throw DomainError("too many explicit steps");
      for (std::uint64_t k = 0; k < head; ++k) {
        acc = detail::step(acc, r.value, is_natural_step(g, i, Ordinal(Natural(k))));
      }
      acc = detail::add_infinite_blocks(acc, r.value, inf);
    }
    if (g.mode == StepSet::Mode::AllNatural) {
      acc = nat_add(acc, nat_mul_fin(r.value, n));
    } else if (g.mode == StepSet::Mode::AllOrdinary) {
      acc = ord_add(acc, ord_mul(r.value, Ordinal(n)));
    } else {
      if (n > kMaxExplicitSteps) throw DomainError("too many explicit steps");
      const auto count = n.convert_to<std::uint64_t>();
      for (std::uint64_t k = 0; k < count; ++k) {
        acc = detail::step(acc, r.value, is_natural_step(g, i, ord_add(inf, Ordinal(Natural(k)))));
      }
    }
  }
  return acc;
}

/// S♮_δ: ∑♮ of the first δ values.
inline Ordinal partial_nat_sum(const SeqDesc& s, const Ordinal& delta) {
  return iter_nat_sum(split_at(s, delta).first);
}

/// S♮_{[δ′,δ)}.
inline Ordinal range_nat_sum(const SeqDesc& s, const Ordinal& from, const Ordinal& to) {
  return iter_nat_sum(slice(s, from, to));
}

inline Ordinal partial_ord_sum(const SeqDesc& s, const Ordinal& delta) {
  return iter_ord_sum(split_at(s, delta).first);
}

inline Ordinal range_ord_sum(const SeqDesc& s, const Ordinal& from, const Ordinal& to) {
  return iter_ord_sum(slice(s, from, to));
}

/// S^G_δ.
inline Ordinal partial_g_sum(const SeqDesc& s, const StepSet& g, const Ordinal& delta) {
  validate(s, g);
  const auto prefix = split_at(s, delta).first;
  return g_sum(prefix, split_steps(s, g, delta).first);
}

/// S^G_{[δ′,δ)}, with step membership taken at the original indices.
inline Ordinal range_g_sum(const SeqDesc& s, const StepSet& g, const Ordinal& from, const Ordinal& to) {
  validate(s, g);
  if (to < from) throw DomainError("range end precedes its start");
  const auto head = split_at(s, to).first;
  const auto head_steps = split_steps(s, g, to).first;
  return g_sum(split_at(head, from).second, split_steps(head, head_steps, from).second);
}

// ---------------------------------------------------------------------------
// Finite spectrum of ∑^G

/// Largest candidate-position count g_sum_spectrum enumerates (2^k subsets).
inline constexpr std::size_t kMaxSpectrumPositions = 20;

/// Positions whose membership in G can matter, plus every segment start:
/// all Explicit positions, all positions of finite Repeat runs, and the
/// finite tail λ_inf + j of infinite runs.
inline std::vector<Position> spectrum_candidates(const SeqDesc& s) {
  std::vector<Position> out;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    if (const auto* e = std::get_if<Explicit>(&seg)) {
      for (std::size_t k = 0; k < e->values.size(); ++k) out.push_back(Position{i, Ordinal(Natural(k))});
      continue;
    }
    const auto& r = std::get<Repeat>(seg);
    const auto [inf, n] = detail::split_finite_part(r.length);
    if (!inf.is_zero()) out.push_back(Position{i, Ordinal()});
    if (n > kMaxSpectrumPositions) throw DomainError("too many candidate positions for the spectrum");
    for (std::uint64_t k = 0; k < n.convert_to<std::uint64_t>(); ++k) {
      out.push_back(Position{i, ord_add(inf, Ordinal(Natural(k)))});
    }
  }
  return out;
}

/// Sorts ascending and removes duplicates.
inline std::vector<Ordinal> sorted_unique(std::vector<Ordinal> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

/// The set { ∑^G : G ⊆ ζ }, ascending.
inline std::vector<Ordinal> g_sum_spectrum(const SeqDesc& s) {
  validate(s);
  const auto candidates = spectrum_candidates(s);
  if (candidates.size() > kMaxSpectrumPositions) {
    throw DomainError("too many candidate positions for the spectrum");
  }
  std::vector<Ordinal> values;
  const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
  values.reserve(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    StepSet g = StepSet::selected({});
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) g.natural_steps.push_back(candidates[b]);
    }
    values.push_back(g_sum(s, g));
  }
  return sorted_unique(std::move(values));
}

// ---------------------------------------------------------------------------
// Tail character

struct TailCharacter {
  Ordinal gamma_bar;
  Ordinal xi;
};

/// Addressable split points in increasing order: every Explicit index, and
/// inside a Repeat run its start, its second index, the start of each block
/// ω^{η_j} of its length, and its finite tail.
inline std::vector<Ordinal> supported_split_points(const SeqDesc& s) {
  std::vector<Ordinal> out;
  Ordinal start;
  for (const auto& seg : s.segments) {
    if (const auto* e = std::get_if<Explicit>(&seg)) {
      for (std::size_t k = 0; k < e->values.size(); ++k) out.push_back(ord_add(start, Ordinal(Natural(k))));
    } else {
      const auto& r = std::get<Repeat>(seg);
      const auto [inf, n] = detail::split_finite_part(r.length);
      out.push_back(start);
      if (Ordinal(1) < r.length) out.push_back(ord_add(start, 1));
      Ordinal offset;
      const auto t = inf.terms();
      for (std::size_t j = 0; j < t.size(); ++j) {
        const Ordinal block = omega_pow(t.exponent(j));
        const Natural& c = t.coefficient(j);
        // Only the first and last few block starts can differ in behavior.
        for (Natural b = 0; b < c; ++b) {
          if (b < 4 || b + 4 >= c) out.push_back(ord_add(start, offset));
          offset = ord_add(offset, block);
        }
      }
      if (n > kMaxExplicitSteps) throw DomainError("finite tail too long to enumerate");
      for (Natural k = 0; k < n; ++k) out.push_back(ord_add(start, ord_add(inf, Ordinal(k))));
    }
    start = ord_add(start, segment_length(seg));
  }
  return sorted_unique(std::move(out));
}

/// The γ̄ and ξ of the tail identity: from γ̄ on, both range sums up to ζ are
/// ω^ξ and ∑♮ = S♮_ε + ω^ξ, where ξ is the smallest exponent of ∑♮.  The
/// identity is upward closed in ε, so the least supported point that
/// satisfies it is returned.
inline TailCharacter tail_character(const SeqDesc& s) {
  validate(s);
  const Ordinal zeta = seq_length(s);
  if (!is_limit(zeta)) throw DomainError("tail character needs a limit length");
  if (is_eventually_zero(s)) throw DomainError("tail character needs a sequence that is not eventually zero");
  const Ordinal total = iter_nat_sum(s);
  const Ordinal xi = smallest_exponent(total);
  const Ordinal tail = omega_pow(xi);
  for (const auto& eps : supported_split_points(s)) {
    if (range_nat_sum(s, eps, zeta) == tail && range_ord_sum(s, eps, zeta) == tail &&
        ord_add(partial_nat_sum(s, eps), tail) == total) {
      return TailCharacter{eps, xi};
    }
  }
  throw std::logic_error("no supported split point satisfies the tail identity");
}

}  // namespace ordcalc
