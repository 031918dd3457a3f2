#pragma once

// Finitely described ordinal-indexed sequences of ordinals.
//
// A SeqDesc is a list of segments laid end to end: Explicit segments list
// their values, Repeat segments hold one value for an ordinal-length run.
// Positions are addressed as (segment, offset).

#include <algorithm>
#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "ordcalc/error.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

struct Explicit {
  std::vector<Ordinal> values;
};

struct Repeat {
  Ordinal value;
  Ordinal length;
};

using Segment = std::variant<Explicit, Repeat>;

struct SeqDesc {
  std::vector<Segment> segments;
};

struct Position {
  std::size_t segment = 0;
  Ordinal offset;
};

inline bool operator==(const Explicit& a, const Explicit& b) { return a.values == b.values; }
inline bool operator==(const Repeat& a, const Repeat& b) { return a.value == b.value && a.length == b.length; }
inline bool operator==(const SeqDesc& a, const SeqDesc& b) { return a.segments == b.segments; }

inline bool operator==(const Position& a, const Position& b) {
  return a.segment == b.segment && a.offset == b.offset;
}

/// Which successor steps use ⊕ (the rest use +).
struct StepSet {
  enum class Mode { AllNatural, AllOrdinary, Selected };
  Mode mode = Mode::AllNatural;
  std::vector<Position> natural_steps;

  static StepSet all_natural() { return {Mode::AllNatural, {}}; }
  static StepSet all_ordinary() { return {Mode::AllOrdinary, {}}; }
  static StepSet selected(std::vector<Position> steps) { return {Mode::Selected, std::move(steps)}; }
};

// ---------------------------------------------------------------------------

namespace detail {

/// The unique c with a + c = b, for a ≤ b.
inline Ordinal left_difference(const Ordinal& a, const Ordinal& b) {
  if (b < a) throw DomainError("left difference needs a <= b");
  const auto ta = a.terms();
  const auto tb = b.terms();
  std::size_t i = 0;
  while (i < ta.size() && i < tb.size() && ta.exponent(i) == tb.exponent(i) &&
         ta.coefficient(i) == tb.coefficient(i)) {
    ++i;
  }
  if (i == tb.size()) return Ordinal();  // a == b
  std::vector<Monomial> out;
  if (i < ta.size() && ta.exponent(i) == tb.exponent(i)) {
    out.push_back(Monomial{tb.exponent(i), tb.coefficient(i) - ta.coefficient(i)});
  } else {
    out.push_back(Monomial{tb.exponent(i), tb.coefficient(i)});
  }
  for (std::size_t j = i + 1; j < tb.size(); ++j) out.push_back(Monomial{tb.exponent(j), tb.coefficient(j)});
  return Ordinal::from_terms(std::move(out));
}

/// Splits λ into its infinite part and its finite part n: λ = λ_inf + n.
inline std::pair<Ordinal, Natural> split_finite_part(const Ordinal& length) {
  if (is_successor(length)) {
    return {truncate(length, 1), length.terms().coefficient(length.terms().size() - 1)};
  }
  return {length, 0};
}

}  // namespace detail

inline Ordinal segment_length(const Segment& seg) {
  if (const auto* e = std::get_if<Explicit>(&seg)) return Ordinal(Natural(e->values.size()));
  return std::get<Repeat>(seg).length;
}

inline void validate(const SeqDesc& s) {
  for (const auto& seg : s.segments) {
    if (const auto* r = std::get_if<Repeat>(&seg); r && r->length.is_zero()) {
      throw DomainError("repeat segments need length >= 1");
    }
  }
}

inline Ordinal seq_length(const SeqDesc& s) {
  Ordinal total;
  for (const auto& seg : s.segments) total = ord_add(total, segment_length(seg));
  return total;
}

/// Start position (as an ordinal) of every segment, plus the total length.
inline std::vector<Ordinal> segment_boundaries(const SeqDesc& s) {
  std::vector<Ordinal> out{Ordinal()};
  for (const auto& seg : s.segments) out.push_back(ord_add(out.back(), segment_length(seg)));
  return out;
}

inline void check_position(const SeqDesc& s, const Position& p) {
  if (p.segment >= s.segments.size()) throw DomainError("position names a segment past the end");
  if (!(p.offset < segment_length(s.segments[p.segment]))) {
    throw DomainError("position offset is outside its segment");
  }
}

inline Ordinal value_at(const SeqDesc& s, const Position& p) {
  check_position(s, p);
  if (const auto* e = std::get_if<Explicit>(&s.segments[p.segment])) {
    return e->values[finite_value(p.offset).convert_to<std::size_t>()];
  }
  return std::get<Repeat>(s.segments[p.segment]).value;
}

/// The ordinal index γ addressed by a position.
inline Ordinal index_of(const SeqDesc& s, const Position& p) {
  check_position(s, p);
  Ordinal start;
  for (std::size_t i = 0; i < p.segment; ++i) start = ord_add(start, segment_length(s.segments[i]));
  return ord_add(start, p.offset);
}

/// The position addressing index γ < seq_length(s).
inline Position position_of(const SeqDesc& s, const Ordinal& gamma) {
  Ordinal start;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const Ordinal end = ord_add(start, segment_length(s.segments[i]));
    if (gamma < end) return Position{i, detail::left_difference(start, gamma)};
    start = end;
  }
  throw DomainError("index is past the end of the sequence");
}

/// Finite cuts of a Repeat run up to this length become Explicit segments.
inline constexpr unsigned kExplicitCut = 64;

/// Prefix of length δ′ and the remaining suffix.  Every δ′ ≤ seq_length(s)
/// is a split point: a Repeat run of length λ splits as λ₁ + λ₂ = λ with λ₂
/// the left difference.
inline std::pair<SeqDesc, SeqDesc> split_at(const SeqDesc& s, const Ordinal& delta) {
  const Ordinal total = seq_length(s);
  if (total < delta) throw DomainError("split point is past the end of the sequence");
  SeqDesc prefix;
  SeqDesc suffix;
  Ordinal start;
  std::size_t i = 0;
  for (; i < s.segments.size(); ++i) {
    const Ordinal len = segment_length(s.segments[i]);
    const Ordinal end = ord_add(start, len);
    if (delta < end) break;
    prefix.segments.push_back(s.segments[i]);
    start = end;
  }
  if (i < s.segments.size()) {
    const Ordinal cut = detail::left_difference(start, delta);
    if (const auto* e = std::get_if<Explicit>(&s.segments[i])) {
      const auto k = static_cast<std::ptrdiff_t>(finite_value(cut).convert_to<std::size_t>());
      if (k > 0) prefix.segments.push_back(Explicit{{e->values.begin(), e->values.begin() + k}});
      suffix.segments.push_back(Explicit{{e->values.begin() + k, e->values.end()}});
    } else {
      const auto& r = std::get<Repeat>(s.segments[i]);
      if (is_finite(cut) && cut <= Ordinal(kExplicitCut)) {
        // A short finite piece reads better as an explicit list.
        const auto k = finite_value(cut).convert_to<std::size_t>();
        if (k > 0) prefix.segments.push_back(Explicit{std::vector<Ordinal>(k, r.value)});
      } else {
        prefix.segments.push_back(Repeat{r.value, cut});
      }
      suffix.segments.push_back(Repeat{r.value, detail::left_difference(cut, r.length)});
    }
    for (++i; i < s.segments.size(); ++i) suffix.segments.push_back(s.segments[i]);
  }
  return {std::move(prefix), std::move(suffix)};
}

/// The sub-description on [from, to).
inline SeqDesc slice(const SeqDesc& s, const Ordinal& from, const Ordinal& to) {
  if (to < from) throw DomainError("range end precedes its start");
  return split_at(split_at(s, to).first, from).second;
}

/// Exactly the nonzero values, in order.
inline SeqDesc nonzero_subsequence(const SeqDesc& s) {
  SeqDesc out;
  for (const auto& seg : s.segments) {
    if (const auto* e = std::get_if<Explicit>(&seg)) {
      Explicit kept;
      for (const auto& v : e->values) {
        if (!v.is_zero()) kept.values.push_back(v);
      }
      if (!kept.values.empty()) out.segments.emplace_back(std::move(kept));
    } else if (!std::get<Repeat>(seg).value.is_zero()) {
      out.segments.push_back(seg);
    }
  }
  return out;
}

/// For a limit length ζ: true iff some β < ζ has every value from β on zero.
/// Zero and successor lengths (in particular finite sequences) count as
/// eventually zero.
inline bool is_eventually_zero(const SeqDesc& s) {
  if (!is_limit(seq_length(s))) return true;
  bool zeros_after = false;
  for (auto it = s.segments.rbegin(); it != s.segments.rend(); ++it) {
    if (segment_length(*it).is_zero()) continue;
    if (const auto* e = std::get_if<Explicit>(&*it)) {
      if (std::any_of(e->values.begin(), e->values.end(), [](const Ordinal& v) { return !v.is_zero(); })) {
        return true;
      }
    } else if (!std::get<Repeat>(*it).value.is_zero()) {
      // A nonzero run reaching the end never stops.
      return zeros_after;
    }
    zeros_after = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Components: [α, α+ω) for α zero or limit, truncated at ζ.

struct Component {
  Ordinal start;
  Ordinal end;
};

inline Component component_of(const Ordinal& zeta, const Ordinal& gamma) {
  if (!(gamma < zeta)) throw DomainError("index is not below the sequence length");
  Ordinal start = truncate(gamma, 1);
  return Component{start, min(ord_add(start, Ordinal::omega()), zeta)};
}

inline bool same_component(const Ordinal& zeta, const Ordinal& g1, const Ordinal& g2) {
  return component_of(zeta, g1).start == component_of(zeta, g2).start;
}

// ---------------------------------------------------------------------------
// Step sets

namespace detail {

/// A selected step offset is exact when it is finite, or when it lies in the
/// finite tail λ_inf + j of a Repeat run.  Offsets ≥ ω inside the infinite
/// part are rejected.
inline bool selectable_offset(const Segment& seg, const Ordinal& offset) {
  if (is_finite(offset)) return true;
  const auto* r = std::get_if<Repeat>(&seg);
  if (!r) return false;
  const auto [inf, n] = split_finite_part(r->length);
  return !(offset < inf);
}

}  // namespace detail

inline void validate(const SeqDesc& s, const StepSet& g) {
  validate(s);
  if (g.mode != StepSet::Mode::Selected) return;
  for (const auto& p : g.natural_steps) {
    check_position(s, p);
    if (!detail::selectable_offset(s.segments[p.segment], p.offset)) {
      throw DomainError("selected step lies inside the infinite part of a repeat segment");
    }
  }
}

inline bool is_natural_step(const StepSet& g, std::size_t segment, const Ordinal& offset) {
  switch (g.mode) {
    case StepSet::Mode::AllNatural: return true;
    case StepSet::Mode::AllOrdinary: return false;
    case StepSet::Mode::Selected: break;
  }
  return std::any_of(g.natural_steps.begin(), g.natural_steps.end(),
                     [&](const Position& p) { return p.segment == segment && p.offset == offset; });
}

/// The step sets induced on split_at(s, δ′): positions keep their meaning.
inline std::pair<StepSet, StepSet> split_steps(const SeqDesc& s, const StepSet& g, const Ordinal& delta) {
  if (g.mode != StepSet::Mode::Selected) return {g, g};
  StepSet before = StepSet::selected({});
  StepSet after = StepSet::selected({});
  const SeqDesc suffix = split_at(s, delta).second;
  for (const auto& p : g.natural_steps) {
    const Ordinal gamma = index_of(s, p);
    if (gamma < delta) {
      before.natural_steps.push_back(p);
    } else {
      after.natural_steps.push_back(position_of(suffix, detail::left_difference(delta, gamma)));
    }
  }
  return {std::move(before), std::move(after)};
}

}  // namespace ordcalc
