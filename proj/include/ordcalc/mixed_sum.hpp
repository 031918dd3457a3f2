#pragma once

// Desk-scale mixed sums.  A Realization is a finite left-to-right list of
// block pieces, each an ω-power owned by one summand; its order type is the
// ordinary sum of the pieces.  A piece flagged `aggregate` stands for the
// union of infinitely many later summands (the tail of an infinite constant
// run), whose combined order type is a single ω-power.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <type_traits>
#include <vector>

#include "ordcalc/error.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/sequence.hpp"
#include "ordcalc/transfinite_sum.hpp"

namespace ordcalc {

struct Owner {
  std::size_t index = 0;
  bool aggregate = false;
};

inline bool operator==(const Owner& a, const Owner& b) {
  return a.index == b.index && a.aggregate == b.aggregate;
}

struct BlockPiece {
  Owner owner;
  Ordinal order_type;
};

struct Realization {
  std::vector<BlockPiece> pieces;
};

inline Ordinal order_type_of(const Realization& r) {
  Ordinal out;
  for (const auto& p : r.pieces) out = ord_add(out, p.order_type);
  return out;
}

namespace detail {

inline bool is_omega_power(const Ordinal& a) {
  const auto t = a.terms();
  return t.size() == 1 && t.coefficient(0) == 1;
}

/// Stable merge by non-increasing order type; ties keep `a` first.
template <class T, class Key>
std::vector<T> merge_descending(const std::vector<T>& a, const std::vector<T>& b, Key key) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && !(key(a[i]) < key(b[j])))) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  return out;
}

/// Number of blocks, i.e. the sum of the coefficients.
inline Natural block_count(const Ordinal& a) {
  Natural n = 0;
  const auto t = a.terms();
  for (std::size_t i = 0; i < t.size(); ++i) n += t.coefficient(i);
  return n;
}

inline std::vector<BlockPiece> owned_blocks(const Ordinal& a, Owner owner) {
  std::vector<BlockPiece> out;
  for (auto& b : blocks(a)) out.push_back(BlockPiece{owner, std::move(b)});
  return out;
}

/// Start offset of every piece, plus the end of the last one.
inline std::vector<Ordinal> piece_offsets(const Realization& r) {
  std::vector<Ordinal> out{Ordinal()};
  for (const auto& p : r.pieces) out.push_back(ord_add(out.back(), p.order_type));
  return out;
}

/// For every piece, the index of the block of order_type_of(r) containing it;
/// throws when some piece straddles a block boundary.
inline std::vector<std::size_t> block_assignment(const Realization& r) {
  const auto offsets = piece_offsets(r);
  std::vector<Ordinal> bounds{Ordinal()};
  for (const auto& b : blocks(offsets.back())) bounds.push_back(ord_add(bounds.back(), b));
  std::vector<std::size_t> out;
  out.reserve(r.pieces.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    const Ordinal& start = offsets[i];
    const Ordinal& end = offsets[i + 1];
    if (start == end) {  // empty pieces never occur, but keep the walk total
      out.push_back(k);
      continue;
    }
    while (k + 1 < bounds.size() && !(start < bounds[k + 1])) ++k;
    if (k + 1 >= bounds.size() || bounds[k + 1] < end) {
      throw DomainError("piece is not contained in a single block");
    }
    out.push_back(k);
  }
  return out;
}

}  // namespace detail

/// Every piece is an ω-power and each owner's pieces, read left to right,
/// are non-increasing.
inline bool well_formed(const Realization& r) {
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    if (!detail::is_omega_power(r.pieces[i].order_type)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (r.pieces[j].owner == r.pieces[i].owner && r.pieces[j].order_type < r.pieces[i].order_type) return false;
    }
  }
  return true;
}

/// True iff every piece lies inside one block of the realized ordinal.
inline bool pieces_within_blocks(const Realization& r) {
  try {
    detail::block_assignment(r);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

/// All blocks of a (owner 0) and b (owner 1) merged by decreasing length;
/// realizes a ⊕ b.
inline Realization pure_merge(const Ordinal& a, const Ordinal& b) {
  const auto key = [](const BlockPiece& p) -> const Ordinal& { return p.order_type; };
  return Realization{detail::merge_descending(detail::owned_blocks(a, Owner{0}), detail::owned_blocks(b, Owner{1}),
                                              key)};
}

inline constexpr std::size_t kDefaultInterleavingBound = 12;

/// Order types of every shuffle of blocks(a) with blocks(b) that keeps each
/// summand's blocks in their own order, ascending and deduplicated.
inline std::vector<Ordinal> enumerate_pure_interleavings(const Ordinal& a, const Ordinal& b,
                                                         std::size_t max_pieces = kDefaultInterleavingBound) {
  if (detail::block_count(a) + detail::block_count(b) > max_pieces) {
    throw DomainError("joint block count exceeds the enumeration bound");
  }
  const auto ba = blocks(a);
  const auto bb = blocks(b);
  std::vector<Ordinal> values;
  const std::function<void(std::size_t, std::size_t, const Ordinal&)> walk = [&](std::size_t i, std::size_t j,
                                                                                  const Ordinal& acc) {
    if (i == ba.size() && j == bb.size()) {
      values.push_back(acc);
      return;
    }
    if (i < ba.size()) walk(i + 1, j, ord_add(acc, ba[i]));
    if (j < bb.size()) walk(i, j + 1, ord_add(acc, bb[j]));
  };
  walk(0, 0, Ordinal());
  return sorted_unique(std::move(values));
}

namespace detail {

/// One successor step of the canonical construction: a pure merge at ⊕
/// steps (current blocks against the new summand's blocks), append on top
/// at + steps.
inline void realize_step(Realization& r, const Ordinal& value, Owner owner, bool natural) {
  if (value.is_zero()) return;
  auto fresh = owned_blocks(value, owner);
  if (!natural) {
    r.pieces.insert(r.pieces.end(), fresh.begin(), fresh.end());
    return;
  }
  // Group the current pieces by the block of the current ordinal they lie in.
  struct Group {
    Ordinal order_type;
    std::vector<BlockPiece> pieces;
  };
  const auto assignment = block_assignment(r);
  const auto current = blocks(order_type_of(r));
  std::vector<Group> groups;
  groups.reserve(current.size());
  for (const auto& b : current) groups.push_back(Group{b, {}});
  for (std::size_t i = 0; i < r.pieces.size(); ++i) groups[assignment[i]].pieces.push_back(r.pieces[i]);
  std::vector<Group> incoming;
  for (auto& p : fresh) incoming.push_back(Group{p.order_type, {p}});
  const auto key = [](const Group& g) -> const Ordinal& { return g.order_type; };
  r.pieces.clear();
  for (auto& g : merge_descending(groups, incoming, key)) {
    r.pieces.insert(r.pieces.end(), g.pieces.begin(), g.pieces.end());
  }
}

}  // namespace detail

/// A realization of ∑^G whose owners are sequence positions, numbered in
/// sequence order.  Supported shapes: any finite sequence, optionally
/// followed by one infinite Repeat run; zero runs are allowed anywhere.  The
/// infinite blocks of that run become aggregate pieces ω^{lead(α)+η}.
inline Realization canonical_realization(const SeqDesc& s, const StepSet& g) {
  validate(s, g);
  Realization r;
  std::size_t next_owner = 0;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    if (const auto* e = std::get_if<Explicit>(&seg)) {
      for (std::size_t k = 0; k < e->values.size(); ++k) {
        detail::realize_step(r, e->values[k], Owner{next_owner++}, is_natural_step(g, i, Ordinal(Natural(k))));
      }
      continue;
    }
    const auto& rep = std::get<Repeat>(seg);
    if (rep.value.is_zero()) continue;
    const auto [inf, n] = detail::split_finite_part(rep.length);
    if (!inf.is_zero()) {
      for (std::size_t later = i + 1; later < s.segments.size(); ++later) {
        const bool all_zero = std::visit(
            [](const auto& x) {
              using T = std::decay_t<decltype(x)>;
              if constexpr (std::is_same_v<T, Explicit>) {
                return std::all_of(x.values.begin(), x.values.end(), [](const Ordinal& v) { return v.is_zero(); });
              } else {
                return x.value.is_zero();
              }
            },
            s.segments[later]);
        if (!all_zero) throw DomainError("canonical realization supports one infinite run, at the end");
      }
      std::uint64_t head = 0;
      if (g.mode == StepSet::Mode::Selected) {
        for (const auto& p : g.natural_steps) {
          if (p.segment == i && is_finite(p.offset)) {
            head = std::max(head, finite_value(p.offset).convert_to<std::uint64_t>() + 1);
          }
        }
      }
      for (std::uint64_t k = 0; k < head; ++k) {
        detail::realize_step(r, rep.value, Owner{next_owner++}, is_natural_step(g, i, Ordinal(Natural(k))));
      }
      const Ordinal& xi = leading_exponent(rep.value);
      const Owner tail{next_owner++, true};
      const auto t = inf.terms();
      for (std::size_t j = 0; j < t.size(); ++j) {
        detail::realize_step(r, monomial(ord_add(xi, t.exponent(j)), t.coefficient(j)), tail, false);
      }
    }
    if (n > kMaxExplicitSteps) throw DomainError("too many explicit steps");
    for (std::uint64_t k = 0; k < n.convert_to<std::uint64_t>(); ++k) {
      detail::realize_step(r, rep.value, Owner{next_owner++},
                           is_natural_step(g, i, ord_add(inf, Ordinal(Natural(k)))));
    }
  }
  return r;
}

/// For every owner ε, the owners later than ε that have a piece before some
/// piece of ε must be finitely many.  An aggregate piece counts as infinitely
/// many owners, all later than every owner with a smaller index.
inline bool check_condition_gamma(const Realization& r) {
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    const Owner& eps = r.pieces[i].owner;
    if (eps.aggregate) continue;
    for (std::size_t j = 0; j < i; ++j) {
      const Owner& earlier = r.pieces[j].owner;
      if (earlier.aggregate && earlier.index > eps.index) return false;
    }
  }
  return true;
}

/// In pure_merge(a, b), every summand block lies within one block of a ⊕ b.
inline bool block_cover_check(const Ordinal& a, const Ordinal& b,
                              std::size_t max_pieces = kDefaultInterleavingBound) {
  if (detail::block_count(a) + detail::block_count(b) > max_pieces) {
    throw DomainError("joint block count exceeds the enumeration bound");
  }
  const Realization r = pure_merge(a, b);
  if (order_type_of(r) != nat_add(a, b)) return false;
  return pieces_within_blocks(r);
}

}  // namespace ordcalc
