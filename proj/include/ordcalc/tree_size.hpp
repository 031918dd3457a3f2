#pragma once

// Rank and size of finitely described well-founded trees.  The root sits on
// top: children are the predecessors of their parent, leaves are minimal.
// A child entry with multiplicity ℵ₀ stands for countably many copies of the
// same subtree.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "ordcalc/cardinal.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/invariant_sum.hpp"
#include "ordcalc/mixed_sum.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/sequence.hpp"

namespace ordcalc {

struct TreeChild;

struct TreeDesc {
  std::vector<TreeChild> children;
};

struct TreeChild {
  TreeDesc tree;
  Cardinal multiplicity = 1;
};

using Forest = std::vector<TreeChild>;

inline void validate(const TreeDesc& t) {
  for (const auto& c : t.children) {
    if (c.multiplicity == Cardinal(0)) throw DomainError("tree multiplicities must be positive");
    if (!c.multiplicity.is_countable()) throw DomainError("tree multiplicities must be finite or omega");
    validate(c.tree);
  }
}

inline bool is_finite_tree(const TreeDesc& t) {
  for (const auto& c : t.children) {
    if (!c.multiplicity.is_finite() || !is_finite_tree(c.tree)) return false;
  }
  return true;
}

/// Number of nodes of a finite tree.
inline Natural node_count(const TreeDesc& t) {
  Natural n = 1;
  for (const auto& c : t.children) {
    if (!c.multiplicity.is_finite()) throw DomainError("node count of an infinite tree");
    n += c.multiplicity.count() * node_count(c.tree);
  }
  return n;
}

/// ρ: 0 at leaves, otherwise one more than the largest child rank.
inline Ordinal rank(const TreeDesc& t) {
  validate(t);
  if (t.children.empty()) return Ordinal();
  Ordinal top;
  for (const auto& c : t.children) top = max(top, rank(c.tree));
  return ord_add(top, 1);
}

namespace detail {

inline Ordinal size_unchecked(const TreeDesc& t);

inline Ordinal forest_size_unchecked(const Forest& f) {
  std::map<Ordinal, Cardinal> counts;
  for (const auto& c : f) {
    const Ordinal s = size_unchecked(c.tree);
    counts[s] = card_add(counts[s], c.multiplicity);
  }
  OrdMultiset m;
  for (auto& [v, k] : counts) m.entries.push_back(MultisetEntry{v, k});
  return countable_nsum(m);
}

inline Ordinal size_unchecked(const TreeDesc& t) { return ord_add(forest_size_unchecked(t.children), 1); }

}  // namespace detail

/// σ(t) = (⊎ of the children's sizes) + 1.
inline Ordinal size(const TreeDesc& t) {
  validate(t);
  return detail::size_unchecked(t);
}

/// ⊎ of the root sizes.
inline Ordinal forest_size(const Forest& f) {
  for (const auto& c : f) {
    if (c.multiplicity == Cardinal(0) || !c.multiplicity.is_countable()) {
      throw DomainError("tree multiplicities must be finite or omega");
    }
    validate(c.tree);
  }
  return detail::forest_size_unchecked(f);
}

/// The canonical well-ordered extension of the forest below a node: the
/// children with finite multiplicity one after another, merged at ⊕ steps,
/// then ω rounds each holding one copy of every ℵ₀ child.  Pieces are owned
/// by child copies in that order.
inline Realization forest_extension(const Forest& f) {
  Explicit finite;
  Ordinal round;
  bool has_infinite = false;
  for (const auto& c : f) {
    const Ordinal inner = order_type_of(forest_extension(c.tree.children));
    const Ordinal type = ord_add(inner, 1);
    if (c.multiplicity.is_finite()) {
      if (c.multiplicity.count() > kMaxExplicitSteps) throw DomainError("multiplicity too large to expand");
      const auto n = c.multiplicity.count().convert_to<std::size_t>();
      finite.values.insert(finite.values.end(), n, type);
    } else {
      round = nat_add(round, type);
      has_infinite = true;
    }
  }
  SeqDesc s{{std::move(finite)}};
  if (has_infinite) s.segments.emplace_back(Repeat{round, Ordinal::omega()});
  return canonical_realization(s, StepSet::all_natural());
}

/// Order type of the canonical extension of the whole tree: the children's
/// extension with the root placed on top.
inline Ordinal extension_order_type(const TreeDesc& t) {
  validate(t);
  Realization r = forest_extension(t.children);
  std::size_t root = 0;
  for (const auto& p : r.pieces) root = std::max(root, p.owner.index + 1);
  r.pieces.push_back(BlockPiece{Owner{root}, Ordinal(1)});
  if (!check_condition_gamma(r)) throw std::logic_error("canonical extension is not left-finite");
  return order_type_of(r);
}

/// Replaces every ℵ₀ multiplicity by n.
inline TreeDesc truncate_tree(const TreeDesc& t, const Natural& n) {
  if (n < 1) throw DomainError("truncation needs n >= 1");
  TreeDesc out;
  for (const auto& c : t.children) {
    out.children.push_back(TreeChild{truncate_tree(c.tree, n), c.multiplicity.is_finite() ? c.multiplicity : Cardinal(n)});
  }
  return out;
}

}  // namespace ordcalc
