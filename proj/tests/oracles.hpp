#pragma once

// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "ordcalc/ordinal.hpp"
#include "ordcalc/sequence.hpp"
#include "ordcalc/tree_size.hpp"

namespace oracle {

using ordcalc::Monomial;
using ordcalc::Natural;
using ordcalc::Ordinal;

/// ⊕ by adding coefficients exponent by exponent.
inline Ordinal nat_add(const Ordinal& a, const Ordinal& b) {
  std::map<Ordinal, Natural> coeff;
  for (const auto& m : a.to_terms()) coeff[m.exponent] += m.coefficient;
  for (const auto& m : b.to_terms()) coeff[m.exponent] += m.coefficient;
  std::vector<Monomial> out;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) out.push_back(Monomial{it->first, it->second});
  return Ordinal::from_terms(std::move(out));
}

/// + by concatenating ω-power blocks: a block ω^e directly followed by a
/// larger block ω^f disappears into it.
inline Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  std::vector<std::pair<Ordinal, Natural>> stack;
  const auto push = [&](const Monomial& m) {
    while (!stack.empty() && stack.back().first < m.exponent) stack.pop_back();
    if (!stack.empty() && stack.back().first == m.exponent) {
      stack.back().second += m.coefficient;
    } else {
      stack.emplace_back(m.exponent, m.coefficient);
    }
  };
  for (const auto& m : a.to_terms()) push(m);
  for (const auto& m : b.to_terms()) push(m);
  std::vector<Monomial> out;
  for (auto& [e, c] : stack) out.push_back(Monomial{e, c});
  return Ordinal::from_terms(std::move(out));
}

/// α·n by repeated addition.
inline Ordinal mul_finite(const Ordinal& a, unsigned n) {
  Ordinal out;
  for (unsigned i = 0; i < n; ++i) out = oracle::ord_add(out, a);
  return out;
}

/// Compares ordinals below ω^ω through their coefficient vectors, read from
/// the highest exponent down.
inline int compare_below_omega_omega(const Ordinal& a, const Ordinal& b) {
  const auto vec = [](const Ordinal& x) {
    std::vector<Natural> v(16, 0);
    for (const auto& m : x.to_terms()) v[15 - ordcalc::finite_value(m.exponent).convert_to<std::size_t>()] = m.coefficient;
    return v;
  };
  const auto va = vec(a);
  const auto vb = vec(b);
  if (va < vb) return -1;
  if (vb < va) return 1;
  return 0;
}

/// Every value of the per-step fold over an explicit finite sequence, one
/// fold for each of the 2^n choices of which steps use ⊕.
inline std::set<Ordinal> brute_force_spectrum(const std::vector<Ordinal>& values) {
  std::set<Ordinal> out;
  const std::uint64_t subsets = std::uint64_t{1} << values.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Ordinal acc;
    for (std::size_t i = 0; i < values.size(); ++i) {
      acc = (mask >> i) & 1 ? oracle::nat_add(acc, values[i]) : oracle::ord_add(acc, values[i]);
    }
    out.insert(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite trees as explicit node lists

struct FlatTree {
  /// parent[i] is the parent of node i; the root (node 0) has parent -1.
  std::vector<int> parent;
};

inline void flatten_into(const ordcalc::TreeDesc& t, int parent, FlatTree& out) {
  const int me = static_cast<int>(out.parent.size());
  out.parent.push_back(parent);
  for (const auto& c : t.children) {
    const auto copies = c.multiplicity.count().convert_to<int>();
    for (int k = 0; k < copies; ++k) flatten_into(c.tree, me, out);
  }
}

inline FlatTree flatten(const ordcalc::TreeDesc& t) {
  FlatTree out;
  flatten_into(t, -1, out);
  return out;
}

/// Every linear order of the nodes in which each node comes after all of its
/// descendants (children are its predecessors).
inline std::vector<std::vector<int>> linear_extensions(const FlatTree& t) {
  const int n = static_cast<int>(t.parent.size());
  std::vector<int> pending(n, 0);
  for (int i = 0; i < n; ++i) {
    if (t.parent[i] >= 0) ++pending[t.parent[i]];
  }
  std::vector<std::vector<int>> out;
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  std::function<void()> walk = [&] {
    if (static_cast<int>(order.size()) == n) {
      out.push_back(order);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (placed[i] || pending[i] != 0) continue;
      placed[i] = true;
      order.push_back(i);
      if (t.parent[i] >= 0) --pending[t.parent[i]];
      walk();
      if (t.parent[i] >= 0) ++pending[t.parent[i]];
      order.pop_back();
      placed[i] = false;
    }
  };
  walk();
  return out;
}

/// True iff `order` lists every node once with each node after its
/// descendants, and every down-set is finite.
inline bool is_downward_finite_extension(const FlatTree& t, const std::vector<int>& order) {
  const int n = static_cast<int>(t.parent.size());
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> where(n, -1);
  for (int k = 0; k < n; ++k) {
    if (order[k] < 0 || order[k] >= n || where[order[k]] != -1) return false;
    where[order[k]] = k;
  }
  for (int i = 0; i < n; ++i) {
    if (t.parent[i] >= 0 && where[t.parent[i]] < where[i]) return false;
  }
  return true;
}

/// n! / ∏ subtree sizes: the number of linear extensions of a rooted forest.
inline Natural hook_length_count(const FlatTree& t) {
  const int n = static_cast<int>(t.parent.size());
  std::vector<int> sub(n, 1);
  for (int i = n - 1; i > 0; --i) sub[t.parent[i]] += sub[i];  // parents precede children
  Natural num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  Natural den = 1;
  for (int s : sub) den *= s;
  return num / den;
}

}  // namespace oracle
