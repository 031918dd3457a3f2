#pragma once

// Cardinalities used as multiplicities: a positive natural or ℵ_k.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "ordcalc/error.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

class Cardinal {
 public:
  /// The finite cardinal n.
  Cardinal(int n = 0) : count_(n) {}  // NOLINT
  explicit Cardinal(Natural n) : count_(std::move(n)) {}

  static Cardinal aleph(std::uint32_t k) {
    Cardinal c;
    c.aleph_ = k;
    return c;
  }

  bool is_finite() const noexcept { return aleph_ == kFinite; }
  bool is_countable() const noexcept { return is_finite() || aleph_ == 0; }
  const Natural& count() const noexcept { return count_; }
  std::uint32_t aleph_index() const noexcept { return aleph_; }

 private:
  static constexpr std::uint32_t kFinite = 0xffffffffu;
  Natural count_;
  std::uint32_t aleph_ = kFinite;
};

inline bool operator==(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() != b.is_finite()) return false;
  return a.is_finite() ? a.count() == b.count() : a.aleph_index() == b.aleph_index();
}

inline std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) {
    if (a.count() < b.count()) return std::strong_ordering::less;
    if (b.count() < a.count()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  if (a.is_finite()) return std::strong_ordering::less;
  if (b.is_finite()) return std::strong_ordering::greater;
  return a.aleph_index() <=> b.aleph_index();
}

/// Cardinal sum.
inline Cardinal card_add(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) return Cardinal(a.count() + b.count());
  return a < b ? b : a;
}

/// |α|.  An infinite ordinal has cardinality ℵ_k for the largest atom index
/// k occurring in it (ℵ₀ when there is none).
inline Cardinal cardinality(const Ordinal& a) {
  if (is_finite(a)) return Cardinal(finite_value(a));
  return Cardinal::aleph(max_atom_index(a));
}

/// The least ordinal of the given cardinality.
inline Ordinal initial_ordinal(const Cardinal& c) {
  if (c.is_finite()) return Ordinal(c.count());
  if (c.aleph_index() == 0) return Ordinal::omega();
  return Ordinal::atom(c.aleph_index());
}

inline std::string to_string(const Cardinal& c) {
  if (c.is_finite()) return c.count().str();
  if (c.aleph_index() == 0) return "omega";
  return "aleph" + std::to_string(c.aleph_index());
}

}  // namespace ordcalc
