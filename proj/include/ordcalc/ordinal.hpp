#pragma once

// Ordinals in Cantor normal form.
//
// An Ordinal is zero, an uncountable-cardinal atom Ω_k (the initial ordinal
// ω_k, k ≥ 1), or a nonempty list of monomials ω^e·c with strictly
// decreasing exponents and coefficients c ≥ 1.  Atoms are ε-numbers, so the
// single monomial ω^{Ω_k}·1 is never stored: it is the atom itself.
//
// Values are immutable and share structure; copying is a reference-count
// bump.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "ordcalc/error.hpp"

namespace ordcalc {

using Natural = boost::multiprecision::cpp_int;

enum class Comparison { Less, Equal, Greater };

struct Monomial;

class Ordinal {
 public:
  /// Zero.
  Ordinal() = default;

  Ordinal(int n) : Ordinal(Natural(n)) {}  // NOLINT: integer literals read naturally
  explicit Ordinal(Natural n);

  static Ordinal omega();
  static Ordinal atom(std::uint32_t k);

  /// Builds a normal form from monomials given in strictly decreasing
  /// exponent order.  Throws DomainError when the list is not a normal form.
  static Ordinal from_terms(std::vector<Monomial> terms);

  bool is_zero() const noexcept { return node_ == nullptr; }
  bool is_atom() const noexcept;
  /// Index k of Ω_k; 0 when this is not an atom.
  std::uint32_t atom_index() const noexcept;

  /// Read-only monomial view.  Zero has no terms; an atom reads as the single
  /// term ω^{Ω_k}·1 whose exponent is the atom itself.
  class Terms {
   public:
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    const Ordinal& exponent(std::size_t i) const;
    const Natural& coefficient(std::size_t i) const;

   private:
    friend class Ordinal;
    const Ordinal* atom_ = nullptr;
    const std::vector<Monomial>* terms_ = nullptr;
  };

  /// The view borrows from *this, so temporaries cannot hand one out.
  Terms terms() const& noexcept;
  Terms terms() const&& = delete;

  /// Copies the monomials out (atoms yield their single term).
  std::vector<Monomial> to_terms() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Monomial {
  Ordinal exponent;
  Natural coefficient;
};

struct Ordinal::Node {
  std::uint32_t atom = 0;
  std::vector<Monomial> terms;
};

// ---------------------------------------------------------------------------
// Construction and views

inline Ordinal::Ordinal(Natural n) {
  if (n < 0) throw DomainError("ordinals are nonnegative");
  if (n == 0) return;
  auto node = std::make_shared<Node>();
  node->terms.push_back(Monomial{Ordinal(), std::move(n)});
  node_ = std::move(node);
}

inline Ordinal Ordinal::omega() {
  return from_terms({Monomial{Ordinal(1), 1}});
}

inline Ordinal Ordinal::atom(std::uint32_t k) {
  if (k == 0) throw DomainError("atom indices start at 1 (w1 is the first uncountable cardinal)");
  Ordinal out;
  auto node = std::make_shared<Node>();
  node->atom = k;
  out.node_ = std::move(node);
  return out;
}

inline bool Ordinal::is_atom() const noexcept { return node_ && node_->atom != 0; }

inline std::uint32_t Ordinal::atom_index() const noexcept { return node_ ? node_->atom : 0; }

inline std::size_t Ordinal::Terms::size() const noexcept {
  if (atom_) return 1;
  return terms_ ? terms_->size() : 0;
}

inline const Ordinal& Ordinal::Terms::exponent(std::size_t i) const {
  if (atom_) return *atom_;
  return (*terms_)[i].exponent;
}

inline const Natural& Ordinal::Terms::coefficient(std::size_t i) const {
  static const Natural one{1};
  if (atom_) return one;
  return (*terms_)[i].coefficient;
}

inline Ordinal::Terms Ordinal::terms() const& noexcept {
  Terms view;
  if (is_atom()) {
    view.atom_ = this;
  } else if (node_) {
    view.terms_ = &node_->terms;
  }
  return view;
}

inline std::vector<Monomial> Ordinal::to_terms() const {
  if (is_atom()) return {Monomial{*this, 1}};
  if (!node_) return {};
  return node_->terms;
}

// ---------------------------------------------------------------------------
// Order

Comparison compare(const Ordinal& a, const Ordinal& b);

namespace detail {

inline Comparison compare_naturals(const Natural& a, const Natural& b) {
  if (a < b) return Comparison::Less;
  if (b < a) return Comparison::Greater;
  return Comparison::Equal;
}

}  // namespace detail

/// Standard ordinal order.  Atoms compare by index; against any other term
/// the atom behaves as its one-term normal form ω^{Ω_k}, and the recursion
/// terminates because the other side shrinks to its exponents.
inline Comparison compare(const Ordinal& a, const Ordinal& b) {
  if (a.is_atom() && b.is_atom()) {
    return detail::compare_naturals(a.atom_index(), b.atom_index());
  }
  const auto ta = a.terms();
  const auto tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Comparison e = compare(ta.exponent(i), tb.exponent(i));
    if (e != Comparison::Equal) return e;
    const Comparison c = detail::compare_naturals(ta.coefficient(i), tb.coefficient(i));
    if (c != Comparison::Equal) return c;
  }
  return detail::compare_naturals(ta.size(), tb.size());
}

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.node_ == b.node_) return true;
  return compare(a, b) == Comparison::Equal;
}

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  switch (compare(a, b)) {
    case Comparison::Less: return std::strong_ordering::less;
    case Comparison::Greater: return std::strong_ordering::greater;
    case Comparison::Equal: break;
  }
  return std::strong_ordering::equal;
}

inline bool operator==(const Monomial& a, const Monomial& b) {
  return a.exponent == b.exponent && a.coefficient == b.coefficient;
}

inline Ordinal Ordinal::from_terms(std::vector<Monomial> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw DomainError("monomial coefficients must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw DomainError("monomial exponents must be strictly decreasing");
    }
  }
  if (terms.empty()) return Ordinal();
  if (terms.size() == 1 && terms[0].exponent.is_atom() && terms[0].coefficient == 1) {
    return terms[0].exponent;
  }
  Ordinal out;
  auto node = std::make_shared<Node>();
  node->terms = std::move(terms);
  out.node_ = std::move(node);
  return out;
}

// ---------------------------------------------------------------------------
// Inspection

inline bool is_finite(const Ordinal& a) {
  const auto t = a.terms();
  return t.empty() || (t.size() == 1 && t.exponent(0).is_zero());
}

/// The value of a finite ordinal.
inline Natural finite_value(const Ordinal& a) {
  if (!is_finite(a)) throw DomainError("ordinal is not finite");
  return a.is_zero() ? Natural(0) : a.terms().coefficient(0);
}

inline const Ordinal& leading_exponent(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("zero has no leading exponent");
  return a.terms().exponent(0);
}

inline const Ordinal& smallest_exponent(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("zero has no smallest exponent");
  const auto t = a.terms();
  return t.exponent(t.size() - 1);
}

inline bool is_limit(const Ordinal& a) { return !a.is_zero() && !smallest_exponent(a).is_zero(); }

inline bool is_successor(const Ordinal& a) { return !a.is_zero() && smallest_exponent(a).is_zero(); }

/// Coefficient of ω^exponent in the normal form (0 when absent).
inline Natural coefficient_at(const Ordinal& a, const Ordinal& exponent) {
  const auto t = a.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.exponent(i) == exponent) return t.coefficient(i);
  }
  return 0;
}

/// Largest atom index occurring anywhere in the term, 0 if none.
inline std::uint32_t max_atom_index(const Ordinal& a) {
  if (a.is_atom()) return a.atom_index();
  std::uint32_t k = 0;
  const auto t = a.terms();
  for (std::size_t i = 0; i < t.size(); ++i) k = std::max(k, max_atom_index(t.exponent(i)));
  return k;
}

// ---------------------------------------------------------------------------
// Arithmetic

/// ω^e.
inline Ordinal omega_pow(const Ordinal& e) { return Ordinal::from_terms({Monomial{e, 1}}); }

/// ω^e·c.
inline Ordinal monomial(const Ordinal& e, Natural c) {
  if (c == 0) return Ordinal();
  return Ordinal::from_terms({Monomial{e, std::move(c)}});
}

/// Ordinary ordinal sum: terms of `a` below the leading exponent of `b` are
/// absorbed.
inline Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const auto ta = a.terms();
  const auto tb = b.terms();
  const Ordinal& lead = tb.exponent(0);
  std::vector<Monomial> out;
  out.reserve(ta.size() + tb.size());
  Natural carry = 0;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    const Comparison c = compare(ta.exponent(i), lead);
    if (c == Comparison::Greater) {
      out.push_back(Monomial{ta.exponent(i), ta.coefficient(i)});
    } else {
      if (c == Comparison::Equal) carry = ta.coefficient(i);
      break;
    }
  }
  out.push_back(Monomial{lead, tb.coefficient(0) + carry});
  for (std::size_t i = 1; i < tb.size(); ++i) out.push_back(Monomial{tb.exponent(i), tb.coefficient(i)});
  return Ordinal::from_terms(std::move(out));
}

/// Hessenberg natural sum: coefficient-wise addition of normal forms.
inline Ordinal nat_add(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto ta = a.terms();
  const auto tb = b.terms();
  std::vector<Monomial> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      out.push_back(Monomial{ta.exponent(i), ta.coefficient(i)});
      ++i;
    } else if (i == ta.size()) {
      out.push_back(Monomial{tb.exponent(j), tb.coefficient(j)});
      ++j;
    } else {
      switch (compare(ta.exponent(i), tb.exponent(j))) {
        case Comparison::Greater:
          out.push_back(Monomial{ta.exponent(i), ta.coefficient(i)});
          ++i;
          break;
        case Comparison::Less:
          out.push_back(Monomial{tb.exponent(j), tb.coefficient(j)});
          ++j;
          break;
        case Comparison::Equal:
          out.push_back(Monomial{ta.exponent(i), ta.coefficient(i) + tb.coefficient(j)});
          ++i;
          ++j;
          break;
      }
    }
  }
  return Ordinal::from_terms(std::move(out));
}

/// a ⊕ a ⊕ … ⊕ a (n copies).
inline Ordinal nat_mul_fin(const Ordinal& a, const Natural& n) {
  if (n < 0) throw DomainError("natural multiple must be nonnegative");
  if (n == 0 || a.is_zero()) return Ordinal();
  std::vector<Monomial> out = a.to_terms();
  for (auto& m : out) m.coefficient *= n;
  return Ordinal::from_terms(std::move(out));
}

/// Ordinary ordinal product, distributing b's normal form from the left:
/// a·ω^e = ω^{lead(a)+e} for e > 0 and a·n scales the leading coefficient.
inline Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const auto ta = a.terms();
  const auto tb = b.terms();
  const Ordinal& lead = ta.exponent(0);
  Ordinal out;
  for (std::size_t j = 0; j < tb.size(); ++j) {
    Ordinal piece;
    if (tb.exponent(j).is_zero()) {
      std::vector<Monomial> scaled = a.to_terms();
      scaled[0].coefficient *= tb.coefficient(j);
      piece = Ordinal::from_terms(std::move(scaled));
    } else {
      piece = monomial(ord_add(lead, tb.exponent(j)), tb.coefficient(j));
    }
    out = ord_add(out, piece);
  }
  return out;
}

/// α↾η: the monomials of `a` with exponent ≥ η.
inline Ordinal truncate(const Ordinal& a, const Ordinal& eta) {
  const auto t = a.terms();
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < t.size() && !(t.exponent(i) < eta); ++i) {
    out.push_back(Monomial{t.exponent(i), t.coefficient(i)});
  }
  return Ordinal::from_terms(std::move(out));
}

/// Largest number of blocks `blocks` will expand.
inline constexpr std::size_t kMaxBlocks = 1u << 20;

/// Block order types read off the normal form: coefficient c at exponent e
/// contributes c consecutive copies of ω^e.
inline std::vector<Ordinal> blocks(const Ordinal& a) {
  std::vector<Ordinal> out;
  const auto t = a.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.coefficient(i) + out.size() > kMaxBlocks) throw DomainError("too many blocks to expand");
    const auto count = t.coefficient(i).convert_to<std::size_t>();
    const Ordinal block = omega_pow(t.exponent(i));
    out.insert(out.end(), count, block);
  }
  return out;
}

inline Ordinal max(const Ordinal& a, const Ordinal& b) { return a < b ? b : a; }
inline Ordinal min(const Ordinal& a, const Ordinal& b) { return b < a ? b : a; }

}  // namespace ordcalc
