#pragma once

// Plain-text notation for ordinals.
//
//   expr   := term (('+' | '#') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' factor)?
//   base   := 'w' | 'w' digits | digits | '(' expr ')'
//
// `w` is ω, `wK` the atom Ω_K, `+` the ordinal sum, `#` the natural sum and
// `*` the ordinal product.  `^` is right-associative and only accepts ω or an
// atom as its base.  Whitespace is insignificant.

#include <cctype>
#include <cstdint>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include "ordcalc/error.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

/// Surface syntax tree.
struct OrdExpr {
  enum class Op { Add, NatAdd, Mul, Pow };

  struct Literal {
    Natural value;
  };
  struct Omega {};
  struct Atom {
    std::uint32_t index;
  };
  struct Binary {
    Op op;
    std::shared_ptr<const OrdExpr> lhs;
    std::shared_ptr<const OrdExpr> rhs;
  };

  std::variant<Literal, Omega, Atom, Binary> node;
  std::size_t position = 0;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::shared_ptr<const OrdExpr> parse() {
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  std::shared_ptr<const OrdExpr> expr() {
    auto lhs = term();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '#')) {
        const std::size_t at = pos_;
        const auto op = text_[pos_] == '+' ? OrdExpr::Op::Add : OrdExpr::Op::NatAdd;
        ++pos_;
        lhs = binary(op, std::move(lhs), term(), at);
      } else {
        return lhs;
      }
    }
  }

  std::shared_ptr<const OrdExpr> term() {
    auto lhs = factor();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        const std::size_t at = pos_++;
        lhs = binary(OrdExpr::Op::Mul, std::move(lhs), factor(), at);
      } else {
        return lhs;
      }
    }
  }

  std::shared_ptr<const OrdExpr> factor() {
    auto b = base();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      const std::size_t at = pos_++;
      return binary(OrdExpr::Op::Pow, std::move(b), factor(), at);
    }
    return b;
  }

  std::shared_ptr<const OrdExpr> base() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (c == 'w') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const std::string digits = take_digits();
        const Natural k(digits);
        if (k == 0 || k > 0xffffffffu) throw ParseError("atom index out of range", at);
        return leaf(OrdExpr::Atom{k.convert_to<std::uint32_t>()}, at);
      }
      return leaf(OrdExpr::Omega{}, at);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return leaf(OrdExpr::Literal{Natural(take_digits())}, at);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  template <class Node>
  static std::shared_ptr<const OrdExpr> leaf(Node n, std::size_t at) {
    return std::make_shared<const OrdExpr>(OrdExpr{std::move(n), at});
  }

  static std::shared_ptr<const OrdExpr> binary(OrdExpr::Op op, std::shared_ptr<const OrdExpr> l,
                                               std::shared_ptr<const OrdExpr> r, std::size_t at) {
    return std::make_shared<const OrdExpr>(OrdExpr{OrdExpr::Binary{op, std::move(l), std::move(r)}, at});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::shared_ptr<const OrdExpr> parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

inline Ordinal evaluate(const OrdExpr& e) {
  struct Visitor {
    Ordinal operator()(const OrdExpr::Literal& l) const { return Ordinal(l.value); }
    Ordinal operator()(const OrdExpr::Omega&) const { return Ordinal::omega(); }
    Ordinal operator()(const OrdExpr::Atom& a) const { return Ordinal::atom(a.index); }
    Ordinal operator()(const OrdExpr::Binary& b) const {
      const Ordinal l = evaluate(*b.lhs);
      const Ordinal r = evaluate(*b.rhs);
      switch (b.op) {
        case OrdExpr::Op::Add: return ord_add(l, r);
        case OrdExpr::Op::NatAdd: return nat_add(l, r);
        case OrdExpr::Op::Mul: return ord_mul(l, r);
        case OrdExpr::Op::Pow:
          if (std::holds_alternative<OrdExpr::Omega>(b.lhs->node)) return omega_pow(r);
          if (std::holds_alternative<OrdExpr::Atom>(b.lhs->node)) {
            // (ω^{Ω_k})^r = ω^{Ω_k·r}
            return omega_pow(ord_mul(l, r));
          }
          throw ParseError("general exponentiation unsupported: the base of '^' must be w or an atom wK",
                           b.lhs->position);
      }
      return Ordinal();
    }
  };
  return std::visit(Visitor{}, e.node);
}

/// Parses and normalizes an ordinal expression.
inline Ordinal parse_ordinal(std::string_view text) { return evaluate(*parse_expr(text)); }

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline bool prints_as_base(const Ordinal& a) {
  if (a.is_atom()) return true;
  if (is_finite(a)) return true;
  const auto t = a.terms();
  return t.size() == 1 && t.coefficient(0) == 1 && t.exponent(0) == Ordinal(1);
}

}  // namespace detail

/// Canonical rendering of the normal form, e.g. `w^2*3 + w*2 + 5`,
/// `w^(w1+1) + w1`.  Coefficient 1 and exponents 0 and 1 are elided.
inline std::string print_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  if (a.is_atom()) return "w" + std::to_string(a.atom_index());
  std::string out;
  const auto t = a.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += " + ";
    const Ordinal& e = t.exponent(i);
    const Natural& c = t.coefficient(i);
    if (e.is_zero()) {
      out += c.str();
      continue;
    }
    if (e.is_atom()) {
      out += print_ordinal(e);
    } else if (e == Ordinal(1)) {
      out += "w";
    } else if (detail::prints_as_base(e)) {
      out += "w^" + print_ordinal(e);
    } else {
      // Exponents print without the spaces around '+' so the term stays one token.
      std::string inner = print_ordinal(e);
      std::string compact;
      for (std::size_t k = 0; k < inner.size(); ++k) {
        if (inner[k] == ' ') continue;
        compact += inner[k];
      }
      out += "w^(" + compact + ")";
    }
    if (c != 1) out += "*" + c.str();
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << print_ordinal(a); }

}  // namespace ordcalc
