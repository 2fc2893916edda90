#pragma once

// Text input: ternary forms, coefficient literals and field specs.
//
//   form   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' nat)?
//   atom   := nat | 'X' | 'Y' | 'Z' | symbol | '(' form ')'
//
// Symbols depend on the coefficient field: 'g' for GF(2^k), 'T' (and 'g')
// for GF(2^k)(T), 'a'..'z' for the symbolic field. Integers are read mod 2
// and '-' is '+'. Division is only by nonzero constants.

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "theta2/fields.hpp"
#include "theta2/forms.hpp"
#include "theta2/funcfield.hpp"
#include "theta2/symbolic.hpp"

namespace theta2 {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::invalid_argument(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

template <FieldElement E>
struct CoefficientContext {
  E zero;
  std::function<std::optional<E>(char)> symbol;
};

CoefficientContext<GaloisElem> galois_context(const GaloisField& f);
CoefficientContext<RatFunc> ratfunc_context(const GaloisField& base);
CoefficientContext<SymFrac> symbolic_context();

namespace detail {

template <FieldElement E>
class FormParser {
 public:
  using Poly = std::map<Monomial3, E>;

  FormParser(std::string_view text, const CoefficientContext<E>& ctx) : s_(text), ctx_(ctx) {}

  /// Parses the whole input; terms of the top-level sum are returned with
  /// their source spans so homogeneity errors can name the culprit.
  struct TopTerm {
    Poly poly;
    std::size_t begin, end;
  };

  std::vector<TopTerm> parse_top() {
    std::vector<TopTerm> terms;
    skip();
    for (;;) {
      const std::size_t b = pos_;
      Poly t = parse_term();
      terms.push_back({std::move(t), b, pos_});
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        ++pos_;
        skip();
        continue;
      }
      break;
    }
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return terms;
  }

  Poly sum(const Poly& a, const Poly& b) const {
    Poly r = a;
    for (const auto& [m, c] : b) add_term(r, m, c);
    return r;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static void add_term(Poly& p, const Monomial3& m, const E& c) {
    auto it = p.find(m);
    if (it == p.end()) {
      if (!c.is_zero()) p.emplace(m, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) p.erase(it);
  }

  Poly constant(const E& c) const {
    Poly p;
    if (!c.is_zero()) p.emplace(Monomial3{}, c);
    return p;
  }

  Poly product(const Poly& a, const Poly& b) const {
    Poly r;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) add_term(r, ma * mb, ca * cb);
    }
    return r;
  }

  Poly parse_sum() {
    Poly acc = parse_term();
    for (;;) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        ++pos_;
        acc = sum(acc, parse_term());
      } else {
        return acc;
      }
    }
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    for (;;) {
      skip();
      if (pos_ >= s_.size()) return acc;
      if (s_[pos_] == '*') {
        ++pos_;
        acc = product(acc, parse_factor());
      } else if (s_[pos_] == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Poly d = parse_factor();
        if (d.empty()) throw ParseError("division by zero", at);
        if (d.size() != 1 || d.begin()->first.degree() != 0) {
          throw ParseError("division by a non-constant", at);
        }
        acc = product(acc, constant(d.begin()->second.inv()));
      } else {
        return acc;
      }
    }
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      const unsigned long e = parse_nat();
      Poly r = constant(ctx_.zero.one());
      for (unsigned long i = 0; i < e; ++i) r = product(r, base);
      return r;
    }
    return base;
  }

  unsigned long parse_nat() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected a natural number");
    }
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + unsigned(s_[pos_] - '0');
      if (v > 100000) fail("number too large");
      ++pos_;
    }
    return v;
  }

  Poly parse_atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly inner = parse_sum();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const unsigned long v = parse_nat();
      return constant(v % 2 ? ctx_.zero.one() : ctx_.zero);
    }
    if (ch == 'X' || ch == 'Y' || ch == 'Z') {
      ++pos_;
      Monomial3 m{ch == 'X', ch == 'Y', ch == 'Z'};
      Poly p;
      p.emplace(m, ctx_.zero.one());
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      if (auto v = ctx_.symbol(ch)) {
        ++pos_;
        return constant(*v);
      }
      fail(std::string("unknown symbol '") + ch + "'");
    }
    fail(std::string("unexpected '") + ch + "'");
  }

  std::string_view s_;
  const CoefficientContext<E>& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a homogeneous form. Inhomogeneous input is rejected naming the
/// first top-level term whose degree differs from the first one.
template <FieldElement E>
TernaryForm<E> parse_form(std::string_view text, const CoefficientContext<E>& ctx) {
  detail::FormParser<E> p(text, ctx);
  auto terms = p.parse_top();
  std::optional<int> degree;
  typename detail::FormParser<E>::Poly total;
  for (const auto& t : terms) {
    for (const auto& [m, c] : t.poly) {
      if (!degree) degree = m.degree();
      if (m.degree() != *degree) {
        throw ParseError("inhomogeneous input: term '" +
                             std::string(text.substr(t.begin, t.end - t.begin)) +
                             "' contributes " + to_string(m) + " of degree " +
                             std::to_string(m.degree()) + ", expected degree " +
                             std::to_string(*degree),
                         t.begin);
      }
    }
    total = p.sum(total, t.poly);
  }
  std::vector<typename TernaryForm<E>::Term> v(total.begin(), total.end());
  return TernaryForm<E>::from_terms(degree.value_or(0), ctx.zero, std::move(v));
}

/// Parses a coefficient literal (no X, Y, Z).
template <FieldElement E>
E parse_scalar(std::string_view text, const CoefficientContext<E>& ctx) {
  detail::FormParser<E> p(text, ctx);
  auto terms = p.parse_top();
  E acc = ctx.zero;
  for (const auto& t : terms) {
    for (const auto& [m, c] : t.poly) {
      if (m.degree() != 0) throw ParseError("expected a field element, found " + to_string(m), t.begin);
      acc = acc + c;
    }
  }
  return acc;
}

/// `gf2`, `gf4`, `gf8`, `gf16`, `gf(2^k)`, `ratfunc(<galois spec>)`.
struct FieldSpec {
  enum class Kind { Galois, RationalFunctions };
  Kind kind = Kind::Galois;
  int k = 1;

  const GaloisField& base() const { return GaloisField::get(k); }
  std::string canonical() const;
};

FieldSpec parse_field_spec(std::string_view text);

}  // namespace theta2
