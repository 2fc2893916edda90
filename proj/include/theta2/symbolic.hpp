#pragma once

// Symbolic coefficients: the rational function field F_2(a, b, ..., z) in
// single-letter indeterminates, and a formal quadratic adjunction s^2 = r
// over any coefficient field. Used to check the closed-form identities
// behind the conic and Hesse constructions without specializing.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "theta2/fields.hpp"

namespace theta2 {

/// Exponent vector over the indeterminates 'a'..'z'.
struct SymMonomial {
  std::array<std::uint8_t, 26> exp{};

  static SymMonomial var(char name, std::uint8_t power = 1);
  SymMonomial operator*(const SymMonomial& o) const;
  bool divides(const SymMonomial& o) const;
  bool all_even() const;
  bool is_one() const;
  auto operator<=>(const SymMonomial&) const = default;
};

/// Polynomial over F_2: a set of monomials (every coefficient is 1).
class SymPoly {
 public:
  SymPoly() = default;
  static SymPoly one();
  static SymPoly var(char name);
  static SymPoly monomial(const SymMonomial& m);

  const std::vector<SymMonomial>& monomials() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }

  /// Largest monomial dividing every term (1 for the zero polynomial).
  SymMonomial content() const;
  SymPoly divide_exact(const SymMonomial& m) const;
  std::optional<SymPoly> sqrt() const;

 private:
  static SymPoly from_unsorted(std::vector<SymMonomial> v);
  std::vector<SymMonomial> terms_;  // ascending, distinct
};

std::string to_string(const SymPoly& p);

/// Element of F_2(a..z) as an unreduced fraction; only monomial content is
/// cancelled. Equality cross-multiplies.
class SymFrac {
 public:
  SymFrac() : num_(), den_(SymPoly::one()) {}
  SymFrac(SymPoly num, SymPoly den);
  explicit SymFrac(SymPoly num) : SymFrac(std::move(num), SymPoly::one()) {}
  static SymFrac var(char name) { return SymFrac(SymPoly::var(name)); }

  const SymPoly& num() const { return num_; }
  const SymPoly& den() const { return den_; }

  SymFrac operator+(const SymFrac& o) const;
  SymFrac operator-(const SymFrac& o) const { return *this + o; }
  SymFrac operator*(const SymFrac& o) const;
  SymFrac operator/(const SymFrac& o) const { return *this * o.inv(); }
  SymFrac inv() const;
  std::optional<SymFrac> sqrt() const;

  bool is_zero() const { return num_.is_zero(); }
  SymFrac zero() const { return {}; }
  SymFrac one() const { return SymFrac(SymPoly::one()); }
  bool operator==(const SymFrac& o) const;

 private:
  SymPoly num_, den_;
};

std::string to_string(const SymFrac& f);

/// u + v*s with s^2 = r, r a fixed element of the base field. This is a
/// field only when r is not a square; inv() throws on zero norm.
template <FieldElement E>
class QuadExt {
 public:
  QuadExt(E u, E v, E r) : u_(std::move(u)), v_(std::move(v)), r_(std::move(r)) {}

  /// The base element c, embedded.
  static QuadExt constant(const E& c, const E& r) { return {c, c.zero(), r}; }
  /// The adjoined square root s itself.
  static QuadExt root_of(const E& r) { return {r.zero(), r.one(), r}; }

  const E& u() const { return u_; }
  const E& v() const { return v_; }
  const E& radicand() const { return r_; }

  QuadExt operator+(const QuadExt& o) const { return {u_ + o.u_, v_ + o.v_, r_}; }
  QuadExt operator-(const QuadExt& o) const { return *this + o; }
  QuadExt operator*(const QuadExt& o) const {
    return {u_ * o.u_ + v_ * o.v_ * r_, u_ * o.v_ + v_ * o.u_, r_};
  }
  QuadExt inv() const {
    // (u + v s)^2 = u^2 + r v^2 lies in the base field.
    const E norm = u_ * u_ + r_ * v_ * v_;
    if (norm.is_zero()) throw MathError("QuadExt: element is not invertible");
    const E n = norm.inv();
    return {u_ * n, v_ * n, r_};
  }
  std::optional<QuadExt> sqrt() const {
    if (!v_.is_zero()) return std::nullopt;
    auto s = u_.sqrt();
    if (!s) return std::nullopt;
    return QuadExt{*s, u_.zero(), r_};
  }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  QuadExt zero() const { return {u_.zero(), u_.zero(), r_}; }
  QuadExt one() const { return {u_.one(), u_.zero(), r_}; }
  bool operator==(const QuadExt& o) const { return u_ == o.u_ && v_ == o.v_; }

 private:
  E u_, v_, r_;
};

template <FieldElement E>
std::string to_string(const QuadExt<E>& a) {
  if (a.v().is_zero()) return to_string(a.u());
  std::string sv = "(" + to_string(a.v()) + ")*s";
  if (a.u().is_zero()) return sv;
  return "(" + to_string(a.u()) + ")+" + sv;
}

}  // namespace theta2
