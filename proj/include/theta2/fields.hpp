#pragma once

// Exact arithmetic in GF(2^k), 1 <= k <= 16, in polynomial basis, and the
// field-element concept shared by every coefficient domain in the library.

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace theta2 {

/// Raised when an operation is applied outside its mathematical domain
/// (inverting zero, mixing fields, singular input, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Minimal interface every coefficient type provides. Elements carry their
/// field, so constants are produced from an existing element.
template <class E>
concept FieldElement = std::copyable<E> && requires(const E a, const E b) {
  { a + b } -> std::same_as<E>;
  { a - b } -> std::same_as<E>;
  { a * b } -> std::same_as<E>;
  { a.inv() } -> std::same_as<E>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.zero() } -> std::same_as<E>;
  { a.one() } -> std::same_as<E>;
  { a.sqrt() } -> std::same_as<std::optional<E>>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <FieldElement E>
bool is_square(const E& a) {
  return a.sqrt().has_value();
}

template <FieldElement E>
E pow(E base, std::uint64_t e) {
  E r = base.one();
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

/// Bit-vector polynomials over F_2 (bit i = coefficient of x^i).
namespace gf2poly {

inline int degree(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

inline std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0, aa = a;
  while (b) {
    if (b & 1) r ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  return r;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

/// Trial division by every polynomial of degree 1..deg(p)/2.
bool is_irreducible(std::uint64_t p);

}  // namespace gf2poly

class GaloisElem;

/// GF(2^k) with a fixed modulus: the numerically least irreducible
/// polynomial of degree k. Instances are interned, one per degree, and live
/// for the whole program, so elements may hold plain pointers to them.
class GaloisField {
 public:
  static constexpr int kMaxDegree = 16;

  /// Throws std::out_of_range unless 1 <= k <= 16.
  static const GaloisField& get(int k);

  /// Least irreducible polynomial of each degree; k = 1 is plain F_2 (the
  /// entry x is never used for reduction).
  static constexpr std::array<std::uint32_t, kMaxDegree + 1> kModuli = {
      0,      0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,    0x11b,
      0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b};

  int degree() const { return k_; }
  std::uint32_t modulus() const { return kModuli[k_]; }
  std::uint32_t size() const { return 1u << k_; }

  GaloisElem zero() const;
  GaloisElem one() const;
  /// Residue class of x; for k = 1 this is 1.
  GaloisElem gen() const;
  GaloisElem elem(std::uint32_t bits) const;

  /// All 2^k elements in integer order of their bit vectors.
  std::vector<GaloisElem> elements() const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t sqrt(std::uint32_t a) const;

  bool operator==(const GaloisField& o) const { return this == &o; }

 private:
  explicit GaloisField(int k);

  int k_;
  // Tables in a primitive element (not necessarily g); exp_ is doubled so
  // log sums index without reduction.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> sqrt_;
};

class GaloisElem {
 public:
  /// Zero of GF(2).
  GaloisElem();
  GaloisElem(const GaloisField& f, std::uint32_t bits);

  const GaloisField& field() const { return *field_; }
  std::uint32_t bits() const { return bits_; }

  GaloisElem operator+(const GaloisElem& o) const {
    check(o);
    return {*field_, bits_ ^ o.bits_};
  }
  GaloisElem operator-(const GaloisElem& o) const { return *this + o; }
  GaloisElem operator*(const GaloisElem& o) const {
    check(o);
    return {*field_, field_->mul(bits_, o.bits_)};
  }
  GaloisElem operator/(const GaloisElem& o) const { return *this * o.inv(); }
  GaloisElem& operator+=(const GaloisElem& o) { return *this = *this + o; }
  GaloisElem& operator*=(const GaloisElem& o) { return *this = *this * o; }

  GaloisElem inv() const;
  /// Frobenius inverse, a^(2^(k-1)); always defined.
  GaloisElem root() const { return {*field_, field_->sqrt(bits_)}; }
  std::optional<GaloisElem> sqrt() const { return root(); }
  GaloisElem square() const { return *this * *this; }

  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }
  GaloisElem zero() const { return {*field_, 0}; }
  GaloisElem one() const { return {*field_, 1}; }

  bool operator==(const GaloisElem& o) const {
    return field_ == o.field_ && bits_ == o.bits_;
  }
  bool operator<(const GaloisElem& o) const { return bits_ < o.bits_; }

 private:
  void check(const GaloisElem& o) const {
    if (field_ != o.field_) throw MathError("GaloisElem: field mismatch");
  }

  const GaloisField* field_;
  std::uint32_t bits_;
};

/// Polynomial-basis literal: "0", "1", "g", "g^2+g+1", ...
std::string to_string(const GaloisElem& a);

/// A field embedding GF(2^k) -> GF(2^(k*e)) sending g to the least root of
/// the source modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(const GaloisField& from, const GaloisField& to);

  const GaloisField& source() const { return *from_; }
  const GaloisField& target() const { return *to_; }
  GaloisElem operator()(const GaloisElem& a) const;

 private:
  const GaloisField* from_;
  const GaloisField* to_;
  std::vector<std::uint32_t> basis_image_;  // image of g^i
};

}  // namespace theta2
