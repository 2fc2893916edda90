#pragma once

// The rational function field K = GF(q)(T), q = 2^k, its places, and its
// completions modelled as truncated Laurent series over the residue field.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "theta2/fields.hpp"

namespace theta2 {

/// Thrown when a Laurent computation would need more terms than allowed.
class PrecisionError : public MathError {
 public:
  using MathError::MathError;
};

/// Univariate polynomial in T over GF(2^k); coefficients low to high,
/// trailing zeros trimmed.
class UPoly {
 public:
  explicit UPoly(const GaloisField& f) : field_(&f) {}
  UPoly(const GaloisField& f, std::vector<std::uint32_t> coeffs);
  static UPoly constant(const GaloisElem& c);
  static UPoly monomial(const GaloisElem& c, int degree);
  static UPoly T(const GaloisField& f) { return monomial(f.one(), 1); }
  /// Inverse of code(): base-q digits, least significant = constant term.
  static UPoly from_code(const GaloisField& f, std::uint64_t code);

  const GaloisField& field() const { return *field_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  GaloisElem coeff(int i) const {
    return {*field_, i >= 0 && i < int(c_.size()) ? c_[i] : 0u};
  }
  GaloisElem lead() const { return coeff(degree()); }
  const std::vector<std::uint32_t>& raw() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const { return *this + o; }
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const GaloisElem& c) const;
  /// Quotient and remainder; throws on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly monic() const;
  UPoly derivative() const;
  GaloisElem eval(const GaloisElem& x) const;

  /// Base-q number with the constant term least significant.
  std::uint64_t code() const;
  bool is_irreducible() const;

  bool operator==(const UPoly& o) const { return field_ == o.field_ && c_ == o.c_; }
  /// Degree first, then code.
  bool operator<(const UPoly& o) const;

 private:
  void trim();
  const GaloisField* field_;
  std::vector<std::uint32_t> c_;
};

UPoly gcd(UPoly a, UPoly b);
std::string to_string(const UPoly& p, char var = 'T');

/// Element of GF(q)(T): numerator and denominator coprime, denominator
/// monic.
class RatFunc {
 public:
  explicit RatFunc(const GaloisField& base);  // zero
  RatFunc(UPoly num, UPoly den);
  explicit RatFunc(UPoly num);
  static RatFunc T(const GaloisField& base) { return RatFunc(UPoly::T(base)); }
  static RatFunc constant(const GaloisElem& c) { return RatFunc(UPoly::constant(c)); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  const GaloisField& base_field() const { return num_.field(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const { return *this + o; }
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }
  RatFunc inv() const;
  std::optional<RatFunc> sqrt() const;

  bool is_zero() const { return num_.is_zero(); }
  RatFunc zero() const { return RatFunc(num_.field()); }
  RatFunc one() const { return RatFunc(UPoly::constant(num_.field().one())); }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  UPoly num_, den_;
};

std::string to_string(const RatFunc& f);

/// f * den^2 = A^2 + T * B^2; f is a square exactly when B = 0.
struct SquareDecomposition {
  bool square;
  UPoly a, b;
  /// sqrt(f) = A / den when square.
  std::optional<RatFunc> root;
};

SquareDecomposition is_square_global(const RatFunc& f);

struct Place {
  bool infinite = false;
  UPoly p;  // monic irreducible; unused at infinity

  int degree() const { return infinite ? 1 : p.degree(); }
  std::string name() const { return infinite ? "inf" : to_string(p); }
  bool operator==(const Place& o) const {
    return infinite == o.infinite && (infinite || p == o.p);
  }

  static Place at_infinity(const GaloisField& base) { return {true, UPoly(base)}; }
  static Place finite(UPoly p);
};

/// All monic irreducibles of degree <= max_degree in (degree, code) order,
/// then the infinite place.
std::vector<Place> places_up_to(const GaloisField& base, int max_degree);

/// Multiplicity of p in a nonzero polynomial.
int multiplicity(const UPoly& a, const UPoly& p);

/// v(f); throws MathError for f = 0.
int valuation(const RatFunc& f, const Place& v);

/// Residue field GF(q^deg v) as a GaloisField.
const GaloisField& residue_field(const Place& v);

/// Truncated Laurent series sum_{i >= val} c_i pi^i over a finite field,
/// known modulo pi^(val + N). The zero-to-precision element has no stored
/// coefficients and valuation equal to its absolute precision.
class LaurentSeries {
 public:
  static constexpr int kDefaultPrecision = 32;
  static constexpr int kMaxPrecision = 256;

  LaurentSeries(const GaloisField& f, int val, std::vector<std::uint32_t> coeffs,
                int prec_hint = kDefaultPrecision);
  static LaurentSeries zero(const GaloisField& f, int abs_precision,
                            int prec_hint = kDefaultPrecision);
  static LaurentSeries constant(const GaloisElem& c, int precision = kDefaultPrecision);
  /// pi^e to the given relative precision.
  static LaurentSeries uniformizer_power(const GaloisField& f, int e,
                                         int precision = kDefaultPrecision);

  const GaloisField& residue_field() const { return *field_; }
  /// Valuation of a nonzero series, or absolute precision of a zero one.
  int valuation() const { return val_; }
  int precision() const { return int(c_.size()); }
  int absolute_precision() const { return val_ + int(c_.size()); }
  /// Coefficient of pi^e; throws PrecisionError beyond the known range.
  GaloisElem coeff(int e) const;
  /// Lowest-order coefficient of an integral series (its residue).
  GaloisElem residue() const;
  LaurentSeries truncated(int abs_precision) const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const { return *this + o; }
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inv(); }
  LaurentSeries inv() const;
  /// Squares are exactly the series supported on even exponents.
  std::optional<LaurentSeries> sqrt() const;

  bool is_zero() const { return c_.empty(); }
  LaurentSeries zero() const;
  LaurentSeries one() const;
  /// Equal to the smaller of the two precisions.
  bool operator==(const LaurentSeries& o) const { return (*this + o).is_zero(); }

 private:
  void normalize();
  const GaloisField* field_;
  int val_;
  std::vector<std::uint32_t> c_;
  int prec_hint_;
};

std::string to_string(const LaurentSeries& s);

/// Embedding of GF(q)(T) into its completion at v: pi = p(T) at a finite
/// place, pi = 1/T at infinity. Coefficients live in the residue field.
class Completion {
 public:
  explicit Completion(Place v);

  const Place& place() const { return place_; }
  const GaloisField& residue_field() const { return *residue_; }
  /// Residue of T (a chosen root of p) at a finite place.
  GaloisElem theta() const { return theta_; }
  /// Base field element as a residue field constant.
  GaloisElem embed(const GaloisElem& c) const { return embed_(c); }

  LaurentSeries expand(const RatFunc& f, int precision) const;

 private:
  std::vector<std::uint32_t> t_series(int precision) const;
  std::vector<std::uint32_t> eval_poly(const UPoly& a, const std::vector<std::uint32_t>& t,
                                       int precision) const;

  Place place_;
  const GaloisField* residue_;
  FieldEmbedding embed_;
  GaloisElem theta_;
};

LaurentSeries expand_at(const RatFunc& f, const Place& v,
                        int precision = LaurentSeries::kDefaultPrecision);

/// True when the expansion of f at v has no odd-exponent coefficient within
/// the given relative precision. A verified-to-precision oracle.
bool expansion_is_even(const RatFunc& f, const Place& v, int precision);

/// Relative precision that certifies the parity test at v, from degree data
/// of f alone.
int certifying_precision(const RatFunc& f, const Place& v);

/// Exact local squareness: the precision starts at `precision`, doubles up
/// to kMaxPrecision until it reaches certifying_precision, and the parity
/// test runs there. Throws PrecisionError past the cap. Zero is a square.
bool is_square_local(const RatFunc& f, const Place& v,
                     int precision = LaurentSeries::kDefaultPrecision);

/// Newton lift of a simple residue root of sum_i coeffs[i] y^i, coefficients
/// integral. Throws MathError when the derivative at the root is not a unit
/// or the root does not reduce to zero.
LaurentSeries hensel_lift(const std::vector<LaurentSeries>& coeffs, const GaloisElem& root,
                          int precision);

}  // namespace theta2
