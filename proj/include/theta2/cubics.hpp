#pragma once

// Plane cubics in characteristic two: long Weierstrass curves and their
// group law, the 2-torsion point of an ordinary curve, and the twisted Hesse
// family with its Jacobian and 3x3 symmetric determinantal representation.

#include <optional>
#include <string>
#include <vector>

#include "theta2/conics.hpp"
#include "theta2/fields.hpp"
#include "theta2/forms.hpp"
#include "theta2/funcfield.hpp"
#include "theta2/symbolic.hpp"

namespace theta2 {

/// Y^2Z + a1 XYZ + a3 YZ^2 = X^3 + a2 X^2Z + a4 XZ^2 + a6 Z^3, char 2.
template <FieldElement E>
struct WeierstrassData {
  E a1, a2, a3, a4, a6;

  E b2() const { return a1 * a1; }
  E b4() const { return a1 * a3; }
  E b6() const { return a3 * a3; }
  E b8() const { return a1 * a1 * a6 + a1 * a3 * a4 + a2 * a3 * a3 + a4 * a4; }
  E discriminant() const {
    const E B2 = b2(), B4 = b4(), B6 = b6();
    return B2 * B2 * b8() + B6 * B6 + B2 * B4 * B6;
  }
  E c4() const { return b2() * b2(); }

  /// Everything on one side; coefficients of Y^2Z and X^3 are 1.
  TernaryForm<E> form() const {
    const E one = a1.one();
    return TernaryForm<E>::from_terms(3, a1.zero(),
                                      {{{0, 2, 1}, one}, {{1, 1, 1}, a1}, {{0, 1, 2}, a3},
                                       {{3, 0, 0}, one}, {{2, 0, 1}, a2}, {{1, 0, 2}, a4},
                                       {{0, 0, 3}, a6}});
  }
};

template <FieldElement E>
class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint affine(E x, E y) { return CurvePoint(std::move(x), std::move(y)); }

  bool is_infinity() const { return !xy_.has_value(); }
  const E& x() const { return xy_->first; }
  const E& y() const { return xy_->second; }
  /// [x : y : 1], or [0 : 1 : 0] for O (needs a field element for O).
  Point3<E> projective(const E& zero) const {
    if (is_infinity()) return {zero, zero.one(), zero};
    return {x(), y(), zero.one()};
  }
  bool operator==(const CurvePoint& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return x() == o.x() && y() == o.y();
  }

 private:
  CurvePoint() = default;
  CurvePoint(E x, E y) : xy_(std::pair<E, E>(std::move(x), std::move(y))) {}
  std::optional<std::pair<E, E>> xy_;
};

template <FieldElement E>
std::string to_string(const CurvePoint<E>& p) {
  if (p.is_infinity()) return "O";
  return "[" + to_string(p.x()) + " : " + to_string(p.y()) + " : 1]";
}

/// A nonsingular long Weierstrass curve.
template <FieldElement E>
class WeierstrassCurve {
 public:
  explicit WeierstrassCurve(WeierstrassData<E> d) : d_(std::move(d)) {
    if (d_.discriminant().is_zero()) {
      throw MathError("WeierstrassCurve: singular curve (discriminant zero)");
    }
  }
  WeierstrassCurve(E a1, E a2, E a3, E a4, E a6)
      : WeierstrassCurve(WeierstrassData<E>{a1, a2, a3, a4, a6}) {}

  const WeierstrassData<E>& data() const { return d_; }
  const E& a1() const { return d_.a1; }
  const E& a2() const { return d_.a2; }
  const E& a3() const { return d_.a3; }
  const E& a4() const { return d_.a4; }
  const E& a6() const { return d_.a6; }
  E discriminant() const { return d_.discriminant(); }
  /// c4^3 / Delta = a1^12 / Delta.
  E j_invariant() const {
    const E c = d_.c4();
    return c * c * c * discriminant().inv();
  }
  bool is_ordinary() const { return !a1().is_zero(); }
  TernaryForm<E> form() const { return d_.form(); }
  E zero() const { return d_.a1.zero(); }

  bool contains(const CurvePoint<E>& p) const {
    if (p.is_infinity()) return true;
    const auto& x = p.x();
    const auto& y = p.y();
    return (y * y + a1() * x * y + a3() * y + x * x * x + a2() * x * x + a4() * x + a6())
        .is_zero();
  }

  /// Checks membership; throws MathError otherwise.
  CurvePoint<E> point(E x, E y) const {
    auto p = CurvePoint<E>::affine(std::move(x), std::move(y));
    if (!contains(p)) throw MathError("WeierstrassCurve: point not on curve");
    return p;
  }

  /// (x, y) -> (x, y + a1 x + a3).
  CurvePoint<E> negate(const CurvePoint<E>& p) const {
    require_on(p);
    if (p.is_infinity()) return p;
    return CurvePoint<E>::affine(p.x(), p.y() + a1() * p.x() + a3());
  }

  /// Chord-tangent law in the long Weierstrass form, char 2.
  CurvePoint<E> add(const CurvePoint<E>& p, const CurvePoint<E>& q) const {
    require_on(p);
    require_on(q);
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const E &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    E lambda = zero(), nu = zero();
    if (!(x1 == x2)) {
      const E den = (x2 + x1).inv();
      lambda = (y2 + y1) * den;
      nu = (y1 * x2 + y2 * x1) * den;
    } else {
      if ((y1 + y2 + a1() * x2 + a3()).is_zero()) return CurvePoint<E>::infinity();
      // Here P = Q and the tangent is not vertical.
      const E den = (a1() * x1 + a3()).inv();
      lambda = (x1 * x1 + a4() + a1() * y1) * den;
      nu = (x1 * x1 * x1 + a4() * x1 + a3() * y1) * den;
    }
    const E x3 = lambda * lambda + a1() * lambda + a2() + x1 + x2;
    const E y3 = (lambda + a1()) * x3 + nu + a3();
    return CurvePoint<E>::affine(x3, y3);
  }

  CurvePoint<E> twice(const CurvePoint<E>& p) const { return add(p, p); }

  CurvePoint<E> multiple(const CurvePoint<E>& p, std::uint64_t n) const {
    CurvePoint<E> acc = CurvePoint<E>::infinity(), base = p;
    for (; n; n >>= 1) {
      if (n & 1) acc = add(acc, base);
      base = twice(base);
    }
    return acc;
  }

 private:
  void require_on(const CurvePoint<E>& p) const {
    if (!contains(p)) throw MathError("WeierstrassCurve: point not on curve");
  }
  WeierstrassData<E> d_;
};

/// X = u^2 X' + r, Y = u^3 Y' + s u^2 X' + t.
template <FieldElement E>
struct WeierstrassChange {
  E u, r, s, t;
};

template <FieldElement E>
WeierstrassCurve<E> change_coordinates(const WeierstrassCurve<E>& e,
                                       const WeierstrassChange<E>& c) {
  if (c.u.is_zero()) throw MathError("change_coordinates: u must be nonzero");
  const E &a1 = e.a1(), &a2 = e.a2(), &a3 = e.a3(), &a4 = e.a4(), &a6 = e.a6();
  const E &r = c.r, &s = c.s, &t = c.t;
  const E ui = c.u.inv();
  const E u2 = ui * ui, u3 = u2 * ui, u4 = u2 * u2, u6 = u3 * u3;
  return WeierstrassCurve<E>(
      a1 * ui, (a2 + s * a1 + r + s * s) * u2, (a3 + r * a1) * u3,
      (a4 + s * a3 + (t + r * s) * a1 + r * r) * u4,
      (a6 + r * a4 + r * r * a2 + r * r * r + t * a3 + t * t + r * t * a1) * u6);
}

template <FieldElement E>
struct OrdinaryNormalization {
  WeierstrassCurve<E> curve;  // Y^2Z + XYZ = X^3 + a2 X^2Z + a6 Z^3
  WeierstrassChange<E> change;
};

/// u = a1, s = 0, r = a3/a1, t = (a4 + r^2)/a1.
template <FieldElement E>
OrdinaryNormalization<E> normalize_ordinary(const WeierstrassCurve<E>& e) {
  if (!e.is_ordinary()) throw MathError("normalize_ordinary: curve is supersingular (a1 = 0)");
  const E r = e.a3() * e.a1().inv();
  const E t = (e.a4() + r * r) * e.a1().inv();
  WeierstrassChange<E> c{e.a1(), r, e.zero(), t};
  return {change_coordinates(e, c), c};
}

template <FieldElement E>
bool in_ordinary_normal_form(const WeierstrassCurve<E>& e) {
  return e.a1() == e.a1().one() && e.a3().is_zero() && e.a4().is_zero();
}

/// The nontrivial 2-torsion point [0 : sqrt a6 : 1] of Y^2Z + XYZ = X^3 +
/// a2 X^2Z + a6 Z^3.
template <FieldElement E>
struct TwoTorsion {
  bool rational;
  std::optional<CurvePoint<E>> point;
  /// a6; the point is defined over K(sqrt a6).
  E obstruction;
  Point3<QuadExt<E>> formal_point;
};

template <FieldElement E>
TwoTorsion<E> two_torsion(const WeierstrassCurve<E>& e) {
  if (!e.is_ordinary()) {
    throw MathError("two_torsion: supersingular curve has no nontrivial 2-torsion point");
  }
  if (!in_ordinary_normal_form(e)) {
    throw std::invalid_argument("two_torsion: expects Y^2Z + XYZ = X^3 + a2 X^2Z + a6 Z^3");
  }
  const E& a6 = e.a6();
  const E z = e.zero();
  TwoTorsion<E> out{false, std::nullopt, a6,
                    {QuadExt<E>::constant(z, a6), QuadExt<E>::root_of(a6),
                     QuadExt<E>::constant(z.one(), a6)}};
  if (auto s = a6.sqrt()) {
    out.rational = true;
    out.point = e.point(z, *s);
  }
  return out;
}

/// aX^3 + bY^3 + cZ^3 + mXYZ.
template <FieldElement E>
struct HesseData {
  E a, b, c, m;

  /// abc (m^3 + abc); nonzero exactly for smooth members.
  E smoothness_value() const {
    const E abc = a * b * c;
    return abc * (m * m * m + abc);
  }
  TernaryForm<E> form() const {
    return TernaryForm<E>::from_terms(
        3, a.zero(), {{{3, 0, 0}, a}, {{0, 3, 0}, b}, {{0, 0, 3}, c}, {{1, 1, 1}, m}});
  }
};

template <FieldElement E>
class HesseCubic {
 public:
  explicit HesseCubic(HesseData<E> h) : h_(std::move(h)) {
    if (h_.smoothness_value().is_zero()) {
      throw MathError("HesseCubic: singular (abc(m^3 + abc) = 0)");
    }
  }
  HesseCubic(E a, E b, E c, E m) : HesseCubic(HesseData<E>{a, b, c, m}) {}

  const E& a() const { return h_.a; }
  const E& b() const { return h_.b; }
  const E& c() const { return h_.c; }
  const E& m() const { return h_.m; }
  TernaryForm<E> form() const { return h_.form(); }

 private:
  HesseData<E> h_;
};

/// Y^2Z + mXYZ + abc YZ^2 = X^3 + (a^2b^2c^2 + m^3 abc) Z^3.
template <FieldElement E>
WeierstrassCurve<E> hesse_jacobian(const HesseCubic<E>& h) {
  const E abc = h.a() * h.b() * h.c();
  const E z = abc.zero();
  return WeierstrassCurve<E>(h.m(), z, abc, z, abc * abc + h.m() * h.m() * h.m() * abc);
}

/// Rows (aX, sZ, sY), (sZ, bY, sX), (sY, sX, cZ).
template <FieldElement E>
LinearPencil<E> hesse_matrix(const E& a, const E& b, const E& c, const E& s) {
  const E z = a.zero();
  using LF = LinearForm<E>;
  const LF aX{{a, z, z}}, bY{{z, b, z}}, cZ{{z, z, c}};
  const LF sX{{s, z, z}}, sY{{z, s, z}}, sZ{{z, z, s}};
  return LinearPencil<E>::from_rows({{aX, sZ, sY}, {sZ, bY, sX}, {sY, sX, cZ}}, true);
}

template <FieldElement E>
struct HesseSdr {
  enum class Verdict {
    /// m = 0: no representation even over the algebraic closure.
    NonOrdinary,
    /// m^-1 abc is not a square: none over K or K^sep, one over K(sqrt).
    PurelyInseparableOnly,
    Exists,
  };
  Verdict verdict;
  std::optional<E> radicand;  // m^-1 abc
  std::optional<E> s;
  std::optional<LinearPencil<E>> M;
  std::optional<E> lambda;
};

template <FieldElement E>
HesseSdr<E> hesse_sdr(const HesseCubic<E>& h) {
  using V = typename HesseSdr<E>::Verdict;
  if (h.m().is_zero()) return {V::NonOrdinary, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  const E r = h.m().inv() * h.a() * h.b() * h.c();
  auto s = r.sqrt();
  if (!s) return {V::PurelyInseparableOnly, r, std::nullopt, std::nullopt, std::nullopt};
  auto M = hesse_matrix(h.a(), h.b(), h.c(), *s);
  if (!(det(M) == h.form().scaled(r))) {
    throw std::logic_error("hesse_sdr: determinant check failed");
  }
  return {V::Exists, r, *s, std::move(M), r};
}

struct LocalVerdict {
  Place place;
  bool exists;
};

/// SDR existence (squareness of m^-1 abc) globally and at each place of
/// degree <= B plus infinity.
struct LocalGlobalReport {
  bool global;
  std::vector<LocalVerdict> local;
  bool all_local;
  bool any_local;
  /// global == every local verdict.
  bool consistent;
};

LocalGlobalReport hesse_local_global_report(const HesseCubic<RatFunc>& h, int max_place_degree,
                                            int precision = LaurentSeries::kDefaultPrecision);

/// Affine points with polynomial coordinates of degree <= budget, in code
/// order of (x, y).
std::vector<CurvePoint<RatFunc>> bounded_height_points(const WeierstrassCurve<RatFunc>& e,
                                                       int budget);

}  // namespace theta2
