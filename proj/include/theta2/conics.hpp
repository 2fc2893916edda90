#pragma once

// Smooth plane conics aX^2 + bY^2 + cZ^2 + dXY + eYZ + fXZ in characteristic
// two: smoothness via the strange point, rational points, the purely
// inseparable point, and the 2x2 symmetric determinantal representation.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "theta2/fields.hpp"
#include "theta2/forms.hpp"
#include "theta2/funcfield.hpp"
#include "theta2/symbolic.hpp"

namespace theta2 {

template <FieldElement E>
using Point3 = std::array<E, 3>;

template <FieldElement E>
std::string to_string(const Point3<E>& p) {
  return "[" + to_string(p[0]) + " : " + to_string(p[1]) + " : " + to_string(p[2]) + "]";
}

template <FieldElement E>
struct ConicCoefficients {
  E a, b, c, d, e, f;

  static ConicCoefficients from_form(const TernaryForm<E>& F) {
    if (F.degree() != 2) throw std::invalid_argument("conic: form must have degree 2");
    return {F.coefficient({2, 0, 0}), F.coefficient({0, 2, 0}), F.coefficient({0, 0, 2}),
            F.coefficient({1, 1, 0}), F.coefficient({0, 1, 1}), F.coefficient({1, 0, 1})};
  }

  TernaryForm<E> form() const {
    return TernaryForm<E>::from_terms(2, a.zero(),
                                      {{{2, 0, 0}, a}, {{0, 2, 0}, b}, {{0, 0, 2}, c},
                                       {{1, 1, 0}, d}, {{0, 1, 1}, e}, {{1, 0, 1}, f}});
  }

  bool all_zero() const {
    return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() && e.is_zero() &&
           f.is_zero();
  }

  /// The value of the form at the strange point [e : f : d]:
  /// a e^2 + b f^2 + c d^2 + d e f.
  E smoothness_value() const { return a * e * e + b * f * f + c * d * d + d * e * f; }

  /// Common zero of the three partials dY + fZ, dX + eZ, fX + eY.
  Point3<E> strange_point() const { return {e, f, d}; }
};

/// Throws MathError for the all-zero tuple.
template <FieldElement E>
bool is_smooth(const ConicCoefficients<E>& q) {
  if (q.all_zero()) throw MathError("is_smooth: all conic coefficients are zero");
  return !q.smoothness_value().is_zero();
}

/// A smooth conic.
template <FieldElement E>
class Conic {
 public:
  explicit Conic(ConicCoefficients<E> q) : q_(std::move(q)) {
    if (!is_smooth(q_)) throw MathError("Conic: singular conic " + to_string(q_.form()));
  }
  explicit Conic(const TernaryForm<E>& F) : Conic(ConicCoefficients<E>::from_form(F)) {}

  const ConicCoefficients<E>& coefficients() const { return q_; }
  TernaryForm<E> form() const { return q_.form(); }
  bool contains(const Point3<E>& p) const {
    return form().evaluate(p[0], p[1], p[2]).is_zero();
  }

 private:
  ConicCoefficients<E> q_;
};

/// All points of P^2 over a finite field, each once, normalized so the
/// first nonzero coordinate is 1, in lexicographic order of the remaining
/// coordinates: [1:y:z], then [0:1:z], then [0:0:1].
std::vector<Point3<GaloisElem>> projective_points(const GaloisField& f);

/// Exhaustive scan; always succeeds for a smooth conic over a finite field.
std::optional<Point3<GaloisElem>> find_point(const Conic<GaloisElem>& c);

/// A point over K(sqrt t) for a conic with d != 0 and a != 0.
template <FieldElement E>
struct InseparablePoint {
  E t;
  /// [sqrt t : f : d], with s^2 = t adjoined formally.
  Point3<QuadExt<E>> point;
  /// The same point when t is a square in K.
  std::optional<Point3<E>> rational;
};

/// t = a^-1 (b f^2 + c d^2 + e f d) and the point [sqrt t : f : d].
/// Requires d != 0 and a != 0.
template <FieldElement E>
InseparablePoint<E> inseparable_point(const ConicCoefficients<E>& q) {
  if (q.d.is_zero()) throw MathError("inseparable_point: requires d != 0 (change coordinates)");
  if (q.a.is_zero()) throw MathError("inseparable_point: requires a != 0 ([1:0:0] lies on C)");
  const E t = q.a.inv() * (q.b * q.f * q.f + q.c * q.d * q.d + q.e * q.f * q.d);
  InseparablePoint<E> out{t,
                          {QuadExt<E>::root_of(t), QuadExt<E>::constant(q.f, t),
                           QuadExt<E>::constant(q.d, t)},
                          std::nullopt};
  if (auto s = t.sqrt()) out.rational = Point3<E>{*s, q.f, q.d};
  return out;
}

/// Variable permutation (new variable i is old variable perm[i]) giving
/// d != 0 and a != 0, if one exists.
template <FieldElement E>
std::optional<std::array<int, 3>> inseparable_arrangement(const ConicCoefficients<E>& q) {
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const std::array<E, 3> sq = {q.a, q.b, q.c};
  auto cross = [&](int i, int j) {
    const int lo = std::min(i, j), hi = std::max(i, j);
    if (lo == 0 && hi == 1) return q.d;
    if (lo == 1 && hi == 2) return q.e;
    return q.f;
  };
  for (const auto& p : perms) {
    if (!sq[p[0]].is_zero() && !cross(p[0], p[1]).is_zero()) return p;
  }
  return std::nullopt;
}

/// Coefficients after renaming variables by perm.
template <FieldElement E>
ConicCoefficients<E> permuted(const ConicCoefficients<E>& q, const std::array<int, 3>& perm) {
  const std::array<E, 3> sq = {q.a, q.b, q.c};
  auto cross = [&](int i, int j) {
    const int lo = std::min(i, j), hi = std::max(i, j);
    if (lo == 0 && hi == 1) return q.d;
    if (lo == 1 && hi == 2) return q.e;
    return q.f;
  };
  return {sq[perm[0]],           sq[perm[1]],           sq[perm[2]],
          cross(perm[0], perm[1]), cross(perm[1], perm[2]), cross(perm[0], perm[2])};
}

/// The t-shortcut: the point [sqrt t : f : d] in the first arrangement
/// with a, d != 0, when t is a square in K. Returns nothing otherwise; that
/// does not certify that C has no point.
template <FieldElement E>
std::optional<Point3<E>> shortcut_point(const Conic<E>& c) {
  const auto& q = c.coefficients();
  const auto perm = inseparable_arrangement(q);
  if (!perm) return std::nullopt;
  const auto ip = inseparable_point(permuted(q, *perm));
  if (!ip.rational) return std::nullopt;
  const E zero = q.a.zero();
  Point3<E> back = {zero, zero, zero};
  for (int i = 0; i < 3; ++i) back[(*perm)[i]] = (*ip.rational)[i];
  return back;
}

struct FunctionFieldSearch {
  enum class Status { Found, NotFoundWithinBudget };
  Status status;
  std::optional<Point3<RatFunc>> point;
  bool via_shortcut = false;
};

/// t-shortcut, then every [x : y : 1] with polynomial x, y of degree
/// <= budget, then [x : 1 : 0] and [1 : 0 : 0]. Incomplete by nature.
FunctionFieldSearch find_point(const Conic<RatFunc>& c, int budget);

/// Outcome of the local search at a place.
struct LocalPointSearch {
  enum class Status { Found, Undecided };
  Status status;
  std::optional<Point3<LaurentSeries>> point;
  /// Residue of the lifted point in the chart where it was found.
  std::optional<Point3<GaloisElem>> residue_point;
  std::string note;
};

/// Scales C to be integral and primitive at v, reduces, takes a residue
/// point where some partial is a unit and Hensel-lifts along that
/// coordinate. When the reduction has no smooth residue point the charts
/// X, Y, Z -> pi^i X, pi^j Y, pi^k Z (0 <= i, j, k <= 2) are tried in turn;
/// Undecided when none has one.
LocalPointSearch find_point_local(const Conic<RatFunc>& c, const Place& v,
                                  int precision = LaurentSeries::kDefaultPrecision);

/// A symmetric 2x2 pencil with det(M) = lambda * F, and the change of
/// variables used to build it.
template <FieldElement E>
struct ConicSdr {
  LinearPencil<E> M;
  E lambda;
  /// Columns: the point, a second point on the tangent, a point off it.
  Matrix<E> change;
};

/// Moves P to [1:0:0] with tangent Z = 0 (so a = d = 0, b, f != 0), writes
/// down rows (Z, bY), (bY, bfX + beY + bcZ), and pulls back.
template <FieldElement E>
ConicSdr<E> conic_sdr(const Conic<E>& conic, const Point3<E>& P) {
  if (!conic.contains(P)) throw MathError("conic_sdr: point is not on the conic");
  const TernaryForm<E> F = conic.form();
  const E zero = F.zero_elem(), one = zero.one();
  const auto parts = partials(F);
  const Point3<E> n = {parts[0].evaluate(P[0], P[1], P[2]), parts[1].evaluate(P[0], P[1], P[2]),
                       parts[2].evaluate(P[0], P[1], P[2])};
  if (n[0].is_zero() && n[1].is_zero() && n[2].is_zero()) {
    throw std::logic_error("conic_sdr: smooth conic with vanishing gradient");
  }

  // Tangent line {v : n.v = 0} contains P; pick Q on it independent of P
  // (a cross product n x e_i) and R with n.R != 0.
  auto cross = [](const Point3<E>& u, const Point3<E>& w) {
    return Point3<E>{u[1] * w[2] + u[2] * w[1], u[2] * w[0] + u[0] * w[2],
                     u[0] * w[1] + u[1] * w[0]};
  };
  auto independent = [&](const Point3<E>& u, const Point3<E>& w) {
    const auto c = cross(u, w);
    return !(c[0].is_zero() && c[1].is_zero() && c[2].is_zero());
  };
  std::optional<Point3<E>> Q;
  for (int i = 0; i < 3 && !Q; ++i) {
    Point3<E> ei = {zero, zero, zero};
    ei[i] = one;
    const auto cand = cross(n, ei);
    if (independent(cand, P)) Q = cand;
  }
  Point3<E> R = {zero, zero, zero};
  for (int i = 0; i < 3; ++i) {
    if (!n[i].is_zero()) {
      R[i] = one;
      break;
    }
  }
  if (!Q) throw std::logic_error("conic_sdr: tangent line is degenerate");

  Matrix<E> A(3, zero);
  for (int i = 0; i < 3; ++i) {
    A(i, 0) = P[i];
    A(i, 1) = (*Q)[i];
    A(i, 2) = R[i];
  }
  const auto moved = ConicCoefficients<E>::from_form(substitute(F, A));
  if (!moved.a.is_zero() || !moved.d.is_zero() || moved.b.is_zero() || moved.f.is_zero()) {
    throw std::logic_error("conic_sdr: normalization failed");
  }
  const E& b = moved.b;
  using LF = LinearForm<E>;
  const LF z_form{{zero, zero, one}};
  const LF by{{zero, b, zero}};
  const LF last{{b * moved.f, b * moved.e, b * moved.c}};
  const LinearPencil<E> local = LinearPencil<E>::from_rows({{z_form, by}, {by, last}}, true);
  ConicSdr<E> out{substitute(local, A.inverse()), b, A};
  if (!(det(out.M) == F.scaled(out.lambda))) {
    throw std::logic_error("conic_sdr: determinant check failed");
  }
  return out;
}

}  // namespace theta2
