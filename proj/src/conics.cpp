#include "theta2/conics.hpp"

#include <algorithm>

namespace theta2 {

std::vector<Point3<GaloisElem>> projective_points(const GaloisField& f) {
  const auto el = f.elements();
  std::vector<Point3<GaloisElem>> pts;
  pts.reserve(el.size() * el.size() + el.size() + 1);
  for (const auto& y : el) {
    for (const auto& z : el) pts.push_back({f.one(), y, z});
  }
  for (const auto& z : el) pts.push_back({f.zero(), f.one(), z});
  pts.push_back({f.zero(), f.zero(), f.one()});
  return pts;
}

std::optional<Point3<GaloisElem>> find_point(const Conic<GaloisElem>& c) {
  const auto F = c.form();
  const GaloisField& field = F.zero_elem().field();
  for (const auto& p : projective_points(field)) {
    if (F.evaluate(p[0], p[1], p[2]).is_zero()) return p;
  }
  return std::nullopt;
}

FunctionFieldSearch find_point(const Conic<RatFunc>& c, int budget) {
  if (budget < 0) throw std::invalid_argument("find_point: negative budget");
  if (auto p = shortcut_point(c)) {
    if (!c.contains(*p)) throw std::logic_error("find_point: shortcut point is not on the conic");
    return {FunctionFieldSearch::Status::Found, p, true};
  }
  const auto F = c.form();
  const GaloisField& base = F.zero_elem().base_field();
  const int digits = budget + 1;
  if (digits * base.degree() > 20) throw std::invalid_argument("find_point: budget too large");
  const std::uint64_t count = std::uint64_t(1) << (digits * base.degree());
  std::vector<RatFunc> polys;
  polys.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    polys.emplace_back(UPoly::from_code(base, code));
  }
  const RatFunc zero(base), one = zero.one();
  for (const auto& x : polys) {
    for (const auto& y : polys) {
      if (F.evaluate(x, y, one).is_zero()) {
        return {FunctionFieldSearch::Status::Found, Point3<RatFunc>{x, y, one}};
      }
    }
  }
  for (const auto& x : polys) {
    if (F.evaluate(x, one, zero).is_zero()) {
      return {FunctionFieldSearch::Status::Found, Point3<RatFunc>{x, one, zero}};
    }
  }
  if (F.evaluate(one, zero, zero).is_zero()) {
    return {FunctionFieldSearch::Status::Found, Point3<RatFunc>{one, zero, zero}};
  }
  return {FunctionFieldSearch::Status::NotFoundWithinBudget, std::nullopt};
}

namespace {

using LS = LaurentSeries;

struct ChartLift {
  Point3<LS> point;
  Point3<GaloisElem> residue;
};

/// Scales the coefficients to be integral and primitive, reduces, and lifts
/// a smooth residue point along one coordinate.
std::optional<ChartLift> lift_in_chart(const std::array<LS, 6>& coeffs, const GaloisField& R,
                                       int precision) {
  int lowest = 1 << 30;
  for (const auto& x : coeffs) {
    if (!x.is_zero()) lowest = std::min(lowest, x.valuation());
  }
  const LS scale = LS::uniformizer_power(R, -lowest, precision);
  std::array<LS, 6> s = coeffs;
  for (auto& x : s) x = x * scale;
  auto red = [&](const LS& x) { return x.is_zero() || x.valuation() > 0 ? R.zero() : x.coeff(0); };
  const ConicCoefficients<GaloisElem> r{red(s[0]), red(s[1]), red(s[2]),
                                        red(s[3]), red(s[4]), red(s[5])};
  const auto Fr = r.form();
  const auto dFr = partials(Fr);

  std::optional<Point3<GaloisElem>> P0;
  int coord = -1;
  for (const auto& p : projective_points(R)) {
    if (!Fr.evaluate(p[0], p[1], p[2]).is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (!dFr[j].evaluate(p[0], p[1], p[2]).is_zero()) {
        P0 = p;
        coord = j;
        break;
      }
    }
    if (P0) break;
  }
  if (!P0) return std::nullopt;

  // Fix the other two coordinates at their residues; F restricted to the
  // line is a quadratic in the remaining one with a simple residue root.
  Point3<LS> fixed = {LS::constant((*P0)[0], precision), LS::constant((*P0)[1], precision),
                      LS::constant((*P0)[2], precision)};
  const ConicCoefficients<LS> sc{s[0], s[1], s[2], s[3], s[4], s[5]};
  std::array<LS, 3> sq = {sc.a, sc.b, sc.c};
  auto cross = [&](int i, int j) {
    const int lo = std::min(i, j), hi = std::max(i, j);
    if (lo == 0 && hi == 1) return sc.d;
    if (lo == 1 && hi == 2) return sc.e;
    return sc.f;
  };
  const int o1 = (coord + 1) % 3, o2 = (coord + 2) % 3;
  const LS c0 = sq[o1] * fixed[o1] * fixed[o1] + sq[o2] * fixed[o2] * fixed[o2] +
                cross(o1, o2) * fixed[o1] * fixed[o2];
  const LS c1 = cross(coord, o1) * fixed[o1] + cross(coord, o2) * fixed[o2];
  const LS c2 = sq[coord];
  Point3<LS> point = fixed;
  point[coord] = hensel_lift({c0, c1, c2}, (*P0)[coord], precision);

  const LS value = sc.form().evaluate(point[0], point[1], point[2]);
  if (value.valuation() < precision) {
    throw std::logic_error("find_point_local: lifted point fails verification");
  }
  return ChartLift{point, *P0};
}

}  // namespace

LocalPointSearch find_point_local(const Conic<RatFunc>& c, const Place& v, int precision) {
  const Completion comp(v);
  const GaloisField& R = comp.residue_field();
  const auto& q = c.coefficients();
  const std::array<RatFunc, 6> raw = {q.a, q.b, q.c, q.d, q.e, q.f};
  std::array<LS, 6> base = {LS::zero(R, 0), LS::zero(R, 0), LS::zero(R, 0),
                            LS::zero(R, 0), LS::zero(R, 0), LS::zero(R, 0)};
  for (int i = 0; i < 6; ++i) base[i] = comp.expand(raw[i], precision);

  // Charts X -> pi^i X, Y -> pi^j Y, Z -> pi^k Z with exponents up to
  // kMaxShift, fewest total shift first; the identity chart comes first.
  constexpr int kMaxShift = 2;
  std::vector<std::array<int, 3>> charts;
  for (int i = 0; i <= kMaxShift; ++i) {
    for (int j = 0; j <= kMaxShift; ++j) {
      for (int k = 0; k <= kMaxShift; ++k) {
        if (std::min({i, j, k}) == 0) charts.push_back({i, j, k});
      }
    }
  }
  std::stable_sort(charts.begin(), charts.end(), [](const auto& x, const auto& y) {
    return x[0] + x[1] + x[2] < y[0] + y[1] + y[2];
  });

  for (const auto& sh : charts) {
    auto pw = [&](int e) { return LS::uniformizer_power(R, e, precision); };
    // a, b, c, d, e, f scale with X^2, Y^2, Z^2, XY, YZ, XZ.
    const std::array<int, 6> e = {2 * sh[0],     2 * sh[1],     2 * sh[2],
                                  sh[0] + sh[1], sh[1] + sh[2], sh[0] + sh[2]};
    std::array<LS, 6> scaled = base;
    for (int i = 0; i < 6; ++i) scaled[i] = base[i] * pw(e[i]);
    auto lifted = lift_in_chart(scaled, R, precision);
    if (!lifted) continue;
    Point3<LS> point = lifted->point;
    for (int i = 0; i < 3; ++i) point[i] = point[i] * pw(sh[i]);
    std::string note = "smooth residue point lifted to O(pi^" + std::to_string(precision) + ")";
    if (sh != std::array<int, 3>{0, 0, 0}) {
      note += " after rescaling (X, Y, Z) by pi^(" + std::to_string(sh[0]) + ", " +
              std::to_string(sh[1]) + ", " + std::to_string(sh[2]) + ")";
    }
    return {LocalPointSearch::Status::Found, point, lifted->residue, note};
  }
  return {LocalPointSearch::Status::Undecided, std::nullopt, std::nullopt,
          "no smooth residue point at " + v.name() +
              " in any rescaled chart; local solvability undecided"};
}

}  // namespace theta2
