#include "theta2/cubics.hpp"

namespace theta2 {

LocalGlobalReport hesse_local_global_report(const HesseCubic<RatFunc>& h, int max_place_degree,
                                            int precision) {
  if (h.m().is_zero()) {
    throw std::invalid_argument("hesse_local_global_report: requires m != 0");
  }
  if (max_place_degree < 1) {
    throw std::invalid_argument("hesse_local_global_report: place degree bound must be >= 1");
  }
  const RatFunc r = h.m().inv() * h.a() * h.b() * h.c();
  LocalGlobalReport rep{is_square_global(r).square, {}, true, false, true};
  for (auto& v : places_up_to(h.a().base_field(), max_place_degree)) {
    const bool ok = is_square_local(r, v, precision);
    rep.all_local = rep.all_local && ok;
    rep.any_local = rep.any_local || ok;
    rep.consistent = rep.consistent && ok == rep.global;
    rep.local.push_back({std::move(v), ok});
  }
  return rep;
}

std::vector<CurvePoint<RatFunc>> bounded_height_points(const WeierstrassCurve<RatFunc>& e,
                                                       int budget) {
  const GaloisField& base = e.a1().base_field();
  if (budget < 0 || (budget + 1) * base.degree() > 20) {
    throw std::invalid_argument("bounded_height_points: budget out of range");
  }
  const std::uint64_t count = std::uint64_t(1) << ((budget + 1) * base.degree());
  std::vector<RatFunc> polys;
  polys.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    polys.emplace_back(UPoly::from_code(base, code));
  }
  std::vector<CurvePoint<RatFunc>> out;
  for (const auto& x : polys) {
    for (const auto& y : polys) {
      auto p = CurvePoint<RatFunc>::affine(x, y);
      if (e.contains(p)) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace theta2
