// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "theta2/census.hpp"
#include "theta2/cli.hpp"
#include "theta2/conics.hpp"
#include "theta2/cubics.hpp"
#include "theta2/hassewitt.hpp"

using namespace theta2;
using GE = GaloisElem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

template <class Gen>
auto random_hesse(Gen&& gen) {
  using E = decltype(gen());
  for (;;) {
    const HesseData<E> h{gen(), gen(), gen(), gen()};
    if (!h.smoothness_value().is_zero()) return HesseCubic<E>(h);
  }
}

ConicCoefficients<GE> conic_from_code(const GaloisField& f, std::uint32_t code) {
  const std::uint32_t mask = f.size() - 1;
  const int k = f.degree();
  auto at = [&](int i) { return f.elem((code >> (i * k)) & mask); };
  return {at(0), at(1), at(2), at(3), at(4), at(5)};
}

template <class E>
bool sdr_ok(const Conic<E>& c, const Point3<E>& P) {
  const auto s = conic_sdr(c, P);
  return s.M.size() == 2 && s.M.is_symmetric() && !s.lambda.is_zero() &&
         det(s.M) == c.form().scaled(s.lambda);
}

Outcome hesse_identity() {
  Outcome o;
  {
    const SymFrac a = SymFrac::var('a'), b = SymFrac::var('b'), c = SymFrac::var('c'),
                  m = SymFrac::var('m');
    const SymFrac r = m.inv() * a * b * c;
    using Q = QuadExt<SymFrac>;
    auto k = [&](const SymFrac& x) { return Q::constant(x, r); };
    const auto M = hesse_matrix(k(a), k(b), k(c), Q::root_of(r));
    const HesseData<Q> h{k(a), k(b), k(c), k(m)};
    o.require(det(M) == h.form().scaled(k(r)), "symbolic identity");
  }
  const auto& f8 = GaloisField::get(3);
  for (int i = 0; i < 100; ++i) {
    const auto h = random_hesse([&] { return support::random_elem(f8); });
    if (h.m().is_zero()) continue;
    const GE r = h.m().inv() * h.a() * h.b() * h.c();
    const auto M = hesse_matrix(h.a(), h.b(), h.c(), r.root());
    o.require(M.is_symmetric() && det(M) == h.form().scaled(r), "GF(8) instance");
  }
  const auto& f2 = GaloisField::get(1);
  for (int i = 0; i < 100; ++i) {
    const auto h = random_hesse([&] { return support::random_nonzero_ratfunc(f2, 2); });
    const RatFunc r = h.m().inv() * h.a() * h.b() * h.c();
    using Q = QuadExt<RatFunc>;
    auto k = [&](const RatFunc& x) { return Q::constant(x, r); };
    const auto M = hesse_matrix(k(h.a()), k(h.b()), k(h.c()), Q::root_of(r));
    const HesseData<Q> hq{k(h.a()), k(h.b()), k(h.c()), k(h.m())};
    o.require(det(M) == hq.form().scaled(k(r)), "F_2(T) instance with formal s");
    if (auto s = r.sqrt()) {
      const auto Mk = hesse_matrix(h.a(), h.b(), h.c(), *s);
      o.require(det(Mk) == h.form().scaled(r), "F_2(T) instance with s in K");
    }
  }
  return o;
}

Outcome fixture_cubic() {
  Outcome o;
  const auto& f2 = GaloisField::get(1);
  const auto one = f2.one(), z = f2.zero();
  using LF = LinearForm<GE>;
  const LF X{{one, z, z}}, Y{{z, one, z}}, Z{{z, z, one}}, N = LF::zero(z);
  const std::vector<std::vector<LF>> rows = {{Y, N, X}, {N, Z, Y}, {X, Y, X + Y + Z}};
  const auto M = LinearPencil<GE>::from_rows(rows);
  o.require(M.is_symmetric(), "matrix is not symmetric");
  const auto F = det(M);
  o.require(F == support::gf_form("X^2*Z + X*Y*Z + Y^3 + Y^2*Z + Y*Z^2"), "determinant");
  o.require(is_smooth(F), "smooth");
  o.require(is_ordinary(F), "ordinary");
  o.require(count_points(F, 1) == 2, "#C(F_2) = 2");
  return o;
}

Outcome conic_constructor() {
  Outcome o;
  int exhaustive = 0;
  const auto& f2 = GaloisField::get(1);
  for (std::uint32_t code = 1; code < 64; ++code) {
    const auto q = conic_from_code(f2, code);
    if (!is_smooth(q)) continue;
    const Conic<GE> c(q);
    const auto P = find_point(c);
    o.require(P.has_value(), "smooth conic over F_2 without a point");
    if (P) o.require(sdr_ok(c, *P), "F_2 conic " + to_string(c.form()));
    ++exhaustive;
  }
  o.require(exhaustive == 28, "expected 28 smooth conic equations over F_2");
  for (int k : {2, 3}) {
    const auto& f = GaloisField::get(k);
    for (int done = 0; done < 34;) {
      const auto q = conic_from_code(f, std::uint32_t(1 + support::below((1u << (6 * k)) - 1)));
      if (!is_smooth(q)) continue;
      const Conic<GE> c(q);
      o.require(sdr_ok(c, *find_point(c)), "GF(2^k) conic " + to_string(c.form()));
      ++done;
    }
  }
  for (int done = 0; done < 34;) {
    const ConicCoefficients<RatFunc> q{
        support::random_ratfunc(f2, 2), support::random_ratfunc(f2, 2),
        support::random_ratfunc(f2, 2), support::random_ratfunc(f2, 2),
        support::random_ratfunc(f2, 2), support::random_ratfunc(f2, 2)};
    if (q.all_zero() || !is_smooth(q)) continue;
    const Conic<RatFunc> c(q);
    const auto res = find_point(c, 2);
    if (res.status != FunctionFieldSearch::Status::Found) continue;
    o.require(sdr_ok(c, *res.point), "F_2(T) conic " + to_string(c.form()));
    ++done;
  }
  return o;
}

Outcome inseparable_identity() {
  Outcome o;
  const auto ctx = symbolic_context();
  const auto q = ConicCoefficients<SymFrac>::from_form(
      parse_form("a*X^2+b*Y^2+c*Z^2+d*X*Y+e*Y*Z+f*X*Z", ctx));
  const auto ip = inseparable_point(q);
  using Q = QuadExt<SymFrac>;
  const SymFrac& r = ip.t;
  auto k = [&](const SymFrac& x) { return Q::constant(x, r); };
  const auto& p = ip.point;
  const Q value = k(q.a) * p[0] * p[0] + k(q.b) * p[1] * p[1] + k(q.c) * p[2] * p[2] +
                  k(q.d) * p[0] * p[1] + k(q.e) * p[1] * p[2] + k(q.f) * p[0] * p[2];
  o.require((k(q.a) * value).is_zero(), "a F(sqrt t, f, d) is not zero");
  // As polynomials: a t = b f^2 + c d^2 + e f d, and the cross terms d f sqrt t
  // and f d sqrt t cancel.
  o.require(q.a * ip.t == q.b * q.f * q.f + q.c * q.d * q.d + q.e * q.f * q.d, "a t");
  o.require((q.d * q.f + q.f * q.d).is_zero(), "cross terms");
  return o;
}

Outcome ordinariness() {
  Outcome o;
  const auto& f2 = GaloisField::get(1);
  const auto mons = monomials_of_degree(3);
  int cubics = 0;
  for (std::uint64_t code = 1; code < 1024; ++code) {
    std::vector<TernaryForm<GE>::Term> t;
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (code >> i & 1) t.emplace_back(mons[i], f2.one());
    }
    const auto F = TernaryForm<GE>::from_terms(3, f2.zero(), t);
    if (!is_smooth(F)) continue;
    ++cubics;
    o.require(is_ordinary(F) == (zeta_p_rank(F) == 1), "cubic " + to_string(F));
  }
  o.require(cubics == 336, "expected 336 smooth cubics over F_2");
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 20}, {2, 20}}) {
    const auto& f = GaloisField::get(k);
    for (int done = 0; done < n;) {
      const auto F = support::random_form(4, [&] { return support::random_elem(f); });
      if (F.is_zero() || !is_smooth(F)) continue;
      const int z = zeta_p_rank(F);
      o.require(is_ordinary(F) == (z == 3), "quartic " + to_string(F));
      o.require(p_rank(hw_matrix(F)) == z, "quartic p-rank " + to_string(F));
      ++done;
    }
  }
  const auto& f16 = GaloisField::get(4);
  for (int i = 0; i < 100; ++i) {
    auto gen = [&] { return support::random_elem(f16); };
    const auto h = i % 4 == 0 ? random_hesse([&, n = 0]() mutable {
      return ++n % 4 == 0 ? f16.zero() : gen();
    })
                              : random_hesse(gen);
    o.require(is_ordinary(h.form()) == !h.m().is_zero(), "Hesse over GF(16)");
  }
  for (int i = 0; i < 100; ++i) {
    const auto h = random_hesse([] { return support::random_ratfunc(GaloisField::get(1), 2); });
    o.require(is_ordinary(h.form()) == !h.m().is_zero(), "Hesse over F_2(T)");
  }
  return o;
}

Outcome uniqueness_census() {
  Outcome o;
  const auto res = sdr_census({3, 1, std::nullopt, 1});
  o.require(res.exhaustive && res.pencils_examined == 262144, "coverage");
  o.require(res.rows.size() == 336, "expected 336 smooth cubics");
  for (const auto& row : res.rows) {
    o.require(row.classes.size() <= 1, "two classes for " + to_string(row.curve));
    o.require((row.classes.size() == 1) == (row.ordinary && row.points % 2 == 0),
              "class existence mismatch for " + to_string(row.curve));
  }
  return o;
}

Outcome two_torsion_doubling() {
  Outcome o;
  for (int i = 0; i < 100; ++i) {
    const auto& f = GaloisField::get(1 + i % 4);
    auto r = [&] { return support::random_elem(f); };
    WeierstrassData<GE> d{support::random_nonzero(f), r(), r(), r(), r()};
    while (d.discriminant().is_zero()) d = {support::random_nonzero(f), r(), r(), r(), r()};
    const auto n = normalize_ordinary(WeierstrassCurve<GE>(d)).curve;
    const auto t = two_torsion(n);
    o.require(t.rational && t.point->x().is_zero() && t.point->y() * t.point->y() == n.a6(),
              "2-torsion point");
    o.require(n.twice(*t.point).is_infinity(), "double is not O");
  }
  return o;
}

Outcome local_global() {
  Outcome o;
  const auto& f2 = GaloisField::get(1);
  const auto places = places_up_to(f2, 3);
  for (int i = 0; i < 500; ++i) {
    auto f = support::random_nonzero_ratfunc(f2, 4);
    if (i % 4 == 0) f = f * f;
    const bool global = is_square_global(f).square;
    for (const auto& v : places) {
      o.require(is_square_local(f, v) == global, "square test at " + v.name());
    }
  }
  for (int i = 0; i < 200; ++i) {
    auto h = random_hesse([&] { return support::random_nonzero_ratfunc(f2, 2); });
    if (i % 4 == 0) {
      // Force m^-1 abc to be a square.
      const auto s = support::random_nonzero_ratfunc(f2, 2);
      const HesseData<RatFunc> d{h.a(), h.b(), h.c(), h.a() * h.b() * h.c() * (s * s).inv()};
      if (!d.smoothness_value().is_zero()) h = HesseCubic<RatFunc>(d);
    }
    const auto rep = hesse_local_global_report(h, 3);
    o.require(rep.consistent && rep.global == rep.all_local && rep.global == rep.any_local,
              "Hesse report");
  }
  return o;
}

Outcome inseparable_verdicts() {
  Outcome o;
  const std::string phrase =
      "no over K and over K^sep; yes over a purely inseparable quadratic extension";
  auto run = [&](const std::vector<std::string>& args, const std::string& golden) {
    ::unsetenv("THETA2_PRECISION");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    o.require(code == 0, "exit code");
    std::ifstream in(std::string(THETA2_GOLDEN_DIR) + "/" + golden);
    std::stringstream buf;
    buf << in.rdbuf();
    o.require(in.good() && out.str() == buf.str(), "golden file " + golden);
    return nlohmann::ordered_json::parse(out.str());
  };
  const auto w = run({"cubic", "weierstrass", "--a6", "T"}, "weierstrass_a6_T.json");
  o.require(w["two_torsion"]["verdict"].get<std::string>().rfind(phrase, 0) == 0,
            "a6 = T verdict");
  const auto h = run({"localglobal", "hesse", "--a", "1", "--b", "1", "--c", "1", "--m", "T"},
                     "localglobal_hesse_T.json");
  o.require(h["sdr"]["radicand"] == "1/T", "radicand");
  o.require(h["sdr"]["verdict"].get<std::string>().rfind(phrase, 0) == 0, "Hesse verdict");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "Hesse determinant identity", 1, hesse_identity},
      {2, "symmetric cubic fixture regression", 1, fixture_cubic},
      {3, "conic 2x2 constructor", 10, conic_constructor},
      {4, "inseparable point identity", 60, inseparable_identity},
      {5, "ordinariness agreement", 600, ordinariness},
      {6, "uniqueness census, cubics over F_2", 600, uniqueness_census},
      {7, "2-torsion doubling", 60, two_torsion_doubling},
      {8, "local-global property", 60, local_global},
      {9, "purely inseparable verdicts", 10, inseparable_verdicts},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s > c.limit_s) {
      o.ok = false;
      o.detail = "over the time limit of " + std::to_string(c.limit_s) + " s";
    }
    failures += !o.ok;
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL",
                c.name.c_str(), s, o.ok ? "" : ": ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
