#include <doctest.h>

#include "support.hpp"
#include "theta2/cubics.hpp"
#include "theta2/hassewitt.hpp"

using namespace theta2;
using support::gf_form;

namespace {

using GE = GaloisElem;
using Form = TernaryForm<GE>;

Form random_smooth(int d, const GaloisField& f) {
  for (;;) {
    const auto F = support::random_form(d, [&] { return support::random_elem(f); });
    if (!F.is_zero() && is_smooth(F)) return F;
  }
}

Matrix<GE> random_invertible(const GaloisField& f) {
  for (;;) {
    Matrix<GE> m(3, f.zero());
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m(i, j) = support::random_elem(f);
    }
    if (!m.det().is_zero()) return m;
  }
}

/// Smoothness by brute force: no singular point over GF(q^e), e = 1..N.
bool brute_smooth(const Form& F) {
  const int d = F.degree();
  const int k = F.zero_elem().field().degree();
  for (int e = 1; e <= d * (d - 1) / 2; ++e) {
    if (!support::singular_points(F, GaloisField::get(k * e)).empty()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("hassewitt") {
  TEST_CASE("genus and index set") {
    CHECK(plane_curve_genus(1) == 0);
    CHECK(plane_curve_genus(2) == 0);
    CHECK(plane_curve_genus(3) == 1);
    CHECK(plane_curve_genus(4) == 3);
    CHECK(plane_curve_genus(5) == 6);
    const auto hw = hw_matrix(gf_form("X^4+Y^4+Z^4+X*Y*Z^2"));
    CHECK(hw.genus == 3);
    REQUIRE(hw.index.size() == 3);
    CHECK(to_string(hw.index[0]) == "X^2*Y*Z");
    const auto conic = hw_matrix(gf_form("X*Z+Y^2"));
    CHECK(conic.genus == 0);
    CHECK_FALSE(conic.A);
    CHECK(p_rank(conic) == 0);
    CHECK(is_ordinary(gf_form("X*Z+Y^2")));
  }

  TEST_CASE("cubic examples") {
    const auto ord = hw_matrix(gf_form("Y^2*Z+X*Y*Z+X^3+Z^3"));
    CHECK((*ord.A)(0, 0).is_one());
    CHECK(p_rank(ord) == 1);
    const auto ss = hw_matrix(gf_form("Y^2*Z+Y*Z^2+X^3"));
    CHECK((*ss.A)(0, 0).is_zero());
    CHECK(p_rank(ss) == 0);
    // The 1x1 matrix of a Hesse cubic is m.
    const auto ctx = symbolic_context();
    const auto h = hw_matrix(parse_form("a*X^3+b*Y^3+c*Z^3+m*X*Y*Z", ctx));
    CHECK((*h.A)(0, 0) == SymFrac::var('m'));
    // Fermat cubic over F_2 (Hesse with m = 0).
    CHECK(p_rank(hw_matrix(gf_form("X^3+Y^3+Z^3"))) == 0);
    CHECK(zeta_p_rank(gf_form("X^3+Y^3+Z^3")) == 0);
  }

  TEST_CASE("zeta examples") {
    const auto e1 = gf_form("Y^2*Z+X*Y*Z+X^3+Z^3");
    CHECK(count_points(e1, 1) == 4);
    CHECK(l_polynomial(e1) == std::vector<std::int64_t>{1, 1, 2});
    CHECK(zeta_p_rank(e1) == 1);
    const auto e2 = gf_form("Y^2*Z+Y*Z^2+X^3");
    CHECK(count_points(e2, 1) == 3);
    CHECK(l_polynomial(e2) == std::vector<std::int64_t>{1, 0, 2});
    CHECK(zeta_p_rank(e2) == 0);
    const auto c47 = gf_form("X^2*Z+X*Y*Z+Y^3+Y^2*Z+Y*Z^2");
    CHECK(count_points(c47, 1) == 2);
    CHECK(zeta_p_rank(c47) == 1);
    CHECK(is_ordinary(c47));
    // Klein quartic over F_2: L(t) = 1 + 5t^3 + 8t^6 ... only checks shape.
    const auto klein = gf_form("X^3*Y+Y^3*Z+Z^3*X");
    REQUIRE(is_smooth(klein));
    const auto L = l_polynomial(klein);
    REQUIRE(L.size() == 7);
    CHECK(L[6] == 8);
  }

  TEST_CASE("point counts match direct evaluation") {
    for (int k : {1, 2}) {
      const auto& f = GaloisField::get(k);
      for (int trial = 0; trial < 10; ++trial) {
        const auto F = support::random_form(3 + int(support::below(2)),
                                            [&] { return support::random_elem(f); });
        if (F.is_zero()) continue;
        for (int e = 1; e <= 3; ++e) {
          CHECK(count_points(F, e) == support::naive_count(F, GaloisField::get(k * e)));
        }
      }
    }
  }

  TEST_CASE("smoothness matches a brute-force search") {
    const auto& f2 = GaloisField::get(1);
    for (std::uint64_t code = 1; code < 1024; ++code) {
      std::vector<Form::Term> t;
      const auto mons = monomials_of_degree(3);
      for (std::size_t i = 0; i < mons.size(); ++i) {
        if (code >> i & 1) t.emplace_back(mons[i], f2.one());
      }
      const auto F = Form::from_terms(3, f2.zero(), t);
      REQUIRE(is_smooth(F) == brute_smooth(F));
    }
    for (int trial = 0; trial < 20; ++trial) {
      const auto F = support::random_form(4, [] { return support::random_elem(GaloisField::get(1)); });
      if (F.is_zero()) continue;
      CHECK(is_smooth(F) == brute_smooth(F));
    }
    CHECK_THROWS_AS(is_smooth(Form(3, f2.zero())), MathError);
  }

  TEST_CASE("every smooth cubic over F_2: Hasse-Witt, trace parity and zeta agree") {
    const auto& f2 = GaloisField::get(1);
    const auto mons = monomials_of_degree(3);
    int smooth = 0, ordinary = 0;
    for (std::uint64_t code = 1; code < 1024; ++code) {
      std::vector<Form::Term> t;
      for (std::size_t i = 0; i < mons.size(); ++i) {
        if (code >> i & 1) t.emplace_back(mons[i], f2.one());
      }
      const auto F = Form::from_terms(3, f2.zero(), t);
      if (!is_smooth(F)) continue;
      ++smooth;
      const bool hw = is_ordinary(F);
      const std::int64_t trace = 3 - std::int64_t(count_points(F, 1));
      REQUIRE(hw == (trace % 2 != 0));
      REQUIRE(hw == (zeta_p_rank(F) == 1));
      REQUIRE(p_rank(hw_matrix(F)) == zeta_p_rank(F));
      ordinary += hw;
    }
    CHECK(smooth == 336);
    CHECK(ordinary == 168);
  }

  TEST_CASE("random smooth quartics: p-rank equals the zeta p-rank") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 25}, {2, 8}}) {
      const auto& f = GaloisField::get(k);
      for (int i = 0; i < n; ++i) {
        const auto F = random_smooth(4, f);
        const auto hw = hw_matrix(F);
        const int r = p_rank(hw);
        CHECK(r >= 0);
        CHECK(r <= 3);
        CHECK(r == zeta_p_rank(F));
        CHECK(is_ordinary(F) == (r == 3));
      }
    }
  }

  TEST_CASE("ordinariness is invariant under linear substitution") {
    for (int k : {1, 2}) {
      const auto& f = GaloisField::get(k);
      for (int i = 0; i < 20; ++i) {
        const auto F = random_smooth(3 + i % 2, f);
        const auto A = random_invertible(f);
        const auto G = substitute(F, A);
        CHECK(is_ordinary(F) == is_ordinary(G));
        CHECK(p_rank(hw_matrix(F)) == p_rank(hw_matrix(G)));
      }
    }
  }

  TEST_CASE("Hesse bridge") {
    for (int k : {2, 3, 4}) {
      const auto& f = GaloisField::get(k);
      int done = 0;
      while (done < 30) {
        const HesseData<GE> h{support::random_elem(f), support::random_elem(f),
                              support::random_elem(f), done % 5 == 0 ? f.zero() : support::random_elem(f)};
        if (h.smoothness_value().is_zero()) continue;
        const HesseCubic<GE> H(h);
        const bool ord = is_ordinary(H.form());
        CHECK(ord == !h.m.is_zero());
        CHECK(ord == !hesse_jacobian(H).j_invariant().is_zero());
        if (k <= 3) CHECK(ord == (zeta_p_rank(H.form()) == 1));
        ++done;
      }
    }
  }

  TEST_CASE("size guards") {
    const auto F = support::random_form(3, [] { return support::random_elem(GaloisField::get(8)); });
    CHECK_THROWS_AS(count_points(F, 3), std::invalid_argument);
  }
}
