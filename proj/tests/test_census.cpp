#include <doctest.h>

#include <set>
#include <unordered_set>

#include "support.hpp"
#include "theta2/census.hpp"
#include "theta2/hassewitt.hpp"

using namespace theta2;

namespace {

using GE = GaloisElem;

LinearPencil<GE> ex47() {
  const auto& f2 = GaloisField::get(1);
  const auto o = f2.one(), z = f2.zero();
  using LF = LinearForm<GE>;
  const LF X{{o, z, z}}, Y{{z, o, z}}, Z{{z, z, o}}, N = LF::zero(z);
  return LinearPencil<GE>::from_rows({{Y, N, X}, {N, Z, Y}, {X, Y, X + Y + Z}}, true);
}

/// Orbit by applying every group element and every scalar.
std::set<std::uint64_t> brute_orbit(const SymmetricPencilSpace& space, std::uint64_t code) {
  const auto& f = space.field();
  const auto M = space.decode(code);
  std::set<std::uint64_t> out;
  for (const auto& S : general_linear_group(space.size(), f)) {
    for (std::uint32_t l = 1; l < f.size(); ++l) {
      out.insert(space.encode(apply_equivalence(M, Equivalence<GE>(f.elem(l), S))));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("pencil spaces") {
    const auto& f2 = GaloisField::get(1);
    CHECK(SymmetricPencilSpace(2, f2).count() == 512);
    CHECK(SymmetricPencilSpace(3, f2).count() == 262144);
    CHECK(SymmetricPencilSpace(4, f2).count() == (std::uint64_t(1) << 30));
    CHECK(SymmetricPencilSpace(2, GaloisField::get(2)).count() == (std::uint64_t(1) << 18));
    CHECK_THROWS_AS(SymmetricPencilSpace(5, f2), std::invalid_argument);
    const SymmetricPencilSpace s3(3, f2);
    CHECK(s3.decode(s3.encode(ex47())) == ex47());
    CHECK_THROWS_AS(s3.decode(s3.count()), std::out_of_range);
  }

  TEST_CASE("enumeration is complete and duplicate-free") {
    for (auto [d, k, n] : std::vector<std::tuple<int, int, std::uint64_t>>{
             {2, 1, 512}, {3, 1, 262144}, {2, 2, 262144}}) {
      const auto& f = GaloisField::get(k);
      const SymmetricPencilSpace space(d, f);
      std::unordered_set<std::uint64_t> seen;
      std::uint64_t expect = 0;
      bool in_order = true;
      enumerate_symmetric_pencils(d, f, [&](std::uint64_t code, const LinearPencil<GE>& M) {
        in_order = in_order && code == expect++;
        REQUIRE(M.is_symmetric());
        seen.insert(space.encode(M));
      });
      CHECK(in_order);
      CHECK(seen.size() == n);
    }
    CHECK_THROWS_AS(enumerate_symmetric_pencils(3, GaloisField::get(2), [](auto, const auto&) {}),
                    std::invalid_argument);
  }

  TEST_CASE("general linear groups") {
    CHECK(general_linear_group(2, GaloisField::get(1)).size() == 6);
    CHECK(general_linear_group(3, GaloisField::get(1)).size() == 168);
    CHECK(general_linear_group(2, GaloisField::get(2)).size() == 180);
  }

  TEST_CASE("orbits agree with the full group action") {
    for (auto [d, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
      const SymmetricPencilSpace space(d, GaloisField::get(k));
      for (int i = 0; i < 15; ++i) {
        const std::uint64_t code = support::below(space.count());
        const auto orbit = pencil_orbit(space, code);
        const auto brute = brute_orbit(space, code);
        CHECK(std::set<std::uint64_t>(orbit.begin(), orbit.end()) == brute);
        CHECK(std::is_sorted(orbit.begin(), orbit.end()));
      }
    }
  }

  TEST_CASE("curve codes round trip") {
    const auto& f4 = GaloisField::get(2);
    for (int i = 0; i < 50; ++i) {
      const auto F = support::random_form(3, [&] { return support::random_elem(f4); });
      CHECK(curve_from_code(3, f4, curve_code(F)) == F);
    }
  }

  TEST_CASE("conics: one class per smooth conic over GF(2) and GF(4)") {
    for (auto [k, n] : std::vector<std::pair<int, std::size_t>>{{1, 28}, {2, 1008}}) {
      const auto res = sdr_census({2, k, std::nullopt, 1});
      CHECK(res.exhaustive);
      CHECK(res.rows.size() == n);
      for (const auto& row : res.rows) {
        CHECK(row.classes.size() == 1);
        CHECK(row.ordinary);
        CHECK(row.points == GaloisField::get(k).size() + 1);
      }
    }
  }

  TEST_CASE("cubics over F_2: at most one class, exactly one iff ordinary with #C even") {
    const auto res = sdr_census({3, 1, std::nullopt, 1});
    CHECK(res.pencils_examined == 262144);
    CHECK(res.rows.size() == 336);
    const SymmetricPencilSpace space(3, GaloisField::get(1));
    const auto target = det(ex47()).normalized();
    const auto ex_orbit = pencil_orbit(space, space.encode(ex47()));
    bool found = false;
    int with_class = 0;
    std::uint64_t pencils = 0;
    for (const auto& row : res.rows) {
      REQUIRE(row.classes.size() <= 1);
      CHECK((row.classes.size() == 1) == (row.ordinary && row.points % 2 == 0));
      with_class += int(row.classes.size());
      pencils += row.pencils;
      if (row.curve == target) {
        found = true;
        REQUIRE(row.classes.size() == 1);
        CHECK(row.classes[0] == ex_orbit.front());
      }
    }
    CHECK(found);
    CHECK(with_class == 168);
    CHECK(pencils + res.singular_determinants == res.pencils_examined);
  }

  TEST_CASE("sample mode") {
    const auto res = sdr_census({4, 1, 40, 7});
    CHECK_FALSE(res.exhaustive);
    CHECK(res.pencils_examined == 40);
    for (const auto& row : res.rows) {
      CHECK(row.smooth);
      CHECK(row.classes.size() <= 1);
    }
    const auto again = sdr_census({4, 1, 40, 7});
    CHECK(again.rows.size() == res.rows.size());
    CHECK_THROWS_AS(sdr_census({4, 1, std::nullopt, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sdr_census({3, 2, std::nullopt, 1}), std::invalid_argument);
  }
}
