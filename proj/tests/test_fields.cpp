#include <doctest.h>

#include <set>

#include "support.hpp"
#include "theta2/fields.hpp"

using namespace theta2;

TEST_SUITE("fields") {
  TEST_CASE("moduli are the least irreducible polynomial of each degree") {
    for (int k = 2; k <= GaloisField::kMaxDegree; ++k) {
      const std::uint64_t m = GaloisField::kModuli[k];
      CHECK(gf2poly::degree(m) == k);
      CHECK(support::naive_irreducible(m));
      // Nothing smaller of the same degree is irreducible.
      for (std::uint64_t p = std::uint64_t(1) << k; p < m; ++p) {
        CHECK_FALSE(support::naive_irreducible(p));
      }
    }
    CHECK(GaloisField::get(2).modulus() == 0x7);  // x^2+x+1
    CHECK(GaloisField::get(3).modulus() == 0xb);  // x^3+x+1
  }

  TEST_CASE("degree range is enforced") {
    CHECK_THROWS_AS(GaloisField::get(0), std::out_of_range);
    CHECK_THROWS_AS(GaloisField::get(17), std::out_of_range);
    CHECK(&GaloisField::get(5) == &GaloisField::get(5));
  }

  TEST_CASE("small examples") {
    const auto& f4 = GaloisField::get(2);
    const auto g = f4.gen();
    CHECK(g * g == g + f4.one());
    CHECK(g * (g * g) == f4.one());
    const auto& f2 = GaloisField::get(1);
    CHECK((f2.one() + f2.one()).is_zero());
    CHECK(f4.zero().root().is_zero());
    CHECK(f4.one().root() == f4.one());
    CHECK(g.root() == g * g);
    CHECK(to_string(g * g) == "g+1");
  }

  TEST_CASE("multiplication agrees with schoolbook reduction") {
    for (int k = 1; k <= 6; ++k) {
      const auto& f = GaloisField::get(k);
      for (std::uint32_t a = 0; a < f.size(); ++a) {
        for (std::uint32_t b = 0; b < f.size(); ++b) {
          REQUIRE(f.mul(a, b) == support::naive_mul(a, b, f.modulus(), k));
        }
      }
    }
    for (int k = 7; k <= 16; ++k) {
      const auto& f = GaloisField::get(k);
      for (int i = 0; i < 2000; ++i) {
        const auto a = std::uint32_t(support::below(f.size()));
        const auto b = std::uint32_t(support::below(f.size()));
        REQUIRE(f.mul(a, b) == support::naive_mul(a, b, f.modulus(), k));
      }
    }
  }

  TEST_CASE("field axioms, Frobenius and inverses, exhaustive for k <= 4") {
    for (int k = 1; k <= 4; ++k) {
      const auto& f = GaloisField::get(k);
      const auto el = f.elements();
      for (const auto& a : el) {
        CHECK((a + a).is_zero());
        CHECK(a.root() * a.root() == a);
        CHECK((a * a).root() == a);
        if (!a.is_zero()) {
          CHECK(a * a.inv() == f.one());
          CHECK(pow(a, f.size() - 1) == f.one());
        }
        for (const auto& b : el) {
          CHECK((a + b) * (a + b) == a * a + b * b);
          CHECK(a * b == b * a);
        }
      }
    }
    CHECK_THROWS_AS(GaloisField::get(3).zero().inv(), MathError);
  }

  TEST_CASE("square roots in larger fields") {
    for (int k = 5; k <= 16; ++k) {
      const auto& f = GaloisField::get(k);
      for (int i = 0; i < 200; ++i) {
        const auto a = support::random_elem(f);
        CHECK(a.root() * a.root() == a);
        CHECK(a.root() == pow(a, std::uint64_t(1) << (k - 1)));
      }
    }
  }

  TEST_CASE("enumeration") {
    CHECK(GaloisField::get(1).elements().size() == 2);
    const auto e4 = GaloisField::get(2).elements();
    CHECK(std::set<std::uint32_t>{e4[0].bits(), e4[1].bits(), e4[2].bits(), e4[3].bits()}.size() ==
          4);
    const auto& f8 = GaloisField::get(3);
    GaloisElem sum = f8.zero();
    for (const auto& a : f8.elements()) sum = sum + a;
    CHECK(sum.is_zero());
  }

  TEST_CASE("mixing fields is rejected") {
    CHECK_THROWS_AS(GaloisField::get(2).one() + GaloisField::get(3).one(), MathError);
  }

  TEST_CASE("embeddings are ring homomorphisms") {
    for (auto [k, K] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 6}, {3, 6}, {4, 12}}) {
      const FieldEmbedding emb(GaloisField::get(k), GaloisField::get(K));
      for (int i = 0; i < 100; ++i) {
        const auto a = support::random_elem(GaloisField::get(k));
        const auto b = support::random_elem(GaloisField::get(k));
        CHECK(emb(a * b) == emb(a) * emb(b));
        CHECK(emb(a + b) == emb(a) + emb(b));
      }
    }
    CHECK_THROWS_AS(FieldEmbedding(GaloisField::get(2), GaloisField::get(3)), MathError);
  }
}
