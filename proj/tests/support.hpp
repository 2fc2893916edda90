#pragma once

// Random instances and independent brute-force oracles shared by the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "theta2/fields.hpp"
#include "theta2/forms.hpp"
#include "theta2/funcfield.hpp"
#include "theta2/parse.hpp"

namespace support {

using namespace theta2;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20261019);
  return r;
}

inline TernaryForm<GaloisElem> gf_form(std::string_view text, int k = 1) {
  return parse_form(text, galois_context(GaloisField::get(k)));
}

inline TernaryForm<RatFunc> rf_form(std::string_view text, int k = 1) {
  return parse_form(text, ratfunc_context(GaloisField::get(k)));
}

inline RatFunc rf(std::string_view text, int k = 1) {
  return parse_scalar(text, ratfunc_context(GaloisField::get(k)));
}

inline GaloisElem gf(std::string_view text, int k) {
  return parse_scalar(text, galois_context(GaloisField::get(k)));
}

inline std::uint64_t below(std::uint64_t n) { return rng()() % n; }

inline GaloisElem random_elem(const GaloisField& f) {
  return f.elem(std::uint32_t(below(f.size())));
}

inline GaloisElem random_nonzero(const GaloisField& f) {
  return f.elem(std::uint32_t(1 + below(f.size() - 1)));
}

inline UPoly random_poly(const GaloisField& f, int max_degree) {
  std::vector<std::uint32_t> c(std::size_t(max_degree + 1));
  for (auto& x : c) x = std::uint32_t(below(f.size()));
  return UPoly(f, c);
}

inline RatFunc random_ratfunc(const GaloisField& f, int max_degree, bool nonzero = false) {
  for (;;) {
    UPoly n = random_poly(f, max_degree), d = random_poly(f, max_degree);
    if (d.is_zero() || (nonzero && n.is_zero())) continue;
    return RatFunc(n, d);
  }
}

inline RatFunc random_nonzero_ratfunc(const GaloisField& f, int max_degree) {
  return random_ratfunc(f, max_degree, true);
}

template <class Gen>
auto random_form(int d, Gen&& gen) {
  using E = decltype(gen());
  const auto mons = monomials_of_degree(d);
  std::vector<typename TernaryForm<E>::Term> t;
  E z = gen().zero();
  for (const auto& m : mons) t.emplace_back(m, gen());
  return TernaryForm<E>::from_terms(d, z, std::move(t));
}

/// Product of bit-vector polynomials by schoolbook shifts, reduced by
/// repeated subtraction: independent of the table arithmetic.
inline std::uint32_t naive_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int k) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i) {
    if (b >> i & 1) prod ^= std::uint64_t(a) << i;
  }
  if (k == 1) return std::uint32_t(prod & 1);
  for (int i = 63; i >= k; --i) {
    if (prod >> i & 1) prod ^= std::uint64_t(modulus) << (i - k);
  }
  return std::uint32_t(prod);
}

/// True when p has no factor among all polynomials of degree 1..deg/2,
/// by dividing through every candidate.
inline bool naive_irreducible(std::uint64_t p) {
  const int d = 63 - __builtin_clzll(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; q < (std::uint64_t(1) << (d / 2 + 1)); ++q) {
    std::uint64_t r = p;
    const int dq = 63 - __builtin_clzll(q);
    while (r && 63 - __builtin_clzll(r) >= dq) r ^= q << (63 - __builtin_clzll(r) - dq);
    if (r == 0) return false;
  }
  return true;
}

/// Points of P^2(GF(q^e)) on F = 0 where all partials vanish too, by
/// direct evaluation of the forms.
inline std::vector<std::array<GaloisElem, 3>> singular_points(const TernaryForm<GaloisElem>& F,
                                                              const GaloisField& L) {
  const FieldEmbedding emb(F.zero_elem().field(), L);
  std::vector<TernaryForm<GaloisElem>::Term> lifted;
  for (const auto& [m, c] : F.terms()) lifted.emplace_back(m, emb(c));
  const auto G = TernaryForm<GaloisElem>::from_terms(F.degree(), L.zero(), lifted);
  const auto P = partials(G);
  std::vector<std::array<GaloisElem, 3>> out;
  auto check = [&](const GaloisElem& x, const GaloisElem& y, const GaloisElem& z) {
    if (G.evaluate(x, y, z).is_zero() && P[0].evaluate(x, y, z).is_zero() &&
        P[1].evaluate(x, y, z).is_zero() && P[2].evaluate(x, y, z).is_zero()) {
      out.push_back({x, y, z});
    }
  };
  for (const auto& y : L.elements()) {
    for (const auto& z : L.elements()) check(L.one(), y, z);
  }
  for (const auto& z : L.elements()) check(L.zero(), L.one(), z);
  check(L.zero(), L.zero(), L.one());
  return out;
}

/// #C(GF(q^e)) by evaluating the form at every projective point.
inline std::uint64_t naive_count(const TernaryForm<GaloisElem>& F, const GaloisField& L) {
  const FieldEmbedding emb(F.zero_elem().field(), L);
  std::vector<TernaryForm<GaloisElem>::Term> lifted;
  for (const auto& [m, c] : F.terms()) lifted.emplace_back(m, emb(c));
  const auto G = TernaryForm<GaloisElem>::from_terms(F.degree(), L.zero(), lifted);
  std::uint64_t n = 0;
  for (const auto& y : L.elements()) {
    for (const auto& z : L.elements()) n += G.evaluate(L.one(), y, z).is_zero();
  }
  for (const auto& z : L.elements()) n += G.evaluate(L.zero(), L.one(), z).is_zero();
  n += G.evaluate(L.zero(), L.zero(), L.one()).is_zero();
  return n;
}

}  // namespace support
