#pragma once

// Ordinariness of smooth plane curves in characteristic two through the
// Hasse-Witt matrix, with an independent point-counting (zeta function)
// oracle over finite fields.

#include <cstdint>
#include <optional>
#include <vector>

#include "theta2/fields.hpp"
#include "theta2/forms.hpp"

namespace theta2 {

inline int plane_curve_genus(int d) { return d < 3 ? 0 : (d - 1) * (d - 2) / 2; }

/// Rows and columns indexed by (r, s, t), r, s, t >= 1, r + s + t = d, in
/// descending monomial order. Empty (no matrix) in genus zero.
template <FieldElement E>
struct HasseWittMatrix {
  int degree;
  int genus;
  std::vector<Monomial3> index;
  std::optional<Matrix<E>> A;
};

/// Entry ((r,s,t), (r',s',t')) is the coefficient of
/// X^(2r'-r) Y^(2s'-s) Z^(2t'-t) in F (zero if an exponent is negative).
template <FieldElement E>
HasseWittMatrix<E> hw_matrix(const TernaryForm<E>& F) {
  const int d = F.degree();
  HasseWittMatrix<E> hw{d, plane_curve_genus(d), {}, std::nullopt};
  if (hw.genus == 0) return hw;
  for (const auto& m : monomials_of_degree(d)) {
    if (m.x >= 1 && m.y >= 1 && m.z >= 1) hw.index.push_back(m);
  }
  Matrix<E> A(hw.genus, F.zero_elem());
  for (int i = 0; i < hw.genus; ++i) {
    const auto& r = hw.index[i];
    for (int j = 0; j < hw.genus; ++j) {
      const auto& c = hw.index[j];
      const Monomial3 m{2 * c.x - r.x, 2 * c.y - r.y, 2 * c.z - r.z};
      if (m.x >= 0 && m.y >= 0 && m.z >= 0) A(i, j) = F.coefficient(m);
    }
  }
  hw.A = std::move(A);
  return hw;
}

/// Entrywise squaring.
template <FieldElement E>
Matrix<E> frobenius_twist(const Matrix<E>& A) {
  Matrix<E> r = A;
  for (int i = 0; i < A.size(); ++i) {
    for (int j = 0; j < A.size(); ++j) r(i, j) = A(i, j) * A(i, j);
  }
  return r;
}

/// Rank of A * A^s * ... * A^(s^(g-1)), s = entrywise squaring: the matrix
/// of the g-th iterate of v -> A * s(v).
template <FieldElement E>
int p_rank(const HasseWittMatrix<E>& hw) {
  if (hw.genus == 0) return 0;
  Matrix<E> P = *hw.A, twist = *hw.A;
  for (int i = 1; i < hw.genus; ++i) {
    twist = frobenius_twist(twist);
    P = P * twist;
  }
  return P.rank();
}

template <FieldElement E>
bool is_ordinary(const TernaryForm<E>& F) {
  const auto hw = hw_matrix(F);
  return hw.genus == 0 || !hw.A->det().is_zero();
}

/// Geometric smoothness of F = 0 over GF(q): searches for a common zero of
/// F and its partials over GF(q^e) for d(d-1)/4 < e <= d(d-1)/2, which
/// contains every possible singular point of a reduced curve. Throws
/// std::invalid_argument when the search would exceed GF(2^16) or the
/// size guard. Curves of degree <= 1 are smooth unless F = 0.
bool is_smooth(const TernaryForm<GaloisElem>& F);

/// Number of points of F = 0 in P^2(GF(q^e)).
std::uint64_t count_points(const TernaryForm<GaloisElem>& F, int e);

/// Coefficients c_0..c_2g of the L-polynomial of the smooth curve F = 0,
/// from point counts over GF(q^i), i = 1..g, and the functional equation.
std::vector<std::int64_t> l_polynomial(const TernaryForm<GaloisElem>& F);

/// Largest i with c_i odd: the p-rank read off the L-polynomial.
int zeta_p_rank(const TernaryForm<GaloisElem>& F);

}  // namespace theta2
