#pragma once

// Homogeneous polynomials in X, Y, Z over an abstract coefficient field,
// matrices of linear forms, and their exact determinants.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "theta2/fields.hpp"

namespace theta2 {

/// X^x Y^y Z^z. Ordered graded-lexicographically with X > Y > Z.
struct Monomial3 {
  int x = 0, y = 0, z = 0;

  int degree() const { return x + y + z; }
  Monomial3 operator*(const Monomial3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  bool operator==(const Monomial3&) const = default;
  std::strong_ordering operator<=>(const Monomial3& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    if (auto c = x <=> o.x; c != 0) return c;
    return y <=> o.y;
  }
};

std::string to_string(const Monomial3& m);

/// All monomials of degree d, descending (X^d first).
std::vector<Monomial3> monomials_of_degree(int d);

/// A form of fixed degree; only nonzero coefficients are stored, sorted in
/// descending monomial order.
template <FieldElement E>
class TernaryForm {
 public:
  using Term = std::pair<Monomial3, E>;

  /// The zero form of degree d over the field of `zero`.
  TernaryForm(int degree, E zero) : degree_(degree), zero_(std::move(zero)) {
    if (degree < 0) throw std::invalid_argument("TernaryForm: negative degree");
  }

  static TernaryForm monomial(const E& c, Monomial3 m) {
    TernaryForm f(m.degree(), c.zero());
    if (!c.is_zero()) f.terms_.emplace_back(m, c);
    return f;
  }
  static TernaryForm constant(const E& c) { return monomial(c, {}); }
  static TernaryForm X(const E& one) { return monomial(one, {1, 0, 0}); }
  static TernaryForm Y(const E& one) { return monomial(one, {0, 1, 0}); }
  static TernaryForm Z(const E& one) { return monomial(one, {0, 0, 1}); }

  /// Builds from arbitrary (monomial, coefficient) pairs; duplicates are
  /// summed. Every monomial must have degree `degree`.
  static TernaryForm from_terms(int degree, const E& zero, std::vector<Term> terms) {
    TernaryForm f(degree, zero);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    for (auto& [m, c] : terms) {
      if (m.degree() != degree) throw std::invalid_argument("TernaryForm: inhomogeneous term");
      if (!f.terms_.empty() && f.terms_.back().first == m) {
        f.terms_.back().second = f.terms_.back().second + c;
        if (f.terms_.back().second.is_zero()) f.terms_.pop_back();
      } else if (!c.is_zero()) {
        f.terms_.emplace_back(m, std::move(c));
      }
    }
    return f;
  }

  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const E& zero_elem() const { return zero_; }
  E one_elem() const { return zero_.one(); }

  E coefficient(const Monomial3& m) const {
    for (const auto& [mm, c] : terms_) {
      if (mm == m) return c;
    }
    return zero_;
  }

  TernaryForm operator+(const TernaryForm& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("TernaryForm: degree mismatch in sum");
    TernaryForm r(degree_, zero_);
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first > b->first)) {
        r.terms_.push_back(*a++);
      } else if (a == terms_.end() || b->first > a->first) {
        r.terms_.push_back(*b++);
      } else {
        E c = a->second + b->second;
        if (!c.is_zero()) r.terms_.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    return r;
  }
  TernaryForm operator-(const TernaryForm& o) const { return *this + o; }

  TernaryForm operator*(const TernaryForm& o) const {
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) prod.emplace_back(ma * mb, ca * cb);
    }
    return from_terms(degree_ + o.degree_, zero_, std::move(prod));
  }

  TernaryForm scaled(const E& c) const {
    TernaryForm r(degree_, zero_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, a] : terms_) {
      E p = a * c;
      if (!p.is_zero()) r.terms_.emplace_back(m, std::move(p));
    }
    return r;
  }

  E evaluate(const E& x, const E& y, const E& z) const {
    // Power tables up to the degree keep this linear in the term count.
    std::vector<E> px{x.one()}, py{x.one()}, pz{x.one()};
    for (int i = 1; i <= degree_; ++i) {
      px.push_back(px.back() * x);
      py.push_back(py.back() * y);
      pz.push_back(pz.back() * z);
    }
    E acc = zero_;
    for (const auto& [m, c] : terms_) acc = acc + c * px[m.x] * py[m.y] * pz[m.z];
    return acc;
  }

  /// Leading coefficient in the monomial order (zero for the zero form).
  E leading_coefficient() const { return terms_.empty() ? zero_ : terms_.front().second; }

  /// Scalar multiple with leading coefficient 1.
  TernaryForm normalized() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.front().second.inv());
  }

  bool operator==(const TernaryForm& o) const {
    if (degree_ != o.degree_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].first == o.terms_[i].first) || !(terms_[i].second == o.terms_[i].second)) {
        return false;
      }
    }
    return true;
  }

 private:
  int degree_;
  E zero_;
  std::vector<Term> terms_;
};

namespace detail {
inline bool needs_parens(const std::string& s) {
  return s.find_first_of("+/ ") != std::string::npos;
}
}  // namespace detail

/// Canonical text: descending grlex, '+' separated, coefficient 1 omitted,
/// e.g. "X^2*Z+X*Y*Z+(g+1)*Y^3".
template <FieldElement E>
std::string to_string(const TernaryForm<E>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += "+";
    const std::string mono = to_string(m);
    if (c == c.one()) {
      out += mono.empty() ? "1" : mono;
      continue;
    }
    std::string cs = to_string(c);
    if (mono.empty()) {
      out += detail::needs_parens(cs) ? "(" + cs + ")" : cs;
    } else {
      out += (detail::needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

/// Formal partial derivatives (d/dX, d/dY, d/dZ); multipliers reduced mod 2.
template <FieldElement E>
std::array<TernaryForm<E>, 3> partials(const TernaryForm<E>& f) {
  const int d = std::max(f.degree() - 1, 0);
  std::array<std::vector<typename TernaryForm<E>::Term>, 3> parts;
  for (const auto& [m, c] : f.terms()) {
    if (m.x % 2) parts[0].emplace_back(Monomial3{m.x - 1, m.y, m.z}, c);
    if (m.y % 2) parts[1].emplace_back(Monomial3{m.x, m.y - 1, m.z}, c);
    if (m.z % 2) parts[2].emplace_back(Monomial3{m.x, m.y, m.z - 1}, c);
  }
  const E& z = f.zero_elem();
  return {TernaryForm<E>::from_terms(d, z, std::move(parts[0])),
          TernaryForm<E>::from_terms(d, z, std::move(parts[1])),
          TernaryForm<E>::from_terms(d, z, std::move(parts[2]))};
}

/// Dense square matrix over a field.
template <FieldElement E>
class Matrix {
 public:
  Matrix(int n, const E& zero) : n_(n), a_(std::size_t(n) * n, zero) {}

  static Matrix identity(int n, const E& zero) {
    Matrix m(n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = zero.one();
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<E>>& rows) {
    Matrix m(int(rows.size()), rows.at(0).at(0).zero());
    for (int i = 0; i < m.n_; ++i) {
      if (int(rows[i].size()) != m.n_) throw std::invalid_argument("Matrix: ragged rows");
      for (int j = 0; j < m.n_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int size() const { return n_; }
  E& operator()(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
  const E& operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }

  Matrix operator*(const Matrix& o) const {
    Matrix r(n_, a_[0].zero());
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        E acc = a_[0].zero();
        for (int k = 0; k < n_; ++k) acc = acc + (*this)(i, k) * o(k, j);
        r(i, j) = acc;
      }
    }
    return r;
  }

  Matrix transpose() const {
    Matrix r(n_, a_[0].zero());
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  /// Gaussian elimination.
  E det() const {
    Matrix m = *this;
    E d = a_[0].one();
    for (int c = 0; c < n_; ++c) {
      int p = c;
      while (p < n_ && m(p, c).is_zero()) ++p;
      if (p == n_) return a_[0].zero();
      if (p != c) {
        for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(c, j));
      }
      d = d * m(c, c);
      const E iv = m(c, c).inv();
      for (int r = c + 1; r < n_; ++r) {
        if (m(r, c).is_zero()) continue;
        const E f = m(r, c) * iv;
        for (int j = c; j < n_; ++j) m(r, j) = m(r, j) + f * m(c, j);
      }
    }
    return d;
  }

  /// Gauss-Jordan; throws MathError when singular.
  Matrix inverse() const {
    Matrix m = *this, r = identity(n_, a_[0].zero());
    for (int c = 0; c < n_; ++c) {
      int p = c;
      while (p < n_ && m(p, c).is_zero()) ++p;
      if (p == n_) throw MathError("Matrix: singular");
      if (p != c) {
        for (int j = 0; j < n_; ++j) {
          std::swap(m(p, j), m(c, j));
          std::swap(r(p, j), r(c, j));
        }
      }
      const E iv = m(c, c).inv();
      for (int j = 0; j < n_; ++j) {
        m(c, j) = m(c, j) * iv;
        r(c, j) = r(c, j) * iv;
      }
      for (int i = 0; i < n_; ++i) {
        if (i == c || m(i, c).is_zero()) continue;
        const E f = m(i, c);
        for (int j = 0; j < n_; ++j) {
          m(i, j) = m(i, j) + f * m(c, j);
          r(i, j) = r(i, j) + f * r(c, j);
        }
      }
    }
    return r;
  }

  /// Number of linearly independent rows.
  int rank() const {
    Matrix m = *this;
    int rank = 0;
    for (int c = 0; c < n_ && rank < n_; ++c) {
      int p = rank;
      while (p < n_ && m(p, c).is_zero()) ++p;
      if (p == n_) continue;
      for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(rank, j));
      const E iv = m(rank, c).inv();
      for (int i = rank + 1; i < n_; ++i) {
        if (m(i, c).is_zero()) continue;
        const E f = m(i, c) * iv;
        for (int j = c; j < n_; ++j) m(i, j) = m(i, j) + f * m(rank, j);
      }
      ++rank;
    }
    return rank;
  }

  bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_;
  std::vector<E> a_;
};

/// pX + qY + rZ.
template <FieldElement E>
struct LinearForm {
  std::array<E, 3> c;

  static LinearForm zero(const E& z) { return {{z, z, z}}; }

  LinearForm operator+(const LinearForm& o) const {
    return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}};
  }
  LinearForm scaled(const E& s) const { return {{c[0] * s, c[1] * s, c[2] * s}}; }
  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
  bool operator==(const LinearForm& o) const {
    return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2];
  }

  TernaryForm<E> to_form() const {
    using TF = TernaryForm<E>;
    return TF::from_terms(1, c[0].zero(),
                          {{Monomial3{1, 0, 0}, c[0]}, {Monomial3{0, 1, 0}, c[1]},
                           {Monomial3{0, 0, 1}, c[2]}});
  }
};

template <FieldElement E>
std::string to_string(const LinearForm<E>& l) {
  return to_string(l.to_form());
}

/// d x d matrix of linear forms. The symmetric flag, when set, is an
/// invariant checked at construction.
template <FieldElement E>
class LinearPencil {
 public:
  LinearPencil(int n, std::vector<LinearForm<E>> entries, bool symmetric = false)
      : n_(n), entries_(std::move(entries)), symmetric_(symmetric) {
    if (n < 1 || entries_.size() != std::size_t(n) * n) {
      throw std::invalid_argument("LinearPencil: entry count does not match size");
    }
    if (symmetric_ && !is_symmetric()) {
      throw std::invalid_argument("LinearPencil: flagged symmetric but entries differ");
    }
  }

  static LinearPencil from_rows(const std::vector<std::vector<LinearForm<E>>>& rows,
                                bool symmetric = false) {
    std::vector<LinearForm<E>> e;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw std::invalid_argument("LinearPencil: ragged rows");
      e.insert(e.end(), r.begin(), r.end());
    }
    return LinearPencil(int(rows.size()), std::move(e), symmetric);
  }

  int size() const { return n_; }
  bool symmetric() const { return symmetric_; }
  const LinearForm<E>& operator()(int i, int j) const { return entries_[std::size_t(i) * n_ + j]; }
  const std::vector<LinearForm<E>>& entries() const { return entries_; }
  E zero_elem() const { return entries_[0].c[0].zero(); }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (!((*this)(i, j) == (*this)(j, i))) return false;
      }
    }
    return true;
  }

  bool operator==(const LinearPencil& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }

 private:
  int n_;
  std::vector<LinearForm<E>> entries_;
  bool symmetric_;
};

/// Exact determinant by Laplace expansion along rows, memoized over the
/// set of remaining columns.
template <FieldElement E>
TernaryForm<E> det(const LinearPencil<E>& m) {
  const int n = m.size();
  if (n > 16) throw std::invalid_argument("det: pencil too large");
  const E z = m.zero_elem();
  std::vector<TernaryForm<E>> entry;
  entry.reserve(std::size_t(n) * n);
  for (const auto& l : m.entries()) entry.push_back(l.to_form());

  // memo[mask] = minor on the last popcount(mask) rows and columns in mask.
  std::map<std::uint32_t, TernaryForm<E>> memo;
  auto minor = [&](auto&& self, std::uint32_t mask) -> TernaryForm<E> {
    const int k = __builtin_popcount(mask);
    if (k == 0) return TernaryForm<E>::constant(z.one());
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int row = n - k;
    TernaryForm<E> acc(k, z);
    for (int col = 0; col < n; ++col) {
      if (!(mask >> col & 1)) continue;
      const auto& e = entry[std::size_t(row) * n + col];
      if (e.is_zero()) continue;
      // Signs vanish in characteristic two.
      acc = acc + e * self(self, mask & ~(1u << col));
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor(minor, (1u << n) - 1);
}

/// lambda * tS * M * S with the invertibility of S and lambda enforced.
template <FieldElement E>
struct Equivalence {
  E lambda;
  Matrix<E> S;

  Equivalence(E l, Matrix<E> s) : lambda(std::move(l)), S(std::move(s)) {
    if (lambda.is_zero()) throw MathError("Equivalence: lambda must be nonzero");
    if (S.det().is_zero()) throw MathError("Equivalence: S is singular");
  }

  /// The equivalence undoing this one.
  Equivalence inverse() const { return {lambda.inv(), S.inverse()}; }
};

template <FieldElement E>
LinearPencil<E> apply_equivalence(const LinearPencil<E>& m, const Equivalence<E>& e) {
  const int n = m.size();
  if (e.S.size() != n) throw std::invalid_argument("apply_equivalence: size mismatch");
  const E z = m.zero_elem();
  // (tS M S)_{ij} = sum_{k,l} S_{ki} M_{kl} S_{lj}
  std::vector<LinearForm<E>> ms(std::size_t(n) * n, LinearForm<E>::zero(z));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      auto acc = LinearForm<E>::zero(z);
      for (int l = 0; l < n; ++l) {
        if (!e.S(l, j).is_zero()) acc = acc + m(k, l).scaled(e.S(l, j));
      }
      ms[std::size_t(k) * n + j] = acc;
    }
  }
  std::vector<LinearForm<E>> out(std::size_t(n) * n, LinearForm<E>::zero(z));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto acc = LinearForm<E>::zero(z);
      for (int k = 0; k < n; ++k) {
        if (!e.S(k, i).is_zero()) acc = acc + ms[std::size_t(k) * n + j].scaled(e.S(k, i));
      }
      out[std::size_t(i) * n + j] = acc.scaled(e.lambda);
    }
  }
  return LinearPencil<E>(n, std::move(out), m.symmetric());
}

/// F(A * (X, Y, Z)^t); a right action: substitute(substitute(F, A), B) ==
/// substitute(F, A * B).
template <FieldElement E>
TernaryForm<E> substitute(const TernaryForm<E>& f, const Matrix<E>& a) {
  if (a.size() != 3) throw std::invalid_argument("substitute: matrix must be 3x3");
  if (a.det().is_zero()) throw MathError("substitute: singular change of variables");
  const E& z = f.zero_elem();
  using TF = TernaryForm<E>;
  std::array<std::vector<TF>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    TF lin = LinearForm<E>{{a(v, 0), a(v, 1), a(v, 2)}}.to_form();
    powers[v].push_back(TF::constant(z.one()));
    for (int i = 1; i <= f.degree(); ++i) powers[v].push_back(powers[v].back() * lin);
  }
  TF acc(f.degree(), z);
  for (const auto& [m, c] : f.terms()) {
    acc = acc + (powers[0][m.x] * powers[1][m.y] * powers[2][m.z]).scaled(c);
  }
  return acc;
}

/// Entrywise L(v) -> L(B v): the pencil whose determinant is
/// substitute(det(M), B).
template <FieldElement E>
LinearPencil<E> substitute(const LinearPencil<E>& m, const Matrix<E>& b) {
  if (b.size() != 3) throw std::invalid_argument("substitute: matrix must be 3x3");
  std::vector<LinearForm<E>> out;
  out.reserve(m.entries().size());
  const E z = m.zero_elem();
  for (const auto& l : m.entries()) {
    LinearForm<E> r = LinearForm<E>::zero(z);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) r.c[j] = r.c[j] + l.c[k] * b(k, j);
    }
    out.push_back(r);
  }
  return LinearPencil<E>(m.size(), std::move(out), m.symmetric());
}

}  // namespace theta2
