#include "theta2/hassewitt.hpp"

#include <stdexcept>

namespace theta2 {

namespace {

// Points visited per scan are bounded by this many (about Q^2).
constexpr std::uint64_t kMaxScan = std::uint64_t(1) << 26;

/// A form with coefficients moved into GF(q^e), evaluated on raw bits.
class CompiledForm {
 public:
  CompiledForm(const TernaryForm<GaloisElem>& F, const GaloisField& target)
      : field_(&target), degree_(F.degree()) {
    const FieldEmbedding emb(F.zero_elem().field(), target);
    for (const auto& [m, c] : F.terms()) terms_.push_back({m, emb(c).bits()});
  }

  bool is_zero() const { return terms_.empty(); }

  std::uint32_t operator()(const std::uint32_t* px, const std::uint32_t* py,
                           const std::uint32_t* pz) const {
    std::uint32_t acc = 0;
    for (const auto& t : terms_) {
      acc ^= field_->mul(t.c, field_->mul(px[t.m.x], field_->mul(py[t.m.y], pz[t.m.z])));
    }
    return acc;
  }

  int degree() const { return degree_; }

 private:
  struct Term {
    Monomial3 m;
    std::uint32_t c;
  };
  const GaloisField* field_;
  int degree_;
  std::vector<Term> terms_;
};

const GaloisField& extension(const TernaryForm<GaloisElem>& F, int e) {
  const int k = F.zero_elem().field().degree();
  if (e < 1 || k * e > GaloisField::kMaxDegree) {
    throw std::invalid_argument("GF(2^" + std::to_string(k * e) + ") exceeds GF(2^16)");
  }
  const GaloisField& L = GaloisField::get(k * e);
  const std::uint64_t q = L.size();
  if (q * q > kMaxScan) {
    throw std::invalid_argument("projective scan over GF(2^" + std::to_string(k * e) +
                                ") exceeds the size guard");
  }
  return L;
}

/// Calls visit(px, py, pz) with power tables of every point of P^2(L),
/// normalized as [1:y:z], [0:1:z], [0:0:1]. Stops when visit returns true.
template <class Visit>
bool scan(const GaloisField& L, int degree, Visit&& visit) {
  const std::uint32_t q = L.size();
  const int n = degree + 1;
  std::vector<std::uint32_t> px(n), py(n), pz(n);
  auto fill = [&](std::vector<std::uint32_t>& p, std::uint32_t v) {
    p[0] = 1;
    for (int i = 1; i < n; ++i) p[i] = L.mul(p[i - 1], v);
  };
  // z power tables for every element, computed once.
  std::vector<std::uint32_t> ztab(std::size_t(q) * n);
  for (std::uint32_t z = 0; z < q; ++z) {
    std::uint32_t* p = &ztab[std::size_t(z) * n];
    p[0] = 1;
    for (int i = 1; i < n; ++i) p[i] = L.mul(p[i - 1], z);
  }
  fill(px, 1);
  for (std::uint32_t y = 0; y < q; ++y) {
    fill(py, y);
    for (std::uint32_t z = 0; z < q; ++z) {
      if (visit(px.data(), py.data(), &ztab[std::size_t(z) * n])) return true;
    }
  }
  fill(px, 0);
  fill(py, 1);
  for (std::uint32_t z = 0; z < q; ++z) {
    if (visit(px.data(), py.data(), &ztab[std::size_t(z) * n])) return true;
  }
  fill(py, 0);
  return visit(px.data(), py.data(), &ztab[std::size_t(1) * n]);
}

}  // namespace

bool is_smooth(const TernaryForm<GaloisElem>& F) {
  if (F.is_zero()) throw MathError("is_smooth: zero form");
  const int d = F.degree();
  if (d <= 1) return true;
  const auto parts = partials(F);
  const int N = d * (d - 1) / 2;
  for (int e = N / 2 + 1; e <= N; ++e) {
    const GaloisField& L = extension(F, e);
    const CompiledForm f(F, L), fx(parts[0], L), fy(parts[1], L), fz(parts[2], L);
    const bool singular = scan(L, d, [&](const std::uint32_t* px, const std::uint32_t* py,
                                         const std::uint32_t* pz) {
      return fx(px, py, pz) == 0 && fy(px, py, pz) == 0 && fz(px, py, pz) == 0 &&
             f(px, py, pz) == 0;
    });
    if (singular) return false;
  }
  return true;
}

std::uint64_t count_points(const TernaryForm<GaloisElem>& F, int e) {
  if (F.is_zero()) throw MathError("count_points: zero form");
  const GaloisField& L = extension(F, e);
  const CompiledForm f(F, L);
  std::uint64_t n = 0;
  scan(L, F.degree(), [&](const std::uint32_t* px, const std::uint32_t* py,
                          const std::uint32_t* pz) {
    n += f(px, py, pz) == 0;
    return false;
  });
  return n;
}

std::vector<std::int64_t> l_polynomial(const TernaryForm<GaloisElem>& F) {
  const int g = plane_curve_genus(F.degree());
  const std::int64_t q = F.zero_elem().field().size();
  std::vector<std::int64_t> c(std::size_t(2 * g + 1), 0);
  c[0] = 1;
  // S_i = q^i + 1 - N_i are the power sums of the reciprocal roots; Newton:
  // i c_i = -sum_{j=1..i} S_j c_{i-j}.
  std::vector<std::int64_t> S(std::size_t(g + 1), 0);
  std::int64_t qi = 1;
  for (int i = 1; i <= g; ++i) {
    qi *= q;
    S[i] = qi + 1 - std::int64_t(count_points(F, i));
    std::int64_t acc = 0;
    for (int j = 1; j <= i; ++j) acc += S[j] * c[i - j];
    if (acc % i != 0) throw std::logic_error("l_polynomial: non-integral coefficient");
    c[i] = -acc / i;
  }
  qi = 1;
  for (int i = 1; i <= g; ++i) {
    qi *= q;
    c[g + i] = qi * c[g - i];
  }
  return c;
}

int zeta_p_rank(const TernaryForm<GaloisElem>& F) {
  const auto c = l_polynomial(F);
  int r = 0;
  for (int i = 0; i < int(c.size()); ++i) {
    if (c[i] % 2 != 0) r = i;
  }
  return r;
}

}  // namespace theta2
