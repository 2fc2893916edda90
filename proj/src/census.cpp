#include "theta2/census.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "theta2/hassewitt.hpp"

namespace theta2 {

SymmetricPencilSpace::SymmetricPencilSpace(int d, const GaloisField& f)
    : d_(d), field_(&f), digits_(3 * d * (d + 1) / 2), count_(1) {
  if (d < 2 || d > 4) throw std::invalid_argument("SymmetricPencilSpace: d must be 2, 3 or 4");
  if (digits_ * f.degree() > 62) {
    throw std::invalid_argument("SymmetricPencilSpace: space too large to code");
  }
  count_ = std::uint64_t(1) << (digits_ * f.degree());
}

LinearPencil<GaloisElem> SymmetricPencilSpace::decode(std::uint64_t code) const {
  if (code >= count_) throw std::out_of_range("SymmetricPencilSpace: code out of range");
  const int k = field_->degree();
  const std::uint64_t mask = field_->size() - 1;
  std::vector<LinearForm<GaloisElem>> e(std::size_t(d_) * d_,
                                        LinearForm<GaloisElem>::zero(field_->zero()));
  int pos = digits_;
  for (int i = 0; i < d_; ++i) {
    for (int j = i; j < d_; ++j) {
      LinearForm<GaloisElem> l = LinearForm<GaloisElem>::zero(field_->zero());
      for (int v = 0; v < 3; ++v) {
        --pos;
        l.c[v] = field_->elem(std::uint32_t((code >> (pos * k)) & mask));
      }
      e[std::size_t(i) * d_ + j] = l;
      e[std::size_t(j) * d_ + i] = l;
    }
  }
  return LinearPencil<GaloisElem>(d_, std::move(e), true);
}

std::uint64_t SymmetricPencilSpace::encode(const LinearPencil<GaloisElem>& m) const {
  if (m.size() != d_ || !m.is_symmetric()) {
    throw std::invalid_argument("SymmetricPencilSpace: pencil shape mismatch");
  }
  const int k = field_->degree();
  std::uint64_t code = 0;
  for (int i = 0; i < d_; ++i) {
    for (int j = i; j < d_; ++j) {
      for (int v = 0; v < 3; ++v) code = (code << k) | m(i, j).c[v].bits();
    }
  }
  return code;
}

void enumerate_symmetric_pencils(
    int d, const GaloisField& f,
    const std::function<void(std::uint64_t, const LinearPencil<GaloisElem>&)>& visit) {
  if ((d != 2 && d != 3) || f.degree() > 2 || (d == 3 && f.degree() == 2)) {
    throw std::invalid_argument(
        "enumerate_symmetric_pencils: supported for d = 2 over GF(2), GF(4) and d = 3 over GF(2)");
  }
  const SymmetricPencilSpace space(d, f);
  for (std::uint64_t c = 0; c < space.count(); ++c) visit(c, space.decode(c));
}

std::vector<Matrix<GaloisElem>> general_linear_group(int n, const GaloisField& f) {
  const int bits = n * n * f.degree();
  if (bits > 24) throw std::invalid_argument("general_linear_group: too large to enumerate");
  std::vector<Matrix<GaloisElem>> out;
  const std::uint32_t mask = f.size() - 1;
  for (std::uint64_t code = 0; code < (std::uint64_t(1) << bits); ++code) {
    Matrix<GaloisElem> m(n, f.zero());
    for (int i = 0; i < n * n; ++i) {
      m(i / n, i % n) = f.elem(std::uint32_t((code >> (i * f.degree())) & mask));
    }
    if (!m.det().is_zero()) out.push_back(std::move(m));
  }
  return out;
}

namespace {

/// Transvections I + a E_ij for a in {1, g}, diag(g, 1, ..., 1) and the
/// scalar g: together they generate GL_d(GF(q)) x GF(q)^x.
std::vector<Equivalence<GaloisElem>> generators(int d, const GaloisField& f) {
  std::vector<GaloisElem> steps = {f.one()};
  if (f.degree() > 1) steps.push_back(f.gen());
  std::vector<Equivalence<GaloisElem>> gens;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      for (const auto& a : steps) {
        auto S = Matrix<GaloisElem>::identity(d, f.zero());
        S(i, j) = a;
        gens.emplace_back(f.one(), std::move(S));
      }
    }
  }
  if (f.degree() > 1) {
    auto D = Matrix<GaloisElem>::identity(d, f.zero());
    D(0, 0) = f.gen();
    gens.emplace_back(f.one(), std::move(D));
    gens.emplace_back(f.gen(), Matrix<GaloisElem>::identity(d, f.zero()));
  }
  return gens;
}

}  // namespace

std::vector<std::uint64_t> pencil_orbit(const SymmetricPencilSpace& space, std::uint64_t code) {
  const auto gens = generators(space.size(), space.field());
  std::unordered_set<std::uint64_t> seen = {code};
  std::deque<std::uint64_t> todo = {code};
  while (!todo.empty()) {
    const auto m = space.decode(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      const std::uint64_t c = space.encode(apply_equivalence(m, g));
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t curve_code(const TernaryForm<GaloisElem>& F) {
  const GaloisField& f = F.zero_elem().field();
  std::uint64_t code = 0;
  for (const auto& m : monomials_of_degree(F.degree())) {
    code = (code << f.degree()) | F.coefficient(m).bits();
  }
  return code;
}

TernaryForm<GaloisElem> curve_from_code(int degree, const GaloisField& f, std::uint64_t code) {
  const auto mons = monomials_of_degree(degree);
  const std::uint32_t mask = f.size() - 1;
  std::vector<TernaryForm<GaloisElem>::Term> terms;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const int shift = int(mons.size() - 1 - i) * f.degree();
    terms.emplace_back(mons[i], f.elem(std::uint32_t((code >> shift) & mask)));
  }
  return TernaryForm<GaloisElem>::from_terms(degree, f.zero(), std::move(terms));
}

CensusResult sdr_census(const CensusOptions& opt) {
  const GaloisField& f = GaloisField::get(opt.k);
  const int d = opt.degree;
  const bool exhaustive = !opt.sample.has_value();
  if (exhaustive && ((d != 2 && d != 3) || opt.k > 2 || (d == 3 && opt.k == 2))) {
    throw std::invalid_argument(
        "sdr_census: exhaustive mode supports degree 2 over gf2/gf4 and degree 3 over gf2; "
        "use a sample otherwise");
  }
  if (!exhaustive && (d < 2 || d > 4 || opt.k > 2)) {
    throw std::invalid_argument("sdr_census: sample mode supports degree 2..4 over gf2/gf4");
  }
  const SymmetricPencilSpace space(d, f);

  struct Entry {
    TernaryForm<GaloisElem> curve;
    bool smooth;
    std::uint64_t pencils = 0;
    std::vector<std::uint64_t> classes;
  };
  std::map<std::uint64_t, Entry> curves;
  auto entry_for = [&](const TernaryForm<GaloisElem>& F) -> Entry& {
    const TernaryForm<GaloisElem> N = F.normalized();
    const std::uint64_t key = curve_code(N);
    auto it = curves.find(key);
    if (it == curves.end()) it = curves.emplace(key, Entry{N, is_smooth(N), 0, {}}).first;
    return it->second;
  };

  CensusResult res{d, opt.k, exhaustive, 0, 0, {}};
  std::vector<std::uint8_t> visited;
  std::unordered_set<std::uint64_t> visited_sparse;
  if (exhaustive) visited.assign(space.count(), 0);
  auto seen = [&](std::uint64_t c) {
    return exhaustive ? visited[c] != 0 : visited_sparse.count(c) != 0;
  };
  auto mark = [&](std::uint64_t c) {
    if (exhaustive) {
      visited[c] = 1;
    } else {
      visited_sparse.insert(c);
    }
  };

  auto process = [&](std::uint64_t code) {
    ++res.pencils_examined;
    const auto M = space.decode(code);
    const auto F = det(M);
    if (F.is_zero()) {
      ++res.singular_determinants;
      return;
    }
    Entry& e = entry_for(F);
    if (!e.smooth) {
      ++res.singular_determinants;
      return;
    }
    ++e.pencils;
    if (seen(code)) return;
    const auto orbit = pencil_orbit(space, code);
    for (auto c : orbit) mark(c);
    e.classes.push_back(orbit.front());
  };

  if (exhaustive) {
    for (std::uint64_t c = 0; c < space.count(); ++c) process(c);
    // Smooth curves with no pencil at all still get a row.
    const std::uint64_t ncodes = std::uint64_t(1) << (f.degree() * ((d + 1) * (d + 2) / 2));
    for (std::uint64_t c = 1; c < ncodes; ++c) {
      const auto F = curve_from_code(d, f, c);
      if (!F.leading_coefficient().is_one()) continue;
      entry_for(F);
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, space.count() - 1);
    for (std::uint64_t i = 0; i < *opt.sample; ++i) process(pick(rng));
  }

  for (auto& [key, e] : curves) {
    if (!e.smooth) continue;
    std::sort(e.classes.begin(), e.classes.end());
    res.rows.push_back({e.curve, true, is_ordinary(e.curve), count_points(e.curve, 1), e.pencils,
                        e.classes});
  }
  return res;
}

}  // namespace theta2
