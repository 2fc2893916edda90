#include "theta2/symbolic.hpp"

#include <algorithm>

namespace theta2 {

SymMonomial SymMonomial::var(char name, std::uint8_t power) {
  if (name < 'a' || name > 'z') throw std::invalid_argument("symbolic variable must be a-z");
  SymMonomial m;
  m.exp[name - 'a'] = power;
  return m;
}

SymMonomial SymMonomial::operator*(const SymMonomial& o) const {
  SymMonomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    const unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 255) throw MathError("SymMonomial: exponent overflow");
    r.exp[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

bool SymMonomial::divides(const SymMonomial& o) const {
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] > o.exp[i]) return false;
  }
  return true;
}

bool SymMonomial::all_even() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e % 2 == 0; });
}

bool SymMonomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

SymPoly SymPoly::one() { return monomial(SymMonomial{}); }
SymPoly SymPoly::var(char name) { return monomial(SymMonomial::var(name)); }

SymPoly SymPoly::monomial(const SymMonomial& m) {
  SymPoly p;
  p.terms_.push_back(m);
  return p;
}

SymPoly SymPoly::from_unsorted(std::vector<SymMonomial> v) {
  std::sort(v.begin(), v.end());
  SymPoly p;
  // Equal monomials cancel in pairs over F_2.
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2) p.terms_.push_back(v[i]);
    i = j;
  }
  return p;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  SymPoly p;
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(p.terms_));
  return p;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  std::vector<SymMonomial> v;
  v.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) v.push_back(a * b);
  }
  return from_unsorted(std::move(v));
}

SymMonomial SymPoly::content() const {
  if (terms_.empty()) return {};
  SymMonomial c = terms_.front();
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < c.exp.size(); ++i) c.exp[i] = std::min(c.exp[i], t.exp[i]);
  }
  return c;
}

SymPoly SymPoly::divide_exact(const SymMonomial& m) const {
  SymPoly p;
  for (auto t : terms_) {
    if (!m.divides(t)) throw MathError("SymPoly: inexact monomial division");
    for (std::size_t i = 0; i < t.exp.size(); ++i) t.exp[i] -= m.exp[i];
    p.terms_.push_back(t);
  }
  return p;
}

std::optional<SymPoly> SymPoly::sqrt() const {
  // (sum m)^2 = sum m^2 over F_2, so squares are exactly the even-exponent sets.
  std::vector<SymMonomial> v;
  for (auto t : terms_) {
    if (!t.all_even()) return std::nullopt;
    for (auto& e : t.exp) e /= 2;
    v.push_back(t);
  }
  return from_unsorted(std::move(v));
}

std::string to_string(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Descending order reads more naturally.
  for (auto it = p.monomials().rbegin(); it != p.monomials().rend(); ++it) {
    if (!out.empty()) out += "+";
    std::string mono;
    for (std::size_t i = 0; i < it->exp.size(); ++i) {
      if (!it->exp[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += char('a' + i);
      if (it->exp[i] > 1) mono += "^" + std::to_string(it->exp[i]);
    }
    out += mono.empty() ? "1" : mono;
  }
  return out;
}

SymFrac::SymFrac(SymPoly num, SymPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("SymFrac: zero denominator");
  if (num_.is_zero()) {
    den_ = SymPoly::one();
    return;
  }
  if (num_ == den_) {
    num_ = den_ = SymPoly::one();
    return;
  }
  SymMonomial g = num_.content();
  const SymMonomial h = den_.content();
  for (std::size_t i = 0; i < g.exp.size(); ++i) g.exp[i] = std::min(g.exp[i], h.exp[i]);
  if (!g.is_one()) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
}

SymFrac SymFrac::operator+(const SymFrac& o) const {
  if (den_ == o.den_) return {num_ + o.num_, den_};
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

SymFrac SymFrac::operator*(const SymFrac& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

SymFrac SymFrac::inv() const {
  if (is_zero()) throw MathError("SymFrac: inverse of zero");
  return {den_, num_};
}

std::optional<SymFrac> SymFrac::sqrt() const {
  // num/den = (num*den)/den^2.
  auto r = (num_ * den_).sqrt();
  if (!r) return std::nullopt;
  return SymFrac(*r, den_);
}

bool SymFrac::operator==(const SymFrac& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

std::string to_string(const SymFrac& f) {
  if (f.den().is_one()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace theta2
