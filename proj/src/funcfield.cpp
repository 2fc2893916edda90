#include "theta2/funcfield.hpp"

#include <algorithm>
#include <climits>

namespace theta2 {

namespace {

constexpr int kExactZero = 1 << 28;

void require_same(const GaloisField& a, const GaloisField& b, const char* what) {
  if (&a != &b) throw MathError(std::string(what) + ": base field mismatch");
}

}  // namespace

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const GaloisField& f, std::vector<std::uint32_t> coeffs)
    : field_(&f), c_(std::move(coeffs)) {
  for (auto c : c_) {
    if (c >= f.size()) throw std::out_of_range("UPoly: coefficient outside field");
  }
  trim();
}

UPoly UPoly::constant(const GaloisElem& c) { return UPoly(c.field(), {c.bits()}); }

UPoly UPoly::monomial(const GaloisElem& c, int degree) {
  std::vector<std::uint32_t> v(std::size_t(degree) + 1, 0);
  v[degree] = c.bits();
  return UPoly(c.field(), std::move(v));
}

UPoly UPoly::from_code(const GaloisField& f, std::uint64_t code) {
  const int k = f.degree();
  std::vector<std::uint32_t> v;
  while (code) {
    v.push_back(std::uint32_t(code & ((1u << k) - 1)));
    code >>= k;
  }
  return UPoly(f, std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  require_same(*field_, *o.field_, "UPoly");
  UPoly r(*field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] ^= c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] ^= o.c_[i];
  r.trim();
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  require_same(*field_, *o.field_, "UPoly");
  UPoly r(*field_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] ^= field_->mul(c_[i], o.c_[j]);
  }
  r.trim();
  return r;
}

UPoly UPoly::scaled(const GaloisElem& c) const {
  require_same(*field_, c.field(), "UPoly");
  UPoly r(*field_);
  r.c_.reserve(c_.size());
  for (auto a : c_) r.c_.push_back(field_->mul(a, c.bits()));
  r.trim();
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  require_same(*field_, *d.field_, "UPoly");
  if (d.is_zero()) throw MathError("UPoly: division by zero");
  UPoly q(*field_), r = *this;
  if (degree() < d.degree()) return {q, r};
  q.c_.assign(std::size_t(degree() - d.degree()) + 1, 0);
  const std::uint32_t li = field_->inv(d.c_.back());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const std::uint32_t f = field_->mul(r.c_.back(), li);
    q.c_[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + shift] ^= field_->mul(f, d.c_[i]);
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inv());
}

UPoly UPoly::derivative() const {
  UPoly r(*field_);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(i % 2 ? c_[i] : 0);
  r.trim();
  return r;
}

GaloisElem UPoly::eval(const GaloisElem& x) const {
  require_same(*field_, x.field(), "UPoly");
  std::uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->mul(acc, x.bits()) ^ *it;
  return {*field_, acc};
}

std::uint64_t UPoly::code() const {
  const int k = field_->degree();
  if (std::size_t(k) * c_.size() > 64) throw std::overflow_error("UPoly: code does not fit");
  std::uint64_t code = 0;
  for (std::size_t i = c_.size(); i-- > 0;) code = (code << k) | c_[i];
  return code;
}

bool UPoly::operator<(const UPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

bool UPoly::is_irreducible() const {
  const int d = degree();
  if (d < 1) return false;
  const int k = field_->degree();
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int e = 1; 2 * e <= d; ++e) {
    const std::uint64_t lo = std::uint64_t(1) << (k * e);
    for (std::uint64_t low = 0; low < lo; ++low) {
      if ((*this % from_code(*field_, lo | low)).is_zero()) return false;
    }
  }
  return true;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string to_string(const UPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const GaloisElem c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    std::string mono;
    if (i >= 1) mono = std::string(1, var) + (i > 1 ? "^" + std::to_string(i) : "");
    if (mono.empty()) {
      out += to_string(c);
    } else if (c.is_one()) {
      out += mono;
    } else {
      const std::string cs = to_string(c);
      out += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

// -------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const GaloisField& base)
    : num_(base), den_(UPoly::constant(base.one())) {}

RatFunc::RatFunc(UPoly num) : RatFunc(UPoly(num), UPoly::constant(num.field().one())) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same(num_.field(), den_.field(), "RatFunc");
  if (den_.is_zero()) throw MathError("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = UPoly::constant(num_.field().one());
    return;
  }
  const UPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (!den_.lead().is_one()) {
    const GaloisElem li = den_.lead().inv();
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return {num_ + o.num_, den_};
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw MathError("RatFunc: inverse of zero");
  return {den_, num_};
}

std::optional<RatFunc> RatFunc::sqrt() const { return is_square_global(*this).root; }

std::string to_string(const RatFunc& f) {
  if (f.den().is_one()) return to_string(f.num());
  auto wrap = [](const UPoly& p) {
    const std::string s = to_string(p);
    return s.find_first_of("+*^") != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(f.num()) + "/" + wrap(f.den());
}

SquareDecomposition is_square_global(const RatFunc& f) {
  const GaloisField& F = f.base_field();
  const UPoly g = f.num() * f.den();
  std::vector<std::uint32_t> a, b;
  for (int i = 0; i <= g.degree(); ++i) {
    auto& half = i % 2 ? b : a;
    const std::size_t pos = std::size_t(i / 2);
    if (half.size() <= pos) half.resize(pos + 1, 0);
    half[pos] = F.sqrt(g.coeff(i).bits());
  }
  SquareDecomposition d{false, UPoly(F, a), UPoly(F, b), std::nullopt};
  d.square = d.b.is_zero();
  if (d.square) d.root = RatFunc(d.a, f.den());
  return d;
}

// ---------------------------------------------------------------- places

Place Place::finite(UPoly p) {
  if (p.is_zero() || !p.lead().is_one() || !p.is_irreducible()) {
    throw MathError("Place: " + to_string(p) + " is not monic irreducible");
  }
  return {false, std::move(p)};
}

std::vector<Place> places_up_to(const GaloisField& base, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("places_up_to: degree bound must be >= 1");
  const int k = base.degree();
  if (k * (max_degree + 1) > 63) throw std::invalid_argument("places_up_to: bound too large");
  std::vector<Place> out;
  for (int d = 1; d <= max_degree; ++d) {
    const std::uint64_t lead = std::uint64_t(1) << (k * d);
    for (std::uint64_t low = 0; low < lead; ++low) {
      UPoly p = UPoly::from_code(base, lead | low);
      if (p.is_irreducible()) out.push_back({false, std::move(p)});
    }
  }
  out.push_back(Place::at_infinity(base));
  return out;
}

int multiplicity(const UPoly& a, const UPoly& p) {
  if (a.is_zero()) throw MathError("multiplicity: zero polynomial");
  int m = 0;
  UPoly r = a;
  for (;;) {
    auto [q, rem] = r.divmod(p);
    if (!rem.is_zero()) return m;
    r = std::move(q);
    ++m;
  }
}

int valuation(const RatFunc& f, const Place& v) {
  if (f.is_zero()) throw MathError("valuation: zero has infinite valuation");
  if (v.infinite) return f.den().degree() - f.num().degree();
  return multiplicity(f.num(), v.p) - multiplicity(f.den(), v.p);
}

const GaloisField& residue_field(const Place& v) {
  const int k = v.p.field().degree() * v.degree();
  if (k > GaloisField::kMaxDegree) {
    throw MathError("residue field GF(2^" + std::to_string(k) + ") exceeds GF(2^16)");
  }
  return GaloisField::get(k);
}

// --------------------------------------------------------- LaurentSeries

LaurentSeries::LaurentSeries(const GaloisField& f, int val, std::vector<std::uint32_t> coeffs,
                             int prec_hint)
    : field_(&f), val_(val), c_(std::move(coeffs)), prec_hint_(prec_hint) {
  normalize();
}

LaurentSeries LaurentSeries::zero(const GaloisField& f, int abs_precision, int prec_hint) {
  return LaurentSeries(f, abs_precision, {}, prec_hint);
}

LaurentSeries LaurentSeries::constant(const GaloisElem& c, int precision) {
  std::vector<std::uint32_t> v(std::size_t(std::max(precision, 1)), 0);
  v[0] = c.bits();
  return LaurentSeries(c.field(), 0, std::move(v), precision);
}

LaurentSeries LaurentSeries::uniformizer_power(const GaloisField& f, int e, int precision) {
  std::vector<std::uint32_t> v(std::size_t(std::max(precision, 1)), 0);
  v[0] = 1;
  return LaurentSeries(f, e, std::move(v), precision);
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + lead);
    val_ += int(lead);
  }
  if (c_.empty()) val_ = std::min(val_, kExactZero);
}

GaloisElem LaurentSeries::coeff(int e) const {
  if (e >= absolute_precision()) {
    throw PrecisionError("LaurentSeries: coefficient of pi^" + std::to_string(e) +
                         " is beyond the known precision");
  }
  if (e < val_) return field_->zero();
  return {*field_, c_[std::size_t(e - val_)]};
}

GaloisElem LaurentSeries::residue() const {
  if (!is_zero() && val_ < 0) throw MathError("LaurentSeries: residue of a non-integral series");
  return coeff(0);
}

LaurentSeries LaurentSeries::truncated(int abs_precision) const {
  if (abs_precision >= absolute_precision()) return *this;
  if (abs_precision <= val_) return zero(*field_, abs_precision, prec_hint_);
  return LaurentSeries(*field_, val_,
                       std::vector<std::uint32_t>(c_.begin(), c_.begin() + (abs_precision - val_)),
                       prec_hint_);
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  require_same(*field_, *o.field_, "LaurentSeries");
  const int ap = std::min(absolute_precision(), o.absolute_precision());
  const int v = std::min(val_, o.val_);
  if (v >= ap) return zero(*field_, ap, prec_hint_);
  std::vector<std::uint32_t> c(std::size_t(ap - v), 0);
  for (int i = 0; i < int(c_.size()) && val_ + i < ap; ++i) c[std::size_t(val_ + i - v)] ^= c_[i];
  for (int i = 0; i < int(o.c_.size()) && o.val_ + i < ap; ++i) {
    c[std::size_t(o.val_ + i - v)] ^= o.c_[i];
  }
  return LaurentSeries(*field_, v, std::move(c), prec_hint_);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  require_same(*field_, *o.field_, "LaurentSeries");
  if (is_zero() || o.is_zero()) {
    const long ap = long(val_) + o.val_;
    return zero(*field_, int(std::min<long>(ap, kExactZero)), prec_hint_);
  }
  const std::size_t n = std::min(c_.size(), o.c_.size());
  std::vector<std::uint32_t> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] ^= field_->mul(c_[i], o.c_[j]);
  }
  return LaurentSeries(*field_, val_ + o.val_, std::move(c), prec_hint_);
}

LaurentSeries LaurentSeries::inv() const {
  if (is_zero()) throw MathError("LaurentSeries: inverse of a series that is zero to precision");
  const std::size_t n = c_.size();
  std::vector<std::uint32_t> w(n, 0);
  const std::uint32_t u0 = field_->inv(c_[0]);
  w[0] = u0;
  for (std::size_t k = 1; k < n; ++k) {
    std::uint32_t acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc ^= field_->mul(c_[i], w[k - i]);
    w[k] = field_->mul(acc, u0);
  }
  return LaurentSeries(*field_, -val_, std::move(w), prec_hint_);
}

std::optional<LaurentSeries> LaurentSeries::sqrt() const {
  if (is_zero()) return zero(*field_, val_ >= kExactZero ? val_ : (val_ + 1) / 2, prec_hint_);
  if (val_ % 2) return std::nullopt;
  std::vector<std::uint32_t> r;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i % 2) {
      if (c_[i]) return std::nullopt;
    } else {
      r.push_back(field_->sqrt(c_[i]));
    }
  }
  return LaurentSeries(*field_, val_ / 2, std::move(r), prec_hint_);
}

LaurentSeries LaurentSeries::zero() const { return zero(*field_, kExactZero, prec_hint_); }

LaurentSeries LaurentSeries::one() const { return constant(field_->one(), prec_hint_); }

std::string to_string(const LaurentSeries& s) {
  std::string out;
  if (!s.is_zero()) {
    for (int i = 0; i < s.precision(); ++i) {
      const int e = s.valuation() + i;
      const GaloisElem c = s.coeff(e);
      if (c.is_zero()) continue;
      if (!out.empty()) out += "+";
      std::string mono = e == 0 ? "" : (e == 1 ? "pi" : "pi^" + std::to_string(e));
      if (e < 0) mono = "pi^(" + std::to_string(e) + ")";
      const std::string cs = to_string(c);
      if (mono.empty()) {
        out += cs;
      } else if (c.is_one()) {
        out += mono;
      } else {
        out += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*" + mono;
      }
    }
  }
  if (s.absolute_precision() >= kExactZero) return out.empty() ? "0" : out;
  if (!out.empty()) out += "+";
  return out + "O(pi^" + std::to_string(s.absolute_precision()) + ")";
}

// ------------------------------------------------------------ Completion

namespace {

GaloisElem choose_theta(const Place& v, const GaloisField& residue, const FieldEmbedding& emb) {
  if (v.infinite) return residue.zero();
  for (const auto& x : residue.elements()) {
    // Horner over the embedded coefficients of p.
    GaloisElem acc = residue.zero();
    for (int i = v.p.degree(); i >= 0; --i) acc = acc * x + emb(v.p.coeff(i));
    if (acc.is_zero()) return x;
  }
  throw MathError("Completion: place polynomial has no root in its residue field");
}

}  // namespace

Completion::Completion(Place v)
    : place_(std::move(v)),
      residue_(&theta2::residue_field(place_)),
      embed_(place_.p.field(), *residue_),
      theta_(choose_theta(place_, *residue_, embed_)) {}

std::vector<std::uint32_t> Completion::eval_poly(const UPoly& a,
                                                 const std::vector<std::uint32_t>& t,
                                                 int precision) const {
  const GaloisField& F = *residue_;
  std::vector<std::uint32_t> acc(std::size_t(precision), 0);
  for (int i = a.degree(); i >= 0; --i) {
    std::vector<std::uint32_t> next(std::size_t(precision), 0);
    for (int x = 0; x < precision; ++x) {
      if (!acc[x]) continue;
      for (int y = 0; x + y < precision; ++y) next[x + y] ^= F.mul(acc[x], t[y]);
    }
    next[0] ^= embed_(a.coeff(i)).bits();
    acc = std::move(next);
  }
  return acc;
}

std::vector<std::uint32_t> Completion::t_series(int precision) const {
  // Newton iteration for p(tau) = pi with tau(0) = theta.
  const GaloisField& F = *residue_;
  std::vector<std::uint32_t> tau(std::size_t(precision), 0);
  tau[0] = theta_.bits();
  const UPoly dp = place_.p.derivative();
  for (int iter = 0; iter < 64; ++iter) {
    auto r = eval_poly(place_.p, tau, precision);
    if (precision > 1) r[1] ^= 1;
    if (std::all_of(r.begin(), r.end(), [](auto c) { return c == 0; })) return tau;
    const LaurentSeries d = LaurentSeries(F, 0, eval_poly(dp, tau, precision));
    const LaurentSeries step = LaurentSeries(F, 0, r) * d.inv();
    for (int i = 0; i < precision; ++i) {
      if (i >= step.valuation()) tau[i] ^= step.coeff(i).bits();
    }
  }
  throw MathError("Completion: Newton iteration for T did not converge");
}

LaurentSeries Completion::expand(const RatFunc& f, int precision) const {
  if (precision < 1) throw std::invalid_argument("expand: precision must be >= 1");
  require_same(f.base_field(), place_.p.field(), "Completion");
  const GaloisField& F = *residue_;
  if (f.is_zero()) return LaurentSeries::zero(F, kExactZero, precision);

  if (place_.infinite) {
    auto reversed = [&](const UPoly& a) {
      std::vector<std::uint32_t> c(std::size_t(precision), 0);
      for (int j = 0; j < precision && a.degree() - j >= 0; ++j) {
        c[j] = embed_(a.coeff(a.degree() - j)).bits();
      }
      return LaurentSeries(F, -a.degree(), std::move(c), precision);
    };
    return reversed(f.num()) / reversed(f.den());
  }

  const UPoly& p = place_.p;
  const int a = multiplicity(f.num(), p), b = multiplicity(f.den(), p);
  UPoly n1 = f.num(), n2 = f.den();
  for (int i = 0; i < a; ++i) n1 = n1 / p;
  for (int i = 0; i < b; ++i) n2 = n2 / p;
  const int e = a - b;
  const auto tau = t_series(precision);
  const LaurentSeries s1(F, e, eval_poly(n1, tau, precision), precision);
  const LaurentSeries s2(F, 0, eval_poly(n2, tau, precision), precision);
  return s1 / s2;
}

LaurentSeries expand_at(const RatFunc& f, const Place& v, int precision) {
  return Completion(v).expand(f, precision);
}

bool expansion_is_even(const RatFunc& f, const Place& v, int precision) {
  const LaurentSeries s = expand_at(f, v, precision);
  if (s.is_zero()) return true;
  for (int i = 0; i < s.precision(); ++i) {
    const int e = s.valuation() + i;
    if (e % 2 != 0 && !s.coeff(e).is_zero()) return false;
  }
  return true;
}

int certifying_precision(const RatFunc& f, const Place& v) {
  if (f.is_zero()) return 1;
  const UPoly g = f.num() * f.den();
  if (g.degree() <= 0) return 1;
  if (v.infinite) return g.degree();
  // The odd part of the expansion starts at relative index
  // 1 + 2 v(B) - v(num * den), where num * den = A^2 + T B^2 and
  // deg B <= (deg(num * den) - 1) / 2.
  const int max_vb = ((g.degree() - 1) / 2) / v.degree();
  return std::max(1, 2 + 2 * max_vb - multiplicity(g, v.p));
}

bool is_square_local(const RatFunc& f, const Place& v, int precision) {
  if (f.is_zero()) return true;
  if (precision < 1) throw std::invalid_argument("is_square_local: precision must be >= 1");
  const int needed = certifying_precision(f, v);
  int n = precision;
  while (n < needed) n *= 2;
  if (n > LaurentSeries::kMaxPrecision) {
    throw PrecisionError("is_square_local: certifying the answer at " + v.name() + " needs " +
                         std::to_string(needed) + " terms, above the cap of " +
                         std::to_string(LaurentSeries::kMaxPrecision));
  }
  return expansion_is_even(f, v, n);
}

LaurentSeries hensel_lift(const std::vector<LaurentSeries>& coeffs, const GaloisElem& root,
                          int precision) {
  if (coeffs.empty()) throw std::invalid_argument("hensel_lift: empty polynomial");
  const GaloisField& F = coeffs[0].residue_field();
  require_same(F, root.field(), "hensel_lift");
  for (const auto& c : coeffs) {
    if (!c.is_zero() && c.valuation() < 0) {
      throw MathError("hensel_lift: coefficients must be integral");
    }
  }
  GaloisElem fr = F.zero(), dfr = F.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) fr = fr * root + coeffs[i].residue();
  for (std::size_t i = coeffs.size(); i-- > 1;) {
    dfr = dfr * root + (i % 2 ? coeffs[i].residue() : F.zero());
  }
  if (!fr.is_zero()) throw MathError("hensel_lift: residue is not a root");
  if (dfr.is_zero()) throw MathError("hensel_lift: derivative at the root is not a unit");

  LaurentSeries y = LaurentSeries::constant(root, precision);
  for (int iter = 0; iter < 64; ++iter) {
    LaurentSeries fy = y.zero(), dfy = y.zero();
    for (std::size_t i = coeffs.size(); i-- > 0;) fy = fy * y + coeffs[i];
    if (fy.valuation() >= precision) return y.truncated(precision);
    for (std::size_t i = coeffs.size(); i-- > 1;) {
      dfy = dfy * y + (i % 2 ? coeffs[i] : y.zero());
    }
    if (fy.is_zero()) break;
    y = y + fy / dfy;
  }
  throw PrecisionError("hensel_lift: could not reach the requested precision");
}

}  // namespace theta2
