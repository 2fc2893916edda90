#include "theta2/fields.hpp"

#include <memory>
#include <mutex>

namespace theta2 {

namespace gf2poly {

bool is_irreducible(std::uint64_t p) {
  const int d = degree(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; degree(q) <= d / 2; ++q) {
    if (mod(p, q) == 0) return false;
  }
  return true;
}

}  // namespace gf2poly

namespace {

std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, int k, std::uint32_t m) {
  if (k == 1) return a & b;
  return static_cast<std::uint32_t>(gf2poly::mod(gf2poly::clmul(a, b), m));
}

}  // namespace

const GaloisField& GaloisField::get(int k) {
  if (k < 1 || k > kMaxDegree) {
    throw std::out_of_range("GaloisField: extension degree must lie in [1, 16], got " +
                            std::to_string(k));
  }
  static std::array<std::once_flag, kMaxDegree + 1> once;
  static std::array<std::unique_ptr<GaloisField>, kMaxDegree + 1> fields;
  std::call_once(once[k], [k] { fields[k].reset(new GaloisField(k)); });
  return *fields[k];
}

GaloisField::GaloisField(int k) : k_(k) {
  const std::uint32_t q = 1u << k;
  const std::uint32_t order = q - 1;
  const std::uint32_t m = kModuli[k];

  // Smallest element whose powers exhaust the multiplicative group.
  std::uint32_t prim = 1;
  if (order > 1) {
    for (std::uint32_t cand = 2; cand < q; ++cand) {
      std::uint32_t x = cand, n = 1;
      while (x != 1) {
        x = slow_mul(x, cand, k, m);
        ++n;
      }
      if (n == order) {
        prim = cand;
        break;
      }
    }
  }

  exp_.assign(2 * order, 0);
  log_.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = exp_[i + order] = x;
    log_[x] = i;
    x = slow_mul(x, prim, k, m);
  }

  sqrt_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) sqrt_[mul(a, a)] = a;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw MathError("GaloisField: inverse of zero");
  const std::uint32_t order = size() - 1;
  return exp_[(order - log_[a]) % order];
}

std::uint32_t GaloisField::sqrt(std::uint32_t a) const { return sqrt_[a]; }

GaloisElem GaloisField::zero() const { return {*this, 0}; }
GaloisElem GaloisField::one() const { return {*this, 1}; }
GaloisElem GaloisField::gen() const { return {*this, k_ == 1 ? 1u : 2u}; }

GaloisElem GaloisField::elem(std::uint32_t bits) const {
  if (bits >= size()) throw std::out_of_range("GaloisField: bit vector too long");
  return {*this, bits};
}

std::vector<GaloisElem> GaloisField::elements() const {
  std::vector<GaloisElem> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) out.emplace_back(*this, i);
  return out;
}

GaloisElem::GaloisElem() : field_(&GaloisField::get(1)), bits_(0) {}

GaloisElem::GaloisElem(const GaloisField& f, std::uint32_t bits) : field_(&f), bits_(bits) {}

GaloisElem GaloisElem::inv() const { return {*field_, field_->inv(bits_)}; }

std::string to_string(const GaloisElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.field().degree() - 1; i >= 0; --i) {
    if (!((a.bits() >> i) & 1)) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "g";
    } else {
      out += "g^" + std::to_string(i);
    }
  }
  return out;
}

FieldEmbedding::FieldEmbedding(const GaloisField& from, const GaloisField& to)
    : from_(&from), to_(&to) {
  if (to.degree() % from.degree() != 0) {
    throw MathError("FieldEmbedding: GF(2^" + std::to_string(from.degree()) +
                    ") does not embed in GF(2^" + std::to_string(to.degree()) + ")");
  }
  std::uint32_t root = 1;
  if (from.degree() > 1) {
    const std::uint32_t m = from.modulus();
    bool found = false;
    for (std::uint32_t cand = 0; cand < to.size() && !found; ++cand) {
      // Horner evaluation of the source modulus at cand.
      std::uint32_t acc = 0;
      for (int i = from.degree(); i >= 0; --i) acc = to.mul(acc, cand) ^ ((m >> i) & 1);
      if (acc == 0) {
        root = cand;
        found = true;
      }
    }
    if (!found) throw MathError("FieldEmbedding: modulus has no root in target");
  }
  basis_image_.resize(from.degree());
  std::uint32_t p = 1;
  for (int i = 0; i < from.degree(); ++i) {
    basis_image_[i] = p;
    p = to.mul(p, root);
  }
}

GaloisElem FieldEmbedding::operator()(const GaloisElem& a) const {
  if (&a.field() != from_) throw MathError("FieldEmbedding: element from wrong field");
  std::uint32_t r = 0;
  for (int i = 0; i < from_->degree(); ++i) {
    if ((a.bits() >> i) & 1) r ^= basis_image_[i];
  }
  return {*to_, r};
}

}  // namespace theta2
