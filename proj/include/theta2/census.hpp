#pragma once

// Exhaustive enumeration of symmetric pencils over tiny fields and their
// classification into orbits under M -> lambda tS M S.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "theta2/fields.hpp"
#include "theta2/forms.hpp"

namespace theta2 {

/// Symmetric d x d pencils over GF(q) coded as base-q numbers: the upper
/// triangle row by row, each entry as (X, Y, Z) coefficients, first digit
/// most significant. Lexicographic order of pencils is numeric order.
class SymmetricPencilSpace {
 public:
  /// d in {2, 3, 4}; throws std::invalid_argument when q^digits exceeds 2^62.
  SymmetricPencilSpace(int d, const GaloisField& f);

  int size() const { return d_; }
  const GaloisField& field() const { return *field_; }
  int digits() const { return digits_; }
  std::uint64_t count() const { return count_; }

  LinearPencil<GaloisElem> decode(std::uint64_t code) const;
  std::uint64_t encode(const LinearPencil<GaloisElem>& m) const;

 private:
  int d_;
  const GaloisField* field_;
  int digits_;
  std::uint64_t count_;
};

/// Guarded exhaustive stream: d in {2, 3} and GF(2) or GF(4), except d = 3
/// over GF(4) (4^18 pencils). Calls visit(code, pencil) in code order.
void enumerate_symmetric_pencils(
    int d, const GaloisField& f,
    const std::function<void(std::uint64_t, const LinearPencil<GaloisElem>&)>& visit);

/// Every invertible n x n matrix over f (small n and q only).
std::vector<Matrix<GaloisElem>> general_linear_group(int n, const GaloisField& f);

/// Orbit of a pencil under lambda tS M S, S in GL_d, lambda in GF(q)^x,
/// by breadth-first search over generators; sorted codes.
std::vector<std::uint64_t> pencil_orbit(const SymmetricPencilSpace& space, std::uint64_t code);

/// Coefficients of the normalized form as base-q digits in descending
/// monomial order.
std::uint64_t curve_code(const TernaryForm<GaloisElem>& normalized_form);
TernaryForm<GaloisElem> curve_from_code(int degree, const GaloisField& f, std::uint64_t code);

struct CensusRow {
  TernaryForm<GaloisElem> curve;  // normalized
  bool smooth;
  bool ordinary;
  std::uint64_t points;    // #C(GF(q))
  std::uint64_t pencils;   // symmetric pencils with det = lambda * F
  std::vector<std::uint64_t> classes;  // least code of each orbit
};

struct CensusOptions {
  int degree = 3;
  int k = 1;
  /// Random sample of this many pencils instead of the full space.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
};

struct CensusResult {
  int degree;
  int k;
  bool exhaustive;
  std::uint64_t pencils_examined;
  std::uint64_t singular_determinants;  // zero or singular det, discarded
  /// Exhaustive: every smooth curve of the degree, in curve-code order.
  /// Sampled: only curves met by the sample.
  std::vector<CensusRow> rows;
};

CensusResult sdr_census(const CensusOptions& opt);

}  // namespace theta2
