#include "theta2/forms.hpp"

namespace theta2 {

std::string to_string(const Monomial3& m) {
  std::string out;
  auto put = [&](char v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  put('X', m.x);
  put('Y', m.y);
  put('Z', m.z);
  return out;
}

std::vector<Monomial3> monomials_of_degree(int d) {
  std::vector<Monomial3> out;
  for (int x = d; x >= 0; --x) {
    for (int y = d - x; y >= 0; --y) out.push_back({x, y, d - x - y});
  }
  return out;
}

}  // namespace theta2
