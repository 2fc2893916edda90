#include "theta2/parse.hpp"

#include <algorithm>

namespace theta2 {

CoefficientContext<GaloisElem> galois_context(const GaloisField& f) {
  return {f.zero(), [&f](char c) -> std::optional<GaloisElem> {
            if (c == 'g') return f.gen();
            return std::nullopt;
          }};
}

CoefficientContext<RatFunc> ratfunc_context(const GaloisField& base) {
  return {RatFunc(base), [&base](char c) -> std::optional<RatFunc> {
            if (c == 'T') return RatFunc::T(base);
            if (c == 'g') return RatFunc::constant(base.gen());
            return std::nullopt;
          }};
}

CoefficientContext<SymFrac> symbolic_context() {
  return {SymFrac(), [](char c) -> std::optional<SymFrac> {
            if (c >= 'a' && c <= 'z') return SymFrac::var(c);
            return std::nullopt;
          }};
}

std::string FieldSpec::canonical() const {
  const std::string g = "gf(2^" + std::to_string(k) + ")";
  return kind == Kind::Galois ? g : "ratfunc(" + g + ")";
}

namespace {

int parse_galois(std::string_view s) {
  if (s == "gf2") return 1;
  if (s == "gf4") return 2;
  if (s == "gf8") return 3;
  if (s == "gf16") return 4;
  const std::string_view pre = "gf(2^";
  if (s.size() > pre.size() + 1 && s.substr(0, pre.size()) == pre && s.back() == ')') {
    const std::string_view num = s.substr(pre.size(), s.size() - pre.size() - 1);
    if (num.empty() || num.size() > 2 ||
        !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return -1;
    }
    const int k = std::stoi(std::string(num));
    return k >= 1 && k <= GaloisField::kMaxDegree ? k : -1;
  }
  return -1;
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s += char(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  FieldSpec spec;
  const std::string_view rf = "ratfunc(";
  std::string_view body = s;
  if (body.substr(0, rf.size()) == rf && body.size() > rf.size() && body.back() == ')') {
    spec.kind = FieldSpec::Kind::RationalFunctions;
    body = body.substr(rf.size(), body.size() - rf.size() - 1);
  }
  spec.k = parse_galois(body);
  if (spec.k < 0) {
    throw ParseError("malformed field spec '" + std::string(text) +
                         "' (expected gf2, gf4, gf8, gf16, gf(2^k) with k <= 16, or ratfunc(...))",
                     0);
  }
  return spec;
}

}  // namespace theta2
