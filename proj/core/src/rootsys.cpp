#include "liespec/rootsys.hpp"

#include <stdexcept>

namespace liespec::rootsys {

std::string_view name(RootFamily f) {
  switch (f) {
    case RootFamily::B4: return "B4";
    case RootFamily::C4: return "C4";
    case RootFamily::D4: return "D4";
  }
  throw std::logic_error("name: bad RootFamily");
}

EpsVector operator+(const EpsVector& a, const EpsVector& b) {
  EpsVector r;
  for (int i = 0; i < 4; ++i) r.coords[i] = a.coords[i] + b.coords[i];
  return r;
}

EpsVector operator-(const EpsVector& a, const EpsVector& b) {
  EpsVector r;
  for (int i = 0; i < 4; ++i) r.coords[i] = a.coords[i] - b.coords[i];
  return r;
}

EpsVector scaled(const EpsVector& v, const BigRat& s) {
  EpsVector r;
  for (int i = 0; i < 4; ++i) r.coords[i] = v.coords[i] * s;
  return r;
}

BigRat inner_product(const EpsVector& u, const EpsVector& v) {
  BigRat acc = 0;
  for (int i = 0; i < 4; ++i) acc += u.coords[i] * v.coords[i];
  return acc;
}

namespace {

EpsVector eps(int i) {
  EpsVector v;
  v.coords[i] = 1;
  return v;
}

EpsVector half_sum(int a, int b, int c, int d) {
  EpsVector v;
  v.coords[0] = BigRat(a, 2);
  v.coords[1] = BigRat(b, 2);
  v.coords[2] = BigRat(c, 2);
  v.coords[3] = BigRat(d, 2);
  return v;
}

RootSystemData make(RootFamily f) {
  RootSystemData rs;
  rs.family = f;
  const EpsVector e1 = eps(0), e2 = eps(1), e3 = eps(2), e4 = eps(3);

  // Short/long roots first, then differences, then sums, each lexicographic.
  switch (f) {
    case RootFamily::B4:
      rs.simple_roots = {e1 - e2, e2 - e3, e3 - e4, e4};
      rs.positive_roots = {e1, e2, e3, e4};
      rs.highest_root = e1 + e2;
      rs.fundamental_weights = {e1, e1 + e2, e1 + e2 + e3, half_sum(1, 1, 1, 1)};
      break;
    case RootFamily::C4:
      rs.simple_roots = {e1 - e2, e2 - e3, e3 - e4, e4 + e4};
      rs.positive_roots = {e1 + e1, e2 + e2, e3 + e3, e4 + e4};
      rs.highest_root = e1 + e1;
      rs.fundamental_weights = {e1, e1 + e2, e1 + e2 + e3, e1 + e2 + e3 + e4};
      break;
    case RootFamily::D4:
      rs.simple_roots = {e1 - e2, e2 - e3, e3 - e4, e3 + e4};
      rs.highest_root = e1 + e2;
      rs.fundamental_weights = {e1, e1 + e2, half_sum(1, 1, 1, -1), half_sum(1, 1, 1, 1)};
      break;
  }
  const std::array<EpsVector, 4> e = {e1, e2, e3, e4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) rs.positive_roots.push_back(e[i] - e[j]);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) rs.positive_roots.push_back(e[i] + e[j]);

  EpsVector two_beta;
  for (const auto& a : rs.positive_roots) two_beta = two_beta + a;
  rs.beta = scaled(two_beta, BigRat(1, 2));
  rs.b = normalization_constant(rs);
  return rs;
}

}  // namespace

const RootSystemData& build_root_system(RootFamily family) {
  static const RootSystemData b4 = make(RootFamily::B4);
  static const RootSystemData c4 = make(RootFamily::C4);
  static const RootSystemData d4 = make(RootFamily::D4);
  switch (family) {
    case RootFamily::B4: return b4;
    case RootFamily::C4: return c4;
    case RootFamily::D4: return d4;
  }
  throw std::logic_error("build_root_system: bad RootFamily");
}

long long normalization_constant(const RootSystemData& rs) {
  const EpsVector shifted = rs.highest_root + rs.beta;
  const BigRat b = inner_product(shifted, shifted) - inner_product(rs.beta, rs.beta);
  if (!is_positive_integer(b)) throw std::logic_error("normalization_constant: non-integral value");
  return to_int64(b);
}

}  // namespace liespec::rootsys
