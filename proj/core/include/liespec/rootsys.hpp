#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "liespec/rational.hpp"

namespace liespec::rootsys {

enum class RootFamily { B4, C4, D4 };

std::string_view name(RootFamily f);

// Vector in the orthonormal eps-basis. Fundamental weights pick up
// half-integer coordinates, so entries are exact rationals throughout.
struct EpsVector {
  std::array<BigRat, 4> coords{};

  friend EpsVector operator+(const EpsVector& a, const EpsVector& b);
  friend EpsVector operator-(const EpsVector& a, const EpsVector& b);
  bool operator==(const EpsVector&) const = default;
};

EpsVector scaled(const EpsVector& v, const BigRat& s);

// Euclidean dot product of the eps coordinates.
BigRat inner_product(const EpsVector& u, const EpsVector& v);

struct RootSystemData {
  RootFamily family{};
  std::array<EpsVector, 4> simple_roots;
  std::vector<EpsVector> positive_roots;  // 16 for B4/C4, 12 for D4
  EpsVector highest_root;
  EpsVector beta;  // half the sum of the positive roots
  std::array<EpsVector, 4> fundamental_weights;
  long long b = 0;  // <h+b,h+b> - <b,b> for the highest root h
};

// Deterministic, immutable; the returned reference is to a shared instance.
const RootSystemData& build_root_system(RootFamily family);

// Recomputed from the stored highest root and beta; equals rs.b.
long long normalization_constant(const RootSystemData& rs);

}  // namespace liespec::rootsys
