#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "liespec/crosscheck.hpp"
#include "liespec/golden.hpp"
#include "liespec/numtheory.hpp"

using namespace liespec;
using namespace liespec::crosscheck;
using spectrum::GroupId;
using spectrum::NuVector;

TEST_CASE("characterize spot verdicts") {
  SUBCASE("spin9 at -9/7: case I with three weights") {
    const auto r = characterize(GroupId::Spin9, BigRat(-9, 7));
    CHECK(r.is_eigenvalue);
    CHECK(r.case_label == CaseLabel::I);
    CHECK(r.predicted_weight_count == 3);
  }
  SUBCASE("spin9 at -9/14: case II with one weight") {
    const auto r = characterize(GroupId::Spin9, BigRat(-9, 14));
    CHECK(r.case_label == CaseLabel::II);
    CHECK(r.predicted_weight_count == 1);
  }
  SUBCASE("pso8 at -4/3: case I with three weights") {
    const auto r = characterize(GroupId::PSO8, BigRat(-4, 3));
    CHECK(r.case_label == CaseLabel::I);
    CHECK(r.predicted_weight_count == 3);
  }
  SUBCASE("spin8 at -7/12: case I with three weights") {
    const auto r = characterize(GroupId::Spin8, BigRat(-7, 12));
    CHECK(r.case_label == CaseLabel::I);
    CHECK(r.predicted_weight_count == 3);
  }
  SUBCASE("so9 at -4/7: one weight") {
    const auto r = characterize(GroupId::SO9, BigRat(-4, 7));
    CHECK(r.is_eigenvalue);
    CHECK(r.predicted_weight_count == 1);
  }
  SUBCASE("sp4 at -9/20: one weight") {
    const auto r = characterize(GroupId::Sp4, BigRat(-9, 20));
    CHECK(r.is_eigenvalue);
    CHECK(r.predicted_weight_count == 1);
  }
  SUBCASE("non-eigenvalues") {
    for (const auto& [g, lambda] :
         std::vector<std::pair<GroupId, BigRat>>{{GroupId::Spin9, BigRat(-1, 5)},
                                                 {GroupId::Spin9, BigRat(-1, 3)},
                                                 {GroupId::SO9, BigRat(-9, 14)},
                                                 {GroupId::PSp4, BigRat(-9, 20)}}) {
      const auto r = characterize(g, lambda);
      CHECK_FALSE(r.is_eigenvalue);
      CHECK(r.case_label == CaseLabel::None);
      CHECK(r.predicted_weight_count == 0);
    }
  }
  SUBCASE("rejects nonnegative lambda") {
    CHECK_THROWS_AS(characterize(GroupId::Spin9, BigRat(0)), std::invalid_argument);
  }
}

TEST_CASE("result invariants over a dense grid") {
  for (GroupId g : spectrum::all_groups()) {
    const long long denom = spectrum::eigenvalue_denominator(spectrum::family_of(g));
    for (long long t = 1; t <= 3 * denom; ++t) {
      const auto r = characterize(g, BigRat(-t, denom));
      CHECK(r.is_eigenvalue == (r.predicted_weight_count > 0));
      CHECK((r.case_label == CaseLabel::None) == !r.is_eigenvalue);
    }
  }
}

TEST_CASE("verify_group is clean at the tabulated depths") {
  for (GroupId g : spectrum::all_groups()) {
    const auto rep = verify_group(g, golden::table_depth(g));
    CAPTURE(spectrum::name(g));
    CHECK(rep.candidates > 0);
    CHECK(rep.mismatches.empty());
  }
}

TEST_CASE("verify_group is clean down to lambda = -6") {
  for (GroupId g : spectrum::all_groups()) {
    const auto rep = verify_group(g, 6);
    CAPTURE(spectrum::name(g));
    CHECK(rep.mismatches.empty());
  }
}

TEST_CASE("verify_group below the first eigenvalue sees an empty spectrum") {
  const auto rep = verify_group(GroupId::PSp4, BigRat(1, 100));
  CHECK(rep.candidates == 0);
  CHECK(rep.mismatches.empty());
}

// The predicted weight counts arise from explicit changes of variables on
// quadruple and triple decompositions; rebuild the spin9 tuples that way and
// compare the multiplicity-weighted sums against enumeration.
TEST_CASE("spin9 weights reconstructed from square decompositions") {
  const auto entries = spectrum::enumerate_spectrum(GroupId::Spin9, 3);
  for (const auto& e : entries) {
    if (e.lambda == 0) continue;
    const long long k1 = to_int64(21 - 14 * e.lambda);
    const long long k2 = 4 * k1;
    std::set<NuVector> rebuilt;
    // odd quadruples x < y < z < v of k2: nu4 = x, nu3 = (y-x)/2, ...
    for (long long x = 1; 4 * x * x < k2; ++x)
      for (long long y = x + 1; x * x + 3 * y * y < k2; ++y)
        for (long long z = y + 1; x * x + y * y + 2 * z * z < k2; ++z) {
          const long long rem = k2 - x * x - y * y - z * z;
          const long long v = static_cast<long long>(std::sqrt(static_cast<double>(rem)));
          for (long long w = v - 2; w <= v + 2; ++w) {
            if (w <= z || w * w != rem) continue;
            if (x % 2 == 0) continue;
            if ((y - x) % 2 != 0 || (z - y) % 2 != 0 || (w - z) % 2 != 0) continue;
            rebuilt.insert(NuVector{static_cast<int>((w - z) / 2), static_cast<int>((z - y) / 2),
                                    static_cast<int>((y - x) / 2), static_cast<int>(x)});
          }
        }
    // arbitrary quadruples of k1: nu4 = 2x, nu3 = y - x, nu2 = z - y, nu1 = v - z
    for (long long x = 1; 4 * x * x < k1; ++x)
      for (long long y = x + 1; x * x + 3 * y * y < k1; ++y)
        for (long long z = y + 1; x * x + y * y + 2 * z * z < k1; ++z) {
          const long long rem = k1 - x * x - y * y - z * z;
          const long long v = static_cast<long long>(std::sqrt(static_cast<double>(rem)));
          for (long long w = v - 2; w <= v + 2; ++w) {
            if (w <= z || w * w != rem) continue;
            rebuilt.insert(NuVector{static_cast<int>(w - z), static_cast<int>(z - y),
                                    static_cast<int>(y - x), static_cast<int>(2 * x)});
          }
        }
    std::set<NuVector> enumerated;
    for (const auto& c : e.contributions) enumerated.insert(c.nu);
    CHECK(rebuilt == enumerated);
    BigInt sigma = 0;
    for (const auto& nu : rebuilt) {
      const BigInt d = spectrum::weyl_dimension(rootsys::RootFamily::B4, nu);
      sigma += d * d;
    }
    CHECK(sigma == e.multiplicity);
  }
}
