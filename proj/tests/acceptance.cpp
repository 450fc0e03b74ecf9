// Acceptance suite: one binary, one pass/fail line per criterion, exact
// arithmetic throughout. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "liespec/crosscheck.hpp"
#include "liespec/golden.hpp"
#include "liespec/numtheory.hpp"
#include "liespec/rootsys.hpp"
#include "liespec/spectrum.hpp"

using namespace liespec;
using spectrum::GroupId;
using spectrum::NuVector;
using rootsys::RootFamily;

namespace {

int failures = 0;

void report(int index, const std::string& title, bool ok, const std::string& detail) {
  std::cout << "criterion " << index << " (" << title << "): " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

void run(int index, const std::string& title,
         const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    std::tie(ok, detail) = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  report(index, title, ok, detail + (detail.empty() ? "" : ", ") + std::to_string(ms) + " ms");
}

std::pair<bool, std::string> golden_tables() {
  const auto result = golden::verify_tables();
  std::ostringstream os;
  os << result.rows_checked << " rows, " << result.diffs.size() << " diffs, "
     << result.notes.size() << " documented omissions";
  for (const auto& d : result.diffs) std::cout << "  diff: " << d << "\n";
  for (const auto& n : result.notes) std::cout << "  note: " << n << "\n";
  return {result.rows_checked == 70 && result.diffs.empty(), os.str()};
}

std::pair<bool, std::string> least_eigenvalues() {
  const std::vector<std::tuple<GroupId, BigRat, BigInt>> expected = {
      {GroupId::Spin9, BigRat(-4, 7), 81},   {GroupId::SO9, BigRat(-4, 7), 81},
      {GroupId::Sp4, BigRat(-9, 20), 64},    {GroupId::PSp4, BigRat(-4, 5), 729},
      {GroupId::Spin8, BigRat(-7, 12), 192}, {GroupId::SO8, BigRat(-7, 12), 64},
      {GroupId::PSO8, BigRat(-1), 784},
  };
  bool ok = true;
  for (const auto& [g, lambda, sigma] : expected) {
    const auto top = spectrum::top_n(g, 1);
    if (top.size() != 1 || top[0].lambda != lambda || top[0].multiplicity != sigma) {
      ok = false;
      std::cout << "  least eigenvalue mismatch for " << spectrum::name(g) << "\n";
    }
  }
  return {ok, "7 groups"};
}

std::pair<bool, std::string> dimension_spot_checks() {
  bool ok = true;
  ok &= spectrum::weyl_dimension(RootFamily::B4, {2, 1, 1, 1}) == 9;
  ok &= spectrum::weyl_dimension(RootFamily::C4, {2, 1, 1, 1}) == 8;
  ok &= spectrum::weyl_dimension(RootFamily::C4, {1, 2, 1, 1}) == 27;
  ok &= spectrum::weyl_dimension(RootFamily::D4, {1, 2, 1, 1}) == 28;
  for (RootFamily f : {RootFamily::B4, RootFamily::C4, RootFamily::D4})
    ok &= spectrum::weyl_dimension(f, {1, 1, 1, 1}) == 1;
  return {ok, "9, 8, 27, 28 and units"};
}

std::pair<bool, std::string> oracle_sweep() {
  const auto rep = numtheory::validate_range(2000);
  for (const auto& e : rep.unexplained) std::cout << "  unexplained: " << to_line(e) << "\n";
  bool cited = true;
  for (const auto& e : rep.errata)
    if (e.theorem.empty()) cited = false;
  std::ostringstream os;
  os << rep.checks << " checks, " << rep.errata.size() << " documented errata, "
     << rep.unexplained.size() << " unexplained";
  return {rep.unexplained.empty() && cited, os.str()};
}

std::pair<bool, std::string> jacobi_zolotarev() {
  long long pairs = 0;
  for (long long n = 3; n <= 201; n += 2)
    for (long long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      ++pairs;
      if (numtheory::jacobi_symbol(a, n) != numtheory::zolotarev_sign(a, n))
        return {false, "mismatch at a=" + std::to_string(a) + ", n=" + std::to_string(n)};
    }
  return {true, std::to_string(pairs) + " pairs"};
}

std::pair<bool, std::string> strict_four_square_routes() {
  for (long long k = 1; k <= 2000; ++k)
    if (numtheory::count_l4_direct(k) != numtheory::count_strict(numtheory::FormId::FourSquares, k))
      return {false, "diverges at k=" + std::to_string(k)};
  return {true, "k <= 2000"};
}

std::pair<bool, std::string> characterization_consistency() {
  bool ok = true;
  long long candidates = 0;
  for (GroupId g : spectrum::all_groups()) {
    const auto rep = crosscheck::verify_group(g, golden::table_depth(g));
    candidates += rep.candidates;
    if (!rep.mismatches.empty()) {
      ok = false;
      for (const auto& m : rep.mismatches)
        std::cout << "  " << spectrum::name(g) << " lambda=" << rat_string(m.lambda)
                  << " predicted=" << m.predicted << " enumerated=" << m.enumerated << "\n";
    }
  }
  return {ok, std::to_string(candidates) + " candidates over 7 groups"};
}

std::pair<bool, std::string> property_suites() {
  bool ok = true;
  auto expect = [&ok](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      std::cout << "  property failed: " << what << "\n";
    }
  };

  // Root-system identities and normalization constants.
  for (RootFamily f : {RootFamily::B4, RootFamily::C4, RootFamily::D4}) {
    const auto& rs = rootsys::build_root_system(f);
    rootsys::EpsVector sum;
    for (const auto& a : rs.positive_roots) sum = sum + a;
    expect(sum == rootsys::scaled(rs.beta, BigRat(2)), "2 beta = sum of positive roots");
    rootsys::EpsVector wsum;
    for (const auto& w : rs.fundamental_weights) wsum = wsum + w;
    expect(wsum == rs.beta, "beta = sum of fundamental weights");
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const auto& alpha = rs.simple_roots[static_cast<std::size_t>(i)];
        const auto& omega = rs.fundamental_weights[static_cast<std::size_t>(j)];
        expect(2 * inner_product(omega, alpha) / inner_product(alpha, alpha) ==
                   BigRat(i == j ? 1 : 0),
               "weight/root duality");
      }
  }
  expect(rootsys::build_root_system(RootFamily::B4).b == 14, "b(B4) = 14");
  expect(rootsys::build_root_system(RootFamily::C4).b == 20, "b(C4) = 20");
  expect(rootsys::build_root_system(RootFamily::D4).b == 12, "b(D4) = 12");

  // Dimension integrality over the small box (the product is exact or the
  // call throws).
  for (RootFamily f : {RootFamily::B4, RootFamily::C4, RootFamily::D4})
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b)
        for (int c = 1; c <= 6; ++c)
          for (int d = 1; d <= 6; ++d)
            expect(spectrum::weyl_dimension(f, {a, b, c, d}) >= 1, "dimension integrality");

  // Multiplicity assembly.
  for (GroupId g : spectrum::all_groups())
    for (const auto& e : spectrum::enumerate_spectrum(g, 2)) {
      BigInt sum = 0;
      for (const auto& c : e.contributions) sum += c.dimension * c.dimension;
      expect(sum == e.multiplicity, "sigma = sum of squared dimensions");
    }

  // Gamma scaling.
  for (GroupId g : spectrum::all_groups()) {
    const NuVector nu{3, 1, 1, 1};
    if (!spectrum::admits(g, nu)) continue;
    const BigRat at_one = spectrum::eigenvalue(g, nu);
    for (const BigRat& gamma : {BigRat(1), BigRat(1, 2), BigRat(3)})
      expect(spectrum::eigenvalue(g, nu, {gamma}) * gamma == at_one, "gamma scaling");
  }

  // Triality of the D4 dimension formula and the nu3/nu4 symmetry of the
  // eigenvalue form.
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        for (int d = 1; d <= 4; ++d) {
          const BigInt base = spectrum::weyl_dimension(RootFamily::D4, {a, b, c, d});
          expect(spectrum::weyl_dimension(RootFamily::D4, {c, b, d, a}) == base, "triality");
          expect(spectrum::weyl_dimension(RootFamily::D4, {d, b, a, c}) == base, "triality");
          expect(spectrum::norm_form(RootFamily::D4, {a, b, c, d}) ==
                     spectrum::norm_form(RootFamily::D4, {a, b, d, c}),
                 "nu3/nu4 symmetry");
        }

  // Lattice inclusion: each subgroup-lattice entry embeds in the cover.
  auto embeds = [&](GroupId small, GroupId big) {
    const auto inner = spectrum::enumerate_spectrum(small, 3);
    const auto outer = spectrum::enumerate_spectrum(big, 3);
    for (const auto& e : inner) {
      bool found_lambda = false;
      for (const auto& o : outer) {
        if (o.lambda != e.lambda) continue;
        found_lambda = true;
        std::set<NuVector> have;
        for (const auto& c : o.contributions) have.insert(c.nu);
        for (const auto& c : e.contributions)
          if (!have.count(c.nu)) return false;
      }
      if (!found_lambda) return false;
    }
    return true;
  };
  expect(embeds(GroupId::SO9, GroupId::Spin9), "SO9 inside Spin9");
  expect(embeds(GroupId::SO8, GroupId::Spin8), "SO8 inside Spin8");
  expect(embeds(GroupId::PSO8, GroupId::SO8), "PSO8 inside SO8");

  return {ok, "root data, integrality, assembly, scaling, triality, inclusions"};
}

}  // namespace

int main() {
  run(1, "golden tables, exact", golden_tables);
  run(2, "least eigenvalues with multiplicities", least_eigenvalues);
  run(3, "dimension spot checks", dimension_spot_checks);
  run(4, "formula vs oracle sweep, k <= 2000", oracle_sweep);
  run(5, "jacobi equals zolotarev sign, n <= 201", jacobi_zolotarev);
  run(6, "strict four-squares identity, k <= 2000", strict_four_square_routes);
  run(7, "characterization consistency at table depths", characterization_consistency);
  run(8, "property suites", property_suites);
  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criterion(s) failed\n";
  return 1;
}
