#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "liespec/rational.hpp"
#include "liespec/rootsys.hpp"

namespace liespec::spectrum {

// The seven compact connected simple rank-four groups with root systems
// B4, C4, D4; each pairs a root family with a congruence filter on nu.
enum class GroupId { Spin9, SO9, Sp4, PSp4, Spin8, SO8, PSO8 };

std::string_view name(GroupId g);
std::optional<GroupId> parse_group(std::string_view text);  // "spin9", "so8", ...
std::array<GroupId, 7> all_groups();

rootsys::RootFamily family_of(GroupId g);

// Shifted highest-weight coordinates nu_i = Lambda_i + 1, all >= 1.
struct NuVector {
  std::array<int, 4> nu{1, 1, 1, 1};
  auto operator<=>(const NuVector&) const = default;
};

// Throws std::invalid_argument unless every component is >= 1.
void validate(const NuVector& nu);

struct MetricScale {
  BigRat gamma = 1;
};

// Congruence filter of the group's characteristic lattice.
bool admits(GroupId g, const NuVector& nu);

// Integer quadratic form Q with lambda = -(Q(nu) - Q(1,1,1,1)) / (D * gamma).
long long norm_form(rootsys::RootFamily f, const NuVector& nu);
long long norm_form_base(rootsys::RootFamily f);          // 84 / 30 / 56
long long eigenvalue_denominator(rootsys::RootFamily f);  // 56 / 20 / 48

// Exact Laplace eigenvalue for the highest weight with shifted coordinates
// nu. Throws std::invalid_argument if nu fails the group's lattice filter.
BigRat eigenvalue(GroupId g, const NuVector& nu, const MetricScale& scale = {});

// Dimension of the irreducible representation; the defining product is exact
// and a non-integral quotient is a hard logic error.
BigInt weyl_dimension(rootsys::RootFamily f, const NuVector& nu);

struct WeightContribution {
  NuVector nu;
  BigInt dimension;
};

struct SpectrumEntry {
  BigRat lambda;       // <= 0
  BigInt multiplicity; // sum of squared dimensions over contributions
  std::vector<WeightContribution> contributions;  // sorted by nu
};

// All entries with 0 >= lambda >= -max_abs_lambda, sorted by decreasing
// lambda; complete under the bound, contributions aggregated per eigenvalue.
std::vector<SpectrumEntry> enumerate_spectrum(GroupId g, const BigRat& max_abs_lambda,
                                              const MetricScale& scale = {});

// The n largest strictly negative eigenvalues with full multiplicities.
// Grows the cutoff geometrically; each enumeration is complete under its
// bound, so the leading n entries are final as soon as they exist.
std::vector<SpectrumEntry> top_n(GroupId g, int n, const MetricScale& scale = {});

// The three index-two sublattice filters of the D4 weight lattice. All give
// groups isomorphic to SO(8); Nu1Nu3 is the one exposed as GroupId::SO8, the
// other two exist to check that the spectra coincide.
enum class D4Lattice { Nu1Nu3, Nu1Nu4, Nu3Nu4 };

std::vector<SpectrumEntry> enumerate_d4_lattice(D4Lattice which, const BigRat& max_abs_lambda,
                                                const MetricScale& scale = {});

}  // namespace liespec::spectrum
