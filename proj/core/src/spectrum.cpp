#include "liespec/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace liespec::spectrum {

using rootsys::RootFamily;

std::string_view name(GroupId g) {
  switch (g) {
    case GroupId::Spin9: return "spin9";
    case GroupId::SO9: return "so9";
    case GroupId::Sp4: return "sp4";
    case GroupId::PSp4: return "psp4";
    case GroupId::Spin8: return "spin8";
    case GroupId::SO8: return "so8";
    case GroupId::PSO8: return "pso8";
  }
  throw std::logic_error("name: bad GroupId");
}

std::optional<GroupId> parse_group(std::string_view text) {
  for (GroupId g : all_groups())
    if (text == name(g)) return g;
  return std::nullopt;
}

std::array<GroupId, 7> all_groups() {
  return {GroupId::Spin9, GroupId::SO9,  GroupId::Sp4, GroupId::PSp4,
          GroupId::Spin8, GroupId::SO8, GroupId::PSO8};
}

RootFamily family_of(GroupId g) {
  switch (g) {
    case GroupId::Spin9:
    case GroupId::SO9: return RootFamily::B4;
    case GroupId::Sp4:
    case GroupId::PSp4: return RootFamily::C4;
    default: return RootFamily::D4;
  }
}

void validate(const NuVector& nu) {
  for (int c : nu.nu)
    if (c < 1) throw std::invalid_argument("NuVector: components must be >= 1");
}

bool admits(GroupId g, const NuVector& v) {
  validate(v);
  const auto& n = v.nu;
  switch (g) {
    case GroupId::Spin9:
    case GroupId::Sp4:
    case GroupId::Spin8: return true;
    case GroupId::SO9: return n[3] % 2 == 1;
    case GroupId::PSp4: return (n[0] - n[2]) % 2 == 0;
    case GroupId::SO8: return (n[0] - n[2]) % 2 == 0;
    case GroupId::PSO8: return (n[0] - n[2]) % 2 == 0 && (n[0] - n[3]) % 2 == 0;
  }
  throw std::logic_error("admits: bad GroupId");
}

namespace {

long long sq(long long x) { return x * x; }

bool admits_d4(D4Lattice which, const NuVector& v) {
  const auto& n = v.nu;
  switch (which) {
    case D4Lattice::Nu1Nu3: return (n[0] - n[2]) % 2 == 0;
    case D4Lattice::Nu1Nu4: return (n[0] - n[3]) % 2 == 0;
    case D4Lattice::Nu3Nu4: return (n[2] - n[3]) % 2 == 0;
  }
  throw std::logic_error("admits_d4: bad D4Lattice");
}

void check_scale(const MetricScale& scale) {
  if (scale.gamma <= 0) throw std::invalid_argument("MetricScale: gamma must be positive");
}

}  // namespace

long long norm_form(RootFamily f, const NuVector& v) {
  const long long n1 = v.nu[0], n2 = v.nu[1], n3 = v.nu[2], n4 = v.nu[3];
  switch (f) {
    case RootFamily::B4:
      return sq(2 * n1 + 2 * n2 + 2 * n3 + n4) + sq(2 * n2 + 2 * n3 + n4) + sq(2 * n3 + n4) + sq(n4);
    case RootFamily::C4:
      return sq(n1 + n2 + n3 + n4) + sq(n2 + n3 + n4) + sq(n3 + n4) + sq(n4);
    case RootFamily::D4:
      return sq(2 * n1 + 2 * n2 + n3 + n4) + sq(2 * n2 + n3 + n4) + 2 * sq(n3) + 2 * sq(n4);
  }
  throw std::logic_error("norm_form: bad RootFamily");
}

long long norm_form_base(RootFamily f) {
  switch (f) {
    case RootFamily::B4: return 84;
    case RootFamily::C4: return 30;
    case RootFamily::D4: return 56;
  }
  throw std::logic_error("norm_form_base: bad RootFamily");
}

long long eigenvalue_denominator(RootFamily f) {
  switch (f) {
    case RootFamily::B4: return 56;
    case RootFamily::C4: return 20;
    case RootFamily::D4: return 48;
  }
  throw std::logic_error("eigenvalue_denominator: bad RootFamily");
}

BigRat eigenvalue(GroupId g, const NuVector& nu, const MetricScale& scale) {
  check_scale(scale);
  if (!admits(g, nu))
    throw std::invalid_argument(std::string("eigenvalue: nu not admissible for ") + std::string(name(g)));
  const RootFamily f = family_of(g);
  const long long q = norm_form(f, nu);
  return BigRat(norm_form_base(f) - q) / (BigRat(eigenvalue_denominator(f)) * scale.gamma);
}

BigInt weyl_dimension(RootFamily f, const NuVector& v) {
  validate(v);
  const long long n1 = v.nu[0], n2 = v.nu[1], n3 = v.nu[2], n4 = v.nu[3];
  BigInt p = 1;
  long long den = 0;
  switch (f) {
    case RootFamily::B4:
      for (long long t : {n1, n2, n3, n4, n1 + n2, n2 + n3, n3 + n4, 2 * n3 + n4,
                          n1 + n2 + n3, n2 + n3 + n4, n2 + 2 * n3 + n4, 2 * n2 + 2 * n3 + n4,
                          n1 + n2 + n3 + n4, n1 + 2 * n2 + 2 * n3 + n4, n1 + n2 + 2 * n3 + n4,
                          2 * n1 + 2 * n2 + 2 * n3 + n4})
        p *= t;
      den = 3628800;
      break;
    case RootFamily::C4:
      for (long long t : {n1, n2, n3, n4, n1 + n2, n2 + n3, n3 + n4, n3 + 2 * n4,
                          n1 + n2 + n3, n2 + n3 + n4, n2 + n3 + 2 * n4, n2 + 2 * n3 + 2 * n4,
                          n1 + n2 + n3 + n4, n1 + n2 + 2 * n3 + 2 * n4, n1 + n2 + n3 + 2 * n4,
                          n1 + 2 * n2 + 2 * n3 + 2 * n4})
        p *= t;
      den = 3628800;
      break;
    case RootFamily::D4:
      for (long long t : {n1, n2, n3, n4, n1 + n2, n2 + n3, n2 + n4, n1 + n2 + n3,
                          n1 + n2 + n4, n2 + n3 + n4, n1 + n2 + n3 + n4, n1 + 2 * n2 + n3 + n4})
        p *= t;
      den = 4320;
      break;
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(p, BigInt(den), q, r);
  if (r != 0) throw std::logic_error("weyl_dimension: non-integral product");
  return q;
}

namespace {

std::vector<SpectrumEntry> enumerate_filtered(RootFamily f, const BigRat& max_abs_lambda,
                                              const MetricScale& scale,
                                              const std::function<bool(const NuVector&)>& keep) {
  check_scale(scale);
  if (max_abs_lambda < 0) throw std::invalid_argument("enumerate_spectrum: negative bound");

  const long long base = norm_form_base(f);
  const long long denom = eigenvalue_denominator(f);
  const BigRat qmax_rat = BigRat(base) + BigRat(denom) * scale.gamma * max_abs_lambda;
  const BigInt qmax_big = rational_floor(qmax_rat);
  if (qmax_big > BigInt(1) << 40)
    throw std::invalid_argument("enumerate_spectrum: bound too large");
  const long long qmax = qmax_big.convert_to<long long>();

  // Q is strictly increasing in each component, so bounding each loop with
  // the remaining components at 1 is exact and the scan is complete.
  std::map<BigRat, std::vector<WeightContribution>, std::greater<BigRat>> found;
  const BigRat scaled_denom = BigRat(denom) * scale.gamma;
  for (long long n4 = 1; norm_form(f, {1, 1, 1, static_cast<int>(n4)}) <= qmax; ++n4)
    for (long long n3 = 1; norm_form(f, {1, 1, static_cast<int>(n3), static_cast<int>(n4)}) <= qmax; ++n3)
      for (long long n2 = 1; norm_form(f, {1, static_cast<int>(n2), static_cast<int>(n3), static_cast<int>(n4)}) <= qmax; ++n2)
        for (long long n1 = 1;; ++n1) {
          const NuVector nu{static_cast<int>(n1), static_cast<int>(n2), static_cast<int>(n3), static_cast<int>(n4)};
          const long long q = norm_form(f, nu);
          if (q > qmax) break;
          if (!keep(nu)) continue;
          const BigRat lambda = BigRat(base - q) / scaled_denom;
          found[lambda].push_back({nu, weyl_dimension(f, nu)});
        }

  std::vector<SpectrumEntry> out;
  out.reserve(found.size());
  for (auto& [lambda, contribs] : found) {
    std::sort(contribs.begin(), contribs.end(),
              [](const WeightContribution& a, const WeightContribution& b) { return a.nu < b.nu; });
    BigInt mult = 0;
    for (const auto& c : contribs) mult += c.dimension * c.dimension;
    out.push_back({lambda, std::move(mult), std::move(contribs)});
  }
  return out;
}

}  // namespace

std::vector<SpectrumEntry> enumerate_spectrum(GroupId g, const BigRat& max_abs_lambda,
                                              const MetricScale& scale) {
  return enumerate_filtered(family_of(g), max_abs_lambda, scale,
                            [g](const NuVector& nu) { return admits(g, nu); });
}

std::vector<SpectrumEntry> enumerate_d4_lattice(D4Lattice which, const BigRat& max_abs_lambda,
                                                const MetricScale& scale) {
  return enumerate_filtered(RootFamily::D4, max_abs_lambda, scale,
                            [which](const NuVector& nu) { return admits_d4(which, nu); });
}

std::vector<SpectrumEntry> top_n(GroupId g, int n, const MetricScale& scale) {
  if (n < 1) throw std::invalid_argument("top_n: n must be >= 1");
  BigRat cutoff = 1;
  for (;;) {
    auto entries = enumerate_spectrum(g, cutoff, scale);
    // entries.front() is lambda = 0; the rest are the negative eigenvalues.
    if (static_cast<long long>(entries.size()) - 1 >= n) {
      entries.erase(entries.begin());
      entries.resize(static_cast<std::size_t>(n));
      return entries;
    }
    cutoff *= 2;
  }
}

}  // namespace liespec::spectrum
