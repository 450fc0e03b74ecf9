#include "liespec/crosscheck.hpp"

#include <map>
#include <stdexcept>

#include "liespec/numtheory.hpp"

namespace liespec::crosscheck {

using numtheory::count_strict;
using numtheory::FormId;
using spectrum::GroupId;

std::string_view name(CaseLabel c) {
  switch (c) {
    case CaseLabel::None: return "none";
    case CaseLabel::I: return "I";
    case CaseLabel::II: return "II";
    case CaseLabel::III: return "III";
  }
  throw std::logic_error("name: bad CaseLabel");
}

namespace {

bool natural(const BigRat& r) { return is_positive_integer(r); }

bool odd_natural(const BigRat& r) {
  return natural(r) && boost::multiprecision::numerator(r) % 2 == 1;
}

long long l4(long long k) { return count_strict(FormId::FourSquares, k); }
long long l3(long long k) { return count_strict(FormId::ThreeSquares, k); }

struct Candidate {
  CaseLabel label;
  long long count;
};

void apply(CharacterizationResult& res, std::vector<Candidate> cases) {
  int matched = 0;
  for (const auto& c : cases)
    if (c.count >= 0) {
      ++matched;
      res.is_eigenvalue = true;
      res.case_label = c.label;
      res.predicted_weight_count = c.count;
    }
  if (matched > 1) throw std::logic_error("characterize: criterion cases are not exclusive");
}

}  // namespace

CharacterizationResult characterize(GroupId g, const BigRat& lambda) {
  if (lambda >= 0) throw std::invalid_argument("characterize: lambda must be negative");
  CharacterizationResult res;
  res.group = g;
  res.lambda = lambda;

  // A Candidate count of -1 marks a case whose conditions fail.
  constexpr long long kNo = -1;
  switch (g) {
    case GroupId::Spin9:
    case GroupId::SO9: {
      if (!natural(-14 * lambda)) break;
      const long long k1 = to_int64(21 - 14 * lambda);
      const long long k2 = to_int64(84 - 56 * lambda);
      const bool seven = natural(-7 * lambda);
      if (g == GroupId::Spin9) {
        apply(res, {{CaseLabel::I, seven && l4(k1) < l4(k2) ? l4(k2) : kNo},
                    {CaseLabel::II, l4(k1) > 0 && l4(k2) == l4(k1) ? l4(k1) : kNo}});
      } else {
        apply(res, {{CaseLabel::I, seven && l4(k1) < l4(k2) ? l4(k2) - l4(k1) : kNo}});
      }
      break;
    }
    case GroupId::Sp4:
    case GroupId::PSp4: {
      const bool scale_ok =
          g == GroupId::Sp4 ? natural(-20 * lambda) : natural(-10 * lambda);
      if (!scale_ok) break;
      const long long k = to_int64(30 - 20 * lambda);
      apply(res, {{CaseLabel::I, l4(k) > 0 ? l4(k) : kNo}});
      break;
    }
    case GroupId::Spin8:
    case GroupId::SO8:
    case GroupId::PSO8: {
      if (!natural(-12 * lambda)) break;
      const long long k1 = to_int64(14 - 12 * lambda);
      const long long k2 = 4 * k1;
      const bool odd12 = odd_natural(-12 * lambda);
      const bool six = natural(-6 * lambda);
      if (g == GroupId::Spin8) {
        apply(res,
              {{CaseLabel::I, odd12 && l4(k1) < l4(k2) ? 2 * l4(k2) + l3(k1) : kNo},
               {CaseLabel::II, l4(k1) > 0 && l4(k2) == l4(k1) ? 2 * l4(k1) + l3(k1) : kNo},
               {CaseLabel::III, l4(k2) == 0 && l3(k1) > 0 ? l3(k1) : kNo}});
      } else if (g == GroupId::SO8) {
        apply(res,
              {{CaseLabel::I, odd12 && l4(k2) > l4(k1) ? l4(k2) - l4(k1) : kNo},
               {CaseLabel::II, six && l4(k1) > 0 && l4(k2) == l4(k1) ? 2 * l4(k1) + l3(k1) : kNo},
               {CaseLabel::III, six && l4(k2) == 0 && l3(k1) > 0 ? l3(k1) : kNo}});
      } else {
        apply(res, {{CaseLabel::I, six && l4(k1) > 0 ? 2 * l4(k1) + l3(k1) : kNo},
                    {CaseLabel::II, six && l4(k1) == 0 && l3(k1) > 0 ? l3(k1) : kNo}});
      }
      break;
    }
  }
  return res;
}

GroupVerification verify_group(GroupId g, const BigRat& max_abs_lambda) {
  if (max_abs_lambda <= 0)
    throw std::invalid_argument("verify_group: cutoff must be positive");
  GroupVerification out;
  out.group = g;
  out.cutoff = max_abs_lambda;

  std::map<BigRat, long long> enumerated;
  for (const auto& entry : spectrum::enumerate_spectrum(g, max_abs_lambda, {}))
    if (entry.lambda < 0)
      enumerated[entry.lambda] = static_cast<long long>(entry.contributions.size());

  const long long denom = spectrum::eigenvalue_denominator(spectrum::family_of(g));
  const BigInt t_max = rational_floor(max_abs_lambda * denom);
  for (BigInt t = 1; t <= t_max; ++t) {
    const BigRat lambda = BigRat(BigInt(-t), BigInt(denom));
    const auto res = characterize(g, lambda);
    const auto it = enumerated.find(lambda);
    const long long actual = it == enumerated.end() ? 0 : it->second;
    ++out.candidates;
    if (res.predicted_weight_count != actual || res.is_eigenvalue != (actual > 0))
      out.mismatches.push_back({lambda, res.case_label, res.predicted_weight_count, actual});
  }
  return out;
}

}  // namespace liespec::crosscheck
