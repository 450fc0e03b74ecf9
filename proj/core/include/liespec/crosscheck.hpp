#pragma once

#include <string_view>
#include <vector>

#include "liespec/rational.hpp"
#include "liespec/spectrum.hpp"

namespace liespec::crosscheck {

enum class CaseLabel { None, I, II, III };

std::string_view name(CaseLabel c);

struct CharacterizationResult {
  spectrum::GroupId group{};
  BigRat lambda;
  bool is_eigenvalue = false;
  CaseLabel case_label = CaseLabel::None;
  long long predicted_weight_count = 0;
};

// Number-theoretic eigenvalue test for gamma = 1: decides whether lambda < 0
// is an eigenvalue and predicts the number of contributing highest weights
// from strict four- and three-square counts. The cases of each group's
// criterion are mutually exclusive; a double match is a logic error.
CharacterizationResult characterize(spectrum::GroupId g, const BigRat& lambda);

struct VerificationRecord {
  BigRat lambda;
  CaseLabel case_label = CaseLabel::None;
  long long predicted = 0;
  long long enumerated = 0;
};

struct GroupVerification {
  spectrum::GroupId group{};
  BigRat cutoff;
  long long candidates = 0;
  std::vector<VerificationRecord> mismatches;
};

// Compares characterize against direct enumeration (gamma = 1) for every
// candidate lambda = -t/D with D the family's eigenvalue denominator and
// |lambda| <= max_abs_lambda; the grid carries every possible eigenvalue.
GroupVerification verify_group(spectrum::GroupId g, const BigRat& max_abs_lambda);

}  // namespace liespec::crosscheck
