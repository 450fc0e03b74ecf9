#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liespec/crosscheck.hpp"
#include "liespec/golden.hpp"
#include "liespec/numtheory.hpp"
#include "liespec/spectrum.hpp"

namespace liespec::render {

enum class OutputFormat { Table, CSV, JSON };

std::optional<OutputFormat> parse_format(std::string_view text);  // "table", "csv", "json"

// Rationals render as "p/q" in lowest terms, integers as plain "p";
// multiplicities render as decimal strings in every format.
std::string spectrum_output(spectrum::GroupId g, const std::vector<spectrum::SpectrumEntry>& entries,
                            const BigRat& gamma, OutputFormat fmt);

struct CountQuery {
  numtheory::FormId form{};
  long long k = 0;
  numtheory::CountKind kind{};
  long long value = 0;
  std::optional<long long> oracle;  // set when requested
};

std::string counts_output(const CountQuery& q, OutputFormat fmt);

std::string characterization_output(const crosscheck::CharacterizationResult& res, OutputFormat fmt);

struct VerifySummary {
  std::string scope;
  bool ok = true;
  std::vector<std::string> lines;       // per-scope detail, preformatted
  std::vector<std::string> notes;       // informational annotations
  std::vector<numtheory::Erratum> errata;
};

std::string verify_output(const std::vector<VerifySummary>& sections, OutputFormat fmt);

}  // namespace liespec::render
