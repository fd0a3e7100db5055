#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covariant/axb.hpp"
#include "covariant/covariant_space.hpp"
#include "covariant/verifier.hpp"

namespace covariant {

inline constexpr const char* kSuiteVersion = "1.0";

struct ReportHeader {
  std::uint64_t seed = 7;
  std::size_t trials = 0;
  std::optional<WeightChoice> weights;
  std::optional<GridSpec> grid;
};

/// The report document: header, then cases sorted by key, each with its
/// theorems in id order. Non-finite residuals serialize as null.
/// Byte-stable for identical input.
std::string report_json(const std::vector<CaseReport>& cases, const ReportHeader& header);

/// Human-readable summary table.
std::string report_text(const std::vector<CaseReport>& cases, const ReportHeader& header);

/// {"re": [...], "im": [...]}
std::string function_json(const GroupFunction& f);
/// {"dimension": d, "vectors": [function, ...]}
std::string basis_json(const SubspaceBasis& basis);

}  // namespace covariant
