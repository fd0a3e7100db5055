#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covariant/axb.hpp"
#include "covariant/characters.hpp"
#include "covariant/group.hpp"
#include "covariant/haar.hpp"

namespace covariant {

enum class TheoremId {
  intertwine_R,
  intertwine_L,
  normal_formula,
  left_char_formula,
  adjointness,
  compact_norm,
  contraction,
  infimum,
  quotient_isometry,
  kernel_closure,
  duality,
  surjectivity,
  weil,
  sigma_relation,
};

inline constexpr std::size_t kTheoremCount = 14;
inline constexpr std::array<TheoremId, kTheoremCount> kAllTheorems = {
    TheoremId::intertwine_R,   TheoremId::intertwine_L,      TheoremId::normal_formula, TheoremId::left_char_formula,
    TheoremId::adjointness,    TheoremId::compact_norm,      TheoremId::contraction,    TheoremId::infimum,
    TheoremId::quotient_isometry, TheoremId::kernel_closure, TheoremId::duality,        TheoremId::surjectivity,
    TheoremId::weil,           TheoremId::sigma_relation,
};

/// The checks the continuous model runs.
inline constexpr std::array<TheoremId, 8> kAxbTheorems = {
    TheoremId::intertwine_R, TheoremId::intertwine_L, TheoremId::normal_formula, TheoremId::left_char_formula,
    TheoremId::adjointness,  TheoremId::contraction,  TheoremId::weil,           TheoremId::sigma_relation,
};

std::string_view to_string(TheoremId id) noexcept;
/// Throws UnknownTheorem.
TheoremId theorem_from_string(std::string_view name);

inline constexpr double kFiniteTolerance = 1e-9;
inline constexpr double kContinuousTolerance = 1e-6;
/// Slack granted to the descent falsifier before it counts as a violation.
inline constexpr double kDescentTolerance = 1e-6;

/// Identifies one (G, N, xi) triple, or one omega of the ax+b model.
struct CaseKey {
  std::string group;
  std::vector<Element> subgroup;
  std::uint32_t modulus = 1;
  std::vector<std::uint32_t> exponents;
  std::optional<double> omega;

  static CaseKey of(const Character& xi);
  static CaseKey axb(double omega);

  /// Canonical one-line form, also the seed key.
  std::string text() const;

  friend bool operator<(const CaseKey& a, const CaseKey& b);
  friend bool operator==(const CaseKey&, const CaseKey&) = default;
};

struct TheoremReport {
  CaseKey case_key;
  TheoremId id = TheoremId::intertwine_R;
  bool passed = false;
  /// Max-norm over every sampled identity; infinity when the check threw.
  double residual = 0.0;
  std::size_t samples = 0;
  std::string detail;
};

/// (u, v) used for every case, or v = 1/|N| per subgroup.
struct WeightChoice {
  double u = 1.0;
  double v = 1.0;
  bool probability = false;

  HaarData resolve(const Subgroup& n) const;
  std::string text() const;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t trials = 100;
  double tolerance = kFiniteTolerance;
  /// Snap random values to k/16.
  bool snap = true;
  WeightChoice weights;
  std::size_t descent_restarts = 500;
  std::size_t descent_iterations = 30;
  /// Test-only: run every check against a copy of xi with one exponent
  /// corrupted, to show the checks can fail.
  bool corrupt_character = false;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct CaseReport {
  CaseKey key;
  HaarData haar;
  std::vector<TheoremReport> theorems;
};

/// Runs one check for one case. Deterministic for fixed options.seed.
/// Throws NotNormal.
TheoremReport verify_theorem(TheoremId id, const Character& xi, const HaarData& haar, const SuiteOptions& options);

/// All checks for one case, in theorem order.
CaseReport run_case(const Character& xi, const SuiteOptions& options);

/// Every normal subgroup and every character of g, sorted by case key.
/// Throws TooLarge, ParameterOutOfRange (trials = 0).
std::vector<CaseReport> run_suite(const GroupPtr& g, const SuiteOptions& options);

/// Flattened reports sorted by case key, then theorem id.
std::vector<TheoremReport> flatten(const std::vector<CaseReport>& cases);

bool all_passed(const std::vector<CaseReport>& cases) noexcept;

/// xi with one exponent negated (or bumped where negation is a no-op).
Character corrupted_character(const Character& xi);

struct AxbSuiteOptions {
  std::vector<double> omegas = {1.0};
  GridSpec grid;
  std::size_t trials = 10;
  std::uint64_t seed = 7;
  double tolerance = kContinuousTolerance;
};

/// One case per omega with the kAxbTheorems checks. Throws GridTooCoarse,
/// ParameterOutOfRange.
std::vector<CaseReport> run_axb_suite(const AxbSuiteOptions& options);

/// Errors against closed forms on one grid: Weil integral of a reference
/// Gaussian, sigma_N at a in {1/2, 2, 3}, and T_xi of a Gaussian.
struct ClosedFormErrors {
  double weil = 0.0;
  double sigma = 0.0;
  double t_xi = 0.0;
};

ClosedFormErrors closed_form_errors(const QuadratureGrid& grid, double omega);

}  // namespace covariant
