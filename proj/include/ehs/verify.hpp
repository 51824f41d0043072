#pragma once

// Seeded sampling on balancing surfaces and the verification harness that
// evaluates both sides of each identity and assembles reports.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ehs/series.hpp"

namespace ehs {

struct Interval {
  double lo;
  double hi;
};

struct SampleConfig {
  std::uint64_t seed = 1;
  Interval p_modulus{0.05, 0.6};
  Interval param_modulus{0.5, 2.0};
  int max_resamples = 100;
  /// Phases of b, c, d are drawn from [floor, 2π - floor].
  double phase_floor = 0.01;

  /// Throws ConfigError unless the ranges are positive and |p| stays below 1.
  void validate() const;
};

/// Deterministic random source for one (identity, n, N) section.
///
/// Uniform doubles are formed from the top 53 bits of mt19937_64 by hand
/// because std::uniform_real_distribution is not portable bit for bit.
class Sampler {
 public:
  Sampler(const SampleConfig& config, std::string_view identity, int n, int N);

  double uniform(double lo, double hi);
  /// Uniform in [lo, hi].
  int integer(int lo, int hi);
  /// Modulus uniform in `modulus`, phase uniform in [floor, 2π - floor].
  BigComplex complex(Interval modulus, double phase_floor = 0.0);
  /// A generic parameter (|q|, |x|, |a| range, unrestricted phase).
  BigComplex param();
  /// A parameter whose phase keeps away from the real axis.
  BigComplex off_axis();
  BigComplex nome();
  EllipticBase base();

  const SampleConfig& config() const noexcept { return config_; }

 private:
  SampleConfig config_;
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------- constraints

/// e = a^2 q^{N+1} / (b c d x^{n-1})
void solve_constraint(CnParams& params, const PrecisionContext& ctx);
/// e = a^2 q^{3-n} / (bcd) without N, a^2 q^{N+2-n} / (bcd) with N.
void solve_constraint(LemmaParams& params, const PrecisionContext& ctx);
/// g = a^3 q^{N+2} / (bcdef)
void solve_constraint(BaileyParams& params, const PrecisionContext& ctx);

CnParams sample_cn(Sampler& sampler, int n, int N, const PrecisionContext& ctx);
LemmaParams sample_lemma(Sampler& sampler, int n, std::optional<int> N, const PrecisionContext& ctx);
BaileyParams sample_bailey(Sampler& sampler, int N, const PrecisionContext& ctx);
/// Generic unbalanced b_1..b_4.
OmegaParams sample_omega(Sampler& sampler, int n, int N);

// ---------------------------------------------------------------- reports

using ParamValue = std::variant<BigComplex, std::string>;

struct NamedParam {
  std::string name;
  ParamValue value;
};

struct TrialRecord {
  std::vector<NamedParam> params;
  BigComplex lhs;
  BigComplex rhs;
  Real rel_err;
  /// For identities whose right side is a sum of terms: the largest term
  /// magnitude, used with |lhs| and |rhs| to normalize the residual.
  std::optional<Real> scale;
};

enum class Status { pass, fail };

struct VerificationReport {
  std::string identity;
  int n = 0;
  int N = 0;
  int digits = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;
  Real max_rel_err;
  Real tolerance;
  Status status = Status::fail;
  int resample_count = 0;
  std::optional<double> wall_time_ms;
  /// Human-readable remarks (precision escalation, diagnosis); not part of
  /// the JSON schema.
  std::vector<std::string> notes;
};

struct IdentityInfo {
  std::string name;
  std::string summary;
  /// Digits of slack below working precision: the check passes when the
  /// worst residual is under 10^{-(digits - offset)}.
  int tolerance_offset;
  bool uses_n;
  bool uses_N;
};

const std::vector<IdentityInfo>& identities();
/// Throws ConfigError for an unknown name.
const IdentityInfo& identity_info(std::string_view name);

/// Runs `trials` fresh samples of the named check. A failure below 80
/// digits is rerun at 80 digits with the same seed; it is reclassified as
/// a precision artifact when the residual shrinks by at least 20 orders of
/// magnitude and then clears the original tolerance.
VerificationReport verify_identity(std::string_view identity, int n, int N, int trials, const SampleConfig& config,
                                   const PrecisionContext& ctx);

/// cn_lhs and cn_rhs at p = 0 against a basic q-Pochhammer oracle that
/// never touches the theta code; all four values must agree pairwise.
VerificationReport degeneration_p0_check(int n, int N, int trials, const SampleConfig& config,
                                         const PrecisionContext& ctx);

struct SuiteSection {
  std::string identity;
  int n;
  int N;
  int trials;
};

/// The full acceptance matrix, in run order.
std::vector<SuiteSection> suite_plan();

}  // namespace ehs
