#pragma once

#include <string>
#include <vector>

#include "acnet/spectral_analysis.hpp"

namespace acnet {

enum class CheckStatus { Pass, Fail, NotApplicable };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  /// Signed slack; negative means the check failed. NaN when not applicable.
  double margin = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::size_t vertices = 0;
  Complex frequency;
  Spectrum spectrum;
  std::vector<CheckResult> checks;

  /// True when no applicable check failed.
  bool all_pass() const;
  const CheckResult* find(std::string_view name) const;
};

/// Runs every structural and spectral check on `net` at frequency `s`:
///
///   admittance_positive  edge_modulus_bound  vertex_modulus_bound  lemma_bound  converged
///   zero_simple  trace  disk  circles  energy_identity  dual  bipartite  gap_bound
///
/// `bipartite` and `gap_bound` are NotApplicable for non-bipartite graphs and
/// inadmissible frequencies respectively.
VerificationReport verify(const Network& net, ComplexFrequency s, const Tolerances& tol = {},
                          const SolverOptions& options = {});

/// Multi-line summary for people.
std::string to_text(const VerificationReport& report);

/// One line per check: `check=<name> pass=<bool> margin=<real>`, followed by
/// ` applicable=false` for checks that did not apply (these report pass=true).
std::string to_key_value(const VerificationReport& report);

std::string format_real(double value);

}  // namespace acnet
