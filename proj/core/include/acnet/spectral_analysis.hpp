#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "acnet/admittance.hpp"
#include "acnet/eigensolver.hpp"
#include "acnet/network.hpp"

namespace acnet {

/// Numerical slack used by the verifiers. Every field can be overridden by
/// name through `set_tolerance` (the CLI exposes this as `--tol name=value`).
struct Tolerances {
  double zero = 1e-8;    // |lambda| at or below this counts as the zero eigenvalue
  double real = 1e-9;    // |Im lambda| at or below this counts as a real eigenvalue
  double region = 1e-8;  // disk / circle / interval membership
  double trace = 1e-8;   // per-vertex slack on the trace identities
  double match = 1e-8;   // multiset matching distance
  double gap = 1e-10;    // spectral gap lower bound
  double bound = 1e-12;  // admittance inequalities
  double energy = 1e-8;  // eigenpair energy identity, relative
};

/// Returns false when `name` is not a field of Tolerances.
bool set_tolerance(Tolerances& tol, std::string_view name, double value);

struct DiskReport {
  /// min over eigenvalues of |s|/Re s - |1 - lambda|
  double margin = 0.0;
  bool pass = false;
};

DiskReport check_disk(const Spectrum& spectrum, ComplexFrequency s, double tol = 1e-8);

enum class EigenClass { Plus, Minus, Real };

struct CircleRecord {
  Complex eigenvalue;
  EigenClass classification = EigenClass::Real;
  /// Real eigenvalues: distance inside [0, 2]. Otherwise radius minus the
  /// distance to the nearer circle center.
  double margin = 0.0;
  bool in_upper = false;
  bool in_lower = false;
  /// Membership when the circle is chosen by the sign of Re lambda.
  bool by_real_sign = false;
  /// Membership when the circle is chosen by the sign of Im lambda.
  bool by_imag_sign = false;
};

/// Spectrum versus the two circles centered (1, +-|Im s|/Re s) with radius
/// sqrt(1 + (Im s/Re s)^2), and the interval [0, 2] for real eigenvalues.
/// Pass/fail uses the union of the two circles; the sign-based readings are
/// recorded for inspection only.
struct RegionReport {
  double disk_margin = 0.0;
  std::vector<CircleRecord> circle_margins;
  bool real_interval_ok = true;
  bool all_pass = false;

  double min_circle_margin() const;
};

RegionReport check_circles(const Spectrum& spectrum, ComplexFrequency s, const Tolerances& tol = {});

struct TraceReport {
  double sum_error = 0.0;       // |sum lambda - n|
  double imag_sum = 0.0;        // sum Im lambda
  double max_real = 0.0;        // max Re lambda
  double min_nonzero_real = 0.0;
  double max_modulus = 0.0;
  double threshold = 0.0;       // n / (n - 1)
  bool sum_ok = false;
  bool imag_ok = false;
  bool max_real_ok = false;
  bool min_real_ok = false;
  bool max_modulus_ok = false;
  bool pass = false;

  /// Smallest signed slack across the five assertions.
  double margin = 0.0;
};

TraceReport check_trace(const Spectrum& spectrum, std::size_t n, const Tolerances& tol = {});

std::size_t count_zero_eigenvalues(const Spectrum& spectrum, double tol = 1e-8);

/// Exactly one eigenvalue with |lambda| <= tol.
bool check_zero_simple(const Spectrum& spectrum, double tol = 1e-8);

/// Matches conj(spectrum) against the spectrum of the dual network.
Matching check_dual(const Spectrum& spectrum, const Spectrum& dual_spectrum, double tol = 1e-8);

/// For bipartite networks, matches the spectrum against {2 - lambda};
/// nullopt when the graph has an odd cycle.
std::optional<Matching> check_bipartite_symmetry(const Network& net, const Spectrum& spectrum,
                                                 double tol = 1e-8);

/// Smallest eigenvalue modulus after discarding the zero eigenvalue(s).
double smallest_nonzero_modulus(const Spectrum& spectrum, double zero_tol = 1e-8);

struct GapReport {
  GapConstants constants;
  std::size_t diameter = 0;
  bool admissible = false;
  /// C1 (Re s)^2 / (diam * C2 * min(1, |s|^2)); present iff admissible.
  std::optional<double> bound;
  double lambda1_modulus = 0.0;
  /// Present iff `bound` is.
  std::optional<bool> satisfied;
};

GapReport gap_bound(const Network& net, ComplexFrequency s, const Spectrum& spectrum,
                    const Tolerances& tol = {});

/// One frequency of the circle-saturation sweep.
struct SharpnessPoint {
  double s1 = 0.0;
  double s2 = 0.0;
  Complex target_eigenvalue;  // located eigenvalue
  /// |lambda - (1 + i m)| / sqrt(1 + m^2) with m = s2 / s1.
  double ratio = 0.0;
};

/// Builds `p4_example()` at s = s1 + i s2, locates the eigenvalue nearest to
/// 1 + s^2/(1 + s^2) and reports how close it sits to the boundary of the
/// upper circle. Throws SolverError when no eigenvalue lies within 1e-6 of
/// the closed form.
SharpnessPoint sharpness_point(double s1, double s2);

/// `sharpness_point` for each s1. Requires positive ascending s1 values and
/// s2 > 0 (std::invalid_argument otherwise). Points are computed on up to
/// `jobs` threads; the result order follows `s1_values`.
std::vector<SharpnessPoint> sharpness_sweep(std::span<const double> s1_values, double s2,
                                            unsigned jobs = 1);

/// Generalization of the sweep to an arbitrary network: at each frequency
/// the eigenvalue with the largest ratio to the upper circle is reported.
std::vector<SharpnessPoint> saturation_sweep(const Network& net, std::span<const double> s1_values,
                                             double s2, unsigned jobs = 1);

/// Convenience: assemble and solve in one call.
Spectrum laplacian_spectrum(const Network& net, ComplexFrequency s, bool dual = false,
                            const SolverOptions& options = {});

}  // namespace acnet
