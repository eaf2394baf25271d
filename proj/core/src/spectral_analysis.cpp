#include "acnet/spectral_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "acnet/laplacian.hpp"

namespace acnet {

bool set_tolerance(Tolerances& tol, std::string_view name, double value) {
  struct Field {
    std::string_view name;
    double Tolerances::*member;
  };
  static constexpr Field fields[] = {
      {"zero", &Tolerances::zero},     {"real", &Tolerances::real},
      {"region", &Tolerances::region}, {"trace", &Tolerances::trace},
      {"match", &Tolerances::match},   {"gap", &Tolerances::gap},
      {"bound", &Tolerances::bound},   {"energy", &Tolerances::energy},
  };
  for (const auto& f : fields) {
    if (f.name == name) {
      tol.*f.member = value;
      return true;
    }
  }
  return false;
}

Spectrum laplacian_spectrum(const Network& net, ComplexFrequency s, bool dual, const SolverOptions& options) {
  return eigenvalues(assemble(net, s, dual).entries(), options);
}

DiskReport check_disk(const Spectrum& spectrum, ComplexFrequency s, double tol) {
  DiskReport out;
  out.margin = std::numeric_limits<double>::infinity();
  const double radius = s.modulus_ratio();
  for (const auto& lambda : spectrum.eigenvalues) {
    out.margin = std::min(out.margin, radius - std::abs(1.0 - lambda));
  }
  out.pass = out.margin >= -tol;
  return out;
}

double RegionReport::min_circle_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& rec : circle_margins) m = std::min(m, rec.margin);
  return m;
}

RegionReport check_circles(const Spectrum& spectrum, ComplexFrequency s, const Tolerances& tol) {
  RegionReport out;
  const auto disk = check_disk(spectrum, s, tol.region);
  out.disk_margin = disk.margin;

  const double offset = s.slope();
  const double radius = std::sqrt(1.0 + offset * offset);
  const Complex upper(1.0, offset);
  const Complex lower(1.0, -offset);
  bool circles_ok = true;

  for (const auto& lambda : spectrum.eigenvalues) {
    CircleRecord rec;
    rec.eigenvalue = lambda;
    const double d_upper = std::abs(lambda - upper);
    const double d_lower = std::abs(lambda - lower);
    rec.in_upper = d_upper <= radius + tol.region;
    rec.in_lower = d_lower <= radius + tol.region;
    rec.by_real_sign = lambda.real() > 0.0   ? rec.in_upper
                       : lambda.real() < 0.0 ? rec.in_lower
                                             : rec.in_upper || rec.in_lower;
    rec.by_imag_sign = lambda.imag() >= 0.0 ? rec.in_upper : rec.in_lower;

    if (std::abs(lambda.imag()) <= tol.real) {
      rec.classification = EigenClass::Real;
      rec.margin = std::min(lambda.real(), 2.0 - lambda.real());
      if (rec.margin < -tol.region) out.real_interval_ok = false;
    } else {
      rec.classification = lambda.imag() > 0.0 ? EigenClass::Plus : EigenClass::Minus;
      rec.margin = radius - std::min(d_upper, d_lower);
      if (rec.margin < -tol.region) circles_ok = false;
    }
    out.circle_margins.push_back(rec);
  }
  out.all_pass = disk.pass && circles_ok && out.real_interval_ok;
  return out;
}

TraceReport check_trace(const Spectrum& spectrum, std::size_t n, const Tolerances& tol) {
  TraceReport out;
  const double dn = static_cast<double>(n);
  out.threshold = n > 1 ? dn / (dn - 1.0) : std::numeric_limits<double>::infinity();

  Complex sum{};
  out.max_real = -std::numeric_limits<double>::infinity();
  out.min_nonzero_real = std::numeric_limits<double>::infinity();
  for (const auto& lambda : spectrum.eigenvalues) {
    sum += lambda;
    out.max_real = std::max(out.max_real, lambda.real());
    out.max_modulus = std::max(out.max_modulus, std::abs(lambda));
    if (std::abs(lambda) > tol.zero) out.min_nonzero_real = std::min(out.min_nonzero_real, lambda.real());
  }
  out.sum_error = std::abs(sum - dn);
  out.imag_sum = sum.imag();

  const double slack = tol.trace * dn;
  const double margins[] = {
      slack - out.sum_error,
      slack - std::abs(out.imag_sum),
      out.max_real - (out.threshold - tol.trace),
      (out.threshold + tol.trace) - out.min_nonzero_real,
      out.max_modulus - (out.threshold - tol.trace),
  };
  out.sum_ok = margins[0] >= 0.0;
  out.imag_ok = margins[1] >= 0.0;
  out.max_real_ok = margins[2] >= 0.0;
  out.min_real_ok = margins[3] >= 0.0;
  out.max_modulus_ok = margins[4] >= 0.0;
  out.pass = out.sum_ok && out.imag_ok && out.max_real_ok && out.min_real_ok && out.max_modulus_ok;
  out.margin = *std::min_element(std::begin(margins), std::end(margins));
  return out;
}

std::size_t count_zero_eigenvalues(const Spectrum& spectrum, double tol) {
  return static_cast<std::size_t>(std::count_if(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                                                [tol](Complex z) { return std::abs(z) <= tol; }));
}

bool check_zero_simple(const Spectrum& spectrum, double tol) {
  return count_zero_eigenvalues(spectrum, tol) == 1;
}

Matching check_dual(const Spectrum& spectrum, const Spectrum& dual_spectrum, double tol) {
  std::vector<Complex> conjugated;
  conjugated.reserve(spectrum.size());
  for (const auto& z : spectrum.eigenvalues) conjugated.push_back(std::conj(z));
  return match_multisets(conjugated, dual_spectrum.eigenvalues, tol);
}

std::optional<Matching> check_bipartite_symmetry(const Network& net, const Spectrum& spectrum,
                                                 double tol) {
  if (!bipartition(net)) return std::nullopt;
  std::vector<Complex> reflected;
  reflected.reserve(spectrum.size());
  for (const auto& z : spectrum.eigenvalues) reflected.push_back(2.0 - z);
  return match_multisets(spectrum.eigenvalues, reflected, tol);
}

double smallest_nonzero_modulus(const Spectrum& spectrum, double zero_tol) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& z : spectrum.eigenvalues) {
    const double m = std::abs(z);
    if (m > zero_tol) best = std::min(best, m);
  }
  return best;
}

GapReport gap_bound(const Network& net, ComplexFrequency s, const Spectrum& spectrum,
                    const Tolerances& tol) {
  GapReport out;
  out.constants = gap_constants(net, s);
  out.diameter = diameter(net);
  out.admissible = out.constants.admissible;
  out.lambda1_modulus = smallest_nonzero_modulus(spectrum, tol.zero);
  if (out.admissible) {
    const double re = s.re();
    const double denom = static_cast<double>(out.diameter) * out.constants.c2 *
                         std::min(1.0, std::norm(s.value()));
    out.bound = out.constants.c1 * re * re / denom;
    out.satisfied = out.lambda1_modulus >= *out.bound - tol.gap;
  }
  return out;
}

namespace {

void check_sweep_arguments(std::span<const double> s1_values, double s2) {
  if (s1_values.empty()) throw std::invalid_argument("sweep needs at least one s1 value");
  if (!(s2 > 0.0) || !std::isfinite(s2)) throw std::invalid_argument("s2 must be positive");
  for (std::size_t i = 0; i < s1_values.size(); ++i) {
    if (!(s1_values[i] > 0.0) || !std::isfinite(s1_values[i])) {
      throw std::invalid_argument("s1 values must be positive");
    }
    if (i > 0 && !(s1_values[i] > s1_values[i - 1])) {
      throw std::invalid_argument("s1 values must be strictly ascending");
    }
  }
}

double upper_circle_ratio(Complex lambda, double m) {
  return std::abs(lambda - Complex(1.0, m)) / std::sqrt(1.0 + m * m);
}

template <typename Fn>
std::vector<SharpnessPoint> run_points(std::span<const double> s1_values, unsigned jobs, Fn point) {
  std::vector<SharpnessPoint> out(s1_values.size());
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, s1_values.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < s1_values.size(); ++i) out[i] = point(s1_values[i]);
    return out;
  }
  std::vector<std::future<void>> tasks;
  tasks.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < s1_values.size(); i += workers) out[i] = point(s1_values[i]);
    }));
  }
  std::exception_ptr first_error;
  for (auto& t : tasks) {
    try {
      t.get();
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace

SharpnessPoint sharpness_point(double s1, double s2) {
  const ComplexFrequency s(s1, s2);
  const Complex sq = s.value() * s.value();
  const Complex target = 1.0 + sq / (1.0 + sq);

  SolverOptions options;
  options.compute_residuals = false;
  const auto spectrum = eigenvalues(assemble(p4_example(), s).entries(), options);
  if (!spectrum.converged) throw SolverError("eigensolver did not converge");

  const auto nearest = std::min_element(
      spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
      [&](Complex a, Complex b) { return std::abs(a - target) < std::abs(b - target); });
  if (std::abs(*nearest - target) > 1e-6) {
    throw SolverError("no eigenvalue near 1 + s^2/(1 + s^2) at s1=" + std::to_string(s1));
  }
  SharpnessPoint p;
  p.s1 = s1;
  p.s2 = s2;
  p.target_eigenvalue = *nearest;
  p.ratio = upper_circle_ratio(*nearest, s2 / s1);
  return p;
}

std::vector<SharpnessPoint> sharpness_sweep(std::span<const double> s1_values, double s2,
                                            unsigned jobs) {
  check_sweep_arguments(s1_values, s2);
  return run_points(s1_values, jobs, [s2](double s1) { return sharpness_point(s1, s2); });
}

std::vector<SharpnessPoint> saturation_sweep(const Network& net, std::span<const double> s1_values,
                                             double s2, unsigned jobs) {
  check_sweep_arguments(s1_values, s2);
  return run_points(s1_values, jobs, [&net, s2](double s1) {
    const ComplexFrequency s(s1, s2);
    SolverOptions options;
    options.compute_residuals = false;
    const auto spectrum = eigenvalues(assemble(net, s).entries(), options);
    if (!spectrum.converged) throw SolverError("eigensolver did not converge");
    const double m = s2 / s1;
    SharpnessPoint p;
    p.s1 = s1;
    p.s2 = s2;
    p.ratio = -1.0;
    for (const auto& lambda : spectrum.eigenvalues) {
      // Eigenvalues below the axis are measured against the mirrored circle.
      const Complex mirrored = lambda.imag() < 0.0 ? std::conj(lambda) : lambda;
      const double r = upper_circle_ratio(mirrored, m);
      if (r > p.ratio) {
        p.ratio = r;
        p.target_eigenvalue = lambda;
      }
    }
    return p;
  });
}

}  // namespace acnet
