#include "acnet/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "acnet/laplacian.hpp"

namespace acnet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CheckResult make_check(std::string name, bool pass, double margin, std::string detail = {}) {
  return {std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail, margin, std::move(detail)};
}

CheckResult not_applicable(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::NotApplicable, kNaN, std::move(detail)};
}

// Absolute slack for values of order one, relative beyond that.
double scaled(double tol, double a, double b) {
  return tol * std::max({1.0, std::abs(a), std::abs(b)});
}

const char* status_word(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

bool VerificationReport::all_pass() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify(const Network& net, ComplexFrequency s, const Tolerances& tol,
                          const SolverOptions& options) {
  VerificationReport report;
  report.vertices = net.size();
  report.frequency = s.value();

  const auto table = admittance_table(net, s);
  auto& checks = report.checks;

  double min_re = std::numeric_limits<double>::infinity();
  for (const auto& rho : table.edge) min_re = std::min(min_re, rho.real());
  checks.push_back(make_check("admittance_positive", min_re > 0.0, min_re));

  const double edge_margin = modulus_bound_margin(table, s);
  checks.push_back(make_check("edge_modulus_bound", edge_margin >= -tol.bound, edge_margin));

  const double vertex_margin = vertex_modulus_bound_margin(net, table, s);
  checks.push_back(make_check("vertex_modulus_bound", vertex_margin >= -tol.bound, vertex_margin));

  const auto constants = gap_constants(net, s);
  const double lhs = lemma_lhs(table, s);
  const double lemma_margin = lhs - constants.condition_lhs;
  checks.push_back(make_check("lemma_bound", lemma_margin >= -scaled(tol.bound, lhs, constants.condition_lhs),
                              lemma_margin));

  const auto lap = assemble(net, table);
  report.spectrum = eigenvalues(lap.entries(), options);
  const Spectrum& spectrum = report.spectrum;
  checks.push_back(make_check("converged", spectrum.converged, spectrum.converged ? 0.0 : -1.0,
                              std::to_string(spectrum.sweeps) + " QR sweeps"));

  {
    const auto by_mod = spectrum.by_modulus();
    const double first = by_mod.empty() ? kNaN : std::abs(by_mod[0]);
    const double second = by_mod.size() > 1 ? std::abs(by_mod[1]) : std::numeric_limits<double>::infinity();
    const double margin = std::min(tol.zero - first, second - tol.zero);
    const auto zeros = count_zero_eigenvalues(spectrum, tol.zero);
    checks.push_back(make_check("zero_simple", zeros == 1, margin,
                                std::to_string(zeros) + " eigenvalue(s) within tolerance of 0"));
  }

  const auto trace = check_trace(spectrum, net.size(), tol);
  checks.push_back(make_check("trace", trace.pass, trace.margin,
                              "|sum - n| = " + format_real(trace.sum_error)));

  const auto regions = check_circles(spectrum, s, tol);
  checks.push_back(make_check("disk", regions.disk_margin >= -tol.region, regions.disk_margin,
                              "radius |s|/Re s = " + format_real(s.modulus_ratio())));
  {
    const bool ok = regions.real_interval_ok && regions.min_circle_margin() >= -tol.region;
    std::size_t real_sign_misses = 0;
    for (const auto& rec : regions.circle_margins) {
      if (rec.classification != EigenClass::Real && !rec.by_real_sign) ++real_sign_misses;
    }
    checks.push_back(make_check("circles", ok, regions.min_circle_margin(),
                                std::to_string(real_sign_misses) +
                                    " eigenvalue(s) outside the circle chosen by sign of Re"));
  }

  {
    double worst = 0.0;
    bool solved = true;
    for (const auto& lambda : spectrum.eigenvalues) {
      try {
        const auto v = eigenvector(lap.entries(), lambda);
        const Complex lhs_energy = lambda * weighted_mass(table, v);
        const Complex rhs_energy = complex_power(net, table, v);
        double scale = 0.0;
        for (std::size_t x = 0; x < v.size(); ++x) scale += std::norm(v[x]) * std::abs(table.vertex[x]);
        worst = std::max(worst, std::abs(lhs_energy - rhs_energy) / scale);
      } catch (const SolverError&) {
        solved = false;
      }
    }
    const double margin = solved ? tol.energy - worst : -1.0;
    checks.push_back(make_check("energy_identity", margin >= 0.0, margin));
  }

  {
    const auto dual = eigenvalues(assemble(net, table, true).entries(), SolverOptions{options.deflation_tol, options.sweeps_per_eigenvalue, false});
    const auto match = check_dual(spectrum, dual, tol.match);
    checks.push_back(make_check("dual", match.success, tol.match - match.max_distance,
                                "max distance " + format_real(match.max_distance)));
  }

  if (const auto sym = check_bipartite_symmetry(net, spectrum, tol.match)) {
    checks.push_back(make_check("bipartite", sym->success, tol.match - sym->max_distance,
                                "max distance " + format_real(sym->max_distance)));
  } else {
    checks.push_back(not_applicable("bipartite", "graph has an odd cycle"));
  }

  const auto gap = gap_bound(net, s, spectrum, tol);
  if (gap.bound) {
    checks.push_back(make_check("gap_bound", *gap.satisfied, gap.lambda1_modulus - *gap.bound,
                                "|lambda_1| = " + format_real(gap.lambda1_modulus) +
                                    ", bound = " + format_real(*gap.bound)));
  } else {
    checks.push_back(not_applicable("gap_bound", "frequency condition fails (lhs = " +
                                                     format_real(gap.constants.condition_lhs) + ")"));
  }
  return report;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "network: " << report.vertices << " vertices\n";
  out << "frequency: s = " << format_complex(report.frequency) << '\n';
  out << "eigenvalues:\n";
  for (std::size_t i = 0; i < report.spectrum.eigenvalues.size(); ++i) {
    out << "  " << format_complex(report.spectrum.eigenvalues[i]);
    if (i < report.spectrum.residuals.size()) {
      out << "  (residual " << format_real(report.spectrum.residuals[i]) << ')';
    }
    out << '\n';
  }
  out << "checks:\n";
  for (const auto& c : report.checks) {
    char line[64];
    std::snprintf(line, sizeof line, "  %-22s %-4s ", c.name.c_str(), status_word(c.status));
    out << line << "margin " << format_real(c.margin);
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  out << (report.all_pass() ? "all applicable checks passed\n" : "VERIFICATION FAILED\n");
  return out.str();
}

std::string to_key_value(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << "check=" << c.name << " pass=" << (c.status == CheckStatus::Fail ? "false" : "true")
        << " margin=" << format_real(c.margin);
    if (c.status == CheckStatus::NotApplicable) out << " applicable=false";
    out << '\n';
  }
  return out.str();
}

}  // namespace acnet
