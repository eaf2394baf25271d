// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "acnet/laplacian.hpp"
#include "acnet/spectral_analysis.hpp"
#include "test_networks.hpp"

using namespace acnet;

namespace {

constexpr std::uint64_t kCorpusSeed = 1;
constexpr std::size_t kCorpusSize = 200;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

const std::vector<testing::CorpusCase>& corpus() {
  static const auto cases = testing::make_corpus(kCorpusSize, kCorpusSeed);
  return cases;
}

const std::vector<Spectrum>& corpus_spectra() {
  static const auto spectra = [] {
    std::vector<Spectrum> out;
    for (const auto& c : corpus()) out.push_back(laplacian_spectrum(c.net, c.s));
    return out;
  }();
  return spectra;
}

Outcome p4_reproduction() {
  const auto t0 = Clock::now();
  const auto spectrum = laplacian_spectrum(p4_example(), ComplexFrequency(1.0, 2.0));
  const std::vector<Complex> expected{0.0, 2.0, Complex(-0.1, -0.2), Complex(2.1, 0.2)};
  const auto m = match_multisets(spectrum.eigenvalues, expected, 1e-9);
  const double elapsed = seconds_since(t0);
  return {spectrum.converged && m.success && elapsed < 1.0,
          fmt("max distance %.3g, %.3f s", m.max_distance, elapsed)};
}

Outcome closed_form_sweep() {
  std::mt19937_64 rng(2);
  double worst = 0.0;
  int tested = 0;
  int skipped = 0;
  bool ok = true;
  while (tested < 50) {
    const auto s = testing::random_frequency(rng, 5.0, 5.0);
    const Complex z = s.value();
    if (std::abs(1.0 + z * z) < 1e-6) {
      ++skipped;
      continue;
    }
    const std::vector<Complex> expected{0.0, 2.0, 1.0 / (1.0 + z * z), (1.0 + 2.0 * z * z) / (1.0 + z * z)};
    const auto m = match_multisets(laplacian_spectrum(p4_example(), s).eigenvalues, expected, 1e-8);
    ok = ok && m.success;
    worst = std::max(worst, m.max_distance);
    ++tested;
  }
  return {ok, fmt("50 frequencies, %d skipped, max distance %.3g", skipped, worst)};
}

Outcome region_corpus() {
  const auto t0 = Clock::now();
  double disk = INFINITY;
  double circles = INFINITY;
  int violations = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& spectrum = corpus_spectra()[k];
    const auto d = check_disk(spectrum, corpus()[k].s, 1e-8);
    const auto r = check_circles(spectrum, corpus()[k].s);
    disk = std::min(disk, d.margin);
    circles = std::min(circles, r.min_circle_margin());
    if (!spectrum.converged || !d.pass || !r.all_pass) ++violations;
  }
  const double elapsed = seconds_since(t0);
  return {violations == 0 && elapsed < 30.0,
          fmt("%zu instances, %d violations, min disk margin %.3g, min circle margin %.3g, %.2f s",
              corpus().size(), violations, disk, circles, elapsed)};
}

Outcome green_identity() {
  std::mt19937_64 rng(4);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto net = testing::random_network(rng, std::uniform_int_distribution<std::size_t>(2, 10)(rng));
    const auto s = testing::random_frequency(rng);
    for (int pair = 0; pair < 100; ++pair) {
      const auto f = testing::random_vector(rng, net.size());
      const auto g = testing::random_vector(rng, net.size());
      worst = std::max(worst, green_residual(net, s, f, g));
    }
  }
  return {worst < 1e-10, fmt("2000 pairs on 20 networks, max residual %.3g", worst)};
}

Outcome trace_identities() {
  int violations = 0;
  double worst_sum = 0.0;
  double worst_imag = 0.0;
  double worst_max_re = INFINITY;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const double n = static_cast<double>(corpus()[k].net.size());
    Complex sum{};
    double max_re = -INFINITY;
    for (const auto& z : corpus_spectra()[k].eigenvalues) {
      sum += z;
      max_re = std::max(max_re, z.real());
    }
    const double sum_err = std::abs(sum - n);
    const double excess = max_re - n / (n - 1.0);
    worst_sum = std::max(worst_sum, sum_err / n);
    worst_imag = std::max(worst_imag, std::abs(sum.imag()) / n);
    worst_max_re = std::min(worst_max_re, excess);
    if (sum_err > 1e-8 * n || std::abs(sum.imag()) > 1e-8 * n || excess < -1e-8) ++violations;
  }
  return {violations == 0, fmt("%d violations, max |sum - n|/n %.3g, max |sum Im|/n %.3g, min max Re - n/(n-1) %.3g",
                               violations, worst_sum, worst_imag, worst_max_re)};
}

Outcome simple_zero() {
  int violations = 0;
  for (const auto& spectrum : corpus_spectra()) {
    if (count_zero_eigenvalues(spectrum, 1e-8) != 1) ++violations;
  }
  return {violations == 0, fmt("%d instances without exactly one zero eigenvalue", violations)};
}

Outcome dual_conjugation() {
  int violations = 0;
  double worst = 0.0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto dual = laplacian_spectrum(corpus()[k].net, corpus()[k].s, true);
    const auto m = check_dual(corpus_spectra()[k], dual, 1e-8);
    worst = std::max(worst, m.max_distance);
    if (!m.success) ++violations;
  }
  return {violations == 0, fmt("%d violations, max distance %.3g", violations, worst)};
}

Outcome bipartite_symmetry() {
  std::mt19937_64 rng(8);
  std::vector<std::pair<std::string, Network>> graphs;
  for (std::size_t n = 2; n <= 6; ++n) graphs.emplace_back("P" + std::to_string(n), testing::path_graph(rng, n));
  graphs.emplace_back("C4", testing::cycle_graph(rng, 4));
  graphs.emplace_back("C6", testing::cycle_graph(rng, 6));
  graphs.emplace_back("K2,3", testing::complete_bipartite(rng, 2, 3));

  bool ok = true;
  double worst = 0.0;
  for (const auto& [name, net] : graphs) {
    const auto s = testing::random_frequency(rng);
    const auto m = check_bipartite_symmetry(net, laplacian_spectrum(net, s), 1e-8);
    if (!m || !m->success) {
      ok = false;
      std::printf("    %s at s = %s: %s\n", name.c_str(), format_complex(s.value()).c_str(),
                  m ? "mismatch" : "reported not applicable");
      continue;
    }
    worst = std::max(worst, m->max_distance);
  }
  const auto k3 = testing::complete_graph(rng, 3);
  const bool k3_na = !check_bipartite_symmetry(k3, laplacian_spectrum(k3, ComplexFrequency(1.0, 1.0))).has_value();
  return {ok && k3_na, fmt("%zu bipartite graphs, max distance %.3g; K3 %s", graphs.size(), worst,
                           k3_na ? "not applicable" : "WRONGLY applicable")};
}

Outcome gap_bound_check() {
  const ComplexFrequency one(1.0);
  const auto p4 = gap_bound(p4_example(), one, laplacian_spectrum(p4_example(), one));
  const bool p4_ok = p4.bound && std::abs(*p4.bound - 1.0 / 18.0) <= 1e-15 &&
                     std::abs(p4.lambda1_modulus - 0.5) <= 1e-12 && *p4.satisfied;

  Tolerances tol;
  tol.gap = 1e-10;
  int admissible = 0;
  int violations = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto g = gap_bound(corpus()[k].net, corpus()[k].s, corpus_spectra()[k], tol);
    if (!g.bound) continue;
    ++admissible;
    if (!*g.satisfied) {
      ++violations;
      std::printf("    instance %zu (n = %zu, s = %s): |lambda_1| = %.6g < bound %.6g\n", k,
                  corpus()[k].net.size(), format_complex(corpus()[k].s.value()).c_str(), g.lambda1_modulus,
                  *g.bound);
    }
  }

  // Informational only: the same networks evaluated at the real frequency Re s.
  int real_admissible = 0;
  int real_violations = 0;
  for (const auto& c : corpus()) {
    const ComplexFrequency s(c.s.re());
    const auto g = gap_bound(c.net, s, laplacian_spectrum(c.net, s), tol);
    if (!g.bound) continue;
    ++real_admissible;
    if (!*g.satisfied) ++real_violations;
  }
  std::printf("    info: at s = Re s the bound applies to %d instances and fails on %d\n", real_admissible,
              real_violations);

  return {p4_ok && violations == 0,
          fmt("P4 at s = 1: bound %.17g, |lambda_1| %.17g; corpus: %d admissible, %d violations",
              p4.bound.value_or(NAN), p4.lambda1_modulus, admissible, violations)};
}

Outcome sharpness() {
  const std::vector<double> s1{2.0, 5.0, 10.0, 50.0, 100.0};
  const auto rows = sharpness_sweep(s1, 0.1, 4);
  bool increasing = true;
  std::string ratios;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && !(rows[i].ratio > rows[i - 1].ratio)) increasing = false;
    ratios += fmt("%s%.6f", i ? " " : "", rows[i].ratio);
  }
  const double last = rows.back().ratio;
  const double reference = sharpness_point(1.0, 2.0).ratio;
  const bool ok = increasing && last >= 0.999 && std::abs(reference - std::sqrt(4.45 / 5.0)) <= 1e-6;
  return {ok, fmt("ratios %s; ratio(1, 2) = %.12f", ratios.c_str(), reference)};
}

Outcome solver_vs_oracle() {
  std::mt19937_64 rng(11);
  int failures = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_matrix(rng, std::uniform_int_distribution<std::size_t>(1, 8)(rng));
    const auto qr = eigenvalues(a);
    const auto m = match_multisets(qr.eigenvalues, charpoly_oracle(a).eigenvalues, 1e-8);
    worst = std::max(worst, m.max_distance);
    if (!qr.converged || !m.success) ++failures;
  }
  return {failures == 0, fmt("100 matrices, %d mismatches, max distance %.3g", failures, worst)};
}

Outcome real_degeneration() {
  int violations = 0;
  double worst_imag = 0.0;
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& c : corpus()) {
    const auto spectrum = laplacian_spectrum(c.net, ComplexFrequency(c.s.re()));
    bool ok = spectrum.converged;
    for (const auto& z : spectrum.eigenvalues) {
      worst_imag = std::max(worst_imag, std::abs(z.imag()));
      lo = std::min(lo, z.real());
      hi = std::max(hi, z.real());
      if (std::abs(z.imag()) > 1e-8 || z.real() < -1e-8 || z.real() > 2.0 + 1e-8) ok = false;
    }
    if (!ok) ++violations;
  }
  return {violations == 0,
          fmt("%d violations, max |Im| %.3g, real parts in [%.3g, %.17g]", violations, worst_imag, lo, hi)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"P4 spectrum at s = 1+2i", p4_reproduction},
      {"P4 closed form at random s", closed_form_sweep},
      {"disk and circle regions on the corpus", region_corpus},
      {"Green identity", green_identity},
      {"trace identities", trace_identities},
      {"simple zero eigenvalue", simple_zero},
      {"dual network conjugation", dual_conjugation},
      {"bipartite 2 - lambda symmetry", bipartite_symmetry},
      {"spectral gap lower bound", gap_bound_check},
      {"circle sharpness sweep", sharpness},
      {"QR solver vs characteristic polynomial", solver_vs_oracle},
      {"real frequency spectra in [0, 2]", real_degeneration},
  };

  std::printf("corpus: %zu networks, seed %llu\n", kCorpusSize, static_cast<unsigned long long>(kCorpusSeed));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, outcome.pass ? "PASS" : "FAIL", criteria[i].first,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
