#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "acnet/report.hpp"
#include "test_networks.hpp"

using namespace acnet;

namespace {

const std::vector<std::string> kCheckNames{
    "admittance_positive", "edge_modulus_bound", "vertex_modulus_bound", "lemma_bound", "converged",
    "zero_simple", "trace", "disk", "circles", "energy_identity", "dual", "bipartite", "gap_bound"};

}  // namespace

TEST_CASE("p4 at 1+2i") {
  const auto report = verify(p4_example(), ComplexFrequency(1.0, 2.0));
  CHECK(report.vertices == 4);
  CHECK(report.frequency == Complex(1.0, 2.0));
  REQUIRE(report.checks.size() == kCheckNames.size());
  for (std::size_t i = 0; i < kCheckNames.size(); ++i) CHECK(report.checks[i].name == kCheckNames[i]);
  CHECK(report.all_pass());
  CHECK(report.find("gap_bound")->status == CheckStatus::NotApplicable);
  CHECK(std::isnan(report.find("gap_bound")->margin));
  CHECK(report.find("bipartite")->status == CheckStatus::Pass);
  CHECK(report.find("nonexistent") == nullptr);
  // edge x1-x2 has |rho| = |s| exactly
  CHECK(report.find("edge_modulus_bound")->margin == 0.0);
}

TEST_CASE("gap check applies at s = 1") {
  const auto report = verify(p4_example(), ComplexFrequency(1.0));
  const auto* gap = report.find("gap_bound");
  CHECK(gap->status == CheckStatus::Pass);
  CHECK(gap->margin == doctest::Approx(0.5 - 1.0 / 18.0));
}

TEST_CASE("non-bipartite graphs") {
  const auto k3 = parse_network("vertices: a b c\nedge a b R=1\nedge b c L=0.5 R=0.2\nedge c a D=2 L=0.1");
  const auto report = verify(k3, ComplexFrequency(2.0, 1.0));
  CHECK(report.find("bipartite")->status == CheckStatus::NotApplicable);
  CHECK(report.all_pass());
}

TEST_CASE("failures are reported") {
  Tolerances tol;
  tol.region = -1.0;
  const auto report = verify(p4_example(), ComplexFrequency(1.0, 2.0), tol);
  CHECK_FALSE(report.all_pass());
  CHECK(report.find("disk")->status == CheckStatus::Pass);  // margin 1.118 >= 1
  CHECK(report.find("circles")->status == CheckStatus::Fail);
  CHECK(to_text(report).find("VERIFICATION FAILED") != std::string::npos);

  // the known gap-bound counterexample
  const auto capacitor = parse_network("vertices: a b\nedge a b D=1");
  const auto gap = verify(capacitor, ComplexFrequency(3.0)).find("gap_bound");
  CHECK(gap->status == CheckStatus::Fail);
  CHECK(gap->margin == doctest::Approx(2.0 - 4.5));
}

TEST_CASE("random networks pass every applicable check") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto net = testing::random_network(rng, 2 + trial % 9);
    const auto s = testing::random_frequency(rng);
    const auto report = verify(net, s);
    for (const auto& c : report.checks) {
      if (c.name == "gap_bound") continue;  // see the counterexample above
      INFO(c.name, " margin ", c.margin, " ", c.detail);
      CHECK(c.status != CheckStatus::Fail);
    }
  }
}

TEST_CASE("key-value output") {
  const auto report = verify(p4_example(), ComplexFrequency(1.0, 2.0));
  std::istringstream in(to_key_value(report));
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    REQUIRE(count < kCheckNames.size());
    const std::string prefix = "check=" + kCheckNames[count] + " pass=true margin=";
    CHECK(line.rfind(prefix, 0) == 0);
    if (kCheckNames[count] == "gap_bound") CHECK(line == prefix + "nan applicable=false");
    ++count;
  }
  CHECK(count == kCheckNames.size());
  CHECK(to_key_value(report) == to_key_value(verify(p4_example(), ComplexFrequency(1.0, 2.0))));
}

TEST_CASE("text output") {
  const auto text = to_text(verify(p4_example(), ComplexFrequency(1.0, 2.0)));
  CHECK(text.rfind("network: 4 vertices\nfrequency: s = 1+2i\neigenvalues:\n", 0) == 0);
  CHECK(text.find("  gap_bound              n/a  margin nan") != std::string::npos);
  CHECK(text.ends_with("all applicable checks passed\n"));
}

TEST_CASE("format_real") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(-2.0) == "-2");
  CHECK(format_real(std::nan("")) == "nan");
  CHECK(format_real(1e300) == "1.0000000000000001e+300");
}
