#include "acnet/admittance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace acnet {

ComplexFrequency::ComplexFrequency(Complex value) : value_(value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::domain_error("frequency must be finite");
  }
  if (!(value.real() > 0.0)) {
    throw std::domain_error("Re s must be positive");
  }
}

Complex edge_admittance(double inductance, double resistance, double elastance,
                        ComplexFrequency s) {
  if (!(inductance >= 0.0 && resistance >= 0.0 && elastance >= 0.0)) {
    throw std::domain_error("element values must be non-negative");
  }
  if (!(inductance + resistance + elastance > 0.0)) {
    throw std::domain_error("L + R + D must be positive");
  }
  // 1/rho = L s + R + D/s has real part L Re s + R + D Re s/|s|^2 > 0.
  const Complex z = s.value();
  const Complex impedance = inductance * z + resistance + elastance / z;
  return 1.0 / impedance;
}

AdmittanceTable AdmittanceTable::conjugated() const {
  AdmittanceTable out;
  out.edge.reserve(edge.size());
  out.vertex.reserve(vertex.size());
  for (const auto& r : edge) out.edge.push_back(std::conj(r));
  for (const auto& r : vertex) out.vertex.push_back(std::conj(r));
  return out;
}

AdmittanceTable admittance_table(const Network& net, ComplexFrequency s) {
  AdmittanceTable table;
  table.edge.reserve(net.edges().size());
  table.vertex.assign(net.size(), Complex{});
  for (const Edge& e : net.edges()) {
    const Complex rho = edge_admittance(e, s);
    table.edge.push_back(rho);
    table.vertex[e.u] += rho;
    table.vertex[e.v] += rho;
  }
  return table;
}

double modulus_bound_margin(const AdmittanceTable& table, ComplexFrequency s) {
  const double ratio = s.modulus_ratio();
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& rho : table.edge) {
    margin = std::min(margin, ratio * rho.real() - std::abs(rho));
  }
  return margin;
}

double vertex_modulus_bound_margin(const Network& net, const AdmittanceTable& table,
                                   ComplexFrequency s) {
  const double scale = std::max(1.0, std::norm(s.value())) / s.re();
  std::vector<double> bound(net.size(), 0.0);
  for (const Edge& e : net.edges()) {
    const double term = scale / e.element_sum();
    bound[e.u] += term;
    bound[e.v] += term;
  }
  double margin = std::numeric_limits<double>::infinity();
  for (VertexId x = 0; x < net.size(); ++x) {
    margin = std::min(margin, bound[x] - std::abs(table.vertex[x]));
  }
  return margin;
}

GapConstants gap_constants(const Network& net, ComplexFrequency s) {
  std::vector<double> per_vertex(net.size(), 0.0);
  for (const Edge& e : net.edges()) {
    per_vertex[e.u] += 1.0 / e.element_sum();
    per_vertex[e.v] += 1.0 / e.element_sum();
  }
  GapConstants out;
  out.c1 = *std::min_element(per_vertex.begin(), per_vertex.end());
  for (double v : per_vertex) out.c2 += v;

  const double abs2 = std::norm(s.value());
  const double re = s.re();
  out.condition_lhs = out.c1 * re * std::min(abs2, 1.0 / (abs2 * abs2)) -
                      out.c2 * s.slope() * std::max(1.0, abs2) / re;
  out.admissible = out.condition_lhs > 0.0;
  return out;
}

double lemma_lhs(const AdmittanceTable& table, ComplexFrequency s) {
  double min_re = std::numeric_limits<double>::infinity();
  double sum_re = 0.0;
  for (const auto& rho : table.vertex) {
    min_re = std::min(min_re, rho.real());
    sum_re += rho.real();
  }
  return min_re - s.slope() * sum_re;
}

}  // namespace acnet
