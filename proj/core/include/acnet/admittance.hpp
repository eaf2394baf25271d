#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "acnet/network.hpp"

namespace acnet {

using Complex = std::complex<double>;

/// Evaluation frequency s with Re s > 0.
class ComplexFrequency {
 public:
  /// Throws std::domain_error unless `value` is finite with positive real part.
  explicit ComplexFrequency(Complex value);
  explicit ComplexFrequency(double re, double im = 0.0) : ComplexFrequency(Complex(re, im)) {}

  Complex value() const noexcept { return value_; }
  double re() const noexcept { return value_.real(); }
  double im() const noexcept { return value_.imag(); }
  double modulus() const noexcept { return std::abs(value_); }

  /// |s| / Re s, the radius of the disk around 1 that contains the spectrum.
  double modulus_ratio() const noexcept { return modulus() / re(); }
  /// |Im s| / Re s, the vertical offset of the two spectral circles.
  double slope() const noexcept { return std::abs(im()) / re(); }

  ComplexFrequency conj() const { return ComplexFrequency(std::conj(value_)); }

 private:
  Complex value_;
};

/// s / (L s^2 + R s + D). Throws std::domain_error when L + R + D is not
/// positive or any element is negative.
Complex edge_admittance(double inductance, double resistance, double elastance,
                        ComplexFrequency s);

inline Complex edge_admittance(const Edge& e, ComplexFrequency s) {
  return edge_admittance(e.inductance, e.resistance, e.elastance, s);
}

/// Edge admittances rho_xy and vertex sums rho(x) of a network at one frequency.
struct AdmittanceTable {
  std::vector<Complex> edge;    // indexed like Network::edges()
  std::vector<Complex> vertex;  // rho(x) = sum over incident edges

  double tau_edge(std::size_t e) const { return edge[e].real(); }
  double sigma_edge(std::size_t e) const { return edge[e].imag(); }
  double tau_vertex(VertexId x) const { return vertex[x].real(); }
  double sigma_vertex(VertexId x) const { return vertex[x].imag(); }

  /// Table of the dual network, where every admittance is conjugated.
  AdmittanceTable conjugated() const;
};

AdmittanceTable admittance_table(const Network& net, ComplexFrequency s);

/// min over edges of (|s|/Re s) Re rho_xy - |rho_xy|. Never negative up to rounding.
double modulus_bound_margin(const AdmittanceTable& table, ComplexFrequency s);

/// min over vertices of  sum_y max(1,|s|^2) / (Re s (L+R+D)) - |rho(x)|.
double vertex_modulus_bound_margin(const Network& net, const AdmittanceTable& table,
                                   ComplexFrequency s);

/// Constants of the diameter-based lower bound on the smallest nonzero
/// eigenvalue modulus.
///
/// `c1` is the minimum over vertices of sum_y 1/(L+R+D); `c2` sums the same
/// quantity over ordered vertex pairs, so every edge is counted twice.
/// The bound applies only when `condition_lhs` is positive.
struct GapConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double condition_lhs = 0.0;
  bool admissible = false;
};

GapConstants gap_constants(const Network& net, ComplexFrequency s);

/// min_x Re rho(x) - (|Im s|/Re s) sum_x Re rho(x). Bounded below by
/// `gap_constants(net, s).condition_lhs`.
double lemma_lhs(const AdmittanceTable& table, ComplexFrequency s);

}  // namespace acnet
