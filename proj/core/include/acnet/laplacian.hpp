#pragma once

#include <span>

#include "acnet/admittance.hpp"
#include "acnet/complex_matrix.hpp"
#include "acnet/network.hpp"

namespace acnet {

/// Matrix of the normalized complex Laplacian
///
///     (A f)(x) = f(x) - (1/rho(x)) sum_y rho_xy f(y)
///
/// so A has unit diagonal, off-diagonal entries -rho_xy/rho(x) on edges and
/// zero row sums. A dual Laplacian is built from conjugated admittances.
class LaplacianMatrix {
 public:
  LaplacianMatrix(ComplexMatrix entries, bool dual) : entries_(std::move(entries)), dual_(dual) {}

  std::size_t size() const noexcept { return entries_.rows(); }
  const ComplexMatrix& entries() const noexcept { return entries_; }
  bool dual() const noexcept { return dual_; }

  Complex operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  ComplexMatrix entries_;
  bool dual_;
};

LaplacianMatrix assemble(const Network& net, const AdmittanceTable& table, bool dual = false);
LaplacianMatrix assemble(const Network& net, ComplexFrequency s, bool dual = false);

/// A f. Throws std::invalid_argument when `f` has the wrong length.
ComplexVector apply(const LaplacianMatrix& a, std::span<const Complex> f);

/// Left minus right side of the summation-by-parts identity
///
///     sum_x (A f)(x) g(x) rho(x) = 1/2 sum_{x,y} (f(y)-f(x)) (g(y)-g(x)) rho_xy
///
/// in modulus. The double sum runs over ordered pairs.
double green_residual(const Network& net, ComplexFrequency s, std::span<const Complex> f,
                      std::span<const Complex> g);

/// 1/2 sum_{x,y} |f(y)-f(x)|^2 rho_xy over ordered pairs, i.e. the complex
/// power dissipated by the potential f.
Complex complex_power(const Network& net, ComplexFrequency s, std::span<const Complex> f);
Complex complex_power(const Network& net, const AdmittanceTable& table, std::span<const Complex> f);

/// sum_x |f(x)|^2 rho(x); an eigenpair (lambda, f) satisfies
/// lambda * weighted_mass(f) == complex_power(f).
Complex weighted_mass(const AdmittanceTable& table, std::span<const Complex> f);

}  // namespace acnet
