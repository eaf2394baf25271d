#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "acnet/complex_matrix.hpp"

namespace acnet {

/// Raised when an iterative routine gives up (inverse iteration, Durand-Kerner).
/// The QR eigensolver reports non-convergence through `Spectrum::converged`.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  /// Subdiagonal h(k,k-1) is set to zero once it drops below
  /// deflation_tol * (|h(k-1,k-1)| + |h(k,k)|).
  double deflation_tol = 1e-12;
  /// Total QR sweep budget is this many sweeps per eigenvalue.
  std::size_t sweeps_per_eigenvalue = 40;
  /// Fill Spectrum::residuals via inverse iteration.
  bool compute_residuals = true;
};

/// Eigenvalues of a square matrix, counted with algebraic multiplicity.
struct Spectrum {
  /// Sorted by real part, then imaginary part.
  std::vector<Complex> eigenvalues;
  /// ||(A - lambda I) v|| / ||v|| for the eigenvector returned by `eigenvector`;
  /// empty when residuals were not requested, +inf where inverse iteration failed.
  std::vector<double> residuals;
  bool converged = false;
  std::size_t sweeps = 0;

  std::size_t size() const noexcept { return eigenvalues.size(); }

  /// Eigenvalues ordered by modulus (ties by real then imaginary part).
  std::vector<Complex> by_modulus() const;
};

/// Unitary similarity transform of `a` to upper Hessenberg form via
/// Householder reflections.
ComplexMatrix hessenberg(const ComplexMatrix& a);

/// All eigenvalues of `a`: Householder reduction to Hessenberg form followed by
/// single-shift implicit QR sweeps with Wilkinson shifts and deflation on
/// small subdiagonals.
///
/// Throws std::invalid_argument for non-square input or non-finite entries.
Spectrum eigenvalues(const ComplexMatrix& a, const SolverOptions& options = {});

/// Unit-norm eigenvector for an (approximate) eigenvalue, by inverse
/// iteration. The largest-modulus component is made real and positive.
///
/// When a - lambda I is numerically singular the shift is nudged by
/// 1e-10 * max(1, ||a||) in a pseudo-random direction (fixed seed, so results
/// are reproducible). Converged when ||(a - lambda I) v|| <= tol * max(1, ||a||).
/// Throws SolverError after 50 iterations.
ComplexVector eigenvector(const ComplexMatrix& a, Complex lambda, double tol = 1e-8);

/// Coefficients c_0..c_n (c_n = 1) of det(z I - a) by the Faddeev-LeVerrier
/// recurrence.
std::vector<Complex> characteristic_polynomial(const ComplexMatrix& a);

/// All roots of a polynomial with coefficients c_0..c_n (c_n != 0) by
/// Durand-Kerner iteration from perturbed roots of unity.
/// Throws SolverError if 1000 sweeps do not converge.
std::vector<Complex> polynomial_roots(std::span<const Complex> coefficients);

/// Independent spectrum: roots of the characteristic polynomial. Intended as
/// a cross-check for small matrices (n <= 10). Throws std::invalid_argument
/// beyond that size.
Spectrum charpoly_oracle(const ComplexMatrix& a);

struct Matching {
  bool success = false;
  double max_distance = 0.0;
  /// pairing[i] is the index in `b` matched to a[i].
  std::vector<std::size_t> pairing;
};

/// Greedy minimum-distance perfect matching between two equally sized
/// multisets: all pairwise distances are sorted and taken smallest first.
/// Succeeds iff every matched pair lies within `tol`.
/// Throws std::invalid_argument on length mismatch.
Matching match_multisets(std::span<const Complex> a, std::span<const Complex> b, double tol = 1e-8);

/// Lexicographic (real, imaginary) ascending order.
void sort_eigenvalues(std::vector<Complex>& values);

}  // namespace acnet
