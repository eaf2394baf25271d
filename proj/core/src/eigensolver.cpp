#include "acnet/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <tuple>

namespace acnet {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double abs1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Plane rotation G = [c s; -conj(s) c] with G [x; y] = [r; 0].
struct Rotation {
  double c;
  Complex s;
};

std::pair<Rotation, Complex> make_rotation(Complex x, Complex y) {
  if (y == Complex{}) return {{1.0, Complex{}}, x};
  if (x == Complex{}) return {{0.0, std::conj(y) / std::abs(y)}, Complex(std::abs(y))};
  const double nx = std::abs(x);
  const double norm = std::hypot(nx, std::abs(y));
  const Complex phase = x / nx;
  return {{nx / norm, phase * std::conj(y) / norm}, phase * norm};
}

void rotate_rows(ComplexMatrix& h, const Rotation& g, std::size_t k, std::size_t col_begin,
                 std::size_t col_end) {
  for (std::size_t j = col_begin; j <= col_end; ++j) {
    const Complex a = h(k, j);
    const Complex b = h(k + 1, j);
    h(k, j) = g.c * a + g.s * b;
    h(k + 1, j) = -std::conj(g.s) * a + g.c * b;
  }
}

// h <- h G^H on columns k, k+1.
void rotate_cols(ComplexMatrix& h, const Rotation& g, std::size_t k, std::size_t row_begin,
                 std::size_t row_end) {
  for (std::size_t i = row_begin; i <= row_end; ++i) {
    const Complex a = h(i, k);
    const Complex b = h(i, k + 1);
    h(i, k) = a * g.c + b * std::conj(g.s);
    h(i, k + 1) = -a * g.s + b * g.c;
  }
}

// Eigenvalue of the trailing 2x2 block [a b; c d] closest to d.
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  const Complex t = 0.5 * (a - d);
  const Complex bc = b * c;
  Complex disc = std::sqrt(t * t + bc);
  if (std::real(std::conj(t) * disc) < 0.0) disc = -disc;
  const Complex denom = t + disc;
  if (denom == Complex{}) return d;
  return d - bc / denom;
}

// LU factorization with partial pivoting, in place.
struct LuFactors {
  ComplexMatrix lu;
  std::vector<std::size_t> pivot;
  double min_pivot = std::numeric_limits<double>::infinity();
};

LuFactors lu_factor(ComplexMatrix m) {
  const std::size_t n = m.rows();
  LuFactors out{std::move(m), std::vector<std::size_t>(n)};
  auto& lu = out.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    }
    out.pivot[k] = p;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
    }
    const Complex piv = lu(k, k);
    out.min_pivot = std::min(out.min_pivot, std::abs(piv));
    if (piv == Complex{}) continue;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex factor = lu(i, k) / piv;
      lu(i, k) = factor;
      if (factor == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
    }
  }
  return out;
}

ComplexVector lu_solve(const LuFactors& f, ComplexVector b, double pivot_floor) {
  const std::size_t n = b.size();
  const auto& lu = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    if (f.pivot[k] != k) std::swap(b[k], b[f.pivot[k]]);
    for (std::size_t i = k + 1; i < n; ++i) b[i] -= lu(i, k) * b[k];
  }
  for (std::size_t k = n; k-- > 0;) {
    Complex sum = b[k];
    for (std::size_t j = k + 1; j < n; ++j) sum -= lu(k, j) * b[j];
    Complex piv = lu(k, k);
    if (std::abs(piv) < pivot_floor) piv = pivot_floor;
    b[k] = sum / piv;
  }
  return b;
}

void normalize_phase(ComplexVector& v) {
  std::size_t big = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[big]) * (1.0 + 1e-12)) big = i;
  }
  const double nrm = norm2(v);
  const Complex phase = std::conj(v[big]) / std::abs(v[big]);
  for (auto& z : v) z *= phase / nrm;
}

double residual_norm(const ComplexMatrix& a, Complex lambda, std::span<const Complex> v) {
  auto av = multiply(a, v);
  for (std::size_t i = 0; i < av.size(); ++i) av[i] -= lambda * v[i];
  return norm2(av) / norm2(v);
}

void validate_square(const ComplexMatrix& a) {
  if (!a.square()) throw std::invalid_argument("matrix must be square");
  if (!a.all_finite()) throw std::invalid_argument("matrix has NaN or infinite entries");
}

}  // namespace

void sort_eigenvalues(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

std::vector<Complex> Spectrum::by_modulus() const {
  auto out = eigenvalues;
  std::stable_sort(out.begin(), out.end(),
                   [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  return out;
}

ComplexMatrix hessenberg(const ComplexMatrix& a) {
  validate_square(a);
  const std::size_t n = a.rows();
  ComplexMatrix h = a;
  ComplexVector v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;

    // Reflector P = I - 2 v v^H mapping column k below the diagonal to alpha e1.
    const Complex x0 = h(k + 1, k);
    const Complex phase = x0 == Complex{} ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;
    std::fill(v.begin(), v.end(), Complex{});
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] -= alpha;
    const double vnorm = norm2(v);
    if (vnorm == 0.0) continue;
    for (auto& z : v) z /= vnorm;

    // Left: h <- P h on rows k+1..n-1.
    for (std::size_t j = k; j < n; ++j) {
      Complex dot{};
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= 2.0 * v[i] * dot;
    }
    // Right: h <- h P on columns k+1..n-1.
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot{};
      for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= 2.0 * dot * std::conj(v[j]);
    }
    h(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = Complex{};
  }
  return h;
}

Spectrum eigenvalues(const ComplexMatrix& a, const SolverOptions& options) {
  validate_square(a);
  const std::size_t n = a.rows();
  Spectrum out;
  out.eigenvalues.resize(n);
  if (n == 0) {
    out.converged = true;
    return out;
  }

  ComplexMatrix h = hessenberg(a);
  const double hnorm = std::max(h.norm(), std::numeric_limits<double>::min());
  const double tol = options.deflation_tol;
  const std::size_t budget = options.sweeps_per_eigenvalue * n;

  std::size_t hi = n - 1;
  std::size_t since_deflation = 0;
  bool ok = true;
  while (true) {
    // Find the start of the trailing unreduced block.
    std::size_t lo = hi;
    while (lo > 0) {
      const double sub = abs1(h(lo, lo - 1));
      double scale = abs1(h(lo - 1, lo - 1)) + abs1(h(lo, lo));
      if (scale == 0.0) scale = hnorm;
      if (sub <= tol * scale || sub <= kEps * hnorm * 1e-3) {
        h(lo, lo - 1) = Complex{};
        break;
      }
      --lo;
    }

    if (lo == hi) {
      out.eigenvalues[hi] = h(hi, hi);
      since_deflation = 0;
      if (hi == 0) break;
      --hi;
      continue;
    }
    if (out.sweeps >= budget) {
      ok = false;
      for (std::size_t i = 0; i <= hi; ++i) out.eigenvalues[i] = h(i, i);
      break;
    }

    Complex shift;
    if (since_deflation > 0 && since_deflation % 10 == 0) {
      // Exceptional shift to break cycles.
      shift = h(hi, hi) + 0.75 * abs1(h(hi, hi - 1));
    } else {
      shift = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    // One implicit single-shift QR sweep on the active block [lo, hi].
    Complex x = h(lo, lo) - shift;
    Complex y = h(lo + 1, lo);
    for (std::size_t k = lo; k < hi; ++k) {
      if (k > lo) {
        x = h(k, k - 1);
        y = h(k + 1, k - 1);
      }
      auto [g, r] = make_rotation(x, y);
      std::size_t col_begin = k;
      if (k > lo) {
        h(k, k - 1) = r;
        h(k + 1, k - 1) = Complex{};
      }
      rotate_rows(h, g, k, col_begin, hi);
      rotate_cols(h, g, k, lo, std::min(k + 2, hi));
    }
    ++out.sweeps;
    ++since_deflation;
  }

  out.converged = ok;
  sort_eigenvalues(out.eigenvalues);
  if (options.compute_residuals) {
    out.residuals.reserve(n);
    for (const auto& lambda : out.eigenvalues) {
      try {
        const auto v = eigenvector(a, lambda);
        out.residuals.push_back(residual_norm(a, lambda, v));
      } catch (const SolverError&) {
        out.residuals.push_back(std::numeric_limits<double>::infinity());
      }
    }
  }
  return out;
}

ComplexVector eigenvector(const ComplexMatrix& a, Complex lambda, double tol) {
  validate_square(a);
  const std::size_t n = a.rows();
  if (n == 0) throw std::invalid_argument("empty matrix");
  const double anorm = std::max(1.0, a.norm());
  const double singular_floor = kEps * anorm * static_cast<double>(n);

  std::mt19937_64 rng(0x5eedu);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  auto shifted = [&](Complex mu) {
    ComplexMatrix m = a;
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= mu;
    return lu_factor(std::move(m));
  };

  LuFactors lu = shifted(lambda);
  if (lu.min_pivot <= singular_floor) {
    lu = shifted(lambda + 1e-10 * anorm * std::polar(1.0, angle(rng)));
  }

  ComplexVector v(n);
  for (auto& z : v) z = Complex(unit(rng), unit(rng));
  normalize_phase(v);

  // Keep iterating past the tolerance while the residual still halves.
  ComplexVector best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 50; ++iter) {
    v = lu_solve(lu, std::move(v), singular_floor);
    double nrm = norm2(v);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
      for (auto& z : v) z = Complex(unit(rng), unit(rng));
      continue;
    }
    normalize_phase(v);
    const double residual = residual_norm(a, lambda, v);
    const bool improving = residual < 0.5 * best_residual;
    if (residual < best_residual) {
      best_residual = residual;
      best = v;
    }
    if (best_residual <= tol * anorm && !improving) return best;
  }
  if (best_residual <= tol * anorm) return best;
  throw SolverError("inverse iteration did not converge");
}

std::vector<Complex> characteristic_polynomial(const ComplexMatrix& a) {
  validate_square(a);
  const std::size_t n = a.rows();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coefficients) {
  std::size_t degree = coefficients.size();
  while (degree > 0 && coefficients[degree - 1] == Complex{}) --degree;
  if (degree == 0) throw std::invalid_argument("zero polynomial");
  --degree;
  if (degree == 0) return {};

  std::vector<Complex> c(coefficients.begin(), coefficients.begin() + degree + 1);
  const Complex lead = c[degree];
  for (auto& z : c) z /= lead;

  // Fujiwara bound on root moduli sets the starting circle.
  double radius = 0.0;
  for (std::size_t k = 1; k <= degree; ++k) {
    double mag = std::abs(c[degree - k]);
    if (k == degree) mag /= 2.0;
    radius = std::max(radius, std::pow(mag, 1.0 / static_cast<double>(k)));
  }
  radius = radius > 0.0 ? 2.0 * radius : 1.0;

  auto eval = [&](Complex z) {
    Complex p = c[degree];
    for (std::size_t k = degree; k-- > 0;) p = p * z + c[k];
    return p;
  };

  std::vector<Complex> z(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(degree) +
                         0.4 + 0.01 * static_cast<double>(k);
    z[k] = std::polar(radius * (1.0 + 0.003 * static_cast<double>(k)), theta);
  }

  // Rounding error bound of Horner's rule at z: once |p(z)| is below it the
  // iterate is a root to working precision and steps are pure noise.
  auto noise = [&](Complex x) {
    double bound = std::abs(c[degree]);
    for (std::size_t k = degree; k-- > 0;) bound = bound * std::abs(x) + std::abs(c[k]);
    return 4.0 * static_cast<double>(degree) * kEps * bound;
  };

  int polish = -1;
  for (int sweep = 0; sweep < 1000; ++sweep) {
    double change = 0.0;
    bool at_noise = true;
    for (std::size_t i = 0; i < degree; ++i) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (denom == Complex{}) denom = kEps * radius;
      const Complex value = eval(z[i]);
      if (std::abs(value) > noise(z[i])) at_noise = false;
      const Complex step = value / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (polish < 0 && (change < 1e-13 || at_noise)) polish = 3;
    if (polish >= 0 && polish-- == 0) return z;
  }
  if (polish >= 0) return z;
  throw SolverError("Durand-Kerner iteration did not converge");
}

Spectrum charpoly_oracle(const ComplexMatrix& a) {
  validate_square(a);
  if (a.rows() > 10) throw std::invalid_argument("characteristic polynomial oracle limited to n <= 10");
  Spectrum out;
  const auto coefficients = characteristic_polynomial(a);
  out.eigenvalues = polynomial_roots(coefficients);
  out.converged = true;
  sort_eigenvalues(out.eigenvalues);
  return out;
}

Matching match_multisets(std::span<const Complex> a, std::span<const Complex> b, double tol) {
  if (a.size() != b.size()) throw std::invalid_argument("multisets differ in size");
  const std::size_t n = a.size();
  struct Candidate {
    double distance;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) candidates.push_back({std::abs(a[i] - b[j]), i, j});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.distance, x.i, x.j) < std::tie(y.distance, y.i, y.j);
  });

  Matching out;
  out.pairing.assign(n, n);
  std::vector<bool> used(n, false);
  std::size_t matched = 0;
  for (const auto& cand : candidates) {
    if (matched == n) break;
    if (out.pairing[cand.i] != n || used[cand.j]) continue;
    out.pairing[cand.i] = cand.j;
    used[cand.j] = true;
    out.max_distance = std::max(out.max_distance, cand.distance);
    ++matched;
  }
  out.success = out.max_distance <= tol;
  return out;
}

}  // namespace acnet
