#include "acnet/laplacian.hpp"

#include <stdexcept>
#include <string>

namespace acnet {

namespace {

void require_length(std::span<const Complex> f, std::size_t n) {
  if (f.size() != n) {
    throw std::invalid_argument("vector length " + std::to_string(f.size()) +
                                " does not match network size " + std::to_string(n));
  }
}

}  // namespace

LaplacianMatrix assemble(const Network& net, const AdmittanceTable& source, bool dual) {
  const AdmittanceTable table = dual ? source.conjugated() : source;
  const std::size_t n = net.size();
  ComplexMatrix a(n, n);
  for (VertexId x = 0; x < n; ++x) {
    const Complex rho_x = table.vertex[x];
    // Re rho(x) > 0 for any connected network, so this never fires on valid input.
    if (!(std::abs(rho_x) > 1e-30)) throw std::logic_error("vanishing vertex admittance");
    const Complex inv = 1.0 / rho_x;
    a(x, x) = 1.0;
    for (const auto& nb : net.neighbors(x)) a(x, nb.vertex) = -table.edge[nb.edge] * inv;
  }
  return LaplacianMatrix(std::move(a), dual);
}

LaplacianMatrix assemble(const Network& net, ComplexFrequency s, bool dual) {
  return assemble(net, admittance_table(net, s), dual);
}

ComplexVector apply(const LaplacianMatrix& a, std::span<const Complex> f) {
  require_length(f, a.size());
  return multiply(a.entries(), f);
}

double green_residual(const Network& net, ComplexFrequency s, std::span<const Complex> f,
                      std::span<const Complex> g) {
  require_length(f, net.size());
  require_length(g, net.size());
  const auto table = admittance_table(net, s);
  const auto lap = assemble(net, table);
  const auto af = apply(lap, f);

  Complex lhs{};
  for (VertexId x = 0; x < net.size(); ++x) lhs += af[x] * g[x] * table.vertex[x];

  // Each edge appears as (x,y) and (y,x) with identical products; the two
  // copies cancel the factor 1/2.
  Complex rhs{};
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    const Edge& edge = net.edges()[e];
    rhs += (f[edge.v] - f[edge.u]) * (g[edge.v] - g[edge.u]) * table.edge[e];
  }
  return std::abs(lhs - rhs);
}

Complex complex_power(const Network& net, const AdmittanceTable& table, std::span<const Complex> f) {
  require_length(f, net.size());
  Complex sum{};
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    const Edge& edge = net.edges()[e];
    sum += std::norm(f[edge.v] - f[edge.u]) * table.edge[e];
  }
  return sum;
}

Complex complex_power(const Network& net, ComplexFrequency s, std::span<const Complex> f) {
  return complex_power(net, admittance_table(net, s), f);
}

Complex weighted_mass(const AdmittanceTable& table, std::span<const Complex> f) {
  require_length(f, table.vertex.size());
  Complex sum{};
  for (std::size_t x = 0; x < f.size(); ++x) sum += std::norm(f[x]) * table.vertex[x];
  return sum;
}

}  // namespace acnet
