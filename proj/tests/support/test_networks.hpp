#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "acnet/admittance.hpp"
#include "acnet/complex_matrix.hpp"
#include "acnet/network.hpp"

namespace acnet::testing {

/// Element values drawn from [0, 1]; each of L, R, D is present with
/// probability 0.6 and at least one is positive on every edge.
Edge random_edge(std::mt19937_64& rng, VertexId u, VertexId v);

/// Random connected network: a random spanning tree on n vertices plus each
/// remaining pair with probability `extra_edge_p`.
Network random_network(std::mt19937_64& rng, std::size_t n, double extra_edge_p = 0.3);

/// s with Re s in (0, max_re] and |Im s| <= max_im.
ComplexFrequency random_frequency(std::mt19937_64& rng, double max_re = 3.0, double max_im = 3.0);

ComplexVector random_vector(std::mt19937_64& rng, std::size_t n);
ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t n);

/// Named graphs with random element values.
Network path_graph(std::mt19937_64& rng, std::size_t n);
Network cycle_graph(std::mt19937_64& rng, std::size_t n);
Network complete_graph(std::mt19937_64& rng, std::size_t n);
Network complete_bipartite(std::mt19937_64& rng, std::size_t a, std::size_t b);

/// Same topology, every edge a unit resistor.
Network resistor_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs);

/// One (network, frequency) instance of the randomized verification corpus.
struct CorpusCase {
  Network net;
  ComplexFrequency s;
};

/// `count` networks with 2 <= n <= 10 and random frequencies, fixed seed.
std::vector<CorpusCase> make_corpus(std::size_t count, std::uint64_t seed);

}  // namespace acnet::testing
