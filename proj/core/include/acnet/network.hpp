#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acnet {

using VertexId = std::size_t;

/// Passive two-terminal element between two vertices.
///
/// The three values are the coefficients of the impedance
/// `L*s + R + D/s`: inductance, resistance and elastance (inverse
/// capacitance). All are finite and non-negative with a positive sum.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double inductance = 0.0;
  double resistance = 0.0;
  double elastance = 0.0;

  double element_sum() const { return inductance + resistance + elastance; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Thrown for malformed input text and for networks that violate the model
/// invariants. `line()` is 0 when the problem is not tied to a source line.
class NetworkError : public std::runtime_error {
 public:
  enum class Kind {
    Syntax,
    UnknownVertex,
    DuplicateVertex,
    TooFewVertices,
    LoopEdge,
    DuplicateEdge,
    InvalidElement,
    ZeroEdge,
    Disconnected,
    Io,
  };

  NetworkError(Kind kind, std::string message, std::size_t line = 0);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

struct Neighbor {
  VertexId vertex;
  std::size_t edge;
};

/// Connected, loop-free simple graph whose edges carry (L, R, D) values.
///
/// Immutable after construction. The constructor enforces every invariant,
/// so any `Network` instance is valid input for the rest of the library.
class Network {
 public:
  Network(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Incident edges of `x`, sorted by neighbor index.
  const std::vector<Neighbor>& neighbors(VertexId x) const { return adjacency_.at(x); }

  std::optional<VertexId> find(std::string_view label) const;

  /// Index of the edge joining `a` and `b`, if any.
  std::optional<std::size_t> edge_between(VertexId a, VertexId b) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Parses the line-oriented network format:
///
///     # comment
///     vertices: a b c
///     edge a b L=0 R=1 D=0
///
/// Element keys are optional and default to 0. Errors carry the 1-based
/// line number where the problem was found.
Network parse_network(std::string_view text);

/// Inverse of `parse_network`; values are written with 17 significant digits.
std::string serialize_network(const Network& net);

Network load_network(const std::filesystem::path& path);

/// Path graph x1-x2-x3-x4 with a capacitor, a coil and a capacitor, so that
/// the edge admittances are s, 1/s, s.
Network p4_example();

struct Bipartition {
  std::vector<VertexId> part_plus;
  std::vector<VertexId> part_minus;
};

/// Largest shortest-path distance (in edges) over all vertex pairs.
std::size_t diameter(const Network& net);

/// Two-coloring of the graph, or nullopt when it contains an odd cycle.
/// Vertex 0 is always placed in `part_plus`.
std::optional<Bipartition> bipartition(const Network& net);

/// A minimum-edge path from `from` to `to`, endpoints included. Among equally
/// short paths the lexicographically smallest vertex sequence is returned.
std::vector<VertexId> shortest_path(const Network& net, VertexId from, VertexId to);

/// Hop distances from `source` to every vertex.
std::vector<std::size_t> bfs_distances(const Network& net, VertexId source);

}  // namespace acnet
