#include "acnet/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace acnet {

NetworkError::NetworkError(Kind kind, std::string message, std::size_t line)
    : std::runtime_error(line == 0 ? std::move(message)
                                   : "line " + std::to_string(line) + ": " + message),
      kind_(kind),
      line_(line) {}

namespace {

using Kind = NetworkError::Kind;

bool valid_element(double value) { return std::isfinite(value) && value >= 0.0; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::optional<double> parse_real(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

Network::Network(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)), adjacency_(labels_.size()) {
  if (labels_.size() < 2) {
    throw NetworkError(Kind::TooFewVertices, "a network needs at least two vertices");
  }
  {
    std::unordered_map<std::string_view, VertexId> seen;
    for (VertexId i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw NetworkError(Kind::Syntax, "empty vertex label");
      if (!seen.emplace(labels_[i], i).second) {
        throw NetworkError(Kind::DuplicateVertex, "duplicate vertex label '" + labels_[i] + "'");
      }
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.u >= labels_.size() || edge.v >= labels_.size()) {
      throw NetworkError(Kind::UnknownVertex, "edge endpoint out of range");
    }
    if (edge.u == edge.v) {
      throw NetworkError(Kind::LoopEdge, "loop edge at vertex '" + labels_[edge.u] + "'");
    }
    if (!valid_element(edge.inductance) || !valid_element(edge.resistance) ||
        !valid_element(edge.elastance)) {
      throw NetworkError(Kind::InvalidElement, "element values must be finite and non-negative");
    }
    if (!(edge.element_sum() > 0.0)) {
      throw NetworkError(Kind::ZeroEdge, "edge " + labels_[edge.u] + "-" + labels_[edge.v] +
                                             " has L = R = D = 0");
    }
    adjacency_[edge.u].push_back({edge.v, e});
    adjacency_[edge.v].push_back({edge.u, e});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    auto dup = std::adjacent_find(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) {
      return a.vertex == b.vertex;
    });
    if (dup != list.end()) {
      const Edge& edge = edges_[dup->edge];
      throw NetworkError(Kind::DuplicateEdge, "more than one edge between " + labels_[edge.u] +
                                                  " and " + labels_[edge.v]);
    }
  }
  const auto dist = bfs_distances(*this, 0);
  for (VertexId x = 0; x < dist.size(); ++x) {
    if (dist[x] == static_cast<std::size_t>(-1)) {
      throw NetworkError(Kind::Disconnected,
                         "network is disconnected: '" + labels_[x] + "' is unreachable from '" +
                             labels_[0] + "'");
    }
  }
}

std::optional<VertexId> Network::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::optional<std::size_t> Network::edge_between(VertexId a, VertexId b) const {
  const auto& list = adjacency_.at(a);
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Neighbor& n, VertexId v) { return n.vertex < v; });
  if (it == list.end() || it->vertex != b) return std::nullopt;
  return it->edge;
}

Network parse_network(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  bool have_vertices = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (!have_vertices) {
      std::vector<std::string_view> names;
      if (tokens[0] == "vertices:") {
        names.assign(tokens.begin() + 1, tokens.end());
      } else if (tokens[0].substr(0, 9) == "vertices:") {
        names.push_back(tokens[0].substr(9));
        names.insert(names.end(), tokens.begin() + 1, tokens.end());
      } else {
        throw NetworkError(Kind::Syntax, "expected 'vertices:' declaration", line_no);
      }
      for (auto name : names) {
        std::string label(name);
        if (!index.emplace(label, labels.size()).second) {
          throw NetworkError(Kind::DuplicateVertex, "duplicate vertex label '" + label + "'",
                             line_no);
        }
        labels.push_back(std::move(label));
      }
      if (labels.size() < 2) {
        throw NetworkError(Kind::TooFewVertices, "a network needs at least two vertices", line_no);
      }
      have_vertices = true;
      continue;
    }

    if (tokens[0] != "edge") {
      throw NetworkError(Kind::Syntax, "expected 'edge', got '" + std::string(tokens[0]) + "'",
                         line_no);
    }
    if (tokens.size() < 3) {
      throw NetworkError(Kind::Syntax, "edge needs two vertex labels", line_no);
    }
    Edge edge;
    for (int k = 0; k < 2; ++k) {
      auto it = index.find(std::string(tokens[1 + k]));
      if (it == index.end()) {
        throw NetworkError(Kind::UnknownVertex,
                           "unknown vertex '" + std::string(tokens[1 + k]) + "'", line_no);
      }
      (k == 0 ? edge.u : edge.v) = it->second;
    }
    bool seen[3] = {false, false, false};
    for (std::size_t t = 3; t < tokens.size(); ++t) {
      const auto token = tokens[t];
      const auto eq = token.find('=');
      if (eq != 1) {
        throw NetworkError(Kind::Syntax, "expected L=, R= or D=, got '" + std::string(token) + "'",
                           line_no);
      }
      int slot = 0;
      switch (token[0]) {
        case 'L': slot = 0; break;
        case 'R': slot = 1; break;
        case 'D': slot = 2; break;
        default:
          throw NetworkError(Kind::Syntax, "unknown element key '" + std::string(token.substr(0, 1)) + "'",
                             line_no);
      }
      if (seen[slot]) {
        throw NetworkError(Kind::Syntax, "element key given twice", line_no);
      }
      seen[slot] = true;
      const auto value = parse_real(token.substr(2));
      if (!value) {
        throw NetworkError(Kind::Syntax, "malformed number '" + std::string(token.substr(2)) + "'",
                           line_no);
      }
      if (!valid_element(*value)) {
        throw NetworkError(Kind::InvalidElement, "element values must be finite and non-negative",
                           line_no);
      }
      (slot == 0 ? edge.inductance : slot == 1 ? edge.resistance : edge.elastance) = *value;
    }
    if (edge.u == edge.v) {
      throw NetworkError(Kind::LoopEdge, "loop edge at vertex '" + labels[edge.u] + "'", line_no);
    }
    if (!(edge.element_sum() > 0.0)) {
      throw NetworkError(Kind::ZeroEdge, "edge has L = R = D = 0", line_no);
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Edge& prev = edges[e];
      if ((prev.u == edge.u && prev.v == edge.v) || (prev.u == edge.v && prev.v == edge.u)) {
        throw NetworkError(Kind::DuplicateEdge,
                           "duplicate edge (first declared on line " +
                               std::to_string(edge_lines[e]) + ")",
                           line_no);
      }
    }
    edges.push_back(edge);
    edge_lines.push_back(line_no);
  }

  if (!have_vertices) throw NetworkError(Kind::Syntax, "missing 'vertices:' declaration");
  return Network(std::move(labels), std::move(edges));
}

std::string serialize_network(const Network& net) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& label : net.labels()) out << ' ' << label;
  out << '\n';
  for (const Edge& e : net.edges()) {
    out << "edge " << net.labels()[e.u] << ' ' << net.labels()[e.v] << " L=" << format_real(e.inductance)
        << " R=" << format_real(e.resistance) << " D=" << format_real(e.elastance) << '\n';
  }
  return out.str();
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NetworkError(Kind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

Network p4_example() {
  return Network({"x1", "x2", "x3", "x4"},
                 {Edge{0, 1, 0.0, 0.0, 1.0}, Edge{1, 2, 1.0, 0.0, 0.0}, Edge{2, 3, 0.0, 0.0, 1.0}});
}

std::vector<std::size_t> bfs_distances(const Network& net, VertexId source) {
  constexpr auto unreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(net.size(), unreached);
  std::queue<VertexId> queue;
  dist.at(source) = 0;
  queue.push(source);
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop();
    for (const auto& nb : net.neighbors(x)) {
      if (dist[nb.vertex] == unreached) {
        dist[nb.vertex] = dist[x] + 1;
        queue.push(nb.vertex);
      }
    }
  }
  return dist;
}

std::size_t diameter(const Network& net) {
  std::size_t best = 0;
  for (VertexId x = 0; x < net.size(); ++x) {
    const auto dist = bfs_distances(net, x);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::optional<Bipartition> bipartition(const Network& net) {
  std::vector<int> color(net.size(), -1);
  std::queue<VertexId> queue;
  color[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop();
    for (const auto& nb : net.neighbors(x)) {
      if (color[nb.vertex] < 0) {
        color[nb.vertex] = 1 - color[x];
        queue.push(nb.vertex);
      } else if (color[nb.vertex] == color[x]) {
        return std::nullopt;
      }
    }
  }
  Bipartition parts;
  for (VertexId x = 0; x < net.size(); ++x) {
    (color[x] == 0 ? parts.part_plus : parts.part_minus).push_back(x);
  }
  return parts;
}

std::vector<VertexId> shortest_path(const Network& net, VertexId from, VertexId to) {
  // Distances to the target; then walk greedily from the source, always
  // stepping to the smallest-index neighbor that is one hop closer.
  const auto dist = bfs_distances(net, to);
  std::vector<VertexId> path{from};
  VertexId current = from;
  while (current != to) {
    for (const auto& nb : net.neighbors(current)) {
      if (dist[nb.vertex] + 1 == dist[current]) {
        current = nb.vertex;
        break;
      }
    }
    path.push_back(current);
  }
  return path;
}

}  // namespace acnet
