#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcmine {

using VertexId = std::uint32_t;

/// Thrown by the edge-list parser; line is 1-based and 0 for stream-level
/// problems (empty input, read failure).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::uint64_t line)
      : std::runtime_error(std::move(msg)), line_(line) {}
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

struct ParseOptions {
  /// Treat every input arc as an undirected edge (union semantics). When
  /// false the parser instead validates that every edge is listed in both
  /// orientations and fails otherwise.
  bool symmetrize = true;
  /// Drop and count self-loops instead of failing on them.
  bool drop_self_loops = true;
};

/// What the parser saw and discarded while building a simple graph.
struct IngestSummary {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
  std::uint32_t d_max = 0;
  std::optional<std::uint32_t> d_min;  // smallest degree > 1, absent if none
  std::string to_json() const;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Vertices are dense internal ids 0..n-1 assigned in first-appearance
/// order of the original (possibly sparse 64-bit) external ids. Neighbor
/// lists are strictly increasing, self-loop free, and symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from whitespace-separated "u v" lines. Lines starting
  /// with '#' or '%' are comments. Duplicate edges collapse; external ids
  /// are retained as labels.
  static Graph parse_edge_list(std::istream& in, const ParseOptions& opts = {},
                               IngestSummary* summary = nullptr);
  static Graph parse_edge_list_text(const std::string& text, const ParseOptions& opts = {},
                                    IngestSummary* summary = nullptr);
  static Graph load_file(const std::string& path, const ParseOptions& opts = {},
                         IngestSummary* summary = nullptr);

  /// Builds directly from internal-id edges; labels default to identity.
  /// Intended for tests and synthetic constructions.
  static Graph from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges);

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  bool has_edge(VertexId u, VertexId v) const;

  std::int64_t label(VertexId v) const { return labels_[v]; }
  std::span<const std::int64_t> labels() const { return labels_; }

  /// Subgraph induced by s (deduplicated); external labels carry over.
  Graph induced_subgraph(std::span<const VertexId> s) const;

  /// One "label(u) label(v)" line per edge, internal order. Isolated
  /// vertices are not representable in this format.
  void write_edge_list(std::ostream& out) const;

 private:
  std::uint32_t n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<VertexId> neighbors_;
  std::vector<std::int64_t> labels_;

  void build_from_pairs(std::vector<std::pair<VertexId, VertexId>>& edges,
                        std::vector<std::int64_t> labels);
};

/// Degree statistics with the degree-1/0 vertices excluded from the
/// unique-degree set (they carry no wedges).
struct DegreeStats {
  std::uint32_t d_max = 0;
  std::optional<std::uint32_t> d_min;           // smallest degree > 1
  std::map<std::uint32_t, std::uint64_t> degree_histogram;
  std::vector<std::uint32_t> unique_degrees;    // sorted, all >= d_min
  std::uint64_t missing_degree_count = 0;       // gaps in [d_min, d_max]
};

DegreeStats degree_stats(const Graph& g);

}  // namespace qcmine
