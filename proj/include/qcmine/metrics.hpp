#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcmine/graph.hpp"

namespace qcmine {

/// Per-vertex wedge and triangle counts. local_cc and wedge_prob are the
/// floating views; triangles/wedges stay exact for threshold comparisons
/// (local_cc == triangles/wedges, zero when the vertex has fewer than two
/// neighbors).
struct VertexMetrics {
  std::uint32_t degree = 0;
  std::uint64_t triangles = 0;  // closed wedges centered here
  std::uint64_t wedges = 0;     // degree choose 2
  double local_cc = 0.0;
  double wedge_prob = 0.0;
};

struct GlobalMetrics {
  std::uint64_t total_wedges = 0;
  std::uint64_t total_triangles = 0;
  double global_cc = 0.0;     // 3 * triangles / wedges
  double mean_local_cc = 0.0; // plain average over all n vertices
};

struct TriangleCounts {
  std::vector<std::uint64_t> per_vertex;
  std::uint64_t total = 0;
};

/// Exact per-vertex triangle counts via degree-ordered neighbor
/// intersection. Results are independent of the thread count.
TriangleCounts count_triangles(const Graph& g, int threads = 1);

struct MetricsResult {
  std::vector<VertexMetrics> vertices;
  GlobalMetrics global;
};

MetricsResult vertex_metrics(const Graph& g, int threads = 1);

/// Edges of the induced subgraph on s (s deduplicated, ids validated).
std::uint64_t count_edges_within(const Graph& g, std::span<const VertexId> s);
std::uint64_t count_triangles_within(const Graph& g, std::span<const VertexId> s);

/// e(S) / C(|S|,2). Requires |S| >= 2.
double edge_density(const Graph& g, std::span<const VertexId> s);
/// t(S) / C(|S|,3). Requires |S| >= 3.
double triangle_density(const Graph& g, std::span<const VertexId> s);

/// One profile entry per unique degree >= 2: the best neighborhood
/// edge-density among vertices of that degree, with a witness attaining it
/// (lowest internal id on ties).
struct NDProfileEntry {
  std::uint32_t degree = 0;
  double max_density = 0.0;
  VertexId witness = 0;
  std::uint64_t witness_triangles = 0;  // exact numerator of max_density
};

struct NDProfile {
  std::vector<NDProfileEntry> entries;  // ascending degree
  std::uint32_t d_max = 0;
  double global_cc = 0.0;
  std::uint32_t largest_ego_clique = 0;  // 0 when no neighborhood is a clique
};

NDProfile ndp(const Graph& g, const MetricsResult& metrics);

/// CSV with header degree,log10_degree,max_density,witness_id
/// (witness_id is the external label).
std::string ndp_csv(const Graph& g, const NDProfile& profile);
std::string ndp_summary_json(const NDProfile& profile);

/// {v} and its neighborhood when that neighborhood induces a clique.
/// Such sets are always maximal cliques; `maximal` records the result of
/// the direct test rather than trusting that fact.
struct EgoClique {
  VertexId center = 0;
  std::vector<VertexId> members;  // sorted, includes center
  bool maximal = false;
};

std::vector<EgoClique> find_ego_cliques(const Graph& g, const MetricsResult& metrics,
                                        std::uint32_t min_size = 2);

bool is_clique(const Graph& g, std::span<const VertexId> s);
/// True iff no outside vertex is adjacent to every member. Throws
/// std::invalid_argument when s is not a clique.
bool is_maximal_clique(const Graph& g, std::span<const VertexId> s);

}  // namespace qcmine
