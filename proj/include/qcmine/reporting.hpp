#pragma once

#include <string>

#include "qcmine/graph.hpp"
#include "qcmine/metrics.hpp"

namespace qcmine {

/// Table-style summary of a graph: counts, degree extremes, clustering
/// coefficients, and the fitted power-law exponent of the degree
/// distribution.
std::string stats_json(const Graph& g, const MetricsResult& metrics,
                       const IngestSummary* ingest = nullptr);

struct VerifyOutcome {
  std::string json;
  std::uint64_t violations = 0;
};

/// Runs the library's cross-check suite on a graph: the neighborhood
/// density identity for every vertex, the wedge-average identity, the
/// closed-wedge/triangle accounting, the handshake identity, maximality of
/// every ego-clique, and profile witness re-evaluation. Graphs with at
/// most 64 vertices are additionally compared against a brute-force
/// all-triples triangle count.
VerifyOutcome verify_graph(const Graph& g, int threads = 1);

}  // namespace qcmine
