// Brute-force reference implementations used only by the tests. These stay
// deliberately independent of the library's algorithms: triangles by
// all-triples scan, wedges by pair enumeration, objective maxima by subset
// enumeration.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcmine/graph.hpp"
#include "qcmine/miner.hpp"
#include "qcmine/rational.hpp"

namespace oracle {

using qcmine::Graph;
using qcmine::Rational;
using qcmine::VertexId;

inline std::vector<std::uint64_t> brute_triangles(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  std::vector<std::uint64_t> t(n, 0);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
          ++t[a];
          ++t[b];
          ++t[c];
        }
  return t;
}

/// (total wedges, closed wedges) centered at v, by pair enumeration.
inline std::pair<std::uint64_t, std::uint64_t> brute_wedges_at(const Graph& g, VertexId v) {
  const auto nb = g.neighbors(v);
  std::uint64_t total = 0, closed = 0;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      ++total;
      if (g.has_edge(nb[i], nb[j])) ++closed;
    }
  return {total, closed};
}

inline std::uint64_t brute_edges_in_mask(const Graph& g, std::uint32_t mask) {
  std::uint64_t e = 0;
  for (VertexId a = 0; a < g.vertex_count(); ++a)
    for (VertexId b = a + 1; b < g.vertex_count(); ++b)
      if ((mask >> a & 1) && (mask >> b & 1) && g.has_edge(a, b)) ++e;
  return e;
}

/// Max of f_alpha over every nonempty vertex subset, exact (scaled by
/// alpha.den). Only sensible for very small graphs.
inline __int128 brute_max_scaled_surplus(const Graph& g, const Rational& alpha) {
  const std::uint32_t n = g.vertex_count();
  __int128 best = 0;  // empty set
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::uint64_t k = __builtin_popcount(mask);
    const std::uint64_t e = brute_edges_in_mask(g, mask);
    const __int128 f =
        static_cast<__int128>(alpha.den) * e - static_cast<__int128>(alpha.num) * (k * (k - 1) / 2);
    if (f > best) best = f;
  }
  return best;
}

inline __int128 scaled_surplus_of(std::uint64_t e, std::uint64_t k, const Rational& alpha) {
  return static_cast<__int128>(alpha.den) * e -
         static_cast<__int128>(alpha.num) * (k * (k - 1) / 2);
}

/// Maximality by scanning every vertex of the graph, not just neighbors.
inline bool brute_is_maximal_clique(const Graph& g, std::span<const VertexId> s) {
  std::vector<std::uint8_t> in_s(g.vertex_count(), 0);
  for (VertexId v : s) in_s[v] = 1;
  for (VertexId cand = 0; cand < g.vertex_count(); ++cand) {
    if (in_s[cand]) continue;
    bool all = true;
    for (VertexId v : s)
      if (!g.has_edge(cand, v)) {
        all = false;
        break;
      }
    if (all) return false;
  }
  return true;
}

inline Graph random_graph(std::uint32_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (coin(rng) < p) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

}  // namespace oracle
