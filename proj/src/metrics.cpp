#include "qcmine/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <thread>

#include "json.hpp"
#include "qcmine/format.hpp"

namespace qcmine {

namespace {

std::vector<VertexId> sorted_unique(std::span<const VertexId> s, std::uint32_t n) {
  std::vector<VertexId> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (!verts.empty() && verts.back() >= n) throw std::out_of_range("vertex id out of range");
  return verts;
}

}  // namespace

TriangleCounts count_triangles(const Graph& g, int threads) {
  const std::uint32_t n = g.vertex_count();
  TriangleCounts out;
  out.per_vertex.assign(n, 0);

  // Rank vertices by (degree, id); each triangle is found once at its
  // lowest-ranked corner, walking only edges toward higher ranks.
  std::vector<std::uint32_t> rank(n);
  {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      const auto da = g.degree(a), db = g.degree(b);
      return da != db ? da < db : a < b;
    });
    for (std::uint32_t i = 0; i < n; ++i) rank[order[i]] = i;
  }

  std::vector<std::uint64_t> fwd_off(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t c = 0;
    for (VertexId u : g.neighbors(v))
      if (rank[u] > rank[v]) ++c;
    fwd_off[v + 1] = fwd_off[v] + c;
  }
  std::vector<VertexId> fwd(fwd_off[n]);
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t c = fwd_off[v];
    for (VertexId u : g.neighbors(v))
      if (rank[u] > rank[v]) fwd[c++] = u;  // stays sorted by id
  }

  const int nthreads = std::max(1, threads);
  auto worker = [&](std::vector<std::uint64_t>& counts, std::atomic<std::uint32_t>& next) {
    constexpr std::uint32_t kChunk = 256;
    for (;;) {
      const std::uint32_t begin = next.fetch_add(kChunk);
      if (begin >= n) break;
      const std::uint32_t end = std::min(n, begin + kChunk);
      for (VertexId v = begin; v < end; ++v) {
        const VertexId* vs = fwd.data() + fwd_off[v];
        const VertexId* ve = fwd.data() + fwd_off[v + 1];
        for (const VertexId* pu = vs; pu != ve; ++pu) {
          const VertexId u = *pu;
          const VertexId* us = fwd.data() + fwd_off[u];
          const VertexId* ue = fwd.data() + fwd_off[u + 1];
          const VertexId* a = vs;
          const VertexId* b = us;
          while (a != ve && b != ue) {
            if (*a < *b) {
              ++a;
            } else if (*b < *a) {
              ++b;
            } else {
              ++counts[v];
              ++counts[u];
              ++counts[*a];
              ++a;
              ++b;
            }
          }
        }
      }
    }
  };

  if (nthreads == 1) {
    std::atomic<std::uint32_t> next{0};
    worker(out.per_vertex, next);
  } else {
    std::atomic<std::uint32_t> next{0};
    std::vector<std::vector<std::uint64_t>> local(nthreads);
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
      local[t].assign(n, 0);
      pool.emplace_back([&, t] { worker(local[t], next); });
    }
    for (auto& th : pool) th.join();
    for (int t = 0; t < nthreads; ++t)
      for (VertexId v = 0; v < n; ++v) out.per_vertex[v] += local[t][v];
  }

  std::uint64_t sum = 0;
  for (const auto c : out.per_vertex) sum += c;
  out.total = sum / 3;
  return out;
}

MetricsResult vertex_metrics(const Graph& g, int threads) {
  const std::uint32_t n = g.vertex_count();
  const TriangleCounts tc = count_triangles(g, threads);

  MetricsResult r;
  r.vertices.resize(n);
  std::uint64_t total_wedges = 0;
  for (VertexId v = 0; v < n; ++v) {
    const std::uint32_t d = g.degree(v);
    const std::uint64_t w = static_cast<std::uint64_t>(d) * (d - 1) / 2;
    total_wedges += w;
    auto& vm = r.vertices[v];
    vm.degree = d;
    vm.wedges = w;
    vm.triangles = tc.per_vertex[v];
    vm.local_cc = w > 0 ? static_cast<double>(vm.triangles) / static_cast<double>(w) : 0.0;
  }
  double cbar = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    auto& vm = r.vertices[v];
    vm.wedge_prob = total_wedges > 0 ? static_cast<double>(vm.wedges) / static_cast<double>(total_wedges) : 0.0;
    cbar += vm.local_cc;
  }
  r.global.total_wedges = total_wedges;
  r.global.total_triangles = tc.total;
  r.global.global_cc =
      total_wedges > 0 ? 3.0 * static_cast<double>(tc.total) / static_cast<double>(total_wedges) : 0.0;
  r.global.mean_local_cc = n > 0 ? cbar / n : 0.0;
  return r;
}

std::uint64_t count_edges_within(const Graph& g, std::span<const VertexId> s) {
  const auto verts = sorted_unique(s, g.vertex_count());
  std::vector<std::uint8_t> in_s(g.vertex_count(), 0);
  for (VertexId v : verts) in_s[v] = 1;
  std::uint64_t e = 0;
  for (VertexId v : verts)
    for (VertexId u : g.neighbors(v))
      if (u > v && in_s[u]) ++e;
  return e;
}

std::uint64_t count_triangles_within(const Graph& g, std::span<const VertexId> s) {
  return count_triangles(g.induced_subgraph(s)).total;
}

double edge_density(const Graph& g, std::span<const VertexId> s) {
  const auto verts = sorted_unique(s, g.vertex_count());
  if (verts.size() < 2) throw std::invalid_argument("edge_density needs at least 2 vertices");
  const std::uint64_t k = verts.size();
  return static_cast<double>(count_edges_within(g, verts)) /
         static_cast<double>(k * (k - 1) / 2);
}

double triangle_density(const Graph& g, std::span<const VertexId> s) {
  const auto verts = sorted_unique(s, g.vertex_count());
  if (verts.size() < 3) throw std::invalid_argument("triangle_density needs at least 3 vertices");
  const std::uint64_t k = verts.size();
  const std::uint64_t c3 = k * (k - 1) * (k - 2) / 6;
  return static_cast<double>(count_triangles_within(g, verts)) / static_cast<double>(c3);
}

NDProfile ndp(const Graph& g, const MetricsResult& metrics) {
  NDProfile p;
  p.global_cc = metrics.global.global_cc;

  // Same degree means same wedge count, so the densest vertex of a degree
  // class is the one with the most triangles.
  std::map<std::uint32_t, VertexId> best;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& vm = metrics.vertices[v];
    p.d_max = std::max(p.d_max, vm.degree);
    if (vm.degree < 2) continue;
    auto [it, inserted] = best.try_emplace(vm.degree, v);
    if (!inserted && metrics.vertices[it->second].triangles < vm.triangles) it->second = v;
  }
  for (const auto& [d, v] : best) {
    const auto& vm = metrics.vertices[v];
    p.entries.push_back({d, vm.local_cc, v, vm.triangles});
    if (vm.triangles == vm.wedges) p.largest_ego_clique = std::max(p.largest_ego_clique, d + 1);
  }
  return p;
}

std::string ndp_csv(const Graph& g, const NDProfile& profile) {
  std::string out = "degree,log10_degree,max_density,witness_id\n";
  char buf[160];
  for (const auto& e : profile.entries) {
    std::snprintf(buf, sizeof(buf), "%u,%s,%s,%lld\n", e.degree,
                  format_sig6(std::log10(static_cast<double>(e.degree))).c_str(),
                  format_sig6(e.max_density).c_str(),
                  static_cast<long long>(g.label(e.witness)));
    out += buf;
  }
  return out;
}

std::string ndp_summary_json(const NDProfile& profile) {
  nlohmann::ordered_json j;
  j["d_max"] = profile.d_max;
  j["global_cc"] = sig6(profile.global_cc);
  j["largest_ego_clique_size"] = profile.largest_ego_clique;
  return j.dump();
}

std::vector<EgoClique> find_ego_cliques(const Graph& g, const MetricsResult& metrics,
                                        std::uint32_t min_size) {
  if (min_size < 2) throw std::invalid_argument("min_size must be at least 2");
  std::vector<EgoClique> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& vm = metrics.vertices[v];
    if (vm.wedges == 0 || vm.triangles != vm.wedges) continue;
    if (vm.degree + 1 < min_size) continue;
    EgoClique ec;
    ec.center = v;
    const auto nb = g.neighbors(v);
    ec.members.assign(nb.begin(), nb.end());
    ec.members.push_back(v);
    std::sort(ec.members.begin(), ec.members.end());
    ec.maximal = is_maximal_clique(g, ec.members);
    out.push_back(std::move(ec));
  }
  return out;
}

bool is_clique(const Graph& g, std::span<const VertexId> s) {
  const auto verts = sorted_unique(s, g.vertex_count());
  if (verts.size() <= 1) return true;
  const std::uint64_t k = verts.size();
  return count_edges_within(g, verts) == k * (k - 1) / 2;
}

bool is_maximal_clique(const Graph& g, std::span<const VertexId> s) {
  const auto verts = sorted_unique(s, g.vertex_count());
  if (!is_clique(g, verts)) throw std::invalid_argument("is_maximal_clique requires a clique");
  if (verts.empty()) return false;

  std::vector<std::uint8_t> in_s(g.vertex_count(), 0);
  for (VertexId v : verts) in_s[v] = 1;

  // Any extension vertex is adjacent to all members, so it suffices to
  // scan the neighborhood of the member with the fewest neighbors.
  VertexId probe = verts[0];
  for (VertexId v : verts)
    if (g.degree(v) < g.degree(probe)) probe = v;

  for (VertexId cand : g.neighbors(probe)) {
    if (in_s[cand]) continue;
    std::size_t hits = 0;
    for (VertexId u : g.neighbors(cand))
      if (in_s[u]) ++hits;
    if (hits == verts.size()) return false;
  }
  return true;
}

}  // namespace qcmine
