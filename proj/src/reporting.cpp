#include "qcmine/reporting.hpp"

#include <cmath>

#include "json.hpp"
#include "qcmine/format.hpp"
#include "qcmine/theory.hpp"

namespace qcmine {

std::string stats_json(const Graph& g, const MetricsResult& metrics, const IngestSummary* ingest) {
  const DegreeStats st = degree_stats(g);
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["d_max"] = st.d_max;
  if (st.d_min)
    j["d_min"] = *st.d_min;
  else
    j["d_min"] = nullptr;
  j["total_triangles"] = metrics.global.total_triangles;
  j["total_wedges"] = metrics.global.total_wedges;
  j["global_cc"] = sig6(metrics.global.global_cc);
  j["mean_local_cc"] = sig6(metrics.global.mean_local_cc);
  j["missing_degree_count"] = st.missing_degree_count;
  const auto gamma = fit_power_law_gamma(st);
  if (gamma)
    j["power_law_gamma_hat"] = sig6(*gamma);
  else
    j["power_law_gamma_hat"] = nullptr;
  if (ingest) j["ingest"] = nlohmann::ordered_json::parse(ingest->to_json());
  return j.dump(2);
}

VerifyOutcome verify_graph(const Graph& g, int threads) {
  const MetricsResult metrics = vertex_metrics(g, threads);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  std::uint64_t total_violations = 0;

  auto push = [&](const char* name, std::uint64_t violations, const nlohmann::ordered_json& extra) {
    nlohmann::ordered_json c;
    c["name"] = name;
    c["pass"] = violations == 0;
    c["violations"] = violations;
    for (const auto& [k, v] : extra.items()) c[k] = v;
    checks.push_back(std::move(c));
    total_violations += violations;
  };

  // Neighborhood density identity: e(N_v) recounted from the induced
  // subgraph must equal the closed-wedge count at v.
  {
    std::uint64_t bad = 0;
    nlohmann::ordered_json extra;
    extra["counterexample"] = nullptr;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto nb = g.neighbors(v);
      if (nb.size() < 2) continue;
      const std::uint64_t e = count_edges_within(g, nb);
      if (e != metrics.vertices[v].triangles) {
        if (bad == 0) extra["counterexample"] = g.label(v);
        ++bad;
      }
    }
    push("neighborhood_density_identity", bad, std::move(extra));
  }

  // Wedge-weighted average of local coefficients equals the global one.
  {
    double sum = 0.0;
    for (const auto& vm : metrics.vertices) sum += vm.wedge_prob * vm.local_cc;
    const double residual = std::fabs(sum - metrics.global.global_cc);
    nlohmann::ordered_json extra;
    extra["residual"] = residual;
    extra["tolerance"] = 1e-12;
    push("wedge_average_identity", residual <= 1e-12 ? 0 : 1, std::move(extra));
  }

  // 3 * total triangles must equal the closed-wedge sum exactly.
  {
    std::uint64_t closed = 0;
    for (const auto& vm : metrics.vertices) closed += vm.triangles;
    push("closed_wedge_accounting", closed == 3 * metrics.global.total_triangles ? 0 : 1,
         nlohmann::ordered_json::object());
  }

  // Handshake: degree sum equals twice the edge count.
  {
    std::uint64_t degsum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) degsum += g.degree(v);
    push("handshake_identity", degsum == 2 * g.edge_count() ? 0 : 1,
         nlohmann::ordered_json::object());
  }

  // Every ego-clique must pass the direct maximality test.
  {
    std::uint64_t bad = 0;
    std::uint64_t count = 0;
    nlohmann::ordered_json extra;
    extra["counterexample"] = nullptr;
    for (const auto& ec : find_ego_cliques(g, metrics, 2)) {
      ++count;
      if (!ec.maximal) {
        if (bad == 0) extra["counterexample"] = g.label(ec.center);
        ++bad;
      }
    }
    extra["checked"] = count;
    push("ego_clique_maximality", bad, std::move(extra));
  }

  // Profile witnesses must reproduce their recorded density.
  {
    std::uint64_t bad = 0;
    const NDProfile profile = ndp(g, metrics);
    for (const auto& e : profile.entries) {
      const auto& vm = metrics.vertices[e.witness];
      if (vm.degree != e.degree || vm.triangles != e.witness_triangles) ++bad;
      const auto nb = g.neighbors(e.witness);
      if (nb.size() >= 2 && count_edges_within(g, nb) != e.witness_triangles) ++bad;
    }
    nlohmann::ordered_json extra;
    extra["entries"] = profile.entries.size();
    push("profile_witness_recheck", bad, std::move(extra));
  }

  // Small graphs: exact cross-check against the all-triples count.
  if (g.vertex_count() <= 64) {
    std::uint64_t bad = 0;
    const std::uint32_t n = g.vertex_count();
    std::vector<std::uint64_t> brute(n, 0);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        for (VertexId c = b + 1; c < n; ++c)
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
            ++brute[a];
            ++brute[b];
            ++brute[c];
          }
    for (VertexId v = 0; v < n; ++v)
      if (brute[v] != metrics.vertices[v].triangles) ++bad;
    nlohmann::ordered_json extra;
    push("all_triples_cross_check", bad, std::move(extra));
  }

  nlohmann::ordered_json j;
  j["checks"] = std::move(checks);
  j["pass"] = total_violations == 0;

  VerifyOutcome out;
  out.json = j.dump(2);
  out.violations = total_violations;
  return out;
}

}  // namespace qcmine
