#include "qcmine.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcmine/graph.hpp"
#include "qcmine/metrics.hpp"
#include "qcmine/miner.hpp"
#include "qcmine/reporting.hpp"
#include "qcmine/theory.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qcm_status fail(qcm_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
qcm_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const qcmine::ParseError& e) {
    return fail(QCM_ERR_PARSE, e.what());
  } catch (const std::domain_error& e) {
    return fail(QCM_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QCM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(QCM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QCM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QCM_ERR_IO, e.what());
  }
}

qcmine::ParseOptions convert(const qcm_parse_options* opts) {
  qcmine::ParseOptions o;
  if (opts) {
    o.symmetrize = opts->symmetrize != 0;
    o.drop_self_loops = opts->drop_self_loops != 0;
  }
  return o;
}

}  // namespace

struct qcm_graph {
  qcmine::Graph graph;
  qcmine::IngestSummary ingest;
  std::optional<qcmine::MetricsResult> metrics;

  const qcmine::MetricsResult& metrics_for(int threads) {
    if (!metrics) metrics = qcmine::vertex_metrics(graph, threads);
    return *metrics;
  }
};

extern "C" {

const char* qcm_version(void) { return "1.0.0"; }

const char* qcm_last_error(void) { return g_last_error.c_str(); }

void qcm_string_free(char* s) { std::free(s); }

qcm_status qcm_graph_load_path(const char* path, const qcm_parse_options* opts, qcm_graph** out) {
  if (!path || !out) return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto handle = std::make_unique<qcm_graph>();
    handle->graph = qcmine::Graph::load_file(path, convert(opts), &handle->ingest);
    *out = handle.release();
    return QCM_OK;
  });
}

qcm_status qcm_graph_load_buffer(const char* data, size_t size, const qcm_parse_options* opts,
                                 qcm_graph** out) {
  if (!data || !out) return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto handle = std::make_unique<qcm_graph>();
    handle->graph = qcmine::Graph::parse_edge_list_text(std::string(data, size), convert(opts),
                                                        &handle->ingest);
    *out = handle.release();
    return QCM_OK;
  });
}

void qcm_graph_free(qcm_graph* g) { delete g; }

uint64_t qcm_graph_vertices(const qcm_graph* g) { return g ? g->graph.vertex_count() : 0; }

uint64_t qcm_graph_edges(const qcm_graph* g) { return g ? g->graph.edge_count() : 0; }

qcm_status qcm_ingest_summary_json(const qcm_graph* g, char** out) {
  if (!g || !out) return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(g->ingest.to_json());
    return QCM_OK;
  });
}

qcm_status qcm_stats_json(qcm_graph* g, int threads, char** out) {
  if (!g || !out) return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(qcmine::stats_json(g->graph, g->metrics_for(threads), &g->ingest));
    return QCM_OK;
  });
}

qcm_status qcm_ndp_csv(qcm_graph* g, int threads, char** csv_out, char** summary_json_out) {
  if (!g || (!csv_out && !summary_json_out))
    return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& metrics = g->metrics_for(threads);
    const auto profile = qcmine::ndp(g->graph, metrics);
    if (profile.entries.empty())
      return fail(QCM_ERR_DOMAIN, "graph has no vertex of degree >= 2");
    if (csv_out) *csv_out = dup_string(qcmine::ndp_csv(g->graph, profile));
    if (summary_json_out) *summary_json_out = dup_string(qcmine::ndp_summary_json(profile));
    return QCM_OK;
  });
}

qcm_status qcm_bounds_alpha_csv(double cg, const double* alphas, size_t n_alphas, char** out) {
  if (!out) return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<double> grid;
    if (alphas && n_alphas > 0)
      grid.assign(alphas, alphas + n_alphas);
    else
      grid = qcmine::default_alpha_grid();
    *out = dup_string(qcmine::bounds_alpha_csv(cg, grid));
    return QCM_OK;
  });
}

qcm_status qcm_bounds_beta_csv(double cg, uint32_t d_min, uint32_t d_max, const double* betas,
                               size_t n_betas, char** out) {
  if (!out) return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<double> grid;
    if (betas && n_betas > 0) {
      grid.assign(betas, betas + n_betas);
    } else {
      const auto bm = qcmine::beta_max(d_min, d_max, cg);
      if (!bm) throw std::domain_error("eta >= C_g on the whole admissible interval");
      const double lo = std::max(0.05, static_cast<double>(d_min) / d_max * 1.0001);
      grid = qcmine::default_beta_grid(lo, *bm);
    }
    *out = dup_string(qcmine::bounds_beta_csv(cg, d_min, d_max, grid));
    return QCM_OK;
  });
}

qcm_status qcm_bounds_profile_csv(qcm_graph* g, double beta_min, int threads, char** out) {
  if (!g || !out) return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& metrics = g->metrics_for(threads);
    const auto profile = qcmine::ndp(g->graph, metrics);
    const auto stats = qcmine::degree_stats(g->graph);
    *out = dup_string(
        qcmine::bounds_profile_csv(profile, stats, metrics.global.global_cc, beta_min));
    return QCM_OK;
  });
}

qcm_status qcm_measured_bound_inputs(qcm_graph* g, int threads, double* cg, uint32_t* d_min,
                                     uint32_t* d_max) {
  if (!g) return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& metrics = g->metrics_for(threads);
    const auto stats = qcmine::degree_stats(g->graph);
    if (cg) *cg = metrics.global.global_cc;
    if (d_min) {
      if (!stats.d_min) return fail(QCM_ERR_DOMAIN, "graph has no vertex of degree >= 2");
      *d_min = *stats.d_min;
    }
    if (d_max) *d_max = stats.d_max;
    return QCM_OK;
  });
}

qcm_status qcm_mine_json(qcm_graph* g, const char* strategy, const char* alphas, uint32_t t_max,
                         int threads, char** out) {
  if (!g || !strategy || !out) return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto parsed = qcmine::parse_mine_strategy(strategy);
    if (!parsed)
      return fail(QCM_ERR_INVALID_ARGUMENT,
                  std::string("unknown strategy '") + strategy +
                      "' (expected ego, s1+localsearch, s2+localsearch, greedy, kcore-seed, "
                      "avgdeg-seed)");
    qcmine::MinePlan plan;
    plan.strategy = *parsed;
    plan.t_max = t_max == 0 ? 50 : t_max;
    plan.threads = threads;
    if (alphas && *alphas) {
      std::stringstream ss(alphas);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        const auto r = qcmine::Rational::parse(tok);
        if (!(r.num > 0 && r <= qcmine::Rational{1, 1}))
          return fail(QCM_ERR_INVALID_ARGUMENT, "alpha must lie in (0,1]: '" + tok + "'");
        plan.alphas.push_back(r);
      }
    }
    const auto result = qcmine::mine(g->graph, plan);
    *out = dup_string(qcmine::mine_json(g->graph, result));
    return QCM_OK;
  });
}

qcm_status qcm_verify_json(qcm_graph* g, int threads, char** out, int* violations) {
  if (!g || !out) return fail(QCM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto outcome = qcmine::verify_graph(g->graph, threads);
    *out = dup_string(outcome.json);
    if (violations) *violations = static_cast<int>(outcome.violations);
    return QCM_OK;
  });
}

}  // extern "C"
