#include "qcmine/miner.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <set>
#include <thread>

#include "json.hpp"
#include "qcmine/format.hpp"

namespace qcmine {

namespace {

using i128 = __int128;

std::uint64_t choose2(std::uint64_t k) { return k * (k - 1) / 2; }

/// f_alpha(S) scaled by alpha.den: den * e(S) - num * C(|S|,2). Exact.
i128 scaled_surplus(std::uint64_t e, std::uint64_t k, const Rational& alpha) {
  return static_cast<i128>(alpha.den) * e - static_cast<i128>(alpha.num) * choose2(k);
}

double surplus_value(std::uint64_t e, std::uint64_t k, const Rational& alpha) {
  return static_cast<double>(e) - alpha.value() * static_cast<double>(choose2(k));
}

SubgraphReport finish_report(const Graph& g, std::vector<VertexId> members, const Rational& alpha,
                             std::string algorithm) {
  SubgraphReport r;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  r.members = std::move(members);
  r.algorithm = std::move(algorithm);
  r.alpha = alpha;
  const std::uint64_t k = r.members.size();
  r.edges = k >= 2 ? count_edges_within(g, r.members) : 0;
  r.surplus = surplus_value(r.edges, k, alpha);
  r.delta = k >= 2 ? static_cast<double>(r.edges) / static_cast<double>(choose2(k)) : 1.0;
  r.is_clique = k >= 2 ? r.edges == choose2(k) : true;
  if (k >= 3) {
    r.tau = triangle_density(g, r.members);
  } else {
    r.tau = r.is_clique ? 1.0 : 0.0;
  }
  if (r.is_clique && k >= 1) r.is_maximal = is_maximal_clique(g, r.members);
  return r;
}

/// Current solution set with the bookkeeping needed for O(deg) moves:
/// membership, in-set degree for every vertex, boundary of candidates.
class SearchState {
 public:
  SearchState(const Graph& g, std::span<const VertexId> seed) : g_(g), deg_in_(g.vertex_count(), 0) {
    for (VertexId v : seed) insert(v);
  }

  void insert(VertexId v) {
    if (members_.count(v)) return;
    edges_ += deg_in_[v];
    members_.insert(v);
    boundary_.erase(v);
    for (VertexId u : g_.neighbors(v)) {
      ++deg_in_[u];
      if (!members_.count(u)) boundary_.insert(u);
    }
  }

  void erase(VertexId v) {
    members_.erase(v);
    for (VertexId u : g_.neighbors(v)) {
      --deg_in_[u];
      if (deg_in_[u] == 0) boundary_.erase(u);
    }
    edges_ -= deg_in_[v];
    if (deg_in_[v] > 0) boundary_.insert(v);
  }

  std::uint64_t edges() const { return edges_; }
  std::uint64_t size() const { return members_.size(); }
  std::uint32_t deg_in(VertexId v) const { return deg_in_[v]; }
  const std::set<VertexId>& members() const { return members_; }
  const std::set<VertexId>& boundary() const { return boundary_; }

 private:
  const Graph& g_;
  std::set<VertexId> members_;
  std::set<VertexId> boundary_;  // outside vertices adjacent to the set
  std::vector<std::uint32_t> deg_in_;
  std::uint64_t edges_ = 0;
};

SeedSet make_neighborhood_seed(const Graph& g, const MetricsResult& metrics, VertexId center,
                               SeedStrategy strategy, std::optional<Rational> alpha_used) {
  SeedSet s;
  s.center = center;
  const auto nb = g.neighbors(center);
  s.members.assign(nb.begin(), nb.end());
  s.members.push_back(center);
  std::sort(s.members.begin(), s.members.end());
  s.strategy = strategy;
  s.alpha_used = alpha_used;
  const auto& vm = metrics.vertices[center];
  const std::uint64_t e = vm.triangles + vm.degree;  // neighbor edges + spokes
  const std::uint64_t k = vm.degree + 1;
  s.seed_density = k >= 2 ? static_cast<double>(e) / static_cast<double>(choose2(k)) : 1.0;
  s.seed_surplus = alpha_used ? surplus_value(e, k, *alpha_used) : 0.0;
  return s;
}

/// Profile witnesses: per unique degree >= 2 the vertex with the best
/// neighborhood density (lowest id on ties). Both seeding strategies draw
/// from this list.
std::vector<VertexId> ndp_witnesses(const MetricsResult& metrics) {
  std::map<std::uint32_t, VertexId> best;
  for (VertexId v = 0; v < metrics.vertices.size(); ++v) {
    const auto& vm = metrics.vertices[v];
    if (vm.degree < 2) continue;
    auto [it, inserted] = best.try_emplace(vm.degree, v);
    if (!inserted && metrics.vertices[it->second].triangles < vm.triangles) it->second = v;
  }
  std::vector<VertexId> out;
  out.reserve(best.size());
  for (const auto& [d, v] : best) out.push_back(v);
  return out;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const int nthreads = std::max(1, threads);
  if (nthreads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(nthreads, count);
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

const char* to_string(SeedStrategy s) {
  switch (s) {
    case SeedStrategy::S1: return "s1";
    case SeedStrategy::S2: return "s2";
    case SeedStrategy::AvgDegree: return "avgdeg";
    case SeedStrategy::KCore: return "kcore";
  }
  return "?";
}

double edge_surplus(const Graph& g, std::span<const VertexId> s, const Rational& alpha) {
  if (s.empty()) throw std::invalid_argument("edge_surplus of an empty set");
  std::vector<VertexId> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const std::uint64_t e = count_edges_within(g, verts);
  return surplus_value(e, verts.size(), alpha);
}

SubgraphReport greedy_oqc(const Graph& g, const Rational& alpha) {
  const std::uint32_t n = g.vertex_count();
  std::vector<std::uint32_t> deg(n);
  std::set<std::pair<std::uint32_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<std::uint8_t> removed(n, 0);
  std::vector<VertexId> peel_order;
  peel_order.reserve(n);

  std::uint64_t e = g.edge_count();
  i128 best = scaled_surplus(e, n, alpha);
  std::size_t best_prefix = 0;  // number of removals in the best state

  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    peel_order.push_back(v);
    e -= d;
    for (VertexId u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({deg[u], u});
      --deg[u];
      queue.emplace(deg[u], u);
    }
    // Earliest (largest) peel state wins ties.
    const i128 f = scaled_surplus(e, n - peel_order.size(), alpha);
    if (f > best) {
      best = f;
      best_prefix = peel_order.size();
    }
  }

  std::vector<std::uint8_t> gone(n, 0);
  for (std::size_t i = 0; i < best_prefix; ++i) gone[peel_order[i]] = 1;
  std::vector<VertexId> members;
  members.reserve(n - best_prefix);
  for (VertexId v = 0; v < n; ++v)
    if (!gone[v]) members.push_back(v);

  SubgraphReport r = finish_report(g, std::move(members), alpha, "greedy");
  r.termination = "peel_complete";
  return r;
}

SubgraphReport local_search_oqc(const Graph& g, const SeedSet& seed,
                                const EdgeSurplusParams& params) {
  if (seed.members.empty()) throw std::invalid_argument("local search needs a nonempty seed");
  if (params.t_max < 1) throw std::invalid_argument("t_max must be at least 1");
  const Rational& alpha = params.alpha;

  SearchState state(g, seed.members);
  std::vector<std::pair<std::uint64_t, std::uint32_t>> trajectory;
  if (params.record_trajectory)
    trajectory.emplace_back(state.edges(), static_cast<std::uint32_t>(state.size()));

  const auto record = [&] {
    if (params.record_trajectory)
      trajectory.emplace_back(state.edges(), static_cast<std::uint32_t>(state.size()));
  };

  std::string termination = "iteration_cap";
  for (std::uint32_t iter = 0; iter < params.t_max; ++iter) {
    bool improved = false;

    // Addition gains den*deg_in(v) - num*|S|; scan restarts after every
    // accepted move so ids are always visited in ascending order.
    for (;;) {
      const std::uint64_t k = state.size();
      VertexId picked = 0;
      bool found = false;
      for (VertexId v : state.boundary()) {
        if (static_cast<i128>(alpha.den) * state.deg_in(v) > static_cast<i128>(alpha.num) * k) {
          picked = v;
          found = true;
          break;
        }
      }
      if (!found) break;
      state.insert(picked);
      record();
      improved = true;
    }

    // Deletion gains num*(|S|-1) - den*deg_in(v).
    for (;;) {
      const std::uint64_t k = state.size();
      if (k == 0) break;
      VertexId picked = 0;
      bool found = false;
      for (VertexId v : state.members()) {
        if (static_cast<i128>(alpha.num) * (k - 1) > static_cast<i128>(alpha.den) * state.deg_in(v)) {
          picked = v;
          found = true;
          break;
        }
      }
      if (!found) break;
      state.erase(picked);
      record();
      improved = true;
    }

    if (!improved) {
      termination = "local_optimum";
      break;
    }
  }

  std::vector<VertexId> members(state.members().begin(), state.members().end());
  SubgraphReport r = finish_report(g, std::move(members), alpha, "local_search");
  r.termination = termination;
  r.seed_center = seed.center;
  r.seed_strategy = seed.strategy;
  r.seed_size = seed.members.size();
  r.seed_density = seed.seed_density;
  r.trajectory = std::move(trajectory);
  return r;
}

std::vector<SeedSet> seeds_s1(const Graph& g, const MetricsResult& metrics) {
  std::vector<VertexId> picks;
  for (VertexId v : ndp_witnesses(metrics)) {
    const auto& vm = metrics.vertices[v];
    // 0.70 <= t/w <= 0.95, exactly.
    if (compare_frac(vm.triangles, vm.wedges, 7, 10) >= 0 &&
        compare_frac(vm.triangles, vm.wedges, 19, 20) <= 0)
      picks.push_back(v);
  }
  std::sort(picks.begin(), picks.end(), [&](VertexId a, VertexId b) {
    const auto& ma = metrics.vertices[a];
    const auto& mb = metrics.vertices[b];
    const int c = compare_frac(ma.triangles, ma.wedges, mb.triangles, mb.wedges);
    if (c != 0) return c > 0;  // descending density
    return a < b;
  });
  std::vector<SeedSet> out;
  out.reserve(picks.size());
  for (VertexId v : picks)
    out.push_back(make_neighborhood_seed(g, metrics, v, SeedStrategy::S1, Rational{1, 1}));
  return out;
}

std::vector<SeedSet> seeds_s2(const Graph& g, const MetricsResult& metrics) {
  static constexpr std::pair<int, int> kBuckets[5] = {
      {70, 75}, {75, 80}, {80, 85}, {85, 90}, {90, 95}};
  const auto witnesses = ndp_witnesses(metrics);

  std::vector<SeedSet> out;
  for (const auto& [lo, hi] : kBuckets) {
    const Rational alpha_low{lo, 100};
    std::optional<VertexId> winner;
    i128 winner_f = 0;
    for (VertexId v : witnesses) {
      const auto& vm = metrics.vertices[v];
      if (compare_frac(vm.triangles, vm.wedges, lo, 100) < 0) continue;
      if (compare_frac(vm.triangles, vm.wedges, hi, 100) >= 0) continue;
      const std::uint64_t e = vm.triangles + vm.degree;
      const i128 f = scaled_surplus(e, vm.degree + 1, alpha_low);
      if (!winner || f > winner_f || (f == winner_f && v < *winner)) {
        winner = v;
        winner_f = f;
      }
    }
    if (winner)
      out.push_back(make_neighborhood_seed(g, metrics, *winner, SeedStrategy::S2, alpha_low));
  }
  return out;
}

CoreDecomposition kcore_decomposition(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  CoreDecomposition cd;
  cd.core_number.assign(n, 0);

  std::vector<std::uint32_t> deg(n);
  std::set<std::pair<std::uint32_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<std::uint8_t> removed(n, 0);
  std::uint32_t current = 0;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    current = std::max(current, d);
    cd.core_number[v] = current;
    removed[v] = 1;
    for (VertexId u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({deg[u], u});
      --deg[u];
      queue.emplace(deg[u], u);
    }
  }
  cd.max_core = current;

  SeedSet& s = cd.innermost;
  s.strategy = SeedStrategy::KCore;
  for (VertexId v = 0; v < n; ++v)
    if (cd.core_number[v] == cd.max_core) s.members.push_back(v);
  if (s.members.size() >= 2) s.seed_density = edge_density(g, s.members);
  else s.seed_density = 1.0;
  return cd;
}

SeedSet seed_avg_degree(const Graph& g, const MetricsResult& metrics) {
  std::optional<VertexId> best;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 1) continue;
    if (!best) {
      best = v;
      continue;
    }
    // Average induced degree of {v} u N(v) is 2(t_v + d_v)/(d_v + 1);
    // compare cross-multiplied.
    const auto& a = metrics.vertices[v];
    const auto& b = metrics.vertices[*best];
    const int c = compare_frac(a.triangles + a.degree, a.degree + 1,
                               b.triangles + b.degree, b.degree + 1);
    if (c > 0) best = v;
  }
  if (!best) throw std::invalid_argument("graph has no edges");
  return make_neighborhood_seed(g, metrics, *best, SeedStrategy::AvgDegree, std::nullopt);
}

std::optional<MineStrategy> parse_mine_strategy(const std::string& name) {
  if (name == "ego") return MineStrategy::Ego;
  if (name == "s1+localsearch") return MineStrategy::S1LocalSearch;
  if (name == "s2+localsearch") return MineStrategy::S2LocalSearch;
  if (name == "greedy") return MineStrategy::Greedy;
  if (name == "kcore-seed") return MineStrategy::KCoreSeed;
  if (name == "avgdeg-seed") return MineStrategy::AvgDegSeed;
  return std::nullopt;
}

std::vector<Rational> default_mine_alpha_grid() {
  return {Rational{1, 3},  Rational{7, 10}, Rational{3, 4}, Rational{4, 5},
          Rational{17, 20}, Rational{9, 10}, Rational{1, 1}};
}

MineResult mine(const Graph& g, const MinePlan& plan) {
  MineResult result;
  if (g.vertex_count() == 0) return result;

  const std::vector<Rational> alphas = plan.alphas.empty() ? default_mine_alpha_grid() : plan.alphas;
  const bool needs_metrics = plan.strategy != MineStrategy::Greedy;
  MetricsResult metrics;
  if (needs_metrics) metrics = vertex_metrics(g, plan.threads);

  auto refine_seed_over_grid = [&](const SeedSet& seed) {
    result.reports.resize(alphas.size());
    parallel_for(alphas.size(), plan.threads, [&](std::size_t i) {
      EdgeSurplusParams p;
      p.alpha = alphas[i];
      p.t_max = plan.t_max;
      result.reports[i] = local_search_oqc(g, seed, p);
    });
  };

  switch (plan.strategy) {
    case MineStrategy::Ego: {
      const auto egos = find_ego_cliques(g, metrics, 2);
      for (const auto& ec : egos) {
        SubgraphReport r = finish_report(g, ec.members, Rational{1, 1}, "ego");
        r.seed_center = ec.center;
        r.termination = "exact";
        result.reports.push_back(std::move(r));
      }
      break;
    }
    case MineStrategy::S1LocalSearch: {
      const auto seeds = seeds_s1(g, metrics);
      result.reports.resize(seeds.size());
      parallel_for(seeds.size(), plan.threads, [&](std::size_t i) {
        EdgeSurplusParams p;
        p.alpha = Rational{1, 1};
        p.t_max = plan.t_max;
        result.reports[i] = local_search_oqc(g, seeds[i], p);
      });
      break;
    }
    case MineStrategy::S2LocalSearch: {
      const auto seeds = seeds_s2(g, metrics);
      result.reports.resize(seeds.size());
      parallel_for(seeds.size(), plan.threads, [&](std::size_t i) {
        EdgeSurplusParams p;
        p.alpha = *seeds[i].alpha_used;
        p.t_max = plan.t_max;
        result.reports[i] = local_search_oqc(g, seeds[i], p);
      });
      break;
    }
    case MineStrategy::Greedy: {
      result.reports.resize(alphas.size());
      parallel_for(alphas.size(), plan.threads,
                   [&](std::size_t i) { result.reports[i] = greedy_oqc(g, alphas[i]); });
      break;
    }
    case MineStrategy::KCoreSeed: {
      const auto cd = kcore_decomposition(g);
      if (!cd.innermost.members.empty()) refine_seed_over_grid(cd.innermost);
      break;
    }
    case MineStrategy::AvgDegSeed: {
      refine_seed_over_grid(seed_avg_degree(g, metrics));
      break;
    }
  }

  // Best clique: largest (first on ties, reports are in deterministic order).
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    const auto& r = result.reports[i];
    if (!r.is_clique || r.size() < 2) continue;
    if (!result.best_clique || r.size() > result.reports[*result.best_clique].size())
      result.best_clique = i;
  }

  // Best quasi-clique: the alpha = 0.9 ladder of the reporting protocol.
  static const Rational kLadder[5] = {{9, 10}, {17, 20}, {4, 5}, {3, 4}, {7, 10}};
  for (const auto& level : kLadder) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < result.reports.size(); ++i) {
      const auto& r = result.reports[i];
      if (r.is_clique || r.size() < 2) continue;
      if (!(r.alpha == level)) continue;
      if (!pick) {
        pick = i;
        continue;
      }
      const auto& p = result.reports[*pick];
      const int c = compare_frac(r.edges, choose2(r.size()), p.edges, choose2(p.size()));
      if (c > 0 || (c == 0 && r.size() > p.size())) pick = i;
    }
    if (pick) {
      result.best_quasi_clique = pick;
      break;
    }
  }
  return result;
}

std::string mine_json(const Graph& g, const MineResult& result) {
  nlohmann::ordered_json j;
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : result.reports) {
    nlohmann::ordered_json e;
    e["algorithm"] = r.algorithm;
    e["alpha"] = sig6(r.alpha.value());
    nlohmann::ordered_json seed;
    if (r.seed_center)
      seed["center"] = g.label(*r.seed_center);
    else
      seed["center"] = nullptr;
    if (r.seed_strategy)
      seed["strategy"] = to_string(*r.seed_strategy);
    else
      seed["strategy"] = nullptr;
    if (r.seed_size > 0) {
      seed["size"] = r.seed_size;
      seed["density"] = sig6(r.seed_density);
    }
    e["seed"] = seed;
    std::vector<std::int64_t> ext;
    ext.reserve(r.members.size());
    for (VertexId v : r.members) ext.push_back(g.label(v));
    std::sort(ext.begin(), ext.end());
    e["members"] = ext;
    e["size"] = r.size();
    e["e"] = r.edges;
    e["delta"] = sig6(r.delta);
    e["tau"] = sig6(r.tau);
    e["surplus"] = sig6(r.surplus);
    e["is_clique"] = r.is_clique;
    if (r.is_maximal)
      e["is_maximal"] = *r.is_maximal;
    else
      e["is_maximal"] = nullptr;
    e["termination"] = r.termination;
    j["reports"].push_back(std::move(e));
  }
  if (result.best_clique)
    j["best_clique_index"] = *result.best_clique;
  else
    j["best_clique_index"] = nullptr;
  if (result.best_quasi_clique)
    j["best_quasi_clique_index"] = *result.best_quasi_clique;
  else
    j["best_quasi_clique_index"] = nullptr;
  return j.dump(2);
}

}  // namespace qcmine
