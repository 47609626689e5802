#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcmine/graph.hpp"
#include "qcmine/metrics.hpp"
#include "qcmine/rational.hpp"

namespace qcmine {

/// Edge-surplus objective f_alpha(S) = e(S) - alpha * C(|S|,2). alpha is
/// kept rational so objective comparisons are exact.
double edge_surplus(const Graph& g, std::span<const VertexId> s, const Rational& alpha);

struct EdgeSurplusParams {
  Rational alpha{1, 3};
  std::uint32_t t_max = 50;
  /// When set, every accepted move appends (e(S), |S|) to the report
  /// trajectory so monotonicity can be re-checked exactly.
  bool record_trajectory = false;
};

enum class SeedStrategy { S1, S2, AvgDegree, KCore };
const char* to_string(SeedStrategy s);

/// A candidate subgraph to refine: a vertex plus its neighborhood, or the
/// innermost core (which has no center).
struct SeedSet {
  std::optional<VertexId> center;
  std::vector<VertexId> members;  // sorted
  SeedStrategy strategy = SeedStrategy::S1;
  std::optional<Rational> alpha_used;
  double seed_density = 0.0;
  double seed_surplus = 0.0;
};

struct SubgraphReport {
  std::vector<VertexId> members;  // sorted internal ids
  std::uint64_t edges = 0;
  double delta = 1.0;  // e(S)/C(|S|,2); vacuously 1 for |S| <= 1
  double tau = 1.0;    // t(S)/C(|S|,3); vacuous below size 3
  double surplus = 0.0;
  bool is_clique = false;
  std::optional<bool> is_maximal;  // only meaningful for cliques
  std::string algorithm;
  Rational alpha{1, 1};
  std::optional<VertexId> seed_center;
  std::optional<SeedStrategy> seed_strategy;
  std::uint64_t seed_size = 0;
  double seed_density = 0.0;
  std::string termination;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> trajectory;  // (e, |S|) per accepted state

  std::uint64_t size() const { return members.size(); }
};

/// Greedy peeling: repeatedly remove a minimum-degree vertex (lowest id on
/// ties) and return the best peel state under f_alpha, keeping the
/// earliest (largest) state when several tie.
SubgraphReport greedy_oqc(const Graph& g, const Rational& alpha);

/// First-improvement hill climbing from a seed. Each outer iteration runs
/// the addition scan (boundary vertices, ascending id) to exhaustion, then
/// the deletion scan (members, ascending id) to exhaustion; stops at a
/// local optimum or after t_max outer iterations. The objective never
/// decreases relative to the seed.
SubgraphReport local_search_oqc(const Graph& g, const SeedSet& seed,
                                const EdgeSurplusParams& params);

/// Seeds drawn from the neighborhood density profile: the per-degree
/// witnesses whose density lies in [0.70, 0.95], ordered by descending
/// density then ascending id. Interval membership is exact.
std::vector<SeedSet> seeds_s1(const Graph& g, const MetricsResult& metrics);

/// One seed per density sub-interval [0.70,0.75) ... [0.90,0.95): among
/// the profile witnesses falling in the bucket, the one with the highest
/// edge surplus at the bucket's lower bound (ascending id on ties).
std::vector<SeedSet> seeds_s2(const Graph& g, const MetricsResult& metrics);

struct CoreDecomposition {
  std::vector<std::uint32_t> core_number;
  std::uint32_t max_core = 0;
  SeedSet innermost;  // vertices with the maximum core number
};

/// Linear-time bucket peeling.
CoreDecomposition kcore_decomposition(const Graph& g);

/// The neighborhood {v} u N(v) with the highest average induced degree.
SeedSet seed_avg_degree(const Graph& g, const MetricsResult& metrics);

enum class MineStrategy { Ego, S1LocalSearch, S2LocalSearch, Greedy, KCoreSeed, AvgDegSeed };

/// Accepts the CLI spellings: ego, s1+localsearch, s2+localsearch, greedy,
/// kcore-seed, avgdeg-seed.
std::optional<MineStrategy> parse_mine_strategy(const std::string& name);

struct MinePlan {
  MineStrategy strategy = MineStrategy::S2LocalSearch;
  std::vector<Rational> alphas;  // empty -> default grid {1/3,0.7,...,1}
  std::uint32_t t_max = 50;
  int threads = 1;
};

std::vector<Rational> default_mine_alpha_grid();

struct MineResult {
  std::vector<SubgraphReport> reports;
  /// Index of the largest clique among the reports, if any.
  std::optional<std::size_t> best_clique;
  /// Densest non-clique at alpha = 0.9, falling back through
  /// {0.85, 0.8, 0.75, 0.7} when a level yields only cliques; ties go to
  /// the larger set.
  std::optional<std::size_t> best_quasi_clique;
};

MineResult mine(const Graph& g, const MinePlan& plan);

/// Mining report with external vertex ids, per the documented schema.
std::string mine_json(const Graph& g, const MineResult& result);

}  // namespace qcmine
