#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcmine/graph.hpp"

namespace qcmine {

/// Probability that a wedge-sampled neighborhood is an alpha-quasi-clique
/// is at most C_g / alpha. Defined for alpha > C_g only.
double markov_upper_bound(double cg, double alpha);

/// Same probability is at least (C_g - alpha) / (1 - alpha), clipped to
/// [0,1]. Defined for alpha < C_g.
double lower_tail_bound(double cg, double alpha);

/// Variance of the neighborhood edge-density under the wedge distribution
/// is at most C_g (1 - C_g).
double variance_bound(double cg);

/// Degree-tail bound (beta d_max - log beta) / (d_max - log Delta) with
/// Delta = d_min / (d_min - 1); beta must lie in (d_min/d_max, 1).
double eta(std::uint32_t d_min, std::uint32_t d_max, double beta);

/// Largest beta keeping eta below cg, to 1e-9; nullopt when even the left
/// end of the admissible interval fails. eta is strictly increasing in
/// beta there (d eta/d beta has sign of d_max - 1/beta > 0), so bisection
/// is sound.
std::optional<double> beta_max(std::uint32_t d_min, std::uint32_t d_max, double cg);

struct BoundReport {
  double cg = 0.0;
  double beta = 0.0;
  double delta_ratio = 0.0;  // d_min / (d_min - 1)
  double eta = 0.0;
  std::optional<double> beta_max;
  double variance_upper = 0.0;
  double size_guarantee = 0.0;     // beta * d_max
  double density_guarantee = 0.0;  // (cg - eta) / (1 - eta)
  std::optional<double> alpha;     // density threshold the tail bounds refer to
  std::optional<double> markov_upper;
  std::optional<double> lower_tail;
};

/// Existence guarantee: some neighborhood has size >= beta d_max and
/// density >= (cg - eta)/(1 - eta). Throws std::domain_error when
/// eta >= cg (beta beyond beta_max).
BoundReport existence_guarantee(double cg, std::uint32_t d_min, std::uint32_t d_max, double beta);

/// Exact wedge-mass probability that a sampled vertex has degree in
/// [d_min, beta * d_max]. Throws when the graph has no vertex of degree
/// >= 2 or beta is outside (0, 1].
double exact_small_degree_probability(const Graph& g, double beta);

/// Same probability evaluated on a bare degree multiset.
double small_degree_probability(std::span<const std::uint32_t> degrees, double beta);

/// Power-law degree model n_d = c n d^-gamma on [d_min, d_max]. Closed-form
/// bounds in this module assume gamma = 2; the generator honors whatever
/// exponent is set.
struct PowerLawModel {
  std::uint32_t d_min = 2;
  std::uint32_t d_max = 3;
  double gamma = 2.0;
  double c = 1.0;  // normalization constant
  std::uint64_t n = 0;
};

/// Degree multiset with n_d = max(1, round(c n d^-gamma)) copies of every
/// degree in [d_min, d_max]; no degree class is ever empty.
std::vector<std::uint32_t> synth_degree_sequence(const PowerLawModel& model);

/// Exponent estimate from a log-log least-squares fit of the degree
/// histogram (restricted to degrees >= d_min). nullopt when fewer than two
/// degree classes exist.
std::optional<double> fit_power_law_gamma(const DegreeStats& stats);

/// CSV "alpha,markov_upper,lower_tail"; a bound outside its domain at some
/// alpha leaves an empty cell.
std::string bounds_alpha_csv(double cg, std::span<const double> alphas);

/// CSV "beta,eta,size_guarantee,density_guarantee" over the admissible
/// beta values in the input; throws std::domain_error when none qualify.
std::string bounds_beta_csv(double cg, std::uint32_t d_min, std::uint32_t d_max,
                            std::span<const double> betas);

/// Per-unique-degree comparison of the existence guarantee against the
/// measured best neighborhood density, for degrees between beta_min*d_max
/// and beta_max*d_max.
struct NDProfile;
std::string bounds_profile_csv(const NDProfile& profile, const DegreeStats& stats, double cg,
                               double beta_min);

/// Default sweep grids used by the CLI exports.
std::vector<double> default_alpha_grid();
std::vector<double> default_beta_grid(double beta_lo, double beta_hi, std::size_t points = 20);

}  // namespace qcmine
