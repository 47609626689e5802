#include "qcmine/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qcmine/format.hpp"
#include "qcmine/metrics.hpp"

namespace qcmine {

namespace {

void check_cg(double cg) {
  if (!(cg >= 0.0 && cg <= 1.0)) throw std::domain_error("global clustering coefficient must be in [0,1]");
}

void check_degrees(std::uint32_t d_min, std::uint32_t d_max) {
  if (d_min < 2) throw std::domain_error("d_min must be at least 2");
  if (d_max <= d_min) throw std::domain_error("d_max must exceed d_min");
}

}  // namespace

double markov_upper_bound(double cg, double alpha) {
  check_cg(cg);
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must be in (0,1]");
  if (!(alpha > cg)) throw std::domain_error("upper tail bound requires alpha > C_g");
  return std::min(1.0, cg / alpha);
}

double lower_tail_bound(double cg, double alpha) {
  check_cg(cg);
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::domain_error("alpha must be in [0,1)");
  if (!(alpha < cg)) throw std::domain_error("lower tail bound requires alpha < C_g");
  const double v = (cg - alpha) / (1.0 - alpha);
  return std::clamp(v, 0.0, 1.0);
}

double variance_bound(double cg) {
  check_cg(cg);
  return cg * (1.0 - cg);
}

double eta(std::uint32_t d_min, std::uint32_t d_max, double beta) {
  check_degrees(d_min, d_max);
  const double lo = static_cast<double>(d_min) / d_max;
  if (!(beta > lo && beta < 1.0))
    throw std::domain_error("beta must lie in (d_min/d_max, 1)");
  const double delta = static_cast<double>(d_min) / (d_min - 1);
  return (beta * d_max - std::log(beta)) / (d_max - std::log(delta));
}

std::optional<double> beta_max(std::uint32_t d_min, std::uint32_t d_max, double cg) {
  check_degrees(d_min, d_max);
  check_cg(cg);
  const double lo = static_cast<double>(d_min) / d_max;
  double a = std::nextafter(lo, 1.0);
  // Open interval: step inside far enough for eta to be evaluable.
  a = lo + std::max(1e-12, lo * 1e-9);
  if (a >= 1.0) return std::nullopt;
  if (!(eta(d_min, d_max, a) < cg)) return std::nullopt;
  double b = std::nextafter(1.0, 0.0);
  if (eta(d_min, d_max, b) < cg) return b;
  // eta is strictly increasing in beta here, so the crossing is unique.
  for (int it = 0; it < 200 && b - a > 1e-9; ++it) {
    const double mid = 0.5 * (a + b);
    if (eta(d_min, d_max, mid) < cg)
      a = mid;
    else
      b = mid;
  }
  return a;
}

BoundReport existence_guarantee(double cg, std::uint32_t d_min, std::uint32_t d_max, double beta) {
  const double e = eta(d_min, d_max, beta);
  if (!(e < cg))
    throw std::domain_error("guarantee undefined: eta >= C_g at this beta (beta exceeds beta_max)");
  BoundReport r;
  r.cg = cg;
  r.beta = beta;
  r.delta_ratio = static_cast<double>(d_min) / (d_min - 1);
  r.eta = e;
  r.beta_max = beta_max(d_min, d_max, cg);
  r.variance_upper = variance_bound(cg);
  r.size_guarantee = beta * d_max;
  r.density_guarantee = (cg - e) / (1.0 - e);
  r.alpha = r.density_guarantee;
  if (*r.alpha > cg) r.markov_upper = markov_upper_bound(cg, *r.alpha);
  if (*r.alpha < cg) r.lower_tail = lower_tail_bound(cg, *r.alpha);
  return r;
}

double exact_small_degree_probability(const Graph& g, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw std::domain_error("beta must be in (0,1]");
  std::vector<std::uint32_t> degrees(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
  return small_degree_probability(degrees, beta);
}

double small_degree_probability(std::span<const std::uint32_t> degrees, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw std::domain_error("beta must be in (0,1]");
  std::uint32_t d_max = 0;
  for (const auto d : degrees) d_max = std::max(d_max, d);
  if (d_max < 2) throw std::domain_error("no vertex of degree >= 2");
  const double dbar = beta * d_max;
  std::uint64_t mass_small = 0, mass_all = 0;
  for (const auto d : degrees) {
    if (d < 2) continue;
    const std::uint64_t w = static_cast<std::uint64_t>(d) * (d - 1) / 2;
    mass_all += w;
    if (static_cast<double>(d) <= dbar) mass_small += w;
  }
  return static_cast<double>(mass_small) / static_cast<double>(mass_all);
}

std::vector<std::uint32_t> synth_degree_sequence(const PowerLawModel& model) {
  check_degrees(model.d_min, model.d_max);
  if (!(model.c > 0.0) || model.n == 0 || model.c * static_cast<double>(model.n) < 1.0)
    throw std::domain_error("infeasible model: c*n must be at least 1");
  std::vector<std::uint32_t> degrees;
  const double cn = model.c * static_cast<double>(model.n);
  for (std::uint32_t d = model.d_min; d <= model.d_max; ++d) {
    const double expected = cn * std::pow(static_cast<double>(d), -model.gamma);
    const std::uint64_t reps = std::max<std::uint64_t>(1, std::llround(expected));
    degrees.insert(degrees.end(), reps, d);
  }
  return degrees;
}

std::optional<double> fit_power_law_gamma(const DegreeStats& stats) {
  if (!stats.d_min || stats.unique_degrees.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (const auto d : stats.unique_degrees) {
    const auto it = stats.degree_histogram.find(d);
    const double x = std::log(static_cast<double>(d));
    const double y = std::log(static_cast<double>(it->second));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  const double slope = (k * sxy - sx * sy) / denom;
  return -slope;
}

std::string bounds_alpha_csv(double cg, std::span<const double> alphas) {
  std::string out = "alpha,markov_upper,lower_tail\n";
  for (const double a : alphas) {
    if (!(a > 0.0 && a <= 1.0)) continue;
    std::string markov, lower;
    if (a > cg) markov = format_sig6(markov_upper_bound(cg, a));
    if (a < cg && a < 1.0) lower = format_sig6(lower_tail_bound(cg, a));
    out += format_sig6(a);
    out += ',';
    out += markov;
    out += ',';
    out += lower;
    out += '\n';
  }
  return out;
}

std::string bounds_beta_csv(double cg, std::uint32_t d_min, std::uint32_t d_max,
                            std::span<const double> betas) {
  check_degrees(d_min, d_max);
  const double lo = static_cast<double>(d_min) / d_max;
  std::string out = "beta,eta,size_guarantee,density_guarantee\n";
  std::size_t rows = 0;
  for (const double b : betas) {
    if (!(b > lo && b < 1.0)) continue;
    const double e = eta(d_min, d_max, b);
    if (!(e < cg)) continue;
    out += format_sig6(b);
    out += ',';
    out += format_sig6(e);
    out += ',';
    out += format_sig6(b * d_max);
    out += ',';
    out += format_sig6((cg - e) / (1.0 - e));
    out += '\n';
    ++rows;
  }
  if (rows == 0) {
    const auto bm = beta_max(d_min, d_max, cg);
    char msg[160];
    if (bm)
      std::snprintf(msg, sizeof(msg),
                    "no admissible beta in request; admissible interval is (%.6g, %.6g)", lo, *bm);
    else
      std::snprintf(msg, sizeof(msg),
                    "eta >= C_g for every beta: no existence guarantee for C_g=%.6g", cg);
    throw std::domain_error(msg);
  }
  return out;
}

std::string bounds_profile_csv(const NDProfile& profile, const DegreeStats& stats,
                               double cg, double beta_min) {
  if (!stats.d_min) throw std::domain_error("graph has no vertex of degree >= 2");
  const std::uint32_t d_min = *stats.d_min;
  const std::uint32_t d_max = stats.d_max;
  check_degrees(d_min, d_max);
  const auto bm = beta_max(d_min, d_max, cg);
  if (!bm) throw std::domain_error("eta >= C_g on the whole admissible interval");

  std::string out = "degree,beta,eta,density_guarantee,max_local_cc,beta_max\n";
  const std::string bm_str = format_sig6(*bm);
  for (const auto& entry : profile.entries) {
    const double beta = static_cast<double>(entry.degree) / d_max;
    if (beta < beta_min || beta >= *bm) continue;
    if (!(beta > static_cast<double>(d_min) / d_max)) continue;
    const double e = eta(d_min, d_max, beta);
    if (!(e < cg)) continue;
    out += std::to_string(entry.degree);
    out += ',';
    out += format_sig6(beta);
    out += ',';
    out += format_sig6(e);
    out += ',';
    out += format_sig6((cg - e) / (1.0 - e));
    out += ',';
    out += format_sig6(entry.max_density);
    out += ',';
    out += bm_str;
    out += '\n';
  }
  return out;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 199; ++k) grid.push_back(k / 200.0);
  grid.push_back(1.0 / 3.0);
  grid.push_back(2.0 / 3.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<double> default_beta_grid(double beta_lo, double beta_hi, std::size_t points) {
  std::vector<double> grid;
  if (points == 0 || !(beta_hi > beta_lo)) return grid;
  for (std::size_t i = 0; i < points; ++i)
    grid.push_back(beta_lo + (beta_hi - beta_lo) * static_cast<double>(i) / static_cast<double>(points));
  return grid;
}

}  // namespace qcmine
