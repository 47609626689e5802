#include <cmath>
#include <map>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "qcmine/metrics.hpp"
#include "qcmine/theory.hpp"

using namespace qcmine;

TEST_CASE("upper tail bound") {
  CHECK(markov_upper_bound(0.7, 0.8) == doctest::Approx(0.875));
  // Frozen from an independent high-precision evaluation.
  CHECK(markov_upper_bound(0.7, 0.71) == doctest::Approx(0.9859154929577465).epsilon(1e-14));
  // As C_g -> 1 with alpha = 1 the bound tends to 1.
  CHECK(markov_upper_bound(1.0 - 1e-9, 1.0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS((void)markov_upper_bound(0.7, 0.7), std::domain_error);
  CHECK_THROWS_AS((void)markov_upper_bound(0.7, 0.5), std::domain_error);
  CHECK_THROWS_AS((void)markov_upper_bound(1.2, 0.5), std::domain_error);
}

TEST_CASE("lower tail bound") {
  CHECK(lower_tail_bound(0.7, 2.0 / 3.0) == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(lower_tail_bound(0.7, 0.0) == doctest::Approx(0.7));
  CHECK(lower_tail_bound(0.9, 0.5) == doctest::Approx(0.8));
  CHECK_THROWS_AS((void)lower_tail_bound(0.7, 0.7), std::domain_error);
  CHECK_THROWS_AS((void)lower_tail_bound(0.7, 0.9), std::domain_error);
  CHECK_THROWS_AS((void)lower_tail_bound(0.7, 1.0), std::domain_error);
}

TEST_CASE("variance bound") {
  CHECK(variance_bound(0.5) == doctest::Approx(0.25));
  CHECK(variance_bound(1.0) == 0.0);
  CHECK(variance_bound(0.0) == 0.0);
  CHECK(variance_bound(0.519) == doctest::Approx(0.249639).epsilon(1e-12));
  for (double c = 0.05; c < 0.5; c += 0.05) {
    CHECK(variance_bound(c) == doctest::Approx(variance_bound(1.0 - c)).epsilon(1e-12));
    CHECK(variance_bound(c) <= 0.25);
  }
}

TEST_CASE("degree-tail bound eta") {
  // Frozen from an independent high-precision evaluation with the
  // Facebook-A degree extremes.
  CHECK(eta(2, 1045, 0.05) == doctest::Approx(0.05290181915822967).epsilon(1e-12));
  // Continuous and finite just inside the admissible interval.
  const double lo = 2.0 / 1045.0;
  CHECK(eta(2, 1045, lo + 1e-9) == doctest::Approx(0.007908236438).epsilon(1e-6));
  // For large d_max, eta approaches beta.
  CHECK(eta(2, 10'000'000, 0.3) == doctest::Approx(0.3).epsilon(1e-5));
  CHECK_THROWS_AS((void)eta(2, 1045, lo), std::domain_error);
  CHECK_THROWS_AS((void)eta(2, 1045, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)eta(1, 10, 0.5), std::domain_error);
  CHECK_THROWS_AS((void)eta(5, 5, 0.5), std::domain_error);
}

TEST_CASE("eta is strictly increasing over the admissible interval") {
  const double lo = 2.0 / 1045.0;
  double prev = -1.0;
  for (int i = 1; i <= 200; ++i) {
    const double beta = lo + (1.0 - lo) * i / 201.0;
    const double e = eta(2, 1045, beta);
    CHECK(e > prev);
    prev = e;
  }
}

TEST_CASE("largest admissible beta by bisection") {
  const auto bm = beta_max(2, 1045, 0.519);
  REQUIRE(bm.has_value());
  CHECK(*bm == doctest::Approx(0.5180263420369636).epsilon(1e-7));
  CHECK(eta(2, 1045, *bm) < 0.519);
  CHECK(eta(2, 1045, *bm + 1e-7) >= 0.519);
  // No admissible beta when C_g sits below the left end of the curve.
  CHECK_FALSE(beta_max(2, 10, 0.001).has_value());
}

TEST_CASE("existence guarantee on the Facebook-A inputs") {
  const auto r = existence_guarantee(0.519, 2, 1045, 0.05);
  CHECK(r.size_guarantee == doctest::Approx(52.25));
  CHECK(r.density_guarantee == doctest::Approx(0.4921329068835371).epsilon(1e-12));
  CHECK(r.eta == doctest::Approx(0.05290181915822967).epsilon(1e-12));
  CHECK(r.delta_ratio == doctest::Approx(2.0));
  REQUIRE(r.beta_max.has_value());
  CHECK(r.variance_upper == doctest::Approx(variance_bound(0.519)));
}

TEST_CASE("guarantee degenerates gracefully") {
  // C_g = 1: the density guarantee is 1 for any admissible beta.
  const auto r = existence_guarantee(1.0, 2, 100, 0.3);
  CHECK(r.density_guarantee == doctest::Approx(1.0));
  // Inadmissible beta: eta >= C_g.
  CHECK_THROWS_AS((void)existence_guarantee(0.3, 2, 1045, 0.8), std::domain_error);
}

TEST_CASE("density guarantee decreases in beta") {
  double prev = 2.0;
  for (double beta = 0.05; beta < 0.5; beta += 0.02) {
    const auto r = existence_guarantee(0.519, 2, 1045, beta);
    CHECK(r.density_guarantee < prev);
    prev = r.density_guarantee;
  }
}

TEST_CASE("small-degree wedge mass") {
  // K4 plus pendant: three degree-3 vertices carry 3 wedges each, the
  // degree-4 vertex carries 6; mass below degree 3 is 9/15.
  const auto g = Graph::parse_edge_list_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n");
  CHECK(exact_small_degree_probability(g, 0.75) == doctest::Approx(0.6));
  CHECK(exact_small_degree_probability(g, 1.0) == doctest::Approx(1.0));

  const auto single_edge = Graph::parse_edge_list_text("0 1\n");
  CHECK_THROWS_AS((void)exact_small_degree_probability(single_edge, 0.5), std::domain_error);
  CHECK_THROWS_AS((void)exact_small_degree_probability(g, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)exact_small_degree_probability(g, 1.5), std::domain_error);
}

TEST_CASE("synthetic degree sequences") {
  PowerLawModel m;
  m.d_min = 2;
  m.d_max = 4;
  m.c = 16.0;
  m.n = 1;  // c*n = 16
  const auto seq = synth_degree_sequence(m);
  std::map<std::uint32_t, int> hist;
  for (const auto d : seq) ++hist[d];
  CHECK(hist[2] == 4);
  CHECK(hist[3] == 2);
  CHECK(hist[4] == 1);

  // Every degree class is populated even when rounding would drop it.
  PowerLawModel wide;
  wide.d_min = 2;
  wide.d_max = 300;
  wide.c = 1.0;
  wide.n = 50;
  std::map<std::uint32_t, int> h2;
  for (const auto d : synth_degree_sequence(wide)) ++h2[d];
  for (std::uint32_t d = 2; d <= 300; ++d) CHECK(h2[d] >= 1);

  PowerLawModel bad;
  bad.d_min = 2;
  bad.d_max = 4;
  bad.c = 0.1;
  bad.n = 1;
  CHECK_THROWS_AS((void)synth_degree_sequence(bad), std::domain_error);
}

TEST_CASE("degree-tail bound holds on exact power-law sequences") {
  PowerLawModel m;
  m.d_min = 2;
  m.d_max = 200;
  double norm = 0.0;
  for (std::uint32_t d = m.d_min; d <= m.d_max; ++d) norm += 1.0 / (static_cast<double>(d) * d);
  m.c = 1.0 / norm;
  m.n = 100'000;
  const auto seq = synth_degree_sequence(m);

  const double lo = static_cast<double>(m.d_min) / m.d_max;
  for (int i = 1; i <= 20; ++i) {
    const double beta = lo + (1.0 - lo) * i / 21.0;
    const double p = small_degree_probability(seq, beta);
    CHECK(p < eta(m.d_min, m.d_max, beta));
  }
  // Spot value at beta = 0.3.
  CHECK(small_degree_probability(seq, 0.3) < eta(2, 200, 0.3));
}

TEST_CASE("harmonic sum sandwich") {
  const std::pair<std::uint32_t, std::uint32_t> ranges[] = {
      {2, 5}, {2, 100}, {3, 17}, {10, 10'000}, {999, 10'000}, {2, 3}};
  for (const auto& [l, u] : ranges) {
    double sum = 0.0;
    for (std::uint32_t k = l; k <= u; ++k) sum += 1.0 / k;
    CHECK(std::log((u + 1.0) / l) <= sum + 1e-12);
    CHECK(sum <= std::log(static_cast<double>(u) / (l - 1.0)) + 1e-12);
  }
}

TEST_CASE("tail-bound curves leave a feasible band") {
  const double cg = 0.7;
  for (double alpha = 0.01; alpha < 1.0; alpha += 0.01) {
    double band_lo = 0.0, band_hi = 1.0;
    if (alpha < cg) band_lo = lower_tail_bound(cg, alpha);
    if (alpha > cg) band_hi = markov_upper_bound(cg, alpha);
    CHECK(band_lo >= 0.0);
    CHECK(band_hi <= 1.0);
    CHECK(band_lo <= band_hi);
  }
}

TEST_CASE("bound monotonicity in alpha") {
  const double cg = 0.7;
  double prev_markov = 2.0;
  for (double a = 0.71; a <= 1.0; a += 0.01) {
    const double v = markov_upper_bound(cg, a);
    CHECK(v < prev_markov);
    prev_markov = v;
  }
  double prev_lower = 2.0;
  for (double a = 0.0; a < 0.7 - 1e-9; a += 0.01) {
    const double v = lower_tail_bound(cg, a);
    CHECK(v < prev_lower);
    prev_lower = v;
  }
}

TEST_CASE("alpha sweep CSV contains the two-thirds row") {
  const auto grid = default_alpha_grid();
  const std::string csv = bounds_alpha_csv(0.7, grid);
  CHECK(csv.find("alpha,markov_upper,lower_tail\n") == 0);
  // On the 2/3 row, the lower tail is exactly 10%.
  CHECK(csv.find("0.666667,,0.1\n") != std::string::npos);

  // C_g = 1: the lower tail is 1 at every alpha < 1.
  const std::string ones = bounds_alpha_csv(1.0, grid);
  std::istringstream lines(ones);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    const auto last = line.rfind(',');
    const std::string lower = line.substr(last + 1);
    if (!lower.empty()) CHECK(lower == "1");
  }
}

TEST_CASE("beta sweep CSV rejects an empty admissible set") {
  const std::vector<double> betas{0.3, 0.5, 0.9};
  CHECK_THROWS_AS((void)bounds_beta_csv(0.001, 2, 10, betas), std::domain_error);
  const std::string ok = bounds_beta_csv(0.519, 2, 1045, std::vector<double>{0.05, 0.1, 0.2});
  CHECK(ok.find("beta,eta,size_guarantee,density_guarantee\n") == 0);
  CHECK(ok.find("0.05,") != std::string::npos);
}

TEST_CASE("fitted exponent recovers the synthetic slope") {
  PowerLawModel m;
  m.d_min = 2;
  m.d_max = 100;
  m.c = 1.0;
  m.n = 1'000'000;
  DegreeStats st;
  st.d_min = m.d_min;
  st.d_max = m.d_max;
  for (const auto d : synth_degree_sequence(m)) ++st.degree_histogram[d];
  for (const auto& [d, c] : st.degree_histogram) st.unique_degrees.push_back(d);
  const auto gamma = fit_power_law_gamma(st);
  REQUIRE(gamma.has_value());
  CHECK(*gamma == doctest::Approx(2.0).epsilon(0.05));
}
