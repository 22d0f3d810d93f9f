#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "zipfcode/estimation.hpp"
#include "zipfcode/random_typing.hpp"
#include "zipfcode/sampling.hpp"
#include "zipfcode/zipf_model.hpp"

using namespace zipfcode;

namespace {

RankFrequencyTable table_from_counts(const std::vector<std::uint64_t> &counts) {
  RankFrequencyTable table;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    table.entries.push_back(
        {i + 1, "w" + std::to_string(i + 1), counts[i]});
    table.total_tokens += counts[i];
  }
  return table;
}

// Oracle: brute-force scan of the truncated-zeta likelihood.
double grid_scan_alpha(const RankFrequencyTable &table, std::uint64_t lo,
                       std::uint64_t hi, double step = 1e-4) {
  double best_alpha = 0.05, best_ll = -1e300;
  for (double alpha = 0.05; alpha <= 10.0; alpha += step) {
    double h = 0.0;
    for (const auto &e : table.entries)
      if (e.rank >= lo && e.rank <= hi)
        h += std::pow(static_cast<double>(e.rank), -alpha);
    double log_h = std::log(h);
    double ll = 0.0;
    for (const auto &e : table.entries)
      if (e.rank >= lo && e.rank <= hi)
        ll += static_cast<double>(e.count) *
              (-alpha * std::log(static_cast<double>(e.rank)) - log_h);
    if (ll > best_ll) {
      best_ll = ll;
      best_alpha = alpha;
    }
  }
  return best_alpha;
}

RankFrequencyTable sample_zipf_table(double alpha, std::size_t m,
                                     std::uint64_t n, std::uint64_t seed) {
  auto dist = zipf_pmf(alpha, m);
  auto draws = sample_indices(dist, n, seed);
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (std::uint32_t idx : draws)
    tokens.push_back("t" + std::to_string(idx));
  return build_rank_frequency(tokens);
}

} // namespace

TEST_CASE("build_rank_frequency") {
  auto table = build_rank_frequency({"a", "b", "a"});
  REQUIRE(table.entries.size() == 2);
  CHECK(table.entries[0].rank == 1);
  CHECK(table.entries[0].word == "a");
  CHECK(table.entries[0].count == 2);
  CHECK(table.entries[1].word == "b");
  CHECK(table.entries[1].count == 1);
  CHECK(table.total_tokens == 3);

  auto single = build_rank_frequency({"x"});
  CHECK(single.entries[0].rank == 1);
  CHECK(single.entries[0].count == 1);

  CHECK_THROWS_AS(build_rank_frequency({}), invalid_parameter);
}

TEST_CASE("build_rank_frequency breaks count ties lexicographically") {
  auto table = build_rank_frequency({"zz", "aa", "mm"});
  CHECK(table.entries[0].word == "aa");
  CHECK(table.entries[1].word == "mm");
  CHECK(table.entries[2].word == "zz");
}

TEST_CASE("random-typing sample puts the single-letter types on top") {
  RandomTypingParams params(2, 0.5, 1);
  auto tokens = sample_tokens(params, 1000000, 31337);
  auto table = build_rank_frequency(tokens);
  CHECK(table.entries[0].word.size() == 1);
  CHECK(table.entries[1].word.size() == 1);
  CHECK(table.entries[0].word != table.entries[1].word);
}

TEST_CASE("MLE matches the grid-scan oracle") {
  auto small = table_from_counts({8, 4, 2, 1});
  auto fit = fit_zipf_mle(small, 1, 4);
  CHECK(fit.alpha == Catch::Approx(grid_scan_alpha(small, 1, 4)).margin(1e-3));

  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::uint64_t> counts;
    std::uint64_t c = 500 + static_cast<std::uint64_t>(rng() % 500);
    for (int i = 0; i < 60; ++i) {
      counts.push_back(std::max<std::uint64_t>(1, c));
      c = static_cast<std::uint64_t>(static_cast<double>(c) *
                                     (0.75 + 0.2 * (rng() % 100) / 100.0));
    }
    auto table = table_from_counts(counts);
    auto result = fit_zipf_mle(table, 1, 60);
    CHECK(result.alpha ==
          Catch::Approx(grid_scan_alpha(table, 1, 60)).margin(1e-3));
  }
}

TEST_CASE("MLE recovers the generating exponent") {
  auto table = sample_zipf_table(1.2, 1000, 100000, 42);
  auto fit = fit_zipf_mle(table, 1, table.entries.size());
  CHECK(fit.alpha > 1.17);
  CHECK(fit.alpha < 1.23);
  CHECK_FALSE(fit.at_boundary);
  CHECK(fit.ks_statistic < 0.01);
}

TEST_CASE("MLE estimates tighten as the sample grows") {
  double coarse_error = 0.0, fine_error = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto small = sample_zipf_table(1.2, 1000, 10000, seed);
    auto large = sample_zipf_table(1.2, 1000, 1000000, seed);
    coarse_error +=
        std::abs(fit_zipf_mle(small, 1, small.entries.size()).alpha - 1.2);
    fine_error +=
        std::abs(fit_zipf_mle(large, 1, large.entries.size()).alpha - 1.2);
  }
  CHECK(fine_error < coarse_error);
}

TEST_CASE("uniform counts push alpha to the bracket edge") {
  auto table = table_from_counts(std::vector<std::uint64_t>(50, 100));
  auto fit = fit_zipf_mle(table, 1, 50);
  CHECK(fit.at_boundary);
  CHECK(fit.alpha == Catch::Approx(0.05).margin(1e-3));
}

TEST_CASE("MLE error paths") {
  auto table = table_from_counts({10, 5, 3});
  CHECK_THROWS_AS(fit_zipf_mle(table, 2, 2), invalid_parameter);
  CHECK_THROWS_AS(fit_zipf_mle(table, 7, 9), invalid_parameter);
}

TEST_CASE("regression recovers exact power laws") {
  // lcm-scaled counts so that c_i = C / i^k is exactly integral
  std::vector<std::uint64_t> exact1, exact2, scaled;
  std::uint64_t base = 1;
  for (std::uint64_t i = 1; i <= 12; ++i)
    base = std::lcm(base, i);
  std::uint64_t base2 = 1;
  for (std::uint64_t i = 1; i <= 12; ++i)
    base2 = std::lcm(base2, i * i);
  for (std::uint64_t i = 1; i <= 12; ++i) {
    exact1.push_back(base / i);
    exact2.push_back(base2 / (i * i));
    scaled.push_back(7 * (base / i));
  }
  auto fit1 = fit_zipf_regression(table_from_counts(exact1), 1, 12);
  CHECK(fit1.alpha == Catch::Approx(1.0).margin(1e-9));
  auto fit2 = fit_zipf_regression(table_from_counts(exact2), 1, 12);
  CHECK(fit2.alpha == Catch::Approx(2.0).margin(1e-9));
  auto fit_scaled = fit_zipf_regression(table_from_counts(scaled), 1, 12);
  CHECK(fit_scaled.alpha == Catch::Approx(fit1.alpha).margin(1e-12));
}

TEST_CASE("KS statistic prefers the unperturbed table") {
  // counts proportional to the fitted model itself
  std::vector<std::uint64_t> counts;
  auto dist = zipf_pmf(1.0, 20);
  for (std::size_t i = 0; i < 20; ++i)
    counts.push_back(
        static_cast<std::uint64_t>(std::round(dist[i] * 1000000)));
  auto clean = table_from_counts(counts);
  double clean_ks = fit_zipf_mle(clean, 1, 20).ks_statistic;

  for (std::size_t swap : {0ul, 5ul, 15ul}) {
    auto perturbed = counts;
    std::swap(perturbed[swap], perturbed[19 - swap]);
    auto table = table_from_counts(perturbed);
    double ks = fit_zipf_mle(table, 1, 20).ks_statistic;
    CHECK(clean_ks < ks);
  }
}

TEST_CASE("length-frequency correlation on the analytic type table") {
  RandomTypingParams params(2, 0.5, 1);
  auto types = enumerate_types(params, 100);
  std::vector<double> probs, lengths;
  for (const auto &e : types.entries) {
    probs.push_back(e.probability);
    lengths.push_back(static_cast<double>(e.length));
  }
  CHECK(spearman_correlation(probs, lengths) == Catch::Approx(-1.0));
}

TEST_CASE("correlation is near zero for shuffled lengths") {
  std::mt19937_64 rng(2718);
  std::vector<double> counts, lengths;
  for (int i = 0; i < 1000; ++i) {
    counts.push_back(static_cast<double>(1 + rng() % 10000));
    lengths.push_back(static_cast<double>(1 + rng() % 12));
  }
  std::shuffle(lengths.begin(), lengths.end(), rng);
  CHECK(std::abs(spearman_correlation(counts, lengths)) < 0.1);
}

TEST_CASE("constant input is signaled distinctly") {
  auto table = table_from_counts({5, 3, 2});
  CHECK_THROWS_AS(length_frequency_correlation(table, {4.0, 4.0, 4.0}),
                  constant_input_error);
  CHECK_THROWS_AS(length_frequency_correlation(table, {1.0, 2.0}),
                  invalid_parameter);
}
