#include <algorithm>
#include <cmath>

#include <stdexcept>

#include <doctest.h>

#include "standby/optimizer.hpp"
#include "standby/rng.hpp"

using namespace standby;

TEST_CASE("brute force examples") {
  const auto linear = brute_force_best_plan({3.0, 1.0, 2.0}, WearModel::linear(0.5),
                                            Convention::VirtualAge);
  CHECK(linear.best.plan == ActivationPlan({1, 2, 0}));
  CHECK(linear.best.lifetime == doctest::Approx(4.25).epsilon(1e-12));
  CHECK(linear.ranking.size() == 6);

  // Descending wins under convex wear.
  const auto convex = brute_force_best_plan({2.0, 3.0}, WearModel::power(1.0, 2.0),
                                            Convention::VirtualAge);
  CHECK(convex.best.plan == ActivationPlan({1, 0}));
  CHECK(convex.best.lifetime == doctest::Approx(3.0).epsilon(1e-12));

  const auto single = brute_force_best_plan({1.5}, WearModel::linear(0.5),
                                            Convention::VirtualAge);
  CHECK(single.best.lifetime == doctest::Approx(1.5));
  CHECK(single.ranking.size() == 1);

  CHECK_THROWS_AS((void)brute_force_best_plan(ActiveLifetimes(11, 1.0),
                                              WearModel::linear(0.5), Convention::VirtualAge),
                  std::domain_error);
}

TEST_CASE("ranking is a complete permutation of ranks") {
  const auto result = brute_force_best_plan({1.0, 2.0, 3.0, 4.0}, WearModel::linear(0.3),
                                            Convention::VirtualAge);
  CHECK(result.ranking.size() == 24);
  std::vector<std::size_t> ranks;
  for (const auto& e : result.ranking) ranks.push_back(e.rank);
  std::sort(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i < ranks.size(); ++i) CHECK(ranks[i] == i + 1);
  for (std::size_t i = 1; i < result.ranking.size(); ++i)
    CHECK(result.ranking[i - 1].lifetime >= result.ranking[i].lifetime);
}

TEST_CASE("descending is the minimum for two components under linear wear") {
  for (std::uint64_t k = 0; k < 2000; ++k) {
    RngStream rng(41, k);
    double t1 = rng.next_uniform() * 10.0 + 1e-6;
    double t2 = rng.next_uniform() * 10.0 + 1e-6;
    if (t1 == t2) continue;
    if (t1 > t2) std::swap(t1, t2);
    const double w = rng.next_uniform() * 0.98 + 0.01;
    const auto result =
        brute_force_best_plan({t1, t2}, WearModel::linear(w), Convention::VirtualAge);
    CHECK(result.ranking.back().plan == ActivationPlan({1, 0}));
  }
}

TEST_CASE("ascending order is brute-force optimal under linear wear") {
  CHECK(verify_ascending_optimal({3.0, 1.0, 2.0}, 0.5));
  CHECK(verify_ascending_optimal({1.0, 1.0, 1.0}, 0.3));
  for (std::uint64_t k = 0; k < 200; ++k) {
    RngStream rng(43, k);
    const std::size_t n = 2 + rng.next_bits() % 5;
    ActiveLifetimes t(n);
    for (auto& v : t) v = rng.next_uniform() * 10.0 + 1e-6;
    for (double w : {0.1, 0.5, 0.9}) CHECK(verify_ascending_optimal(t, w));
  }
  CHECK_THROWS_AS((void)verify_ascending_optimal({1.0, 2.0}, 1.5), std::domain_error);
}

TEST_CASE("sp sort orders exponential components by descending rate") {
  const std::vector<DistributionSpec> dists{DistributionSpec::exponential(1.0),
                                            DistributionSpec::exponential(3.0),
                                            DistributionSpec::exponential(2.0)};
  const SpSortReport report = sp_sort_plan(dists, 100000, 77);
  CHECK(report.plan == ActivationPlan({1, 2, 0}));
  CHECK(report.converged);
  CHECK(report.transitive);
}

TEST_CASE("sp sort keeps identical or pre-ordered families in place") {
  const std::vector<DistributionSpec> same(3, DistributionSpec::exponential(1.0));
  const SpSortReport tie = sp_sort_plan(same, 10000, 5);
  CHECK(tie.plan == ActivationPlan::identity(3));
  CHECK(tie.swaps == 0);

  const std::vector<DistributionSpec> ordered{DistributionSpec::exponential(4.0),
                                              DistributionSpec::exponential(2.0),
                                              DistributionSpec::exponential(1.0)};
  const SpSortReport keep = sp_sort_plan(ordered, 100000, 5);
  CHECK(keep.plan == ActivationPlan::identity(3));
  CHECK(keep.swaps == 0);
}

TEST_CASE("counterexample search") {
  // Convex wear: a witness exists and (2, 3) is one by hand.
  const auto found = counterexample_search(WearModel::power(1.0, 2.0),
                                           Convention::VirtualAge, 0.0, 4.0, 10000, 11);
  REQUIRE(found.has_value());
  CHECK(found->t1 < found->t2);
  CHECK(found->ascending_lifetime + 1e-9 < found->descending_lifetime);

  // Weakest-first dominates realization-wise for linear wear.
  CHECK_FALSE(counterexample_search(WearModel::linear(0.5), Convention::VirtualAge, 0.0, 4.0,
                                    10000, 11).has_value());
  // Concave and milder wear: the chain inequality rules witnesses out.
  CHECK_FALSE(counterexample_search(WearModel::log(1.0), Convention::VirtualAge, 0.0, 1.0,
                                    10000, 11).has_value());
  CHECK_FALSE(counterexample_search(WearModel::log(1.0), Convention::DurationRescale, 0.0,
                                    1.0, 10000, 11).has_value());
}

TEST_CASE("ranking csv format") {
  const auto result =
      brute_force_best_plan({1.0, 2.0}, WearModel::linear(0.5), Convention::VirtualAge);
  const std::string csv = ranking_to_csv(result.ranking);
  CHECK(csv.rfind("plan,lifetime,rank\n", 0) == 0);
  CHECK(csv.find("1-2,2.5,1") != std::string::npos);
  CHECK(csv.find("2-1,2,2") != std::string::npos);
}
