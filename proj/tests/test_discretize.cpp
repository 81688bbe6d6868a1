// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace patsum;

namespace {

std::vector<double> random_values(SeededRng& rng, std::size_t count) {
  std::vector<double> values;
  for (std::size_t i = 0; i < count; ++i)
    values.push_back(rng.uniform(0.001, 1.0));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace

TEST_CASE("disc_absolute") {
  CHECK(disc_absolute(0.5, 0.1) == Catch::Approx(0.5));
  CHECK(disc_absolute(0.19, 0.1) == Catch::Approx(0.1));
  for (double x : {0.01, 0.3, 0.77, 0.999})
    CHECK(disc_absolute(x, 0.5) == Catch::Approx(0.5));
  CHECK_THROWS_AS(disc_absolute(0.5, 0.0), PreconditionError);
  CHECK_THROWS_AS(disc_absolute(0.0, 0.1), PreconditionError);

  SeededRng rng(12);
  for (int i = 0; i < 500; ++i) {
    double x = rng.uniform(1e-6, 1.0);
    double eps = rng.uniform(0.01, 0.5);
    CHECK(std::abs(x - disc_absolute(x, eps)) <= eps + 1e-12);
  }
}

TEST_CASE("disc_relative") {
  CHECK(disc_relative(1.0, 0.5) == Catch::Approx(0.5));
  double eps = 0.3;
  CHECK(disc_relative(1.0 - eps, eps) == Catch::Approx(1.0 - eps));
  CHECK_THROWS_AS(disc_relative(0.5, 1.0), PreconditionError);

  SeededRng rng(13);
  for (int i = 0; i < 1000; ++i) {
    double x = rng.uniform(1e-6, 1.0);
    double e = rng.uniform(0.01, 0.9);
    double ratio = disc_relative(x, e) / x;
    CHECK(ratio >= (1.0 - e) - 1e-9);
    CHECK(ratio <= 1.0 / (1.0 - e) + 1e-9);
  }
}

TEST_CASE("tightened absolute error keeps the grid size") {
  SeededRng rng(14);
  for (int i = 0; i < 200; ++i) {
    double eps = rng.uniform(0.01, 0.5);
    double tight = tightened_abs_error(eps);
    CHECK(tight <= eps + 1e-12);
    CHECK(std::ceil(1.0 / (2.0 * tight) - 1e-9) ==
          std::ceil(1.0 / (2.0 * eps)));
  }
}

TEST_CASE("interval_cover on the worked point set") {
  // The boundary-exact example runs on exact rationals.
  std::vector<Rat> points{Rat(1, 10), Rat(3, 10), Rat(7, 10), Rat(9, 10)};
  RatDiscretization disc = interval_cover<Rat>(points, Rat(1, 10));
  REQUIRE(disc.points.size() == 2);
  CHECK(disc.points[0] == Rat(1, 5));
  CHECK(disc.points[1] == Rat(4, 5));
  CHECK(disc.at(Rat(1, 10)) == Rat(1, 5));
  CHECK(disc.at(Rat(3, 10)) == Rat(1, 5));
  CHECK(disc.at(Rat(7, 10)) == Rat(4, 5));
  CHECK(disc.at(Rat(9, 10)) == Rat(4, 5));
  CHECK(disc.max_abs_error <= Rat(1, 10));

  Discretization one = interval_cover({0.4}, 0.25);
  CHECK(one.points == std::vector<double>{0.65});

  CHECK(interval_cover({}, 0.1).points.empty());
  CHECK(interval_cover({0.5, 0.5, 0.5}, 0.01).points.size() == 1);
}

TEST_CASE("evenly spaced grid point counts") {
  std::vector<Rat> grid;
  for (long long i = 1; i <= 10; ++i) grid.push_back(Rat(i, 10));
  // 2*eps below the spacing isolates every point; at the spacing pairs form.
  CHECK(interval_cover<Rat>(grid, Rat(1, 25)).points.size() == 10);
  CHECK(interval_cover<Rat>(grid, Rat(1, 20)).points.size() == 5);
  CHECK(testing::oracle_min_cover_points<Rat>(grid, Rat(1, 25)) == 10);
  CHECK(testing::oracle_min_cover_points<Rat>(grid, Rat(1, 20)) == 5);
}

TEST_CASE("prefix_cover matches interval_cover and rejects unsorted input") {
  SeededRng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> values = random_values(rng, 1 + rng.next_below(12));
    double eps = rng.uniform(0.01, 0.4);
    Discretization a = interval_cover(values, eps);
    Discretization b = prefix_cover(values, eps);
    CHECK(a.mapping == b.mapping);
  }
  CHECK_THROWS_AS(prefix_cover({0.3, 0.1}, 0.05), PreconditionError);
}

TEST_CASE("bin_cover point count equals interval_cover") {
  SeededRng rng(16);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> values = random_values(rng, 1 + rng.next_below(14));
    double eps = rng.uniform(0.005, 0.4);
    CHECK(bin_cover(values, eps).points.size() ==
          interval_cover(values, eps).points.size());
  }
  std::vector<Rat> worked{Rat(1, 10), Rat(3, 10), Rat(7, 10), Rat(9, 10)};
  CHECK(bin_cover<Rat>(worked, Rat(1, 10)).points.size() == 2);
  CHECK(bin_cover({}, 0.1).points.empty());
}

TEST_CASE("log_cover finds the same points with few comparisons") {
  std::vector<Rat> worked{Rat(1, 10), Rat(3, 10), Rat(7, 10), Rat(9, 10)};
  BasicLogCoverResult<Rat> r = log_cover<Rat>(worked, Rat(1, 10));
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0] == Rat(1, 5));
  CHECK(r.points[1] == Rat(4, 5));

  CHECK(log_cover({0.4, 0.4, 0.4}, 0.01).points.size() == 1);

  std::vector<double> wide;
  for (int i = 0; i < 1024; ++i) wide.push_back(i / 1024.0 + 1e-4);
  LogCoverResult big = log_cover(wide, 0.001);
  CHECK(big.points == prefix_cover(wide, 0.001).points);
  // O(|points| log |P|) comparisons.
  CHECK(big.comparisons <= big.points.size() * 12);
  CHECK_THROWS_AS(log_cover({0.3, 0.1}, 0.05), PreconditionError);
}

TEST_CASE("greedy cover minimality against the exhaustive oracle") {
  SeededRng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> values = random_values(rng, 1 + rng.next_below(10));
    double eps = rng.uniform(0.01, 0.3);
    std::size_t greedy = prefix_cover(values, eps).points.size();
    CHECK(greedy == testing::oracle_min_cover_points(values, eps));
    CHECK(log_cover(values, eps).points.size() == greedy);
    CHECK(bin_cover(values, eps).points.size() == greedy);
  }
}

TEST_CASE("dp_valuate_abs") {
  ErrorMatrices pair = dp_valuate_abs({0.1, 0.2}, {1.0, 1.0});
  CHECK(pair.loss(0, 1) == Catch::Approx(0.1));
  CHECK(pair.point(0, 1) >= 0.1);
  CHECK(pair.point(0, 1) <= 0.2);

  std::vector<double> p{0.1, 0.2, 0.5, 0.6, 0.9, 1.0};
  std::vector<double> w(6, 1.0);
  ErrorMatrices m = dp_valuate_abs(p, w);
  for (std::size_t i = 0; i < 6; ++i) CHECK(m.loss(i, i) == 0.0);

  // Whole-array loss equals a brute-force scan over candidate points.
  double best = 1e9;
  for (double candidate : p) {
    double loss = 0.0;
    for (double x : p) loss += std::abs(x - candidate);
    best = std::min(best, loss);
  }
  CHECK(m.loss(0, 5) == Catch::Approx(best));
}

TEST_CASE("dp_tabulate on the six-point example") {
  std::vector<double> p{0.1, 0.2, 0.5, 0.6, 0.9, 1.0};
  std::vector<double> w(6, 1.0);
  ErrorMatrices m = dp_valuate_abs(p, w);
  DPTables t = dp_tabulate(p, m);

  CHECK(t.loss(2, 5) == Catch::Approx(0.3));  // k = 3
  CHECK(t.loss(0, 5) == Catch::Approx(m.loss(0, 5)));  // k = 1 base
  CHECK(t.loss(5, 5) == 0.0);                          // k = |P|

  Discretization disc = extract_discretization(p, m, t, 3);
  CHECK(disc.at(0.1) == disc.at(0.2));
  CHECK(disc.at(0.5) == disc.at(0.6));
  CHECK(disc.at(0.9) == disc.at(1.0));
  CHECK(disc.at(0.2) != disc.at(0.5));
  CHECK(disc.at(0.6) != disc.at(0.9));

  std::vector<double> points = extract_points(p, m, t, 3);
  CHECK(points == std::vector<double>{0.1, 0.5, 0.9});

  CHECK(extract_points(p, m, t, 6) == p);
  CHECK(extract_points(p, m, t, 1) == std::vector<double>{0.5});
  CHECK_THROWS_AS(extract_points(p, m, t, 0), PreconditionError);
  CHECK_THROWS_AS(extract_points(p, m, t, 7), PreconditionError);
}

TEST_CASE("dp optimality against exhaustive segmentation") {
  SeededRng rng(18);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<double> values = random_values(rng, 1 + rng.next_below(8));
    std::vector<double> weights;
    for (std::size_t i = 0; i < values.size(); ++i)
      weights.push_back(trial % 2 == 0 ? 1.0 : rng.uniform(0.0, 2.0));
    ErrorMatrices m = dp_valuate_abs(values, weights);
    DPTables t = dp_tabulate(values, m);
    for (std::size_t k = 1; k <= values.size(); ++k) {
      double expected =
          testing::oracle_min_segmentation_loss(values, weights, k);
      CHECK(t.loss(k - 1, values.size() - 1) ==
            Catch::Approx(expected).margin(1e-12));
      // extract_discretization realizes the tabled loss.
      Discretization disc = extract_discretization(values, m, t, k);
      double realized = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i)
        realized += weights[i] * std::abs(values[i] - disc.at(values[i]));
      CHECK(realized == Catch::Approx(t.loss(k - 1, values.size() - 1))
                            .margin(1e-12));
    }
    // delta is non-increasing in k.
    for (std::size_t k = 1; k < values.size(); ++k)
      CHECK(t.loss(k, values.size() - 1) <=
            t.loss(k - 1, values.size() - 1) + 1e-12);
  }
}

TEST_CASE("order preservation and error guarantee of produced covers") {
  SeededRng rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values = random_values(rng, 2 + rng.next_below(10));
    double eps = rng.uniform(0.01, 0.4);
    Discretization disc = prefix_cover(values, eps);
    CHECK(disc.max_abs_error <= eps + 1e-12);
    CHECK(bin_cover(values, eps).max_abs_error <= eps + 1e-12);
    for (double x : values) CHECK(std::abs(x - disc.at(x)) <= eps + 1e-12);
    for (std::size_t i = 1; i < values.size(); ++i)
      CHECK(disc.at(values[i - 1]) <= disc.at(values[i]));

    ErrorMatrices m =
        dp_valuate_abs(values, std::vector<double>(values.size(), 1.0));
    DPTables t = dp_tabulate(values, m);
    std::size_t k = 1 + rng.next_below(values.size());
    Discretization dp = extract_discretization(values, m, t, k);
    for (std::size_t i = 1; i < values.size(); ++i)
      CHECK(dp.at(values[i - 1]) <= dp.at(values[i]));
  }
}

TEST_CASE("rule accuracy error bounds under discretization") {
  SeededRng rng(20);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    TransactionDatabase db = testing::random_database(
        rng, 2 + rng.next_below(12), 1 + rng.next_below(5), 0.6);
    if (db.size() == 0) continue;
    Rat sigma(1, static_cast<long long>(db.size()));
    RatedCollection f = mine_frequent(db, sigma);
    double eps = rng.uniform(0.02, 0.25);

    for (const auto& [y, supp_y] : f.entries()) {
      for (const auto& [x, supp_x] : f.entries()) {
        if (!x.proper_subset_of(y) || supp_x == 0 || supp_y == 0) continue;
        double fx = to_double(f.frequency(x));
        double fy = to_double(f.frequency(y));
        double acc = fy / fx;

        // Absolute bound for a maximum-absolute-error discretization.
        double da = disc_absolute(fy, eps) / disc_absolute(fx, eps);
        CHECK(std::abs(da - acc) <=
              std::min(1.0, 2.0 * eps / fx) + 1e-9);

        // Ratio bound for the relative-error discretization.
        double dr = disc_relative(fy, eps) / disc_relative(fx, eps);
        double ratio = dr / acc;
        CHECK(ratio >= (1.0 - eps) * (1.0 - eps) - 1e-9);
        CHECK(ratio <= 1.0 / ((1.0 - eps) * (1.0 - eps)) + 1e-9);
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("condense_by_discretization") {
  TransactionDatabase db = testing::d1();
  RatedCollection f = mine_frequent(db, Rat(1, 4));

  std::vector<Rat> frequencies;
  for (const Itemset& x : f.itemsets())
    frequencies.push_back(f.frequency(x));

  // One point: exactly the maximal members survive.
  RatDiscretization coarsest = interval_cover<Rat>(frequencies, Rat(1));
  REQUIRE(coarsest.points.size() == 1);
  CHECK(condense_by_discretization(f, coarsest).itemsets() ==
        maximal_of(f));

  // Identity: exactly detect_closed.
  RatDiscretization identity;
  for (const Rat& v : frequencies) identity.mapping[v] = v;
  CHECK(condense_by_discretization(f, identity).itemsets() ==
        detect_closed(f).itemsets());

  // eps = 1/4 lands strictly between the maximal and the closed counts.
  RatDiscretization mid = interval_cover<Rat>(frequencies, Rat(1, 4));
  std::size_t condensed = condense_by_discretization(f, mid).size();
  CHECK(condensed > maximal_of(f).size());
  CHECK(condensed < detect_closed(f).size());

  RatDiscretization missing;
  missing.mapping[Rat(1, 8)] = Rat(1, 8);
  CHECK_THROWS_AS(condense_by_discretization(f, missing), PreconditionError);
}
