#include <doctest.h>

#include <cmath>
#include <random>

#include "tpfc/errors.hpp"
#include "tpfc/partition.hpp"

using namespace tpfc;

TEST_SUITE_BEGIN("partition");

TEST_CASE("init_partition columns sum to exactly one") {
  const auto u = init_partition(7, 2, 3);
  REQUIRE(u.memberships.rows() == 2);
  REQUIRE(u.memberships.cols() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(u.memberships.col(j).sum() == 1.0);
  }
}

TEST_CASE("init_partition is deterministic per seed") {
  const auto a = init_partition(7, 3, 5);
  const auto b = init_partition(7, 3, 5);
  CHECK(a.memberships == b.memberships);
  const auto c = init_partition(8, 3, 5);
  CHECK(a.memberships != c.memberships);
}

TEST_CASE("init_partition matches the draw-and-normalize procedure") {
  // Independent re-statement of the documented procedure: per column, draw C
  // uniforms in (0,1) from mt19937_64 midpoints, normalize, force the last
  // entry to close the column.
  std::mt19937_64 engine(7);
  Eigen::MatrixXd expected(3, 5);
  for (int j = 0; j < 5; ++j) {
    double draws[3];
    double sum = 0.0;
    for (double& d : draws) {
      d = (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
      sum += d;
    }
    double partial = 0.0;
    for (int i = 0; i < 2; ++i) {
      expected(i, j) = draws[i] / sum;
      partial += expected(i, j);
    }
    expected(2, j) = 1.0 - partial;
  }
  const auto u = init_partition(7, 3, 5);
  CHECK(u.memberships == expected);
  CHECK(u.memberships.minCoeff() > 0.0);
  CHECK(u.memberships.maxCoeff() < 1.0);
}

TEST_CASE("init_partition rejects bad cluster counts") {
  CHECK_THROWS_AS(init_partition(1, 1, 5), InvalidConfigError);
  CHECK_THROWS_AS(init_partition(1, 6, 5), InvalidConfigError);
}

TEST_CASE("partition_delta of identical partitions is zero") {
  const auto u = init_partition(3, 4, 6);
  CHECK(partition_delta(u, u) == 0.0);
}

TEST_CASE("partition_delta hand values") {
  FuzzyPartition a{Eigen::MatrixXd{{1.0, 0.0}, {0.0, 1.0}}};
  FuzzyPartition b{Eigen::MatrixXd{{0.0, 1.0}, {1.0, 0.0}}};
  CHECK(partition_delta(a, b) == doctest::Approx(2.0).epsilon(1e-14));

  FuzzyPartition c{Eigen::MatrixXd{{0.6, 0.5}, {0.4, 0.5}}};
  FuzzyPartition d = c;
  d.memberships(0, 1) += 1e-3;
  d.memberships(1, 1) -= 1e-3;
  CHECK(partition_delta(c, d) == doctest::Approx(std::sqrt(2.0) * 1e-3).epsilon(1e-12));
}

TEST_CASE("partition_delta rejects shape mismatches") {
  const auto a = init_partition(1, 2, 3);
  const auto b = init_partition(1, 2, 4);
  CHECK_THROWS_AS(partition_delta(a, b), DimensionError);
}

TEST_CASE("harden takes the column argmax") {
  FuzzyPartition u{Eigen::MatrixXd{{0.9, 0.2}, {0.1, 0.8}}};
  CHECK(harden(u) == std::vector<int>{0, 1});
}

TEST_CASE("harden breaks ties toward the smallest index") {
  FuzzyPartition u{Eigen::MatrixXd{{0.5}, {0.5}}};
  CHECK(harden(u) == std::vector<int>{0});
}

TEST_CASE("harden of a crisp partition recovers its one-positions") {
  FuzzyPartition u{Eigen::MatrixXd{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}}};
  CHECK(harden(u) == std::vector<int>{1, 0, 2});
}

TEST_SUITE_END();
