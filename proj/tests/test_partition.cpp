#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flagcat/partition.hpp"

using namespace flagcat;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// Independent partition-number oracle: Euler's pentagonal recurrence.
long long partition_number(int n) {
  static std::vector<long long> table{1};
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    long long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sign = (k % 2 == 1) ? 1 : -1;
      total += sign * table[static_cast<size_t>(m - g1)];
      if (g2 <= m) total += sign * table[static_cast<size_t>(m - g2)];
    }
    table.push_back(total);
  }
  return table[static_cast<size_t>(n)];
}

}  // namespace

TEST_CASE("partition validation and canonical form") {
  CHECK(P({3, 1}).size() == 4);
  CHECK(P({}).empty());
  CHECK(P({}).size() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(P({4, 2, 1}).part(5) == 0);
  CHECK(P({4, 2, 1}).conjugate() == P({3, 2, 1, 1}));
  CHECK(P({}).conjugate() == P({}));
}

TEST_CASE("specht_dim matches the exhaustive tableau count") {
  CHECK(specht_dim(P({})) == 1);
  CHECK(specht_dim(P({7})) == 1);     // one-row shape has a unique tableau
  CHECK(specht_dim(P({2, 1})) == 2);  // frozen from enumerating both tableaux
  CHECK(specht_dim(P({2, 2})) == 2);
  CHECK(specht_dim(P({3, 2})) == 5);
  CHECK(enumerate_syt(P({})) == 1);
  CHECK(enumerate_syt(P({1, 1, 1})) == 1);
  CHECK(enumerate_syt(P({3, 2})) == 5);
  for (int m = 0; m <= 8; ++m)
    for (const auto& lam : partitions_of(m)) CHECK(enumerate_syt(lam) == specht_dim(lam));
  CHECK_THROWS_AS(enumerate_syt(P({11}), 10), bound_error);
}

TEST_CASE("single-box containment predicate") {
  CHECK(is_hs1(P({2}), P({2, 1})));
  CHECK_FALSE(is_hs1(P({2}), P({2})));
  CHECK_FALSE(is_hs1(P({2}), P({1, 1})));
  CHECK(is_hs1(P({}), P({1})));
}

TEST_CASE("add_one_box lists every growth, largest first") {
  CHECK(add_one_box(P({})) == std::vector<Partition>{P({1})});
  CHECK(add_one_box(P({1})) == std::vector<Partition>{P({2}), P({1, 1})});
  CHECK(add_one_box(P({2, 1})) == std::vector<Partition>{P({3, 1}), P({2, 2}), P({2, 1, 1})});
  for (int m = 0; m <= 7; ++m) {
    for (const auto& lam : partitions_of(m)) {
      const auto grown = add_one_box(lam);
      for (const auto& q : grown) CHECK(is_hs1(lam, q));
      int distinct = lam.empty() ? 0 : 1;
      for (int i = 1; i < lam.rows(); ++i)
        if (lam.part(i) != lam.part(i - 1)) ++distinct;
      CHECK(static_cast<int>(grown.size()) == distinct + 1);
    }
  }
}

TEST_CASE("hook content dimension equals the exhaustive filling count") {
  CHECK(schur_dim_finite(P({1}), 5) == 5);
  CHECK(schur_dim_finite(P({2, 1}), 2) == 2);
  CHECK(schur_dim_finite(P({1, 1, 1}), 2) == 0);
  CHECK(schur_dim_finite(P({}), 0) == 1);
  for (int m = 0; m <= 6; ++m)
    for (const auto& lam : partitions_of(m))
      for (int d = 0; d <= 4; ++d) CHECK(schur_dim_finite(lam, d) == count_ssyt(lam, d));
}

TEST_CASE("partitions_of agrees with the pentagonal recurrence") {
  CHECK(partitions_of(0) == std::vector<Partition>{P({})});
  CHECK(partitions_of(4) ==
        std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
  CHECK(partitions_of(6).size() == 11);
  for (int m = 0; m <= 20; ++m)
    CHECK(static_cast<long long>(partitions_of(m).size()) == partition_number(m));
  CHECK_THROWS_AS(partitions_of(31), bound_error);
  // lex decreasing throughout
  for (int m = 0; m <= 10; ++m) {
    const auto list = partitions_of(m);
    for (size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1] > list[i]);
  }
}

TEST_CASE("specht_dim symmetries") {
  for (int m = 0; m <= 10; ++m) {
    Int square_sum = 0;
    for (const auto& lam : partitions_of(m)) {
      CHECK(specht_dim(lam) == specht_dim(lam.conjugate()));
      if (m >= 1) {
        Int branch = 0;
        for (const auto& mu : partitions_of(m - 1))
          if (is_hs1(mu, lam)) branch += specht_dim(mu);
        CHECK(branch == specht_dim(lam));
      }
      square_sum += specht_dim(lam) * specht_dim(lam);
    }
    if (m <= 8) CHECK(square_sum == factorial(m));
  }
}

TEST_CASE("partition tuples") {
  const PartitionTuple t({P({2, 1}), P({}), P({1})});
  CHECK(t.n() == 3);
  CHECK(t.degrees() == std::vector<int>{3, 0, 1});
  CHECK(t.total_degree() == 4);
  CHECK(t.reversed() == PartitionTuple({P({1}), P({}), P({2, 1})}));
  CHECK(t.reversed().reversed() == t);
  CHECK(partition_tuples_with_degrees({2, 0}).size() == 2);
  CHECK(partition_tuples_with_degrees({0, 0}).size() == 1);
}
