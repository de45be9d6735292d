#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flagcat/characters.hpp"

using namespace flagcat;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
WeightTuple W(std::initializer_list<int> e) { return WeightTuple(std::vector<int>(e)); }
PartitionTuple T(std::initializer_list<Partition> ps) {
  return PartitionTuple(std::vector<Partition>(ps));
}
}

TEST_CASE("class sizes sum to the group order") {
  CHECK(class_size(P({1, 1, 1})) == 1);
  CHECK(class_size(P({2, 1})) == 3);
  CHECK(class_size(P({3})) == 2);
  for (int m = 0; m <= 8; ++m) {
    Int total = 0;
    for (const auto& rho : partitions_of(m)) total += class_size(rho);
    CHECK(total == factorial(m));
  }
}

TEST_CASE("Murnaghan–Nakayama values") {
  // trivial and sign representations
  for (const auto& rho : partitions_of(6)) {
    CHECK(mn_character(P({6}), rho) == 1);
    const int transpositions = 6 - rho.rows();
    CHECK(mn_character(P({1, 1, 1, 1, 1, 1}), rho) == (transpositions % 2 == 0 ? 1 : -1));
  }
  // frozen from the brute-force oracle
  CHECK(mn_character(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(mn_character(P({2, 1}), P({2, 1})) == 0);
  CHECK(mn_character(P({2, 1}), P({3})) == -1);
  CHECK(mn_character(P({}), P({})) == 1);
  CHECK_THROWS_AS(mn_character(P({2}), P({3})), std::invalid_argument);
  // identity column is the dimension
  for (int m = 0; m <= 7; ++m) {
    std::vector<int> ones(static_cast<size_t>(m), 1);
    for (const auto& lam : partitions_of(m))
      CHECK(mn_character(lam, Partition(ones)) == specht_dim(lam));
  }
}

TEST_CASE("MN agrees with the permutation-module oracle") {
  for (int m = 0; m <= 5; ++m)
    for (const auto& lam : partitions_of(m))
      for (const auto& rho : partitions_of(m))
        CHECK(mn_character(lam, rho) == character_oracle(lam, rho));
}

TEST_CASE("first orthogonality") {
  for (int m = 0; m <= 7; ++m) {
    const auto shapes = partitions_of(m);
    for (const auto& lam : shapes)
      for (const auto& mu : shapes) {
        Int inner = 0;
        for (const auto& rho : shapes)
          inner += class_size(rho) * mn_character(lam, rho) * mn_character(mu, rho);
        CHECK(inner == (lam == mu ? factorial(m) : Int(0)));
      }
  }
}

TEST_CASE("Littlewood–Richardson basics") {
  CHECK(lr_coefficient(P({2, 1}), P({}), P({2, 1})) == 1);
  CHECK(lr_coefficient(P({2, 1}), P({}), P({3})) == 0);
  CHECK(lr_coefficient(P({1, 1}), P({1}), P({2, 1})) == 1);
  // the smallest shape with a coefficient of 2
  CHECK(lr_coefficient(P({2, 1}), P({2, 1}), P({3, 2, 1})) == 2);
  Int dim_sum = 0;
  for (const auto& nu : partitions_of(4)) dim_sum += lr_coefficient(P({2, 1}), P({1}), nu) * specht_dim(nu);
  CHECK(dim_sum == 8);  // C(4,3) · f(2,1) · f(1)
}

TEST_CASE("LR symmetry, dimension identity and Pieri") {
  for (int s = 0; s <= 8; ++s)
    for (int sl = 0; sl <= s; ++sl)
      for (const auto& lam : partitions_of(sl))
        for (const auto& mu : partitions_of(s - sl)) {
          Int dim_sum = 0;
          for (const auto& nu : partitions_of(s)) {
            const Int c = lr_coefficient(lam, mu, nu);
            CHECK(c == lr_coefficient(mu, lam, nu));
            dim_sum += c * specht_dim(nu);
          }
          CHECK(dim_sum == binomial(s, sl) * specht_dim(lam) * specht_dim(mu));
        }
  const Partition box({1});
  for (int m = 0; m <= 6; ++m)
    for (const auto& lam : partitions_of(m))
      for (const auto& nu : partitions_of(m + 1))
        CHECK(lr_coefficient(lam, box, nu) == (is_hs1(lam, nu) ? 1 : 0));
}

TEST_CASE("product classes and characters") {
  const auto classes = conjugacy_classes(W({2, 1}));
  CHECK(classes.size() == 2);  // (1,1) and (2) in the first slot, (1) in the second
  Int total = 0;
  for (const auto& c : classes) total += class_size(c);
  CHECK(total == sym_group_order(W({2, 1})));
  CHECK(product_character(T({P({2}), P({1})}), classes[0]) == 1);
}

TEST_CASE("hom bimodule character values") {
  const auto bc = hom_bimodule_character(W({2, 0}), W({1, 1}));
  REQUIRE(bc.source_classes.size() == 2);
  const ClassLabel id_class{{P({1, 1}), P({})}};
  const ClassLabel swap_class{{P({2}), P({})}};
  const auto index_of = [&](const ClassLabel& c) {
    for (size_t i = 0; i < bc.source_classes.size(); ++i)
      if (bc.source_classes[i] == c) return i;
    return bc.source_classes.size();
  };
  const size_t id_i = index_of(id_class), swap_i = index_of(swap_class);
  REQUIRE(id_i < bc.source_classes.size());
  REQUIRE(swap_i < bc.source_classes.size());
  // the identity pair fixes everything; the transposition acts freely
  CHECK(bc.values[id_i][0] == count_u_morphisms(W({2, 0}), W({1, 1})));
  CHECK(bc.values[swap_i][0] == 0);
  const auto trivial = hom_bimodule_character(W({1, 1}), W({1, 1}));
  CHECK(trivial.values.size() == 1);
  CHECK(trivial.values[0][0] == 1);
  CHECK_THROWS_AS(hom_bimodule_character(W({9, 0}), W({9, 0})), bound_error);
}

TEST_CASE("bimodule decomposition of the regular case is diagonal") {
  for (const auto& a : {W({2, 0}), W({1, 1}), W({3, 0}), W({1, 2})}) {
    const auto dec = decompose_bimodule(a, a);
    Int audit = 0;
    for (const auto& [pair, m] : dec) {
      CHECK(pair.first == pair.second);
      CHECK(m == 1);
      Int d = 1;
      for (int i = 0; i < pair.first.n(); ++i) d *= specht_dim(pair.first[i]);
      audit += d * d;
    }
    CHECK(audit == sym_group_order(a));
  }
}

TEST_CASE("bimodule decomposition of a free action") {
  const auto dec = decompose_bimodule(W({2, 0}), W({1, 1}));
  const PartitionTuple lam_top = T({P({2}), P({})});
  const PartitionTuple lam_bot = T({P({1, 1}), P({})});
  const PartitionTuple mu = T({P({1}), P({1})});
  REQUIRE(dec.size() == 2);
  CHECK(dec.at({lam_top, mu}) == 1);
  CHECK(dec.at({lam_bot, mu}) == 1);
  CHECK(decompose_bimodule(W({1, 1}), W({2, 0})).empty());  // empty Hom set
}

TEST_CASE("bimodule dimension audit across a sweep") {
  for (int n = 1; n <= 2; ++n)
    for (int t = 0; t <= 4; ++t) {
      const auto tuples = weight_tuples_with_total(n, t);
      for (const auto& a : tuples)
        for (const auto& b : tuples) {
          Int audit = 0;
          for (const auto& [pair, m] : decompose_bimodule(a, b)) {
            Int dl = 1, dm = 1;
            for (int i = 0; i < n; ++i) {
              dl *= specht_dim(pair.first[i]);
              dm *= specht_dim(pair.second[i]);
            }
            audit += m * dl * dm;
          }
          CHECK(audit == count_u_morphisms(a, b));
        }
    }
}
