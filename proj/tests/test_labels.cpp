#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flagcat/labels.hpp"
#include "flagcat/module_category.hpp"

using namespace flagcat;

TEST_CASE("partition grammar") {
  CHECK(parse_partition("3,1") == Partition({3, 1}));
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("-") == Partition{});
  CHECK(partition_to_string(Partition({3, 1})) == "3,1");
  CHECK(partition_to_string(Partition{}) == "");
  CHECK(partition_to_display(Partition{}) == "-");
  CHECK_THROWS_WITH_AS(parse_partition("3,x"), doctest::Contains("'x'"), parse_error);
  CHECK_THROWS_AS(parse_partition("1,2"), parse_error);
}

TEST_CASE("weight tuple grammar") {
  CHECK(parse_weight_tuple("2,0,1") == WeightTuple({2, 0, 1}));
  CHECK(parse_weight_tuple("(2,0,1)") == WeightTuple({2, 0, 1}));
  CHECK(weight_tuple_to_string(WeightTuple({2, 0, 1})) == "2,0,1");
  CHECK_THROWS_WITH_AS(parse_weight_tuple("2,,1"), doctest::Contains("empty"), parse_error);
  CHECK_THROWS_AS(parse_weight_tuple("2,0", 3), parse_error);
  CHECK_THROWS_AS(parse_weight_tuple("2,-1"), parse_error);
}

TEST_CASE("partition tuple grammar accepts both empty spellings") {
  const PartitionTuple t = parse_partition_tuple("2,1;;1");
  CHECK(t == parse_partition_tuple("2,1;-;1"));
  CHECK(t.n() == 3);
  CHECK(partition_tuple_key(t) == "2,1;;1");
  CHECK(partition_tuple_display(t) == "2,1;-;1");
  CHECK(parse_partition_tuple("-").n() == 1);
  CHECK_THROWS_AS(parse_partition_tuple("1;1", 3), parse_error);

  // round trip through both printed forms, across a sweep
  for (int n = 1; n <= 3; ++n)
    for (int t2 = 0; t2 <= 3; ++t2)
      for (const auto& lam : partition_tuples_of_total(n, t2)) {
        CHECK(parse_partition_tuple(partition_tuple_key(lam), n) == lam);
        CHECK(parse_partition_tuple(partition_tuple_display(lam), n) == lam);
      }
}

TEST_CASE("object label grammar") {
  CHECK(parse_object_label("P(2,0)", 2) == principal_projective(WeightTuple({2, 0})));
  CHECK(parse_object_label("I[1;1]", 2) ==
        indec_injective(PartitionTuple({Partition({1}), Partition({1})})));
  CHECK(parse_object_label("M[2,1;-]", 2).kind == ObjectKind::Simple);
  CHECK(parse_object_label("Q(0,2)", 2).side == Side::D);
  CHECK(parse_object_label("J[1;1]", 2).side == Side::D);
  CHECK_THROWS_WITH_AS(parse_object_label("X[1;1]", 2), doctest::Contains("'X'"), parse_error);
  CHECK_THROWS_AS(parse_object_label("M(2,0)", 2), parse_error);
  CHECK_THROWS_AS(parse_object_label("P(2,0", 2), parse_error);

  for (const char* s : {"P(2,0)", "I(0,2)", "Q(1,1)", "J(2,1)", "P[2;1]", "I[1;1]", "M[2,1;-]",
                        "Q[1;-]", "J[-;2]"}) {
    const ObjectLabel obj = parse_object_label(s, 2);
    CHECK(object_label_to_string(obj) == s);
    CHECK(parse_object_label(object_label_to_string(obj), 2) == obj);
  }
}

TEST_CASE("representation label grammar") {
  CHECK(parse_repg_label("T(2,0)", 2).kind == RepGKind::T);
  CHECK(parse_repg_label("T[2;-]", 2).kind == RepGKind::Tlam);
  CHECK(parse_repg_label("K(1,1)", 2).kind == RepGKind::K);
  CHECK_THROWS_AS(parse_repg_label("K[1;1]", 2), parse_error);
  CHECK_THROWS_AS(parse_repg_label("S(1,1)", 2), parse_error);
  for (const char* s : {"T(2,0)", "U(1,2)", "K(1,1)", "T[2;1]", "U[-;2]", "S[1;1]", "F[2;-]"}) {
    const ParsedLabel parsed = parse_any_label(s, 2);
    REQUIRE(parsed.is_repg);
    CHECK(repg_label_to_string(parsed.rep) == s);
  }
  CHECK_FALSE(parse_any_label("M[1;1]", 2).is_repg);
  CHECK_THROWS_AS(parse_any_label("", 2), parse_error);
  CHECK_THROWS_AS(parse_any_label("Z[1]", 1), parse_error);
}

TEST_CASE("relabelings round-trip through the grammar") {
  for (const char* s : {"P(2,0)", "I(0,2)", "P[2;1]", "I[1;1]", "M[2,1;-]"}) {
    const ObjectLabel obj = parse_object_label(s, 2);
    CHECK(dual_vee(dual_vee(obj)) == obj);
    CHECK(tau_push(tau_push(obj)) == obj);
    CHECK(parse_object_label(object_label_to_string(dual_vee(obj)), 2).kind == dual_vee(obj).kind);
  }
  CHECK(object_label_to_string(tau_push(parse_object_label("I[2;-]", 2))) == "J[-;2]");
}
