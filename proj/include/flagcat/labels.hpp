#pragma once

#include <string>

#include "flagcat/repg_bridge.hpp"

namespace flagcat {

// Shared text grammar.
//   Partition:       "3,1"; "" or "-" for ∅.
//   WeightTuple:     "2,0,1", parentheses optional.
//   PartitionTuple:  components joined by ';'; an empty component may be
//                    written "" or "-"  (e.g. "2,1;;1" and "2,1;-;1" agree).
//   Module labels:   kind letter + index, parens for weight tuples and
//                    brackets for partition tuples: P(2,0), I[1;1], M[2,1;-],
//                    Q(0,2), J[1;1]. Q/J are the downwards-side letters;
//                    simples print as M on either side.
//   Rep labels:      T(2,0), U(0,2), K(1,1), T[1;1], U[2;1], S[1;1], F[2;-].
// Parse failures throw parse_error naming the offending token.

Partition parse_partition(const std::string& s);
std::string partition_to_string(const Partition& p);          // "" for ∅
std::string partition_to_display(const Partition& p);         // "-" for ∅

WeightTuple parse_weight_tuple(const std::string& s, int expect_n = -1);
std::string weight_tuple_to_string(const WeightTuple& a);

PartitionTuple parse_partition_tuple(const std::string& s, int expect_n = -1);
std::string partition_tuple_key(const PartitionTuple& t);      // ";;"-style, JSON keys
std::string partition_tuple_display(const PartitionTuple& t);  // ";-;"-style

ObjectLabel parse_object_label(const std::string& s, int expect_n = -1);
std::string object_label_to_string(const ObjectLabel& obj);

RepGLabel parse_repg_label(const std::string& s, int expect_n = -1);
std::string repg_label_to_string(const RepGLabel& lab);

// Any of the ten label letters.
struct ParsedLabel {
  bool is_repg = false;
  ObjectLabel obj;
  RepGLabel rep;
};
ParsedLabel parse_any_label(const std::string& s, int expect_n = -1);

}  // namespace flagcat
