#pragma once

#include <compare>
#include <vector>

#include "flagcat/ints.hpp"

namespace flagcat {

inline constexpr int kDefaultSytBound = 10;         // boxes, exhaustive SYT search
inline constexpr int kDefaultSsytBound = 6;         // boxes, exhaustive SSYT search
inline constexpr int kDefaultPartitionsBound = 30;  // largest m for partitions_of

/**
 * Integer partition: weakly decreasing positive parts, empty list = ∅.
 * Canonical form (no trailing zeros) makes equality, hashing and the
 * lexicographic order trivial. Immutable after construction.
 */
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  // Number of boxes |λ|.
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  // Zero-padded part access: part(i) = 0 for i >= rows().
  int part(int i) const { return i < rows() ? parts_[static_cast<size_t>(i)] : 0; }

  bool contains(const Partition& inner) const;
  Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// n-tuple of partitions; the label type for every simple, indecomposable
/// projective and indecomposable injective in the engine.
class PartitionTuple {
 public:
  PartitionTuple() = default;
  explicit PartitionTuple(std::vector<Partition> components);

  int n() const { return static_cast<int>(components_.size()); }
  const Partition& operator[](int i) const { return components_[static_cast<size_t>(i)]; }
  const std::vector<Partition>& components() const { return components_; }
  std::vector<int> degrees() const;  // (|λ^1|,…,|λ^n|)
  int total_degree() const;
  // Reverse the component order.
  PartitionTuple reversed() const;

  auto operator<=>(const PartitionTuple&) const = default;

 private:
  std::vector<Partition> components_;
};

// Number of standard Young tableaux of shape p, by the hook length formula
// (exact division). ∅ ↦ 1.
Int specht_dim(const Partition& p);

// Exhaustive backtracking count of standard Young tableaux; the independent
// oracle for specht_dim. Throws bound_error when |p| > bound.
Int enumerate_syt(const Partition& p, int bound = kDefaultSytBound);

// True iff inner ⊆ outer and outer has exactly one more box.
bool is_hs1(const Partition& inner, const Partition& outer);

// All partitions obtained from p by adding a single box, lex decreasing.
std::vector<Partition> add_one_box(const Partition& p);

// Dimension of the Schur functor S_p applied to a d-dimensional space:
// hook content product ∏(d + col − row)/hook as an exact integer; zero when
// p has more than d rows.
Int schur_dim_finite(const Partition& p, int d);

// All partitions of m, lex decreasing. Throws bound_error when m > bound.
std::vector<Partition> partitions_of(int m, int bound = kDefaultPartitionsBound);

// Exhaustive count of semistandard tableaux of shape p with entries ≤ max_entry.
Int count_ssyt(const Partition& p, int max_entry, int bound = kDefaultSsytBound);

// Kostka number: semistandard tableaux of shape p and content `content`.
Int count_ssyt_content(const Partition& p, const std::vector<int>& content,
                       int bound = kDefaultSsytBound);

// All n-tuples of partitions with the given component degrees, ordered by the
// lexicographic product of the lex-decreasing component lists.
std::vector<PartitionTuple> partition_tuples_with_degrees(const std::vector<int>& degrees);

}  // namespace flagcat
