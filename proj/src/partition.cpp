#include "flagcat/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace flagcat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

bool Partition::contains(const Partition& inner) const {
  if (inner.rows() > rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition{};
  std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) conj[static_cast<size_t>(j)] += 1;
  return Partition(std::move(conj));
}

PartitionTuple::PartitionTuple(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("partition tuple needs n >= 1");
}

std::vector<int> PartitionTuple::degrees() const {
  std::vector<int> d;
  d.reserve(components_.size());
  for (const auto& c : components_) d.push_back(c.size());
  return d;
}

int PartitionTuple::total_degree() const {
  int t = 0;
  for (const auto& c : components_) t += c.size();
  return t;
}

PartitionTuple PartitionTuple::reversed() const {
  std::vector<Partition> rev(components_.rbegin(), components_.rend());
  return PartitionTuple(std::move(rev));
}

namespace {

// Hook length of the cell (i, j), 0-based, conj = conjugate part list.
int hook_length(const Partition& p, const Partition& conj, int i, int j) {
  return p.part(i) - j + conj.part(j) - i - 1;
}

}  // namespace

Int specht_dim(const Partition& p) {
  if (p.empty()) return 1;
  const Partition conj = p.conjugate();
  Int den = 1;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.part(i); ++j) den *= hook_length(p, conj, i, j);
  return exact_div(factorial(p.size()), den, "hook length formula");
}

Int enumerate_syt(const Partition& p, int bound) {
  if (p.size() > bound)
    throw bound_error("enumerate_syt: |p| = " + std::to_string(p.size()) +
                      " exceeds bound " + std::to_string(bound));
  if (p.empty()) return 1;
  std::vector<int> fill(static_cast<size_t>(p.rows()), 0);  // boxes placed per row
  Int count = 0;
  std::function<void(int)> place = [&](int k) {
    if (k == p.size()) {
      ++count;
      return;
    }
    for (int r = 0; r < p.rows(); ++r) {
      if (fill[static_cast<size_t>(r)] == p.part(r)) continue;
      if (r > 0 && fill[static_cast<size_t>(r)] >= fill[static_cast<size_t>(r - 1)]) continue;
      fill[static_cast<size_t>(r)] += 1;
      place(k + 1);
      fill[static_cast<size_t>(r)] -= 1;
    }
  };
  place(0);
  return count;
}

bool is_hs1(const Partition& inner, const Partition& outer) {
  return outer.size() == inner.size() + 1 && outer.contains(inner);
}

std::vector<Partition> add_one_box(const Partition& p) {
  std::vector<Partition> out;
  for (int r = 0; r <= p.rows(); ++r) {
    if (r > 0 && p.part(r) == p.part(r - 1)) continue;  // would break monotonicity
    std::vector<int> parts = p.parts();
    if (r == p.rows())
      parts.push_back(1);
    else
      parts[static_cast<size_t>(r)] += 1;
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Int schur_dim_finite(const Partition& p, int d) {
  if (d < 0) throw std::invalid_argument("schur_dim_finite: negative dimension");
  if (p.rows() > d) return 0;
  const Partition conj = p.conjugate();
  Int num = 1, den = 1;
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.part(i); ++j) {
      num *= d + j - i;
      den *= hook_length(p, conj, i, j);
    }
  }
  return exact_div(num, den, "hook content formula");
}

std::vector<Partition> partitions_of(int m, int bound) {
  if (m < 0) throw std::invalid_argument("partitions_of: negative m");
  if (m > bound)
    throw bound_error("partitions_of: m = " + std::to_string(m) + " exceeds bound " +
                      std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> acc;
  std::function<void(int, int)> gen = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(Partition(acc));
      return;
    }
    for (int first = std::min(rest, max_part); first >= 1; --first) {
      acc.push_back(first);
      gen(rest - first, first);
      acc.pop_back();
    }
  };
  gen(m, m == 0 ? 1 : m);
  return out;  // first parts descend, so the list is lex decreasing
}

namespace {

// Backtracking over cells in row-major order; rows weakly increase, columns
// strictly increase. `cap` bounds each entry, `content` (optional) pins the
// exact number of times each value is used.
Int count_ssyt_impl(const Partition& p, int cap, const std::vector<int>* content) {
  if (p.empty()) {
    if (content)
      for (int c : *content)
        if (c != 0) return 0;
    return 1;
  }
  std::vector<std::vector<int>> tab(static_cast<size_t>(p.rows()));
  for (int i = 0; i < p.rows(); ++i) tab[static_cast<size_t>(i)].assign(static_cast<size_t>(p.part(i)), 0);
  std::vector<int> used(static_cast<size_t>(cap) + 1, 0);
  Int count = 0;
  std::function<void(int, int)> place = [&](int r, int c) {
    if (r == p.rows()) {
      ++count;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == p.part(r)) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0 && c < p.part(r - 1)) lo = std::max(lo, tab[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int v = lo; v <= cap; ++v) {
      if (content && used[static_cast<size_t>(v)] == (*content)[static_cast<size_t>(v - 1)]) continue;
      tab[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      used[static_cast<size_t>(v)] += 1;
      place(nr, nc);
      used[static_cast<size_t>(v)] -= 1;
    }
  };
  place(0, 0);
  return count;
}

}  // namespace

Int count_ssyt(const Partition& p, int max_entry, int bound) {
  if (p.size() > bound)
    throw bound_error("count_ssyt: |p| = " + std::to_string(p.size()) + " exceeds bound " +
                      std::to_string(bound));
  if (max_entry < 0) throw std::invalid_argument("count_ssyt: negative entry cap");
  if (max_entry == 0) return p.empty() ? 1 : 0;
  return count_ssyt_impl(p, max_entry, nullptr);
}

Int count_ssyt_content(const Partition& p, const std::vector<int>& content, int bound) {
  if (p.size() > bound)
    throw bound_error("count_ssyt_content: |p| exceeds bound " + std::to_string(bound));
  int total = std::accumulate(content.begin(), content.end(), 0);
  if (total != p.size()) return 0;
  if (content.empty()) return p.empty() ? 1 : 0;
  return count_ssyt_impl(p, static_cast<int>(content.size()), &content);
}

std::vector<PartitionTuple> partition_tuples_with_degrees(const std::vector<int>& degrees) {
  std::vector<std::vector<Partition>> per_slot;
  per_slot.reserve(degrees.size());
  for (int d : degrees) per_slot.push_back(partitions_of(d));
  std::vector<PartitionTuple> out;
  std::vector<Partition> acc;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == per_slot.size()) {
      out.push_back(PartitionTuple(acc));
      return;
    }
    for (const auto& p : per_slot[i]) {
      acc.push_back(p);
      rec(i + 1);
      acc.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace flagcat
