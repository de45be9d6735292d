#include "flagcat/weighted_sets.hpp"

#include <algorithm>
#include <functional>

namespace flagcat {

WeightTuple::WeightTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("weight tuple needs n >= 1");
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("weight tuple entries must be non-negative");
    total_ += e;
  }
}

int WeightTuple::prefix(int i) const {
  int s = 0;
  for (int j = 0; j < i; ++j) s += entries_[static_cast<size_t>(j)];
  return s;
}

int WeightTuple::weight_of_position(int k) const {
  int s = 0;
  for (int i = 0; i < n(); ++i) {
    s += entries_[static_cast<size_t>(i)];
    if (k < s) return i + 1;
  }
  throw std::out_of_range("weight_of_position: position past the end");
}

WeightTuple operator+(const WeightTuple& a, const WeightTuple& b) {
  if (a.n() != b.n()) throw std::invalid_argument("weight tuple widths differ");
  std::vector<int> e(a.entries());
  for (int i = 0; i < b.n(); ++i) e[static_cast<size_t>(i)] += b[i];
  return WeightTuple(std::move(e));
}

UMorphism::UMorphism(WeightTuple source, WeightTuple target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (source_.n() != target_.n()) throw std::invalid_argument("morphism widths differ");
  if (source_.total() != target_.total() ||
      static_cast<int>(map_.size()) != source_.total())
    throw std::invalid_argument("morphism map size mismatch");
  std::vector<char> hit(map_.size(), 0);
  for (int k = 0; k < static_cast<int>(map_.size()); ++k) {
    int v = map_[static_cast<size_t>(k)];
    if (v < 0 || v >= static_cast<int>(map_.size()) || hit[static_cast<size_t>(v)])
      throw std::invalid_argument("morphism map is not a bijection");
    hit[static_cast<size_t>(v)] = 1;
    if (target_.weight_of_position(v) < source_.weight_of_position(k))
      throw std::invalid_argument("morphism decreases a weight");
  }
}

UMorphism UMorphism::identity(const WeightTuple& a) {
  std::vector<int> id(static_cast<size_t>(a.total()));
  for (int k = 0; k < a.total(); ++k) id[static_cast<size_t>(k)] = k;
  return UMorphism(a, a, std::move(id));
}

UMorphism compose(const UMorphism& g, const UMorphism& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("compose: inner target differs from outer source");
  std::vector<int> m(f.map().size());
  for (size_t k = 0; k < m.size(); ++k)
    m[k] = g.map()[static_cast<size_t>(f.map()[k])];
  return UMorphism(f.source(), g.target(), std::move(m));
}

bool dominance_geq(const WeightTuple& a, const WeightTuple& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dominance: tuple widths differ");
  if (a.total() != b.total()) return false;
  int pa = 0, pb = 0;
  for (int i = 0; i < a.n(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa < pb) return false;
  }
  return true;
}

bool dominance_gt(const WeightTuple& a, const WeightTuple& b) {
  return a != b && dominance_geq(a, b);
}

std::vector<WeightTuple> cover_relations_below_direct(const WeightTuple& a) {
  // Covers drop exactly one prefix sum by one: move a unit from slot i to i+1.
  std::vector<WeightTuple> out;
  for (int i = 0; i + 1 < a.n(); ++i) {
    if (a[i] == 0) continue;
    std::vector<int> e(a.entries());
    e[static_cast<size_t>(i)] -= 1;
    e[static_cast<size_t>(i + 1)] += 1;
    out.push_back(WeightTuple(std::move(e)));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<WeightTuple> cover_relations_below_bruteforce(const WeightTuple& a) {
  std::vector<WeightTuple> all = weight_tuples_with_total(a.n(), a.total());
  std::vector<WeightTuple> below;
  for (const auto& b : all)
    if (dominance_gt(a, b)) below.push_back(b);
  std::vector<WeightTuple> out;
  for (const auto& b : below) {
    bool covered = true;
    for (const auto& c : below)
      if (c != b && dominance_gt(c, b)) {
        covered = false;
        break;
      }
    if (covered) out.push_back(b);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<WeightTuple> cover_relations_below(const WeightTuple& a, int materialize_bound) {
  if (a.total() <= materialize_bound) return cover_relations_below_bruteforce(a);
  return cover_relations_below_direct(a);
}

WeightTuple tau(const WeightTuple& a) {
  std::vector<int> e(a.entries().rbegin(), a.entries().rend());
  return WeightTuple(std::move(e));
}

Int count_u_morphisms(const WeightTuple& a, const WeightTuple& b) {
  if (a.n() != b.n()) throw std::invalid_argument("count_u_morphisms: tuple widths differ");
  if (a.total() != b.total()) return 0;
  if (!dominance_geq(a, b)) return 0;  // the binomials would vanish anyway
  Int r = 1;
  for (int i = 0; i < b.n(); ++i) r *= factorial(b[i]);
  for (int i = 1; i < a.n(); ++i)
    r *= binomial(a.prefix(i) - b.prefix(i - 1), b[i - 1]);
  return r;
}

std::vector<UMorphism> enumerate_u_morphisms(const WeightTuple& a, const WeightTuple& b,
                                             int bound) {
  if (a.n() != b.n()) throw std::invalid_argument("enumerate_u_morphisms: tuple widths differ");
  if (a.total() > bound)
    throw bound_error("enumerate_u_morphisms: |a| = " + std::to_string(a.total()) +
                      " exceeds bound " + std::to_string(bound));
  std::vector<UMorphism> out;
  if (a.total() != b.total()) return out;
  const int N = a.total();
  std::vector<int> src_w(static_cast<size_t>(N)), tgt_w(static_cast<size_t>(N));
  for (int k = 0; k < N; ++k) {
    src_w[static_cast<size_t>(k)] = a.weight_of_position(k);
    tgt_w[static_cast<size_t>(k)] = b.weight_of_position(k);
  }
  std::vector<int> map(static_cast<size_t>(N), -1);
  std::vector<char> used(static_cast<size_t>(N), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == N) {
      out.emplace_back(a, b, map);
      return;
    }
    for (int v = 0; v < N; ++v) {
      if (used[static_cast<size_t>(v)] || tgt_w[static_cast<size_t>(v)] < src_w[static_cast<size_t>(k)]) continue;
      used[static_cast<size_t>(v)] = 1;
      map[static_cast<size_t>(k)] = v;
      rec(k + 1);
      used[static_cast<size_t>(v)] = 0;
    }
  };
  rec(0);
  return out;  // choices ascend at every position, so the list is map-lexicographic
}

std::vector<WeightTuple> weight_tuples_with_total(int n, int total) {
  if (n < 1) throw std::invalid_argument("weight_tuples_with_total: n must be >= 1");
  std::vector<WeightTuple> out;
  std::vector<int> acc(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == n - 1) {
      acc[static_cast<size_t>(i)] = rest;
      out.push_back(WeightTuple(acc));
      return;
    }
    for (int v = rest; v >= 0; --v) {
      acc[static_cast<size_t>(i)] = v;
      rec(i + 1, rest - v);
    }
  };
  rec(0, total);
  return out;  // leading entries descend, so the list is lex decreasing
}

}  // namespace flagcat
