// Sparse row echelon over an exact field, with an optional pivot predicate:
// indices where the predicate is false are carried along but never used as
// pivots. A row that reduces to zero on all pivot-eligible indices is a
// certificate that the eligible part lies in the span.
#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

namespace qtorus::detail {

template <class F>
class SparseEchelon {
 public:
  using Entry = std::pair<int, F>;
  using Row = std::vector<Entry>;  // sorted by index, nonzero values

  SparseEchelon() = default;
  explicit SparseEchelon(std::function<bool(int)> pivot_ok) : pivot_ok_(std::move(pivot_ok)) {}

  static Row normalize(Row r) {
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Row out;
    for (auto& [i, v] : r) {
      if (!out.empty() && out.back().first == i) {
        out.back().second += v;
        if (out.back().second.is_zero()) out.pop_back();
      } else if (!v.is_zero()) {
        out.push_back({i, v});
      }
    }
    return out;
  }

  // Reduce r (sorted) against the stored rows at their pivot indices.
  // Rows are processed in insertion order: row k has zeros at the pivots of
  // rows 1..k-1, so no elimination reintroduces an earlier pivot and the
  // result vanishes at every stored pivot.
  Row reduce(Row r) const {
    for (const auto& stored : rows_) {
      const F* coef = find(r, stored.pivot);
      if (!coef) continue;
      F factor = *coef / *find(stored.row, stored.pivot);
      r = axpy(r, stored.row, factor);
    }
    return r;
  }

  // Insert after reduction. Returns true if the row contributed a new pivot
  // (its first pivot-eligible nonzero index); the reduced row is written
  // back to `r` either way.
  bool insert(Row& r) {
    r = reduce(normalize(std::move(r)));
    int pivot = first_eligible(r);
    if (pivot < 0) return false;
    rows_.push_back({pivot, r});
    return true;
  }

  bool in_span(Row r) const { return reduce(normalize(std::move(r))).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  struct PivotRow {
    int pivot;
    Row row;
  };

  static const F* find(const Row& r, int index) {
    auto it = std::lower_bound(r.begin(), r.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    if (it == r.end() || it->first != index) return nullptr;
    return &it->second;
  }

  int first_eligible(const Row& r) const {
    for (const auto& [i, v] : r)
      if (!pivot_ok_ || pivot_ok_(i)) return i;
    return -1;
  }

  static Row axpy(const Row& r, const Row& s, const F& factor) {
    // r - factor * s, both sorted
    Row out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
      if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
        out.push_back(r[i++]);
      } else if (i == r.size() || s[j].first < r[i].first) {
        F v = -(factor * s[j].second);
        if (!v.is_zero()) out.push_back({s[j].first, v});
        ++j;
      } else {
        F v = r[i].second - factor * s[j].second;
        if (!v.is_zero()) out.push_back({r[i].first, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::function<bool(int)> pivot_ok_;
  std::vector<PivotRow> rows_;
};

}  // namespace qtorus::detail
