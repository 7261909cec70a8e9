#pragma once

// Elimination kernels shared by the linear algebra routines. Not installed.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "hochkit/field.hpp"
#include "hochkit/sparse_matrix.hpp"

namespace hochkit::detail {

struct RatRing {
  using V = Rational;
  V from(const Rational& r) const { return r; }
  Rational to(const V& v) const { return v; }
  static bool zero(const V& v) { return v.is_zero(); }
  V mul(const V& a, const V& b) const { return a * b; }
  V sub(const V& a, const V& b) const { return a - b; }
  V neg(const V& a) const { return -a; }
  V inv(const V& a) const { return a.inverse(); }
  static V one() { return Rational(1); }
};

struct ModRing {
  uint64_t p;
  using V = uint32_t;
  V from(const Rational& r) const { return r.mod(static_cast<uint32_t>(p)); }
  Rational to(V v) const { return Rational(static_cast<int64_t>(v)); }
  static bool zero(V v) { return v == 0; }
  V mul(V a, V b) const { return static_cast<V>(uint64_t{a} * b % p); }
  V sub(V a, V b) const { return static_cast<V>((uint64_t{a} + p - b) % p); }
  V neg(V a) const { return a == 0 ? 0 : static_cast<V>(p - a); }
  V inv(V a) const {
    uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<V>(r);
  }
  static V one() { return 1; }
};

template <class Ring>
using Vec = std::vector<std::pair<uint32_t, typename Ring::V>>;

/// Row echelon form with leading index = smallest index.
template <class Ring>
class EchelonT {
 public:
  using V = typename Ring::V;
  using VecT = Vec<Ring>;

  EchelonT(Ring ring, size_t ambient) : ring_(ring), slot_(ambient, -1) {}

  size_t rank() const { return rows_.size(); }
  size_t ambient() const { return slot_.size(); }
  const std::vector<VecT>& rows() const { return rows_; }
  int32_t slot(uint32_t index) const { return slot_[index]; }

  /// Returns true iff v was independent of the stored rows.
  bool insert(VecT v) {
    reduce_leading(v);
    if (v.empty()) return false;
    V inv = ring_.inv(v.front().second);
    if (!(v.front().second == Ring::one()))
      for (auto& e : v) e.second = ring_.mul(e.second, inv);
    slot_[v.front().first] = static_cast<int32_t>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  void reduce_leading(VecT& v) {
    while (!v.empty()) {
      int32_t s = slot_[v.front().first];
      if (s < 0) break;
      V c = v.front().second;
      sub_scaled(v, 0, c, rows_[static_cast<size_t>(s)], scratch_);
    }
  }

  VecT reduce_full(VecT v) const {
    VecT scratch;
    size_t pos = 0;
    while (pos < v.size()) {
      int32_t s = slot_[v[pos].first];
      if (s < 0) {
        ++pos;
        continue;
      }
      V c = v[pos].second;
      sub_scaled(v, pos, c, rows_[static_cast<size_t>(s)], scratch);
    }
    return v;
  }

  /// Fully reduced rows sorted by pivot.
  std::vector<VecT> rref() const {
    std::vector<size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return rows_[a].front().first > rows_[b].front().first;
    });
    // Process from the largest pivot down; each row is reduced against rows
    // with larger pivots, which are already fully reduced.
    EchelonT done(ring_, slot_.size());
    std::vector<VecT> out(rows_.size());
    for (size_t k = 0; k < order.size(); ++k) {
      VecT v = rows_[order[k]];
      // Leading entry has no pivot in `done` (pivots are distinct).
      VecT head{v.front()};
      VecT tail(v.begin() + 1, v.end());
      tail = done.reduce_full(std::move(tail));
      head.insert(head.end(), tail.begin(), tail.end());
      done.slot_[head.front().first] = static_cast<int32_t>(done.rows_.size());
      done.rows_.push_back(head);
      out[order.size() - 1 - k] = std::move(head);
    }
    return out;
  }

 private:
  // v <- v - c * u, where u's leading index equals v[pos]'s index. Entries of
  // v before pos are untouched.
  void sub_scaled(VecT& v, size_t pos, V c, const VecT& u, VecT& out) const {
    out.clear();
    out.reserve(v.size() + u.size());
    for (size_t i = 0; i < pos; ++i) out.push_back(std::move(v[i]));
    size_t i = pos, j = 0;
    while (i < v.size() || j < u.size()) {
      if (j == u.size() || (i < v.size() && v[i].first < u[j].first)) {
        out.push_back(std::move(v[i++]));
      } else if (i == v.size() || u[j].first < v[i].first) {
        out.emplace_back(u[j].first, ring_.neg(ring_.mul(c, u[j].second)));
        ++j;
      } else {
        V x = ring_.sub(v[i].second, ring_.mul(c, u[j].second));
        if (!Ring::zero(x)) out.emplace_back(v[i].first, std::move(x));
        ++i;
        ++j;
      }
    }
    v.swap(out);
  }

  Ring ring_;
  std::vector<int32_t> slot_;
  std::vector<VecT> rows_;
  VecT scratch_;
};

}  // namespace hochkit::detail
