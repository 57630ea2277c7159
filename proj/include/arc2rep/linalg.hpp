// Sparse exact linear algebra templated on the scalar field.
#pragma once

#include "arc2rep/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arc2rep {

// A sparse vector: entries sorted by index, no explicit zeros.
template <class F>
struct SparseVec {
  std::vector<std::pair<int, F>> e;

  bool empty() const { return e.empty(); }
  std::size_t nnz() const { return e.size(); }

  F at(int i) const {
    auto it = std::lower_bound(e.begin(), e.end(), i,
                               [](const std::pair<int, F>& p, int k) { return p.first < k; });
    if (it != e.end() && it->first == i) return it->second;
    return F(0);
  }

  static SparseVec unit(int i) {
    SparseVec v;
    v.e.emplace_back(i, F(1));
    return v;
  }

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e == b.e; }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }
};

// Dense scratch accumulator that remembers which slots were touched.
template <class F>
class Accumulator {
 public:
  explicit Accumulator(int n = 0) { resize(n); }

  void resize(int n) {
    val_.assign(n, F(0));
    used_.assign(n, 0);
    touched_.clear();
  }
  int size() const { return static_cast<int>(val_.size()); }

  void add(int i, const F& c) {
    if (c.is_zero()) return;
    if (!used_[i]) {
      used_[i] = 1;
      touched_.push_back(i);
      val_[i] = c;
    } else {
      val_[i] += c;
    }
  }
  void add(const SparseVec<F>& v, const F& c) {
    if (c.is_zero()) return;
    if (c.is_one()) {
      for (const auto& [i, x] : v.e) add(i, x);
    } else {
      for (const auto& [i, x] : v.e) add(i, x * c);
    }
  }

  // Drains into a sorted sparse vector and resets the scratch space.
  SparseVec<F> take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec<F> out;
    out.e.reserve(touched_.size());
    for (int i : touched_) {
      if (!val_[i].is_zero()) out.e.emplace_back(i, val_[i]);
      val_[i] = F(0);
      used_[i] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<F> val_;
  std::vector<char> used_;
  std::vector<int> touched_;
};

template <class F>
SparseVec<F> combine(const SparseVec<F>& a, const F& ca, const SparseVec<F>& b, const F& cb) {
  SparseVec<F> out;
  out.e.reserve(a.e.size() + b.e.size());
  std::size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
      F x = a.e[i].second * ca;
      if (!x.is_zero()) out.e.emplace_back(a.e[i].first, x);
      ++i;
    } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
      F x = b.e[j].second * cb;
      if (!x.is_zero()) out.e.emplace_back(b.e[j].first, x);
      ++j;
    } else {
      F x = a.e[i].second * ca + b.e[j].second * cb;
      if (!x.is_zero()) out.e.emplace_back(a.e[i].first, x);
      ++i;
      ++j;
    }
  }
  return out;
}

// Column-major sparse matrix.
template <class F>
struct SparseMat {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec<F>> col;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(c) {}

  static SparseMat identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.col[i] = SparseVec<F>::unit(i);
    return m;
  }
  static SparseMat zero(int r, int c) { return SparseMat(r, c); }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : col) n += c.nnz();
    return n;
  }
  bool is_zero() const { return nnz() == 0; }

  F at(int r, int c) const { return col[c].at(r); }

  void set(int r, int c, const F& x) {
    auto& v = col[c].e;
    auto it = std::lower_bound(v.begin(), v.end(), r,
                               [](const std::pair<int, F>& p, int k) { return p.first < k; });
    if (it != v.end() && it->first == r) {
      if (x.is_zero())
        v.erase(it);
      else
        it->second = x;
    } else if (!x.is_zero()) {
      v.insert(it, {r, x});
    }
  }

  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
  }
  friend bool operator!=(const SparseMat& a, const SparseMat& b) { return !(a == b); }
};

template <class F>
SparseVec<F> apply(const SparseMat<F>& a, const SparseVec<F>& v) {
  Accumulator<F> acc(a.rows);
  for (const auto& [k, x] : v.e) acc.add(a.col[k], x);
  return acc.take();
}

// a * b, i.e. apply b first.
template <class F>
SparseMat<F> multiply(const SparseMat<F>& a, const SparseMat<F>& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: dimension mismatch");
  SparseMat<F> out(a.rows, b.cols);
  Accumulator<F> acc(a.rows);
  for (int j = 0; j < b.cols; ++j) {
    for (const auto& [k, x] : b.col[j].e) acc.add(a.col[k], x);
    out.col[j] = acc.take();
  }
  return out;
}

template <class F>
SparseMat<F> linear_combination(const SparseMat<F>& a, const F& ca, const SparseMat<F>& b, const F& cb) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("add: dimension mismatch");
  SparseMat<F> out(a.rows, a.cols);
  for (int j = 0; j < a.cols; ++j) out.col[j] = combine(a.col[j], ca, b.col[j], cb);
  return out;
}

template <class F>
SparseMat<F> operator+(const SparseMat<F>& a, const SparseMat<F>& b) {
  return linear_combination(a, F(1), b, F(1));
}
template <class F>
SparseMat<F> operator-(const SparseMat<F>& a, const SparseMat<F>& b) {
  return linear_combination(a, F(1), b, F(-1));
}
template <class F>
SparseMat<F> scale(const F& c, const SparseMat<F>& a) {
  SparseMat<F> out(a.rows, a.cols);
  if (c.is_zero()) return out;
  for (int j = 0; j < a.cols; ++j) {
    out.col[j].e.reserve(a.col[j].e.size());
    for (const auto& [i, x] : a.col[j].e) out.col[j].e.emplace_back(i, x * c);
  }
  return out;
}

template <class F>
SparseMat<F> transpose(const SparseMat<F>& a) {
  SparseMat<F> out(a.cols, a.rows);
  for (int j = 0; j < a.cols; ++j)
    for (const auto& [i, x] : a.col[j].e) out.col[i].e.emplace_back(j, x);
  return out;
}

template <class F>
std::string to_string(const SparseMat<F>& a) {
  std::ostringstream os;
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) os << (j ? " " : "") << a.at(i, j);
    os << "\n";
  }
  return os.str();
}

// Reduced row echelon form built incrementally; the pivot of each row is its
// leftmost nonzero column and every row is zero on all other pivot columns.
template <class F>
class RowEchelon {
 public:
  explicit RowEchelon(int ncols = 0) : ncols_(ncols), pivot_row_(ncols, -1) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int c) const { return pivot_row_[c] >= 0; }
  const SparseVec<F>& row_for_pivot(int c) const { return rows_[pivot_row_[c]]; }

  SparseVec<F> reduce(const SparseVec<F>& v) const {
    Accumulator<F>& acc = scratch();
    acc.add(v, F(1));
    for (const auto& [c, x] : v.e)
      if (pivot_row_[c] >= 0) acc.add(rows_[pivot_row_[c]], -x);
    return acc.take();
  }

  // Returns true if v was independent of the rows so far.
  bool insert(const SparseVec<F>& v) {
    SparseVec<F> r = reduce(v);
    if (r.empty()) return false;
    F lead_inv = r.e.front().second.inverse();
    if (!lead_inv.is_one())
      for (auto& [c, x] : r.e) x *= lead_inv;
    int p = r.e.front().first;
    for (auto& row : rows_) {
      F x = row.at(p);
      if (!x.is_zero()) row = combine(row, F(1), r, -x);
    }
    pivot_row_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

 private:
  Accumulator<F>& scratch() const {
    if (acc_.size() != ncols_) acc_.resize(ncols_);
    return acc_;
  }

  int ncols_;
  std::vector<int> pivot_row_;
  std::vector<SparseVec<F>> rows_;
  mutable Accumulator<F> acc_;
};

// Rank of a matrix via column echelon of its columns.
template <class F>
int rank(const SparseMat<F>& a) {
  RowEchelon<F> ech(a.rows);
  int r = 0;
  for (const auto& c : a.col)
    if (ech.insert(c)) ++r;
  return r;
}

// Solves a * x = b for square invertible a; throws if singular.
template <class F>
SparseMat<F> inverse(const SparseMat<F>& a) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse: not square");
  int n = a.rows;
  // Gauss-Jordan on the dense augmented matrix [a | I].
  std::vector<std::vector<F>> m(n, std::vector<F>(2 * n, F(0)));
  for (int j = 0; j < n; ++j) {
    for (const auto& [i, x] : a.col[j].e) m[i][j] = x;
    m[j][n + j] = F(1);
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!m[r][c].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) throw std::domain_error("inverse: singular matrix");
    std::swap(m[p], m[c]);
    F inv = m[c][c].inverse();
    for (auto& x : m[c]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      F f = m[r][c];
      for (int k = c; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  SparseMat<F> out(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!m[i][n + j].is_zero()) out.col[j].e.emplace_back(i, m[i][n + j]);
  return out;
}

}  // namespace arc2rep
