// Graded vector spaces, homogeneous linear maps and graded quotients.
#pragma once

#include "arc2rep/laurent.hpp"
#include "arc2rep/linalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace arc2rep {

// A finite-dimensional graded space given by an ordered basis with one degree
// per basis vector, plus a global shift applied to every degree.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<int> degrees, int shift = 0, std::vector<std::string> labels = {})
      : deg_(std::move(degrees)), labels_(std::move(labels)), shift_(shift) {
    if (!labels_.empty() && labels_.size() != deg_.size())
      throw std::invalid_argument("GradedSpace: label count differs from dimension");
  }

  int dim() const { return static_cast<int>(deg_.size()); }
  int shift() const { return shift_; }
  // Degree of basis vector i with the shift applied.
  int degree(int i) const { return deg_[i] + shift_; }
  int unshifted_degree(int i) const { return deg_[i]; }
  const std::vector<int>& unshifted_degrees() const { return deg_; }
  std::string label(int i) const { return labels_.empty() ? std::to_string(i) : labels_[i]; }
  bool has_labels() const { return !labels_.empty(); }

  GradedSpace shifted(int s) const { return GradedSpace(deg_, shift_ + s, labels_); }

  // Dimension per shifted degree.
  std::map<int, int> dims_by_degree() const {
    std::map<int, int> m;
    for (int d : deg_) ++m[d + shift_];
    return m;
  }

  // Two spaces are compatible when their shifted degree sequences agree.
  friend bool same_grading(const GradedSpace& a, const GradedSpace& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
      if (a.degree(i) != b.degree(i)) return false;
    return true;
  }

 private:
  std::vector<int> deg_;
  std::vector<std::string> labels_;
  int shift_ = 0;
};

inline Laurent graded_dim(const GradedSpace& v) {
  Laurent p;
  for (int i = 0; i < v.dim(); ++i) p.add_term(v.degree(i), 1);
  return p;
}

// A linear map of a fixed degree between graded spaces.
template <class F>
struct GradedMap {
  GradedSpace source;
  GradedSpace target;
  int degree = 0;
  SparseMat<F> mat;

  GradedMap() = default;
  GradedMap(GradedSpace s, GradedSpace t, int d, SparseMat<F> m)
      : source(std::move(s)), target(std::move(t)), degree(d), mat(std::move(m)) {
    if (mat.rows != target.dim() || mat.cols != source.dim())
      throw std::invalid_argument("GradedMap: matrix shape does not match spaces");
  }

  static GradedMap zero(GradedSpace s, GradedSpace t, int d) {
    int r = t.dim(), c = s.dim();
    return GradedMap(std::move(s), std::move(t), d, SparseMat<F>(r, c));
  }
  static GradedMap identity(const GradedSpace& s) {
    return GradedMap(s, s, 0, SparseMat<F>::identity(s.dim()));
  }

  bool is_zero() const { return mat.is_zero(); }

  // Every nonzero entry (r, c) satisfies deg target(r) - deg source(c) = degree.
  bool is_homogeneous() const { return first_inhomogeneous_entry() < 0; }

  // Returns the column of the first entry violating homogeneity, or -1.
  int first_inhomogeneous_entry() const {
    for (int c = 0; c < mat.cols; ++c)
      for (const auto& [r, x] : mat.col[c].e)
        if (target.degree(r) - source.degree(c) != degree) return c;
    return -1;
  }

  // The set of degrees actually realized by nonzero entries.
  std::map<int, int> realized_degrees() const {
    std::map<int, int> m;
    for (int c = 0; c < mat.cols; ++c)
      for (const auto& [r, x] : mat.col[c].e) ++m[target.degree(r) - source.degree(c)];
    return m;
  }
};

template <class F>
GradedMap<F> compose(const GradedMap<F>& g, const GradedMap<F>& f) {
  if (!same_grading(g.source, f.target)) throw std::invalid_argument("compose: target/source mismatch");
  return GradedMap<F>(f.source, g.target, f.degree + g.degree, multiply(g.mat, f.mat));
}

template <class F>
void require_comparable(const GradedMap<F>& f, const GradedMap<F>& g) {
  if (!same_grading(f.source, g.source)) throw std::invalid_argument("map_equal: sources differ");
  if (!same_grading(f.target, g.target)) throw std::invalid_argument("map_equal: targets differ");
  if (f.degree != g.degree) throw std::invalid_argument("map_equal: degrees differ");
}

// Exact equality; mismatched source, target or degree is an error, not "false".
template <class F>
bool map_equal(const GradedMap<F>& f, const GradedMap<F>& g) {
  require_comparable(f, g);
  return f.mat == g.mat;
}

template <class F>
GradedMap<F> add(const GradedMap<F>& f, const GradedMap<F>& g, const F& cf = F(1), const F& cg = F(1)) {
  require_comparable(f, g);
  return GradedMap<F>(f.source, f.target, f.degree, linear_combination(f.mat, cf, g.mat, cg));
}

template <class F>
struct Quotient {
  GradedSpace space;
  GradedMap<F> project;
  GradedMap<F> section;
  std::vector<int> kept;  // ambient index of each quotient basis vector
};

// Quotient of the ambient space by the span of homogeneous relation vectors.
// Pivots are taken left to right in ambient order; the quotient basis is the
// image of the non-pivot ambient basis vectors, in ambient order.
template <class F>
Quotient<F> quotient_with_section(const GradedSpace& ambient, const std::vector<SparseVec<F>>& relations) {
  int n = ambient.dim();
  RowEchelon<F> ech(n);
  for (const auto& r : relations) {
    if (r.empty()) continue;
    int d = ambient.degree(r.e.front().first);
    for (const auto& [i, x] : r.e) {
      if (i < 0 || i >= n) throw std::out_of_range("quotient_with_section: relation index out of range");
      if (ambient.degree(i) != d) throw std::invalid_argument("quotient_with_section: non-homogeneous relation");
    }
    ech.insert(r);
  }
  Quotient<F> q;
  std::vector<int> pos(n, -1);
  std::vector<int> degs;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    if (ech.is_pivot(i)) continue;
    pos[i] = static_cast<int>(q.kept.size());
    q.kept.push_back(i);
    degs.push_back(ambient.unshifted_degree(i));
    if (ambient.has_labels()) labels.push_back(ambient.label(i));
  }
  q.space = GradedSpace(degs, ambient.shift(), labels);
  int m = q.space.dim();
  SparseMat<F> proj(m, n), sec(n, m);
  for (int i = 0; i < n; ++i) {
    if (pos[i] >= 0) {
      proj.col[i] = SparseVec<F>::unit(pos[i]);
      sec.col[pos[i]] = SparseVec<F>::unit(i);
    } else {
      // e_i = -(sum of the non-pivot entries of its row) modulo relations.
      for (const auto& [c, x] : ech.row_for_pivot(i).e)
        if (c != i) proj.col[i].e.emplace_back(pos[c], -x);
    }
  }
  q.project = GradedMap<F>(ambient, q.space, 0, std::move(proj));
  q.section = GradedMap<F>(q.space, ambient, 0, std::move(sec));
  return q;
}

}  // namespace arc2rep
