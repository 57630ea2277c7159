// The Frobenius algebra A = k[x]/(x^2), its TQFT on circle configurations, a
// cobordism engine for layered closed diagrams, and the arc algebras H^r.
#pragma once

#include "arc2rep/errors.hpp"
#include "arc2rep/graded.hpp"
#include "arc2rep/planar.hpp"
#include "arc2rep/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace arc2rep {

// Circle labels: 0 is the unit 1 (degree -1), 1 is x (degree +1).
using Label = std::uint8_t;
constexpr Label kOne = 0;
constexpr Label kX = 1;

namespace frob {
inline int degree(Label a) { return a == kX ? 1 : -1; }
// m(a, b), or nullopt for x * x = 0.
std::optional<Label> mult(Label a, Label b);
// Delta(1) = x(x)1 + 1(x)x, Delta(x) = x(x)x.
std::vector<std::pair<Label, Label>> comult(Label a);
inline Label unit() { return kOne; }
// Tr(x) = 1, Tr(1) = 0.
inline int trace(Label a) { return a == kX ? 1 : 0; }
// kappa(x) = 1, kappa(1) = 0 (kappa(1) is the zero vector).
inline std::optional<Label> kappa(Label a) { return a == kX ? std::optional<Label>(kOne) : std::nullopt; }
// Multiplication by x.
inline std::optional<Label> dot(Label a) { return a == kOne ? std::optional<Label>(kX) : std::nullopt; }
}  // namespace frob

struct CircleState {
  std::vector<Label> labels;
  int degree() const;
  friend bool operator==(const CircleState& a, const CircleState& b) { return a.labels == b.labels; }
  friend bool operator<(const CircleState& a, const CircleState& b) { return a.labels < b.labels; }
};

struct ElementaryOp {
  enum Kind { Dot, Merge, Split, Birth, Death, Kappa };
  Kind kind;
  int c1 = -1;
  int c2 = -1;
};

// Integer combination of circle states. Merge keeps the merged circle at the
// smaller index; Split and Birth append the new circle at the end.
std::vector<std::pair<CircleState, long long>> tqft_elementary(const ElementaryOp& op, const CircleState& s);

using Mask = std::uint64_t;
// An F2 combination of labelings: a sorted list of distinct masks.
using MaskVec = std::vector<Mask>;
// Sorts and cancels repeated masks in pairs.
void normalize_f2(MaskVec& v);

inline int mask_degree(Mask m, int ncomp) { return 2 * __builtin_popcountll(m) - ncomp; }

// A stack of layers from the empty level back to the empty level. Its
// components are numbered by their smallest node, nodes ordered by level and
// then by position.
class ClosedDiagram {
 public:
  ClosedDiagram() = default;
  explicit ClosedDiagram(std::vector<Layer> layers);

  const std::vector<Layer>& layers() const { return layers_; }
  int levels() const { return static_cast<int>(m_.size()); }
  int points(int level) const { return m_[level]; }
  int ncomp() const { return ncomp_; }
  int node(int level, int idx) const { return offset_[level] + idx; }
  int comp_at(int level, int idx) const { return comp_[node(level, idx)]; }

 private:
  std::vector<Layer> layers_;
  std::vector<int> m_;
  std::vector<int> offset_;
  std::vector<int> comp_;
  int ncomp_ = 0;
};

// Decorations applied after a region replacement, addressed by a node of the
// target diagram given relative to the region start.
struct ExtraOp {
  enum Kind { Dot, Kappa };
  Kind kind;
  int level;  // relative to the region's lower boundary level
  int idx;
};

// Replace layers [start, start + len) by repl, then apply extras.
struct RegionOp {
  int start = 0;
  int len = 0;
  std::vector<Layer> repl;
  std::vector<ExtraOp> extras;
};

// The linear map induced on labelings by a cobordism, decomposed into
// connected pieces of the identification graph between old and new circles.
class Cobordism {
 public:
  struct Piece {
    enum Kind { Copy, Merge, Split, Birth, Death };
    Kind kind;
    int s0 = -1, s1 = -1;
    int t0 = -1, t1 = -1;
  };

  Cobordism() = default;
  Cobordism(int src_ncomp, int tgt_ncomp, std::vector<Piece> pieces,
            std::vector<std::pair<ExtraOp::Kind, int>> extras);

  int src_ncomp() const { return src_; }
  int tgt_ncomp() const { return tgt_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  // Number of pieces that are not plain copies.
  int events() const;

  void apply(Mask in, MaskVec& out) const;  // appends; caller normalizes
  MaskVec apply(Mask in) const;

 private:
  int src_ = 0;
  int tgt_ = 0;
  std::vector<Piece> pieces_;
  std::vector<std::pair<ExtraOp::Kind, int>> extras_;
};

// Builds the target diagram of op and the induced cobordism map. Throws if the
// replacement is not a single elementary move (at most one merge, split,
// birth or death).
Cobordism region_cobordism(const ClosedDiagram& src, const RegionOp& op, ClosedDiagram* tgt_out);

// Stacks `upper` on `lower` where lower ends with the caps of a matching on 2r
// points and upper starts with the cups of the same matching, then contracts
// the middle by r saddles taken from the innermost pair outwards.
class Contraction {
 public:
  Contraction(const std::vector<Layer>& lower, const std::vector<Layer>& upper, int r);

  int lower_ncomp() const { return cl_; }
  int upper_ncomp() const { return cu_; }
  const ClosedDiagram& result() const { return result_; }
  MaskVec apply(Mask lower, Mask upper) const;

 private:
  int cl_ = 0;
  int cu_ = 0;
  std::vector<Cobordism> steps_;
  ClosedDiagram result_;
};

// Layers of the closure cups(bottom) ++ middle ++ caps(top).
std::vector<Layer> closure_layers(const Matching& top, const std::vector<Layer>& middle, const Matching& bottom,
                                  bool alt_top = false, bool alt_bottom = false);

// The arc algebra H^r with basis (top matching, bottom matching, labeling).
class ArcAlgebra {
 public:
  struct Basis {
    int top;
    int bottom;
    Mask mask;
  };
  struct Block {
    int top;
    int bottom;
    int ncomp;
    int offset;
  };

  explicit ArcAlgebra(int r, int capacity = 6);

  int r() const { return r_; }
  int dim() const { return dim_; }
  const std::vector<Matching>& matchings() const { return matchings_; }
  const Block& block(int top, int bottom) const { return blocks_[top * nm() + bottom]; }
  int nm() const { return static_cast<int>(matchings_.size()); }
  int index(int top, int bottom, Mask mask) const { return block(top, bottom).offset + static_cast<int>(mask); }
  Basis basis(int i) const;
  int idempotent(int a) const { return index(a, a, 0); }
  // Shifted grading: unshifted TQFT degree plus the shift r.
  const GradedSpace& space() const { return space_; }
  std::string basis_label(int i) const;

  // Product of basis elements u * v (u on top of v); alt selects the
  // alternative decomposition of the middle matching.
  SparseVec<F2> multiply_basis(int u, int v, bool alt = false) const;
  SparseVec<F2> multiply(const SparseVec<F2>& u, const SparseVec<F2>& v) const;
  SparseVec<F2> unit() const;

 private:
  const Contraction& contraction(int t1, int mid, int s2, bool alt) const;

  int r_;
  int dim_ = 0;
  std::vector<Matching> matchings_;
  std::vector<Block> blocks_;
  std::vector<Basis> basis_;
  GradedSpace space_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<int, int, int, bool>, std::unique_ptr<Contraction>> cache_;
  mutable std::map<std::tuple<int, int, int>, std::unique_ptr<std::vector<Cobordism>>> alt_cache_;
};

// Shared instance per r, built on first use.
const ArcAlgebra& arc_algebra(int r);

}  // namespace arc2rep
