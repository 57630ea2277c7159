// Crossingless matchings, flat tangles and their gluing, and the layered
// diagrams used to build every closed picture in the arc backend.
#pragma once

#include "arc2rep/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arc2rep {

// A noncrossing perfect matching of 2r points on a line, 0-indexed.
struct Matching {
  std::vector<int> partner;

  Matching() = default;
  explicit Matching(std::vector<int> p);  // validates involution and planarity

  int r() const { return static_cast<int>(partner.size()) / 2; }
  int points() const { return static_cast<int>(partner.size()); }
  std::string str() const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.partner == b.partner; }
  friend bool operator!=(const Matching& a, const Matching& b) { return !(a == b); }
  friend bool operator<(const Matching& a, const Matching& b) { return a.partner < b.partner; }
};

// All matchings of 2r points. Point 0 is paired with 1, 3, 5, ... in turn, so
// for r = 2 the side-by-side matching comes before the nested one.
std::vector<Matching> enumerate_matchings(int r);

// (2r)! / (r! r! (r+1)) computed with exact integer arithmetic.
long long catalan(int r);

// Planar pairing of the boundary of a rectangle. Points 0..nb-1 are the bottom
// row left to right, points nb..nb+nt-1 the top row left to right.
struct FlatTangle {
  int nb = 0;
  int nt = 0;
  std::vector<int> partner;
  int circles = 0;

  FlatTangle() = default;
  FlatTangle(int bottom, int top, std::vector<int> p, int closed = 0);  // validates planarity

  static FlatTangle identity(int m);
  int bottom_index(int j) const { return j; }
  int top_index(int j) const { return nb + j; }
  int through_strands() const;
  std::string str() const;

  friend bool operator==(const FlatTangle& a, const FlatTangle& b) {
    return a.nb == b.nb && a.nt == b.nt && a.partner == b.partner && a.circles == b.circles;
  }
};

// The matching drawn as a tangle from 0 points to 2r points (a cup diagram).
FlatTangle as_tangle(const Matching& m);

// Mirror image in a horizontal line: bottom and top rows swap.
FlatTangle reflect(const FlatTangle& t);

// upper stacked on lower; lower.nt must equal upper.nb.
FlatTangle glue(const FlatTangle& upper, const FlatTangle& lower);

// Circles of R(a) o T o b. circle_of_point is indexed like T's points; circles
// are numbered by their smallest point, and closed circles of T come last.
struct CirclePartition {
  int count = 0;
  std::vector<int> circle_of_point;
};
CirclePartition close(const Matching& a, const FlatTangle& t, const Matching& b);

// One horizontal slice of a layered diagram.
struct Layer {
  enum Kind { Id, Cap, Cup };
  Kind kind = Id;
  int m = 0;   // points on the lower level
  int p = -1;  // Cap/Cup: left point of the arc; Id: marked strand or -1

  int top() const { return kind == Id ? m : (kind == Cap ? m - 2 : m + 2); }
  std::string str() const;

  friend bool operator==(const Layer& a, const Layer& b) {
    return a.kind == b.kind && a.m == b.m && a.p == b.p;
  }
};

// Layers building the cup diagram of m from the empty level. The default
// decomposition removes the leftmost innermost arc first; the alternative
// removes the rightmost one first.
std::vector<Layer> cup_layers(const Matching& m, bool rightmost = false);
// The reflected diagram as caps closing 2r points to the empty level.
std::vector<Layer> cap_layers(const Matching& m, bool rightmost = false);

// The flat tangle swept out by a stack of layers, listed bottom to top.
FlatTangle tangle_of_layers(const std::vector<Layer>& layers, int m0);

// The decorated tangle of the generator E_i at bottom weight lambda.
struct DecoratedTangle {
  Weight bottom;
  Weight top;
  Layer layer;     // the tangle on active points as a single layer
  FlatTangle tangle;
  std::vector<int> bottom_positions;  // 1-indexed sl(n) positions of active points
  std::vector<int> top_positions;
  char shape = 'I';  // 'D' relabel, 'd' the other relabel, 'T' cap, 't' cup
};

std::optional<DecoratedTangle> generator_tangle(int i, const Weight& lam);

// Positions (1-indexed) with label 1.
std::vector<int> active_positions(const Weight& lam);

}  // namespace arc2rep
