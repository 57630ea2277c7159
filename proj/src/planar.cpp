#include "arc2rep/planar.hpp"

#include "arc2rep/union_find.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace arc2rep {

namespace {

// True if no two chords (a,b), (c,d) interleave as a < c < b < d.
bool noncrossing(const std::vector<int>& partner) {
  int n = static_cast<int>(partner.size());
  for (int a = 0; a < n; ++a) {
    int b = partner[a];
    if (b <= a) continue;
    for (int c = a + 1; c < b; ++c) {
      int d = partner[c];
      if (d > b || d < a) return false;
    }
  }
  return true;
}

void check_involution(const std::vector<int>& partner, const char* what) {
  int n = static_cast<int>(partner.size());
  for (int j = 0; j < n; ++j) {
    int q = partner[j];
    if (q < 0 || q >= n || q == j || partner[q] != j)
      throw std::invalid_argument(std::string(what) + ": pairing is not a fixed-point-free involution");
  }
}

}  // namespace

Matching::Matching(std::vector<int> p) : partner(std::move(p)) {
  check_involution(partner, "Matching");
  if (!noncrossing(partner)) throw std::invalid_argument("Matching: arcs cross");
}

std::string Matching::str() const {
  std::string s = "[";
  for (int j = 0; j < points(); ++j)
    if (partner[j] > j) s += "(" + std::to_string(j) + "," + std::to_string(partner[j]) + ")";
  return s + "]";
}

std::vector<Matching> enumerate_matchings(int r) {
  std::vector<Matching> out;
  if (r < 0) return out;
  std::vector<int> cur(2 * r, -1);
  // Fills the interval [lo, hi) and then continues with the remaining intervals.
  std::function<void(std::vector<std::pair<int, int>>&)> rec = [&](std::vector<std::pair<int, int>>& todo) {
    while (!todo.empty() && todo.back().first >= todo.back().second) todo.pop_back();
    if (todo.empty()) {
      out.emplace_back(cur);
      return;
    }
    auto [lo, hi] = todo.back();
    todo.pop_back();
    for (int j = lo + 1; j < hi; j += 2) {
      cur[lo] = j;
      cur[j] = lo;
      auto next = todo;
      next.emplace_back(j + 1, hi);
      next.emplace_back(lo + 1, j);
      rec(next);
    }
    cur[lo] = -1;
    todo.emplace_back(lo, hi);
  };
  std::vector<std::pair<int, int>> todo{{0, 2 * r}};
  rec(todo);
  return out;
}

long long catalan(int r) {
  // binom(2r, r) / (r + 1), built incrementally to stay exact.
  long long c = 1;
  for (int j = 0; j < r; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
  return c;
}

FlatTangle::FlatTangle(int bottom, int top, std::vector<int> p, int closed)
    : nb(bottom), nt(top), partner(std::move(p)), circles(closed) {
  if (nb < 0 || nt < 0 || static_cast<int>(partner.size()) != nb + nt || closed < 0)
    throw std::invalid_argument("FlatTangle: inconsistent sizes");
  check_involution(partner, "FlatTangle");
  // Walk the boundary: bottom left to right, then top right to left.
  std::vector<int> pos(nb + nt);
  for (int j = 0; j < nb; ++j) pos[j] = j;
  for (int j = 0; j < nt; ++j) pos[nb + j] = nb + (nt - 1 - j);
  std::vector<int> cyc(nb + nt);
  for (int j = 0; j < nb + nt; ++j) cyc[pos[j]] = pos[partner[j]];
  if (!noncrossing(cyc)) throw std::invalid_argument("FlatTangle: pairing is not planar");
}

FlatTangle FlatTangle::identity(int m) {
  std::vector<int> p(2 * m);
  for (int j = 0; j < m; ++j) {
    p[j] = m + j;
    p[m + j] = j;
  }
  return FlatTangle(m, m, p, 0);
}

int FlatTangle::through_strands() const {
  int t = 0;
  for (int j = 0; j < nb; ++j)
    if (partner[j] >= nb) ++t;
  return t;
}

std::string FlatTangle::str() const {
  std::string s = std::to_string(nb) + "->" + std::to_string(nt) + " [";
  for (int j = 0; j < nb + nt; ++j)
    if (partner[j] > j) s += "(" + std::to_string(j) + "," + std::to_string(partner[j]) + ")";
  return s + "] circles=" + std::to_string(circles);
}

FlatTangle as_tangle(const Matching& m) {
  return FlatTangle(0, m.points(), m.partner, 0);
}

FlatTangle reflect(const FlatTangle& t) {
  int n = t.nb + t.nt;
  auto flip = [&](int j) { return j < t.nb ? t.nt + j : j - t.nb; };
  std::vector<int> p(n);
  for (int j = 0; j < n; ++j) p[flip(j)] = flip(t.partner[j]);
  return FlatTangle(t.nt, t.nb, p, t.circles);
}

FlatTangle glue(const FlatTangle& upper, const FlatTangle& lower) {
  if (lower.nt != upper.nb) throw std::invalid_argument("glue: boundary mismatch");
  // Nodes: lower points first, then upper points; lower top j is upper bottom j.
  int nl = lower.nb + lower.nt;
  int nu = upper.nb + upper.nt;
  UnionFind uf(nl + nu);
  for (int j = 0; j < nl; ++j) uf.unite(j, lower.partner[j]);
  for (int j = 0; j < nu; ++j) uf.unite(nl + j, nl + upper.partner[j]);
  for (int j = 0; j < lower.nt; ++j) uf.unite(lower.nb + j, nl + j);
  int nb = lower.nb, nt = upper.nt;
  auto outer = [&](int j) { return j < nb ? j : nl + upper.nb + (j - nb); };
  std::vector<int> p(nb + nt, -1);
  std::vector<int> first(nl + nu, -1);
  for (int j = 0; j < nb + nt; ++j) {
    int root = uf.find(outer(j));
    if (first[root] < 0) {
      first[root] = j;
    } else {
      p[j] = first[root];
      p[first[root]] = j;
    }
  }
  int fresh = 0;
  std::vector<char> seen(nl + nu, 0);
  for (int j = 0; j < nb + nt; ++j) seen[uf.find(outer(j))] = 1;
  for (int j = 0; j < lower.nt; ++j) {
    int root = uf.find(lower.nb + j);
    if (!seen[root]) {
      seen[root] = 1;
      ++fresh;
    }
  }
  return FlatTangle(nb, nt, p, lower.circles + upper.circles + fresh);
}

CirclePartition close(const Matching& a, const FlatTangle& t, const Matching& b) {
  if (a.points() != t.nt || b.points() != t.nb) throw std::invalid_argument("close: size mismatch");
  int n = t.nb + t.nt;
  UnionFind uf(n);
  for (int j = 0; j < n; ++j) uf.unite(j, t.partner[j]);
  for (int j = 0; j < t.nb; ++j) uf.unite(j, b.partner[j]);
  for (int j = 0; j < t.nt; ++j) uf.unite(t.nb + j, t.nb + a.partner[j]);
  CirclePartition cp;
  cp.circle_of_point.assign(n, -1);
  std::vector<int> name(n, -1);
  for (int j = 0; j < n; ++j) {
    int root = uf.find(j);
    if (name[root] < 0) name[root] = cp.count++;
    cp.circle_of_point[j] = name[root];
  }
  cp.count += t.circles;
  return cp;
}

std::string Layer::str() const {
  switch (kind) {
    case Cap: return "Cap(" + std::to_string(p) + ")@" + std::to_string(m);
    case Cup: return "Cup(" + std::to_string(p) + ")@" + std::to_string(m);
    default: return "Id" + (p >= 0 ? "[" + std::to_string(p) + "]" : std::string()) + "@" + std::to_string(m);
  }
}

std::vector<Layer> cup_layers(const Matching& m, bool rightmost) {
  std::vector<int> live(m.points());
  for (int j = 0; j < m.points(); ++j) live[j] = j;
  std::vector<int> removed;  // list positions at removal time
  while (!live.empty()) {
    int found = -1;
    for (int t = 0; t + 1 < static_cast<int>(live.size()); ++t) {
      if (m.partner[live[t]] == live[t + 1]) {
        found = t;
        if (!rightmost) break;
      }
    }
    if (found < 0) throw std::logic_error("cup_layers: no innermost arc");
    removed.push_back(found);
    live.erase(live.begin() + found, live.begin() + found + 2);
  }
  std::vector<Layer> out;
  int cur = 0;
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    out.push_back(Layer{Layer::Cup, cur, *it});
    cur += 2;
  }
  return out;
}

std::vector<Layer> cap_layers(const Matching& m, bool rightmost) {
  std::vector<Layer> cups = cup_layers(m, rightmost);
  std::vector<Layer> out;
  for (auto it = cups.rbegin(); it != cups.rend(); ++it) out.push_back(Layer{Layer::Cap, it->m + 2, it->p});
  return out;
}

FlatTangle tangle_of_layers(const std::vector<Layer>& layers, int m0) {
  std::vector<int> offset{0};
  std::vector<int> m{m0};
  for (const auto& l : layers) {
    if (l.m != m.back()) throw std::invalid_argument("tangle_of_layers: layer size mismatch");
    offset.push_back(offset.back() + m.back());
    m.push_back(l.top());
  }
  int total = offset.back() + m.back();
  UnionFind uf(total);
  for (std::size_t s = 0; s < layers.size(); ++s) {
    const Layer& l = layers[s];
    int lo = offset[s], hi = offset[s + 1];
    for (int j = 0; j < l.m; ++j) {
      if (l.kind == Layer::Id) {
        uf.unite(lo + j, hi + j);
      } else if (l.kind == Layer::Cap) {
        if (j == l.p) uf.unite(lo + j, lo + j + 1);
        else if (j < l.p) uf.unite(lo + j, hi + j);
        else if (j > l.p + 1) uf.unite(lo + j, hi + j - 2);
      } else {
        uf.unite(lo + j, hi + (j < l.p ? j : j + 2));
      }
    }
    if (l.kind == Layer::Cup) uf.unite(hi + l.p, hi + l.p + 1);
  }
  int nb = m.front(), nt = m.back();
  auto node = [&](int j) { return j < nb ? j : offset.back() + (j - nb); };
  std::vector<int> p(nb + nt, -1);
  std::vector<int> first(total, -1);
  std::vector<char> boundary(total, 0);
  for (int j = 0; j < nb + nt; ++j) {
    int root = uf.find(node(j));
    boundary[root] = 1;
    if (first[root] < 0) {
      first[root] = j;
    } else {
      p[j] = first[root];
      p[first[root]] = j;
    }
  }
  int closed = 0;
  std::vector<char> seen(total, 0);
  for (int v = 0; v < total; ++v) {
    int root = uf.find(v);
    if (!boundary[root] && !seen[root]) {
      seen[root] = 1;
      ++closed;
    }
  }
  return FlatTangle(nb, nt, p, closed);
}

std::vector<int> active_positions(const Weight& lam) {
  std::vector<int> out;
  for (int j = 1; j <= lam.n(); ++j)
    if (lam.at(j) == 1) out.push_back(j);
  return out;
}

std::optional<DecoratedTangle> generator_tangle(int i, const Weight& lam) {
  auto top = apply_root(lam, i);
  if (!top) return std::nullopt;
  int a = iabs(i);
  int x = i > 0 ? lam.at(a) : lam.at(a + 1);
  int y = i > 0 ? lam.at(a + 1) : lam.at(a);
  int p = 0;
  for (int j = 1; j < a; ++j)
    if (lam.at(j) == 1) ++p;
  int m = 2 * lam.gamma();
  DecoratedTangle d;
  d.bottom = lam;
  d.top = *top;
  if (x == 1 && y == 2) {
    d.layer = Layer{Layer::Id, m, p};
    d.shape = 'D';
  } else if (x == 0 && y == 1) {
    d.layer = Layer{Layer::Id, m, p};
    d.shape = 'd';
  } else if (x == 1 && y == 1) {
    d.layer = Layer{Layer::Cap, m, p};
    d.shape = 'T';
  } else if (x == 0 && y == 2) {
    d.layer = Layer{Layer::Cup, m, p};
    d.shape = 't';
  } else {
    return std::nullopt;
  }
  d.tangle = tangle_of_layers({d.layer}, m);
  d.bottom_positions = active_positions(lam);
  d.top_positions = active_positions(*top);
  return d;
}

}  // namespace arc2rep
