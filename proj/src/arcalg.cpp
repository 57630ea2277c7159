#include "arc2rep/arcalg.hpp"

#include "arc2rep/union_find.hpp"

#include <algorithm>
#include <stdexcept>

namespace arc2rep {

namespace frob {

std::optional<Label> mult(Label a, Label b) {
  if (a == kX && b == kX) return std::nullopt;
  return (a == kX || b == kX) ? kX : kOne;
}

std::vector<std::pair<Label, Label>> comult(Label a) {
  if (a == kX) return {{kX, kX}};
  return {{kX, kOne}, {kOne, kX}};
}

}  // namespace frob

int CircleState::degree() const {
  int d = 0;
  for (Label a : labels) d += frob::degree(a);
  return d;
}

std::vector<std::pair<CircleState, long long>> tqft_elementary(const ElementaryOp& op, const CircleState& s) {
  int n = static_cast<int>(s.labels.size());
  auto need = [&](int c) {
    if (c < 0 || c >= n) throw std::out_of_range("tqft_elementary: no circle with index " + std::to_string(c));
  };
  std::vector<std::pair<CircleState, long long>> out;
  switch (op.kind) {
    case ElementaryOp::Dot:
    case ElementaryOp::Kappa: {
      need(op.c1);
      auto r = op.kind == ElementaryOp::Dot ? frob::dot(s.labels[op.c1]) : frob::kappa(s.labels[op.c1]);
      if (r) {
        CircleState t = s;
        t.labels[op.c1] = *r;
        out.emplace_back(t, 1);
      }
      break;
    }
    case ElementaryOp::Merge: {
      need(op.c1);
      need(op.c2);
      if (op.c1 == op.c2) throw std::invalid_argument("tqft_elementary: merge of a circle with itself");
      auto r = frob::mult(s.labels[op.c1], s.labels[op.c2]);
      if (r) {
        int keep = std::min(op.c1, op.c2), drop = std::max(op.c1, op.c2);
        CircleState t = s;
        t.labels[keep] = *r;
        t.labels.erase(t.labels.begin() + drop);
        out.emplace_back(t, 1);
      }
      break;
    }
    case ElementaryOp::Split: {
      need(op.c1);
      for (auto [a, b] : frob::comult(s.labels[op.c1])) {
        CircleState t = s;
        t.labels[op.c1] = a;
        t.labels.push_back(b);
        out.emplace_back(t, 1);
      }
      break;
    }
    case ElementaryOp::Birth: {
      CircleState t = s;
      t.labels.push_back(frob::unit());
      out.emplace_back(t, 1);
      break;
    }
    case ElementaryOp::Death: {
      need(op.c1);
      int c = frob::trace(s.labels[op.c1]);
      if (c) {
        CircleState t = s;
        t.labels.erase(t.labels.begin() + op.c1);
        out.emplace_back(t, c);
      }
      break;
    }
  }
  return out;
}

void normalize_f2(MaskVec& v) {
  std::sort(v.begin(), v.end());
  MaskVec out;
  out.reserve(v.size());
  for (std::size_t j = 0; j < v.size();) {
    std::size_t k = j;
    while (k < v.size() && v[k] == v[j]) ++k;
    if ((k - j) % 2 == 1) out.push_back(v[j]);
    j = k;
  }
  v.swap(out);
}

ClosedDiagram::ClosedDiagram(std::vector<Layer> layers) : layers_(std::move(layers)) {
  m_.push_back(0);
  offset_.push_back(0);
  for (const auto& l : layers_) {
    if (l.m != m_.back()) throw std::invalid_argument("ClosedDiagram: layer size mismatch at " + l.str());
    if (l.kind != Layer::Id && (l.p < 0 || (l.kind == Layer::Cap && l.p + 1 >= l.m) || (l.kind == Layer::Cup && l.p > l.m)))
      throw std::invalid_argument("ClosedDiagram: arc position out of range at " + l.str());
    offset_.push_back(offset_.back() + m_.back());
    m_.push_back(l.top());
  }
  if (m_.back() != 0) throw std::invalid_argument("ClosedDiagram: diagram is not closed");
  int total = offset_.back();
  UnionFind uf(total);
  for (std::size_t s = 0; s < layers_.size(); ++s) {
    const Layer& l = layers_[s];
    int lo = offset_[s], hi = offset_[s + 1];
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
  comp_.assign(total, -1);
  std::vector<int> name(total, -1);
  for (int v = 0; v < total; ++v) {
    int root = uf.find(v);
    if (name[root] < 0) name[root] = ncomp_++;
    comp_[v] = name[root];
  }
}

Cobordism::Cobordism(int src_ncomp, int tgt_ncomp, std::vector<Piece> pieces,
                     std::vector<std::pair<ExtraOp::Kind, int>> extras)
    : src_(src_ncomp), tgt_(tgt_ncomp), pieces_(std::move(pieces)), extras_(std::move(extras)) {}

int Cobordism::events() const {
  int e = 0;
  for (const auto& p : pieces_)
    if (p.kind != Piece::Copy) ++e;
  return e;
}

void Cobordism::apply(Mask in, MaskVec& out) const {
  MaskVec cur{0};
  auto bit = [&](int c) { return static_cast<Label>((in >> c) & 1); };
  for (const auto& p : pieces_) {
    switch (p.kind) {
      case Piece::Copy:
        if (bit(p.s0))
          for (auto& m : cur) m |= Mask(1) << p.t0;
        break;
      case Piece::Merge: {
        auto r = frob::mult(bit(p.s0), bit(p.s1));
        if (!r) return;
        if (*r == kX)
          for (auto& m : cur) m |= Mask(1) << p.t0;
        break;
      }
      case Piece::Split: {
        MaskVec nxt;
        for (auto m : cur)
          for (auto [a, b] : frob::comult(bit(p.s0)))
            nxt.push_back(m | (Mask(a) << p.t0) | (Mask(b) << p.t1));
        cur.swap(nxt);
        break;
      }
      case Piece::Birth:
        break;
      case Piece::Death:
        if (!frob::trace(bit(p.s0))) return;
        break;
    }
  }
  for (const auto& [kind, c] : extras_) {
    MaskVec nxt;
    for (auto m : cur) {
      Label a = static_cast<Label>((m >> c) & 1);
      auto r = kind == ExtraOp::Dot ? frob::dot(a) : frob::kappa(a);
      if (r) nxt.push_back((m & ~(Mask(1) << c)) | (Mask(*r) << c));
    }
    cur.swap(nxt);
  }
  out.insert(out.end(), cur.begin(), cur.end());
}

MaskVec Cobordism::apply(Mask in) const {
  MaskVec out;
  apply(in, out);
  normalize_f2(out);
  return out;
}

Cobordism region_cobordism(const ClosedDiagram& src, const RegionOp& op, ClosedDiagram* tgt_out) {
  const auto& layers = src.layers();
  if (op.start < 0 || op.len < 0 || op.start + op.len > static_cast<int>(layers.size()))
    throw std::invalid_argument("region_cobordism: region out of range");
  std::vector<Layer> nl(layers.begin(), layers.begin() + op.start);
  nl.insert(nl.end(), op.repl.begin(), op.repl.end());
  nl.insert(nl.end(), layers.begin() + op.start + op.len, layers.end());
  ClosedDiagram tgt(std::move(nl));
  int delta = static_cast<int>(op.repl.size()) - op.len;
  int S = src.ncomp(), T = tgt.ncomp();
  UnionFind uf(S + T);
  for (int l = 0; l <= op.start; ++l)
    for (int j = 0; j < src.points(l); ++j) uf.unite(src.comp_at(l, j), S + tgt.comp_at(l, j));
  for (int l = op.start + op.len; l < src.levels(); ++l)
    for (int j = 0; j < src.points(l); ++j) uf.unite(src.comp_at(l, j), S + tgt.comp_at(l + delta, j));
  std::vector<std::vector<int>> olds(S + T), news(S + T);
  for (int c = 0; c < S; ++c) olds[uf.find(c)].push_back(c);
  for (int c = 0; c < T; ++c) news[uf.find(S + c)].push_back(c);
  std::vector<Cobordism::Piece> pieces;
  int events = 0;
  for (int root = 0; root < S + T; ++root) {
    const auto& o = olds[root];
    const auto& n = news[root];
    if (o.empty() && n.empty()) continue;
    Cobordism::Piece p{};
    if (o.size() == 1 && n.size() == 1) {
      p = {Cobordism::Piece::Copy, o[0], -1, n[0], -1};
    } else if (o.size() == 2 && n.size() == 1) {
      p = {Cobordism::Piece::Merge, o[0], o[1], n[0], -1};
    } else if (o.size() == 1 && n.size() == 2) {
      p = {Cobordism::Piece::Split, o[0], -1, n[0], n[1]};
    } else if (o.empty() && n.size() == 1) {
      p = {Cobordism::Piece::Birth, -1, -1, n[0], -1};
    } else if (o.size() == 1 && n.empty()) {
      p = {Cobordism::Piece::Death, o[0], -1, -1, -1};
    } else {
      throw ConstructionError("region_cobordism: piece with " + std::to_string(o.size()) + " old and " +
                              std::to_string(n.size()) + " new circles is not elementary");
    }
    if (p.kind != Cobordism::Piece::Copy) ++events;
    pieces.push_back(p);
  }
  if (events > 1) throw ConstructionError("region_cobordism: more than one elementary event");
  std::vector<std::pair<ExtraOp::Kind, int>> extras;
  for (const auto& e : op.extras) {
    int level = op.start + e.level;
    if (level < 0 || level >= tgt.levels() || e.idx < 0 || e.idx >= tgt.points(level))
      throw std::invalid_argument("region_cobordism: decoration node out of range");
    extras.emplace_back(e.kind, tgt.comp_at(level, e.idx));
  }
  if (tgt_out) *tgt_out = tgt;
  return Cobordism(S, T, std::move(pieces), std::move(extras));
}

Contraction::Contraction(const std::vector<Layer>& lower, const std::vector<Layer>& upper, int r) {
  int J = static_cast<int>(lower.size());
  if (r > J || r > static_cast<int>(upper.size())) throw std::invalid_argument("Contraction: junction too short");
  for (int k = 1; k <= r; ++k) {
    const Layer& cap = lower[J - k];
    const Layer& cup = upper[k - 1];
    if (cap.kind != Layer::Cap || cup.kind != Layer::Cup || cap.p != cup.p || cap.m != cup.m + 2)
      throw std::invalid_argument("Contraction: junction is not a reflected matching");
  }
  cl_ = ClosedDiagram(lower).ncomp();
  cu_ = ClosedDiagram(upper).ncomp();
  std::vector<Layer> stacked = lower;
  stacked.insert(stacked.end(), upper.begin(), upper.end());
  ClosedDiagram d(std::move(stacked));
  for (int k = 1; k <= r; ++k) {
    ClosedDiagram next;
    steps_.push_back(region_cobordism(d, RegionOp{J - k, 2, {}, {}}, &next));
    d = std::move(next);
  }
  result_ = std::move(d);
}

MaskVec Contraction::apply(Mask lower, Mask upper) const {
  MaskVec cur{lower | (upper << cl_)};
  for (const auto& step : steps_) {
    MaskVec nxt;
    for (auto m : cur) step.apply(m, nxt);
    normalize_f2(nxt);
    cur.swap(nxt);
    if (cur.empty()) break;
  }
  return cur;
}

std::vector<Layer> closure_layers(const Matching& top, const std::vector<Layer>& middle, const Matching& bottom,
                                  bool alt_top, bool alt_bottom) {
  std::vector<Layer> out = cup_layers(bottom, alt_bottom);
  out.insert(out.end(), middle.begin(), middle.end());
  auto caps = cap_layers(top, alt_top);
  out.insert(out.end(), caps.begin(), caps.end());
  return out;
}

ArcAlgebra::ArcAlgebra(int r, int capacity) : r_(r) {
  if (r < 0) throw std::invalid_argument("ArcAlgebra: negative size");
  if (r > capacity)
    throw CapacityError("arc algebra H^" + std::to_string(r) + " exceeds the capacity bound " + std::to_string(capacity));
  matchings_ = enumerate_matchings(r);
  std::vector<int> degs;
  std::vector<std::string> labels;
  for (int t = 0; t < nm(); ++t) {
    for (int s = 0; s < nm(); ++s) {
      ClosedDiagram d(closure_layers(matchings_[t], {}, matchings_[s]));
      blocks_.push_back(Block{t, s, d.ncomp(), dim_});
      for (Mask m = 0; m < (Mask(1) << d.ncomp()); ++m) {
        basis_.push_back(Basis{t, s, m});
        degs.push_back(mask_degree(m, d.ncomp()));
        labels.push_back(std::to_string(t) + "," + std::to_string(s) + "," + std::to_string(m));
      }
      dim_ += 1 << d.ncomp();
    }
  }
  space_ = GradedSpace(degs, r, labels);
}

ArcAlgebra::Basis ArcAlgebra::basis(int i) const { return basis_[i]; }

std::string ArcAlgebra::basis_label(int i) const {
  const Basis& b = basis_[i];
  return matchings_[b.top].str() + "|" + matchings_[b.bottom].str() + "|" + std::to_string(b.mask);
}

const Contraction& ArcAlgebra::contraction(int t1, int mid, int s2, bool alt) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_tuple(t1, mid, s2, alt);
  auto it = cache_.find(key);
  if (it != cache_.end()) return *it->second;
  auto lower = closure_layers(matchings_[mid], {}, matchings_[s2], alt, false);
  auto upper = closure_layers(matchings_[t1], {}, matchings_[mid], false, alt);
  auto c = std::make_unique<Contraction>(lower, upper, r_);
  if (!(c->result().layers() == closure_layers(matchings_[t1], {}, matchings_[s2])))
    throw std::logic_error("ArcAlgebra: contraction did not produce the standard closure");
  if (alt) {
    auto ch = std::make_unique<std::vector<Cobordism>>();
    ClosedDiagram ls(closure_layers(matchings_[mid], {}, matchings_[s2]));
    ClosedDiagram us(closure_layers(matchings_[t1], {}, matchings_[mid]));
    int ncups = static_cast<int>(cup_layers(matchings_[s2]).size());
    ch->push_back(region_cobordism(ls, RegionOp{ncups, r_, cap_layers(matchings_[mid], true), {}}, nullptr));
    ch->push_back(region_cobordism(us, RegionOp{0, r_, cup_layers(matchings_[mid], true), {}}, nullptr));
    alt_cache_[std::make_tuple(t1, mid, s2)] = std::move(ch);
  }
  return *(cache_[key] = std::move(c));
}

SparseVec<F2> ArcAlgebra::multiply_basis(int u, int v, bool alt) const {
  const Basis& bu = basis_[u];
  const Basis& bv = basis_[v];
  SparseVec<F2> out;
  if (bu.bottom != bv.top) return out;
  const Contraction& c = contraction(bu.top, bu.bottom, bv.bottom, alt);
  MaskVec res;
  if (!alt) {
    res = c.apply(bv.mask, bu.mask);
  } else {
    const std::vector<Cobordism>* ch;
    {
      std::lock_guard<std::mutex> lock(mu_);
      ch = alt_cache_.at(std::make_tuple(bu.top, bu.bottom, bv.bottom)).get();
    }
    for (Mask ml : (*ch)[0].apply(bv.mask))
      for (Mask mu : (*ch)[1].apply(bu.mask))
        for (Mask m : c.apply(ml, mu)) res.push_back(m);
    normalize_f2(res);
  }
  int off = block(bu.top, bv.bottom).offset;
  for (Mask m : res) out.e.emplace_back(off + static_cast<int>(m), F2(1));
  return out;
}

SparseVec<F2> ArcAlgebra::multiply(const SparseVec<F2>& u, const SparseVec<F2>& v) const {
  Accumulator<F2> acc(dim_);
  for (const auto& [i, a] : u.e)
    for (const auto& [j, b] : v.e) acc.add(multiply_basis(i, j), a * b);
  return acc.take();
}

SparseVec<F2> ArcAlgebra::unit() const {
  SparseVec<F2> v;
  for (int a = 0; a < nm(); ++a) v.e.emplace_back(idempotent(a), F2(1));
  std::sort(v.e.begin(), v.e.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

const ArcAlgebra& arc_algebra(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ArcAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[r];
  if (!slot) slot = std::make_unique<ArcAlgebra>(r);
  return *slot;
}

}  // namespace arc2rep
