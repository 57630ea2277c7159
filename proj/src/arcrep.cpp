#include "arc2rep/arcrep.hpp"

#include <stdexcept>

namespace arc2rep {

const ArcBimodule::Summand& ArcBimodule::summand(int a, int b) const {
  int nb = static_cast<int>(catalan(r_bot));
  return summands.at(a * nb + b);
}

Laurent ArcBimodule::summand_graded_dim(int a, int b) const {
  Laurent p;
  if (zero) return p;
  const Summand& s = summand(a, b);
  int c = s.closed.ncomp();
  for (Mask m = 0; m < (Mask(1) << c); ++m) p.add_term(mask_degree(m, c) + space.shift(), 1);
  return p;
}

std::optional<std::vector<Layer>> arc_word_layers(const Word& w, const Weight& lam) {
  auto ws = word_weights(w, lam);
  if (!ws) return std::nullopt;
  std::vector<Layer> layers;
  for (std::size_t q = w.size(); q-- > 0;) {
    auto t = generator_tangle(w[q], (*ws)[q + 1]);
    if (!t) return std::nullopt;
    layers.push_back(t->layer);
  }
  return layers;
}

std::shared_ptr<const ArcBimodule> ArcBackend::bimodule(const Word& w, const Weight& lam) {
  auto key = std::make_pair(w, lam.v);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto b = std::make_shared<ArcBimodule>();
  b->word = w;
  b->lam = lam;
  auto layers = lam.valid() ? arc_word_layers(w, lam) : std::nullopt;
  if (layers) {
    b->zero = false;
    b->layers = *layers;
    b->top = *add_content(lam, w);
    b->r_bot = lam.gamma();
    b->r_top = b->top.gamma();
    const auto& mt = enumerate_matchings(b->r_top);
    const auto& mb = enumerate_matchings(b->r_bot);
    std::vector<int> degs;
    int offset = 0;
    for (int a = 0; a < static_cast<int>(mt.size()); ++a) {
      for (int bb = 0; bb < static_cast<int>(mb.size()); ++bb) {
        ClosedDiagram d(closure_layers(mt[a], b->layers, mb[bb]));
        int c = d.ncomp();
        for (Mask m = 0; m < (Mask(1) << c); ++m) degs.push_back(mask_degree(m, c));
        b->summands.push_back(ArcBimodule::Summand{a, bb, offset, std::move(d)});
        offset += 1 << c;
      }
    }
    b->space = GradedSpace(degs, b->r_bot);
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(key, b);
  return it->second;
}

GradedSpace ArcBackend::space(const Word& w, const Weight& lam) { return bimodule(w, lam)->space; }

bool ArcBackend::supports(const Gen& g) const {
  if (g.kind == GenKind::Psi) return g.i > 0 && g.j > 0;
  return true;
}

SparseMat<F2> ArcBackend::generator(const Gen& g, const Word& u, const Word& v, const Weight& lam) {
  if (!supports(g)) throw std::invalid_argument("arc backend: unsupported generator " + gen_str(g));
  Word src_gen = gen_source(g), tgt_gen = gen_target(g);
  Word src = u, tgt = u;
  src.insert(src.end(), src_gen.begin(), src_gen.end());
  src.insert(src.end(), v.begin(), v.end());
  tgt.insert(tgt.end(), tgt_gen.begin(), tgt_gen.end());
  tgt.insert(tgt.end(), v.begin(), v.end());
  auto b1 = bimodule(src, lam);
  auto b2 = bimodule(tgt, lam);
  SparseMat<F2> out(b2->dim(), b1->dim());
  if (b1->zero || b2->zero) return out;
  auto inner = add_content(lam, v);
  if (!inner || *inner != g.mu) throw std::invalid_argument("arc backend: whisker weights do not match " + gen_str(g));
  auto src_layers = arc_word_layers(src_gen, g.mu);
  auto tgt_layers = arc_word_layers(tgt_gen, g.mu);
  RegionOp op;
  op.start = b1->r_bot + static_cast<int>(v.size());
  if (g.kind == GenKind::Y) {
    // Decorate in place: the diagram is unchanged.
    const Layer& l = src_layers->front();
    op.extras.push_back(ExtraOp{ExtraOp::Dot, l.kind == Layer::Cup ? 1 : 0, l.p});
  } else if (g.kind == GenKind::Psi && g.i == g.j) {
    const auto& ls = *src_layers;
    if (ls.size() != 2 || ls[0].kind != Layer::Cup || ls[1].kind != Layer::Cap || ls[0].p != ls[1].p)
      throw ConstructionError("arc backend: E_i E_i is nonzero outside the cup-cap case");
    op.extras.push_back(ExtraOp{ExtraOp::Kappa, 1, ls[0].p});
  } else {
    op.len = static_cast<int>(src_layers->size());
    op.repl = *tgt_layers;
  }
  for (const auto& s : b1->summands) {
    ClosedDiagram tgt_diag;
    Cobordism cob = region_cobordism(s.closed, op, &tgt_diag);
    const auto& t = b2->summand(s.a, s.b);
    if (!(tgt_diag.layers() == t.closed.layers()))
      throw std::logic_error("arc backend: region replacement does not produce the target closure");
    for (Mask m = 0; m < (Mask(1) << s.closed.ncomp()); ++m) {
      auto res = cob.apply(m);
      auto& col = out.col[s.offset + static_cast<int>(m)];
      for (Mask r : res) col.e.emplace_back(t.offset + static_cast<int>(r), F2(1));
    }
  }
  return out;
}

int ArcBackend::left_algebra_dim(const Word& w, const Weight& lam) {
  auto top = add_content(lam, w);
  if (!top || !top->valid()) return 0;
  return arc_algebra(top->gamma()).dim();
}

int ArcBackend::right_algebra_dim(const Word&, const Weight& lam) {
  if (!lam.valid()) return 0;
  return arc_algebra(lam.gamma()).dim();
}

SparseMat<F2> ArcBackend::left_action(const Word& w, const Weight& lam, int h) { return action(w, lam, h, true); }

SparseMat<F2> ArcBackend::right_action(const Word& w, const Weight& lam, int h) { return action(w, lam, h, false); }

SparseMat<F2> ArcBackend::action(const Word& w, const Weight& lam, int h, bool left) {
  auto b = bimodule(w, lam);
  SparseMat<F2> out(b->dim(), b->dim());
  if (b->zero) return out;
  const ArcAlgebra& alg = arc_algebra(left ? b->r_top : b->r_bot);
  auto hb = alg.basis(h);
  const auto& ms = alg.matchings();
  for (const auto& s : b->summands) {
    if (left ? hb.bottom != s.a : hb.top != s.b) continue;
    std::vector<Layer> h_layers = closure_layers(ms[hb.top], {}, ms[hb.bottom]);
    const auto& t = left ? b->summand(hb.top, s.b) : b->summand(s.a, hb.bottom);
    Contraction c = left ? Contraction(s.closed.layers(), h_layers, b->r_top)
                         : Contraction(h_layers, s.closed.layers(), b->r_bot);
    if (!(c.result().layers() == t.closed.layers()))
      throw std::logic_error("arc backend: action does not produce the target closure");
    for (Mask m = 0; m < (Mask(1) << s.closed.ncomp()); ++m) {
      MaskVec res = left ? c.apply(m, hb.mask) : c.apply(hb.mask, m);
      auto& col = out.col[s.offset + static_cast<int>(m)];
      for (Mask r : res) col.e.emplace_back(t.offset + static_cast<int>(r), F2(1));
    }
  }
  return out;
}

}  // namespace arc2rep
