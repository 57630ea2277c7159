#include "arc2rep/tworep.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace arc2rep {

namespace {

std::shared_ptr<Expr> node(Expr::Kind k, Word src, Word tgt) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->src = std::move(src);
  e->tgt = std::move(tgt);
  return e;
}

Word cat(const Word& a, const Word& b, const Word& c = {}) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

}  // namespace

ExprP e_gen(GenKind kind, int i, int j) {
  Gen g{kind, i, j, Weight{}};
  auto e = node(Expr::GenNode, gen_source(g), gen_target(g));
  e->gen = g;
  return e;
}

ExprP e_id(const Word& w) { return node(Expr::Ident, w, w); }

ExprP e_zero(const Word& src, const Word& tgt) { return node(Expr::Zero, src, tgt); }

ExprP e_comp(const ExprP& g, const ExprP& f) {
  if (f->tgt != g->src)
    throw std::logic_error("e_comp: " + word_str(f->tgt) + " does not match " + word_str(g->src));
  auto e = node(Expr::Comp, f->src, g->tgt);
  e->a = g;
  e->b = f;
  return e;
}

ExprP e_chain(const std::vector<ExprP>& fs) {
  if (fs.empty()) throw std::logic_error("e_chain: empty");
  ExprP acc = fs.back();
  for (std::size_t t = fs.size() - 1; t-- > 0;) acc = e_comp(fs[t], acc);
  return acc;
}

ExprP e_sum(const std::vector<std::pair<long long, ExprP>>& terms, const Word& src, const Word& tgt) {
  for (const auto& [c, t] : terms)
    if (t->src != src || t->tgt != tgt) throw std::logic_error("e_sum: term with different source or target");
  auto e = node(Expr::Sum, src, tgt);
  e->terms = terms;
  return e;
}

ExprP e_whisk(const Word& u, const ExprP& inner, const Word& v) {
  if (u.empty() && v.empty()) return inner;
  auto e = node(Expr::Whisk, cat(u, inner->src, v), cat(u, inner->tgt, v));
  e->wu = u;
  e->wv = v;
  e->a = inner;
  return e;
}

ExprP e_power(const ExprP& e, int n) {
  if (n < 0) throw std::logic_error("e_power: negative exponent");
  if (e->src != e->tgt) throw std::logic_error("e_power: not an endomorphism");
  ExprP acc = e_id(e->src);
  for (int t = 0; t < n; ++t) acc = t == 0 ? e : e_comp(e, acc);
  return acc;
}

ExprP e_bubble(int i, int exponent) {
  auto e = node(Expr::Bubble, {}, {});
  e->bubble_index = i;
  e->bubble_exp = exponent;
  return e;
}

ExprP e_cup_dots(int i, int n) {
  return e_comp(e_power(e_whisk({-i}, e_gen(GenKind::Y, i), {}), n), e_gen(GenKind::Cup, i));
}

ExprP e_cap_dots(int i, int n) {
  return e_comp(e_gen(GenKind::Cap, i), e_power(e_whisk({}, e_gen(GenKind::Y, -i), {i}), n));
}

ExprP e_real_bubble(int i, int exponent) {
  if (exponent < 0) throw std::logic_error("e_real_bubble: negative exponent");
  return e_comp(e_gen(GenKind::Cap, i), e_cup_dots(i, exponent));
}

ExprP e_psi(int i, int j, const DirectPsi& direct) {
  if (direct(i, j)) return e_gen(GenKind::Psi, i, j);
  if (i > 0 && j > 0) throw ConstructionError("backend has no crossing Psi_" + std::to_string(i) + "," + std::to_string(j));
  if (i < 0 && j < 0) return e_negative_psi_1(i, j, direct);
  return e_mixed_psi(i, j, direct);
}

ExprP e_negative_psi_1(int j, int i, const DirectPsi& direct) {
  if (i >= 0 || j >= 0) throw std::logic_error("e_negative_psi_1: indices must be negative");
  ExprP inner = e_psi(-j, -i, direct);
  return e_chain({
      e_whisk({}, e_gen(GenKind::Cap, -j), {i, j}),
      e_whisk({j}, e_gen(GenKind::Cap, -i), {-j, i, j}),
      e_whisk({j, i}, inner, {i, j}),
      e_whisk({j, i, -j}, e_gen(GenKind::Cup, i), {j}),
      e_whisk({j, i}, e_gen(GenKind::Cup, j), {}),
  });
}

ExprP e_negative_psi_2(int j, int i, const DirectPsi& direct) {
  if (i >= 0 || j >= 0) throw std::logic_error("e_negative_psi_2: indices must be negative");
  ExprP inner = e_psi(-j, -i, direct);
  return e_chain({
      e_whisk({i, j}, e_gen(GenKind::Cap, i), {}),
      e_whisk({i, j, -i}, e_gen(GenKind::Cap, j), {i}),
      e_whisk({i, j}, inner, {j, i}),
      e_whisk({i}, e_gen(GenKind::Cup, -j), {-i, j, i}),
      e_whisk({}, e_gen(GenKind::Cup, -i), {j, i}),
  });
}

ExprP e_mixed_psi(int x, int y, const DirectPsi& direct) {
  if ((x > 0) == (y > 0)) throw std::logic_error("e_mixed_psi: indices must have opposite signs");
  ExprP inner = e_psi(-y, x, direct);
  return e_chain({
      e_whisk({y, x}, e_gen(GenKind::Cap, y), {}),
      e_whisk({y}, inner, {y}),
      e_whisk({}, e_gen(GenKind::Cup, -y), {x, y}),
  });
}

std::string expr_str(const ExprP& e) {
  switch (e->kind) {
    case Expr::GenNode: return gen_str(e->gen).substr(0, gen_str(e->gen).find(';'));
    case Expr::Ident: return "1" + word_str(e->src);
    case Expr::Zero: return "0";
    case Expr::Comp: return "(" + expr_str(e->a) + " o " + expr_str(e->b) + ")";
    case Expr::Whisk: return "[" + word_str(e->wu) + " " + expr_str(e->a) + " " + word_str(e->wv) + "]";
    case Expr::Bubble: return "bubble_" + std::to_string(e->bubble_index) + "^" + std::to_string(e->bubble_exp);
    case Expr::Sum: {
      std::string s = "(";
      for (std::size_t t = 0; t < e->terms.size(); ++t)
        s += (t ? " + " : "") + std::to_string(e->terms[t].first) + "*" + expr_str(e->terms[t].second);
      return s + ")";
    }
  }
  return "?";
}

Weight raw_add_content(const Weight& lam, const Word& w) {
  Weight r = lam;
  for (int i : w) {
    int a = iabs(i);
    if (a < 1 || a >= lam.n()) throw std::out_of_range("raw_add_content: index out of range");
    r.v[a - 1] += sgn(i);
    r.v[a] -= sgn(i);
  }
  return r;
}

int bubble_series_index(int i, int exponent, const Weight& mu) { return exponent + cartan_pairing(i, mu) + 1; }

// ---------------------------------------------------------------------------

const std::vector<RelationInfo>& relation_catalog() {
  static const std::vector<RelationInfo> cat = {
      {"generator-degree", "generator-degree", "each generator is homogeneous of its table degree"},
      {"generator-naturality", "generator-naturality", "each generator commutes with both algebra actions"},
      {"zigzag-left", "zigzag", "(Cap_{-i} 1_i) o (1_i Cup_i) = 1_i"},
      {"zigzag-right", "zigzag", "(1_i Cap_i) o (Cup_{-i} 1_i) = 1_i"},
      {"curl-dot-left", "curl-dot", "Y_i = (Cap_{-i} 1_i) o (1_i Y_{-i} 1_i) o (1_i Cup_i)"},
      {"curl-dot-right", "curl-dot", "Y_i = (1_i Cap_i) o (1_i Y_{-i} 1_i) o (Cup_{-i} 1_i)"},
      {"bubble-zero", "bubble-zero", "bubble_i^r = 0 when -(alpha_i,lambda) > r+1"},
      {"bubble-one", "bubble-one", "bubble_i^{-(alpha_i,lambda)-1} = 1 when (alpha_i,lambda) <= -1"},
      {"identity-decomposition", "identity-decomposition",
       "1_i 1_{-i} = -Psi_{-i,i} o Psi_{i,-i} + sum of dotted cups, bubbles and dotted caps"},
      {"curl-sum-lower", "curl-sum", "(1_i Cap_{-i}) o (Psi_{i,i} 1_{-i}) o (1_i Cup_{-i}) = -sum Y^a bubble_{-i}"},
      {"curl-sum-upper", "curl-sum", "(Cap_i 1_i) o (1_{-i} Psi_{i,i}) o (Cup_i 1_i) = sum bubble_i Y^a"},
      {"nilhecke-square", "nilhecke-square", "Psi_{i,i} o Psi_{i,i} = 0"},
      {"nilhecke-braid", "nilhecke-braid", "braid relation for Psi_{i,i}"},
      {"nilhecke-dot-left", "nilhecke-dot", "1 = Psi o (Y 1) - (1 Y) o Psi"},
      {"nilhecke-dot-right", "nilhecke-dot", "1 = (Y 1) o Psi - Psi o (1 Y)"},
      {"negative-crossing", "negative-crossing", "the two cup-cap expressions for Psi_{j,i}, i,j < 0, agree"},
      {"negative-crossing-direct", "negative-crossing", "a direct Psi_{j,i}, i,j < 0, equals the cup-cap expression"},
      {"mixed-inverse", "mixed-inverse", "Psi_{-j,i} o Psi_{i,-j} = 1 for i != j of the same sign"},
      {"quadratic", "quadratic", "Psi_{i,j} o Psi_{j,i} = 1 or (i-j)(Y_j 1_i - 1_j Y_i)"},
      {"dot-slide-left", "dot-slide", "(1_j Y_i) o Psi_{i,j} = Psi_{i,j} o (Y_i 1_j)"},
      {"dot-slide-right", "dot-slide", "(Y_j 1_i) o Psi_{i,j} = Psi_{i,j} o (1_i Y_j)"},
      {"cubic", "cubic", "difference of the two triple crossings is (i-j) 1 when i = k, |i-j| = 1, else 0"},
      {"bubble-series", "bubble-series", "degree-n coefficient of the product of the two bubble series is delta_{n,0}"},
      {"interchange", "interchange", "(t2 1) o (1 t1) = (1 t1) o (t2 1) for generator pairs"},
  };
  return cat;
}

const RelationInfo* find_relation(const std::string& id) {
  for (const auto& r : relation_catalog())
    if (r.id == id) return &r;
  return nullptr;
}

std::optional<std::vector<std::string>> resolve_relation_filter(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  bool all = names.empty();
  for (const auto& n : names)
    if (n == "all") all = true;
  if (all) {
    for (const auto& r : relation_catalog()) out.push_back(r.id);
    for (const auto& n : names)
      if (n != "all" && !find_relation(n)) {
        bool fam = false;
        for (const auto& r : relation_catalog()) fam = fam || r.family == n;
        if (!fam) return std::nullopt;
      }
    return out;
  }
  std::set<std::string> chosen;
  for (const auto& n : names) {
    bool hit = false;
    for (const auto& r : relation_catalog())
      if (r.id == n || r.family == n) {
        chosen.insert(r.id);
        hit = true;
      }
    if (!hit) return std::nullopt;
  }
  for (const auto& r : relation_catalog())
    if (chosen.count(r.id)) out.push_back(r.id);
  return out;
}

namespace {

std::vector<int> signed_indices(int n) {
  std::vector<int> out;
  for (int a = 1; a < n; ++a) {
    out.push_back(a);
    out.push_back(-a);
  }
  return out;
}

std::vector<Gen> direct_generators(int n, const DirectPsi& direct) {
  std::vector<Gen> gens;
  for (int i : signed_indices(n)) {
    gens.push_back(Gen{GenKind::Y, i, 0, Weight{}});
    gens.push_back(Gen{GenKind::Cup, i, 0, Weight{}});
    gens.push_back(Gen{GenKind::Cap, i, 0, Weight{}});
  }
  for (int i : signed_indices(n))
    for (int j : signed_indices(n))
      if (direct(i, j)) gens.push_back(Gen{GenKind::Psi, i, j, Weight{}});
  return gens;
}

bool word_nonzero(const Word& w, const Weight& lam) { return word_weights(w, lam).has_value(); }

}  // namespace

std::vector<RelationInstance> enumerate_instances(int k, int n, const std::vector<std::string>& relations,
                                                  const BackendTraits& traits) {
  std::vector<RelationInstance> out;
  auto weights = enumerate_weights(k, n);
  auto add = [&](const std::string& rel, const Weight& lam, std::vector<int> idx) {
    out.push_back(RelationInstance{rel, lam, std::move(idx)});
  };
  std::vector<int> pos;
  for (int a = 1; a < n; ++a) pos.push_back(a);
  for (const auto& rel : relations) {
    for (const auto& lam : weights) {
      if (rel == "generator-degree" || rel == "generator-naturality") {
        for (const auto& g : direct_generators(n, traits.direct_psi))
          add(rel, lam, {static_cast<int>(g.kind), g.i, g.j});
      } else if (rel == "zigzag-left" || rel == "zigzag-right") {
        for (int i : signed_indices(n)) add(rel, lam, {i});
      } else if (rel == "curl-dot-left" || rel == "curl-dot-right") {
        for (int i : pos) add(rel, lam, {i});
      } else if (rel == "bubble-zero") {
        for (int i : signed_indices(n)) {
          int p = cartan_pairing(i, lam);
          for (int r = 0; r + 1 < -p; ++r) add(rel, lam, {i, r});
        }
      } else if (rel == "bubble-one") {
        for (int i : signed_indices(n))
          if (cartan_pairing(i, lam) <= -1) add(rel, lam, {i});
      } else if (rel == "identity-decomposition") {
        for (int i : signed_indices(n))
          if (cartan_pairing(i, lam) >= 1) add(rel, lam, {i});
      } else if (rel == "curl-sum-lower") {
        for (int i : pos)
          if (cartan_pairing(i, lam) <= 0) add(rel, lam, {i});
      } else if (rel == "curl-sum-upper") {
        for (int i : pos)
          if (cartan_pairing(i, lam) >= -2) add(rel, lam, {i});
      } else if (rel == "nilhecke-square" || rel == "nilhecke-braid" || rel == "nilhecke-dot-left" ||
                 rel == "nilhecke-dot-right") {
        for (int i : pos) add(rel, lam, {i});
      } else if (rel == "negative-crossing" || rel == "negative-crossing-direct") {
        for (int a : pos)
          for (int b : pos)
            if (rel == "negative-crossing" || traits.direct_psi(-a, -b)) add(rel, lam, {-a, -b});
      } else if (rel == "mixed-inverse") {
        for (int a : pos)
          for (int b : pos)
            if (a != b) {
              add(rel, lam, {a, b});
              add(rel, lam, {-a, -b});
            }
      } else if (rel == "quadratic" || rel == "dot-slide-left" || rel == "dot-slide-right") {
        for (int a : pos)
          for (int b : pos)
            if (a != b) add(rel, lam, {a, b});
      } else if (rel == "cubic") {
        for (int a : pos)
          for (int b : pos)
            for (int c : pos) add(rel, lam, {a, b, c});
      } else if (rel == "bubble-series") {
        int top = traits.identity_degree_span(lam) / 2 + 1;
        for (int i : pos)
          for (int m = 0; m <= top; ++m) add(rel, lam, {i, m});
      } else if (rel == "interchange") {
        auto gens = direct_generators(n, traits.direct_psi);
        for (const auto& g1 : gens) {
          for (const auto& g2 : gens)
            add(rel, lam, {static_cast<int>(g1.kind), g1.i, g1.j, static_cast<int>(g2.kind), g2.i, g2.j});
        }
      } else {
        throw std::invalid_argument("unknown relation " + rel);
      }
    }
  }
  return out;
}

RelationEquation build_relation(const RelationInstance& inst, const BackendTraits& traits) {
  const auto& rel = inst.relation;
  const auto& x = inst.indices;
  const Weight& lam = inst.lam;
  const DirectPsi& d = traits.direct_psi;
  auto Y = [](int i) { return e_gen(GenKind::Y, i); };
  auto cup = [](int i) { return e_gen(GenKind::Cup, i); };
  auto cap = [](int i) { return e_gen(GenKind::Cap, i); };
  auto psi = [&](int i, int j) { return e_psi(i, j, d); };
  auto W = e_whisk;

  if (rel == "zigzag-left") {
    int i = x[0];
    return {e_chain({W({}, cap(-i), {i}), W({i}, cup(i), {})}), e_id({i})};
  }
  if (rel == "zigzag-right") {
    int i = x[0];
    return {e_chain({W({i}, cap(i), {}), W({}, cup(-i), {i})}), e_id({i})};
  }
  if (rel == "curl-dot-left") {
    int i = x[0];
    return {Y(i), e_chain({W({}, cap(-i), {i}), W({i}, Y(-i), {i}), W({i}, cup(i), {})})};
  }
  if (rel == "curl-dot-right") {
    int i = x[0];
    return {Y(i), e_chain({W({i}, cap(i), {}), W({i}, Y(-i), {i}), W({}, cup(-i), {i})})};
  }
  if (rel == "bubble-zero") return {e_bubble(x[0], x[1]), e_zero({}, {})};
  if (rel == "bubble-one") {
    int i = x[0];
    return {e_bubble(i, -cartan_pairing(i, lam) - 1), e_id({})};
  }
  if (rel == "identity-decomposition") {
    int i = x[0];
    int p = cartan_pairing(i, lam);
    Word w{i, -i};
    std::vector<std::pair<long long, ExprP>> terms;
    terms.emplace_back(-1, e_comp(psi(-i, i), psi(i, -i)));
    for (int f = 0; f <= p - 1; ++f)
      for (int g = 0; g <= f; ++g)
        terms.emplace_back(1, e_chain({e_cup_dots(-i, p - f - 1), e_bubble(i, -p - 1 + g), e_cap_dots(-i, f - g)}));
    return {e_id(w), e_sum(terms, w, w)};
  }
  if (rel == "curl-sum-lower") {
    int i = x[0];
    int p = cartan_pairing(i, lam);
    ExprP lhs = e_chain({W({i}, cap(-i), {}), W({}, psi(i, i), {-i}), W({i}, cup(-i), {})});
    std::vector<std::pair<long long, ExprP>> terms;
    for (int f = 0; f <= -p; ++f)
      terms.emplace_back(-1, e_comp(e_power(Y(i), -p - f), W({i}, e_bubble(-i, p - 1 + f), {})));
    return {lhs, e_sum(terms, {i}, {i})};
  }
  if (rel == "curl-sum-upper") {
    int i = x[0];
    Weight mu = raw_add_content(lam, {i});
    int q = cartan_pairing(i, mu);
    ExprP lhs = e_chain({W({}, cap(i), {i}), W({-i}, psi(i, i), {}), W({}, cup(i), {i})});
    std::vector<std::pair<long long, ExprP>> terms;
    for (int g = 0; g <= q; ++g) terms.emplace_back(1, e_comp(W({}, e_bubble(i, -q - 1 + g), {i}), e_power(Y(i), q - g)));
    return {lhs, e_sum(terms, {i}, {i})};
  }
  if (rel == "nilhecke-square") {
    int i = x[0];
    return {e_comp(psi(i, i), psi(i, i)), e_zero({i, i}, {i, i})};
  }
  if (rel == "nilhecke-braid") {
    int i = x[0];
    ExprP a = W({}, psi(i, i), {i}), b = W({i}, psi(i, i), {});
    return {e_chain({a, b, a}), e_chain({b, a, b})};
  }
  if (rel == "nilhecke-dot-left" || rel == "nilhecke-dot-right") {
    int i = x[0];
    Word w{i, i};
    ExprP y1 = W({}, Y(i), {i}), y2 = W({i}, Y(i), {});
    ExprP ps = psi(i, i);
    std::vector<std::pair<long long, ExprP>> terms;
    if (rel == "nilhecke-dot-left") {
      terms = {{1, e_comp(ps, y1)}, {-1, e_comp(y2, ps)}};
    } else {
      terms = {{1, e_comp(y1, ps)}, {-1, e_comp(ps, y2)}};
    }
    return {e_id(w), e_sum(terms, w, w)};
  }
  if (rel == "negative-crossing") return {e_negative_psi_1(x[0], x[1], d), e_negative_psi_2(x[0], x[1], d)};
  if (rel == "negative-crossing-direct") return {e_gen(GenKind::Psi, x[0], x[1]), e_negative_psi_1(x[0], x[1], d)};
  if (rel == "mixed-inverse") {
    int i = x[0], j = x[1];
    return {e_comp(psi(-j, i), psi(i, -j)), e_id({i, -j})};
  }
  if (rel == "quadratic") {
    int i = x[0], j = x[1];
    Word w{j, i};
    ExprP lhs = e_comp(psi(i, j), psi(j, i));
    if (iabs(i - j) > 1) return {lhs, e_id(w)};
    long long c = i - j;
    return {lhs, e_sum({{c, W({}, Y(j), {i})}, {-c, W({j}, Y(i), {})}}, w, w)};
  }
  if (rel == "dot-slide-left") {
    int i = x[0], j = x[1];
    return {e_comp(W({j}, Y(i), {}), psi(i, j)), e_comp(psi(i, j), W({}, Y(i), {j}))};
  }
  if (rel == "dot-slide-right") {
    int i = x[0], j = x[1];
    return {e_comp(W({}, Y(j), {i}), psi(i, j)), e_comp(psi(i, j), W({i}, Y(j), {}))};
  }
  if (rel == "cubic") {
    int i = x[0], j = x[1], k = x[2];
    Word src{i, j, k}, tgt{k, j, i};
    ExprP first = e_chain({W({}, psi(j, k), {i}), W({j}, psi(i, k), {}), W({}, psi(i, j), {k})});
    ExprP second = e_chain({W({k}, psi(i, j), {}), W({}, psi(i, k), {j}), W({i}, psi(j, k), {})});
    ExprP lhs = e_sum({{1, first}, {-1, second}}, src, tgt);
    if (i == k && iabs(i - j) == 1) return {lhs, e_sum({{i - j, e_id(src)}}, src, tgt)};
    return {lhs, e_zero(src, tgt)};
  }
  if (rel == "bubble-series") {
    int i = x[0], m = x[1];
    int p = cartan_pairing(i, lam);
    std::vector<std::pair<long long, ExprP>> terms;
    for (int a = 0; a <= m; ++a) terms.emplace_back(1, e_comp(e_bubble(i, -p - 1 + a), e_bubble(-i, p - 1 + m - a)));
    return {e_sum(terms, {}, {}), m == 0 ? e_id({}) : e_zero({}, {})};
  }
  if (rel == "interchange") {
    Gen g1{static_cast<GenKind>(x[0]), x[1], x[2], Weight{}};
    Gen g2{static_cast<GenKind>(x[3]), x[4], x[5], Weight{}};
    ExprP t1 = e_gen(g1.kind, g1.i, g1.j), t2 = e_gen(g2.kind, g2.i, g2.j);
    Word s1 = gen_source(g1), r1 = gen_target(g1), s2 = gen_source(g2), r2 = gen_target(g2);
    return {e_comp(W({}, t2, r1), W(s2, t1, {})), e_comp(W(r2, t1, {}), W({}, t2, s1))};
  }
  throw ConstructionError("unknown relation " + rel);
}

bool instance_is_structurally_nonzero(const RelationInstance& inst, const BackendTraits& traits) {
  if (inst.relation == "generator-degree" || inst.relation == "generator-naturality") {
    Gen g{static_cast<GenKind>(inst.indices[0]), inst.indices[1], inst.indices[2], inst.lam};
    return word_nonzero(gen_source(g), inst.lam) && word_nonzero(gen_target(g), inst.lam);
  }
  RelationEquation eq = build_relation(inst, traits);
  return word_nonzero(eq.lhs->src, inst.lam) && word_nonzero(eq.lhs->tgt, inst.lam);
}

std::string status_str(Status s) {
  switch (s) {
    case Status::Checked: return "checked";
    case Status::Vacuous: return "vacuous";
    case Status::Failed: return "failed";
    case Status::SignAdjusted: return "sign-adjusted";
  }
  return "?";
}

int SuiteReport::failures() const {
  int f = 0;
  for (const auto& r : results) f += r.status == Status::Failed;
  return f;
}

std::vector<std::string> SuiteReport::uncovered_families() const {
  std::vector<std::string> out;
  for (const auto& [name, fc] : families)
    if (fc.structurally_nonzero > 0 && fc.nonvacuous == 0) out.push_back(name);
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("ARC2REP_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

}  // namespace arc2rep
