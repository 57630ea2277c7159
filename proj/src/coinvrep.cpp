#include "arc2rep/coinvrep.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace arc2rep {

namespace {

using Elem = CoinvariantRing::Elem;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t g = 0; g < m.size(); ++g) m[g] = ma[g] + mb[g];
      Q c = ca * cb;
      auto [it, inserted] = out.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

void poly_add(Poly& a, const Poly& b) {
  for (const auto& [m, c] : b) {
    auto [it, inserted] = a.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

// Coefficients up to t^max of a product of generating functions.
std::vector<Poly> series_mul(const std::vector<Poly>& a, const std::vector<Poly>& b, int max) {
  std::vector<Poly> out(max + 1);
  for (int i = 0; i < static_cast<int>(a.size()) && i <= max; ++i)
    for (int j = 0; j < static_cast<int>(b.size()) && i + j <= max; ++j) poly_add(out[i + j], poly_mul(a[i], b[j]));
  return out;
}

Elem elem_add(const Elem& a, const Elem& b, const Q& cb = Q(1)) { return combine(a, Q(1), b, cb); }

}  // namespace

// ---------------------------------------------------------------------------
// CoinvariantRing

CoinvariantRing::CoinvariantRing(std::vector<int> mu) : mu_(std::move(mu)) {
  for (int m : mu_) {
    if (m < 0) throw std::invalid_argument("CoinvariantRing: negative part");
    size_ += m;
  }
  for (std::size_t j = 0; j < mu_.size(); ++j)
    for (std::size_t l = j + 1; l < mu_.size(); ++l) top_ += mu_[j] * mu_[l];
  for (int j = 0; j < static_cast<int>(mu_.size()); ++j)
    for (int r = 1; r <= mu_[j]; ++r) {
      gen_index_[{j, r}] = static_cast<int>(gens_.size());
      gens_.emplace_back(j, r);
    }
  int ng = static_cast<int>(gens_.size());

  // Relations: the positive-degree coefficients of prod_j E_j(t).
  std::vector<Poly> prod(1);
  prod[0][std::vector<int>(ng, 0)] = Q(1);
  for (int j = 0; j < static_cast<int>(mu_.size()); ++j) {
    std::vector<Poly> e(mu_[j] + 1);
    e[0][std::vector<int>(ng, 0)] = Q(1);
    for (int r = 1; r <= mu_[j]; ++r) {
      std::vector<int> m(ng, 0);
      m[gen_index_[{j, r}]] = 1;
      e[r][m] = Q(1);
    }
    prod = series_mul(prod, e, size_);
  }

  // Degreewise row reduction of the ideal up to one past the expected top.
  for (int d = 0; d <= top_ + 1; ++d) {
    DegreePiece piece;
    std::vector<int> m(ng, 0);
    std::function<void(int, int)> rec = [&](int g, int left) {
      if (g == ng) {
        if (left == 0) piece.monomials.push_back(m);
        return;
      }
      int w = gens_[g].second;
      for (int e = 0; e * w <= left; ++e) {
        m[g] = e;
        rec(g + 1, left - e * w);
      }
      m[g] = 0;
    };
    rec(0, d);
    for (int x = 0; x < static_cast<int>(piece.monomials.size()); ++x) piece.index[piece.monomials[x]] = x;
    piece.ech = RowEchelon<Q>(static_cast<int>(piece.monomials.size()));
    for (int e = 1; e <= std::min(d, size_); ++e) {
      for (const auto& low : pieces_[d - e].monomials) {
        Poly lm;
        lm[low] = Q(1);
        Poly row = poly_mul(lm, prod[e]);
        SparseVec<Q> v;
        for (const auto& [mono, c] : row) v.e.emplace_back(piece.index.at(mono), c);
        std::sort(v.e.begin(), v.e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        piece.ech.insert(v);
      }
    }
    piece.basis_of.assign(piece.monomials.size(), -1);
    for (int x = 0; x < static_cast<int>(piece.monomials.size()); ++x) {
      if (piece.ech.is_pivot(x)) continue;
      if (d > top_) throw std::logic_error("CoinvariantRing: nonzero part above the top degree");
      piece.basis_of[x] = static_cast<int>(basis_.size());
      basis_.push_back(piece.monomials[x]);
      half_degree_.push_back(d);
    }
    pieces_.push_back(std::move(piece));
  }
  pieces_.pop_back();

  if (dim() <= 512) {
    table_.assign(dim(), std::vector<Elem>(dim()));
    for (int a = 0; a < dim(); ++a)
      for (int b = a; b < dim(); ++b) {
        std::vector<int> m(ng);
        for (int g = 0; g < ng; ++g) m[g] = basis_[a][g] + basis_[b][g];
        table_[a][b] = table_[b][a] = reduce_monomial(m);
      }
  }
}

std::string CoinvariantRing::basis_label(int b) const {
  std::string s;
  for (int g = 0; g < generator_count(); ++g) {
    int e = basis_[b][g];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(gens_[g].first + 1) + "_" + std::to_string(gens_[g].second);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::vector<int> CoinvariantRing::dims_by_half_degree() const {
  std::vector<int> out(top_ + 1, 0);
  for (int d : half_degree_) ++out[d];
  return out;
}

Elem CoinvariantRing::reduce_monomial(const std::vector<int>& m) const {
  int d = 0;
  for (int g = 0; g < generator_count(); ++g) d += m[g] * gens_[g].second;
  if (d > top_) return {};
  const DegreePiece& piece = pieces_[d];
  SparseVec<Q> r = piece.ech.reduce(SparseVec<Q>::unit(piece.index.at(m)));
  Elem out;
  for (const auto& [x, c] : r.e) out.e.emplace_back(piece.basis_of[x], c);
  return out;
}

Elem CoinvariantRing::reduce(const Poly& p) const {
  Accumulator<Q> acc(dim());
  for (const auto& [m, c] : p) acc.add(reduce_monomial(m), c);
  return acc.take();
}

Elem CoinvariantRing::gen(int block, int r) const {
  if (r == 0) return one();
  if (r < 0 || block < 0 || block >= static_cast<int>(mu_.size()) || r > mu_[block]) return {};
  std::vector<int> m(generator_count(), 0);
  m[gen_index_.at({block, r})] = 1;
  return reduce_monomial(m);
}

Elem CoinvariantRing::dual(int block, int m) const {
  if (m < 0) return {};
  if (m == 0) return one();
  int ng = generator_count();
  std::vector<Poly> prod(1);
  prod[0][std::vector<int>(ng, 0)] = Q(1);
  for (int j = 0; j < static_cast<int>(mu_.size()); ++j) {
    if (j == block) continue;
    std::vector<Poly> e(mu_[j] + 1);
    e[0][std::vector<int>(ng, 0)] = Q(1);
    for (int r = 1; r <= mu_[j]; ++r) {
      std::vector<int> mono(ng, 0);
      mono[gen_index_.at({j, r})] = 1;
      e[r][mono] = Q(1);
    }
    prod = series_mul(prod, e, m);
  }
  return m < static_cast<int>(prod.size()) ? reduce(prod[m]) : Elem{};
}

Elem CoinvariantRing::basis_product(int a, int b) const {
  if (!table_.empty()) return table_[a][b];
  std::vector<int> m(generator_count());
  for (int g = 0; g < generator_count(); ++g) m[g] = basis_[a][g] + basis_[b][g];
  return reduce_monomial(m);
}

Elem CoinvariantRing::mul(const Elem& a, const Elem& b) const {
  if (a.empty() || b.empty()) return {};
  Accumulator<Q> acc(dim());
  for (const auto& [i, x] : a.e)
    for (const auto& [j, y] : b.e) {
      if (half_degree_[i] + half_degree_[j] > top_) continue;
      acc.add(basis_product(i, j), x * y);
    }
  return acc.take();
}

Elem CoinvariantRing::pow(const Elem& a, int e) const {
  Elem r = one();
  for (int t = 0; t < e; ++t) r = mul(r, a);
  return r;
}

std::shared_ptr<const CoinvariantRing> build_coinvariant_ring(const std::vector<int>& mu) {
  int total = std::accumulate(mu.begin(), mu.end(), 0);
  if (total > kMaxCoinvariantSize)
    throw CapacityError("coinvariant ring of size " + std::to_string(total) + " exceeds the bound " +
                        std::to_string(kMaxCoinvariantSize));
  return std::make_shared<const CoinvariantRing>(mu);
}

long long multinomial(const std::vector<int>& mu) {
  long long r = 1;
  int acc = 0;
  for (int m : mu) {
    for (int t = 1; t <= m; ++t) {
      ++acc;
      r = r * acc / t;  // exact: r * binom(acc, t) built incrementally
    }
  }
  return r;
}

std::vector<long long> q_multinomial(const std::vector<int>& mu) {
  // Gaussian binomials [a+b choose b]_q by Pascal's rule, multiplied block by block.
  std::function<std::vector<long long>(int, int)> gauss = [&](int a, int b) -> std::vector<long long> {
    if (a == 0 || b == 0) return {1};
    // [a+b, b] = [a+b-1, b-1] + q^b [a+b-1, b]
    auto x = gauss(a, b - 1);
    auto y = gauss(a - 1, b);
    std::vector<long long> out(std::max(x.size(), y.size() + b), 0);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i + b] += y[i];
    return out;
  };
  std::vector<long long> p{1};
  int acc = 0;
  for (int m : mu) {
    auto g = gauss(acc, m);
    std::vector<long long> out(p.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += p[i] * g[j];
    p = std::move(out);
    acc += m;
  }
  return p;
}

MergeHom build_merge_hom(std::shared_ptr<const CoinvariantRing> coarse, std::shared_ptr<const CoinvariantRing> fine,
                         int p) {
  const auto& cm = coarse->composition();
  const auto& fm = fine->composition();
  if (fm.size() != cm.size() + 1 || p < 0 || p + 1 >= static_cast<int>(fm.size()))
    throw std::invalid_argument("build_merge_hom: shapes do not match");
  for (int c = 0; c < static_cast<int>(cm.size()); ++c) {
    int expect = c < p ? fm[c] : c == p ? fm[p] + fm[p + 1] : fm[c + 1];
    if (cm[c] != expect) throw std::invalid_argument("build_merge_hom: not a merge of adjacent blocks");
  }
  std::vector<Elem> gimg(coarse->generator_count());
  for (int g = 0; g < coarse->generator_count(); ++g) {
    auto [c, r] = coarse->generator(g);
    if (c < p) {
      gimg[g] = fine->gen(c, r);
    } else if (c > p) {
      gimg[g] = fine->gen(c + 1, r);
    } else {
      Elem s;
      for (int t = 0; t <= r; ++t) s = elem_add(s, fine->mul(fine->gen(p, t), fine->gen(p + 1, r - t)));
      gimg[g] = s;
    }
  }
  MergeHom h;
  h.coarse = coarse;
  h.fine = fine;
  h.p = p;
  h.mat = SparseMat<Q>(fine->dim(), coarse->dim());
  for (int b = 0; b < coarse->dim(); ++b) {
    Elem x = fine->one();
    const auto& m = coarse->basis_monomial(b);
    for (int g = 0; g < coarse->generator_count(); ++g) x = fine->mul(x, fine->pow(gimg[g], m[g]));
    h.mat.col[b] = x;
  }
  return h;
}

std::optional<std::vector<int>> refine(const std::vector<int>& lam, int i) {
  int a = iabs(i);
  if (a < 1 || a >= static_cast<int>(lam.size())) throw std::out_of_range("refine: index out of range");
  std::vector<int> out;
  if (i > 0) {
    if (lam[a] < 1) return std::nullopt;
    out.assign(lam.begin(), lam.begin() + a);
    out.push_back(1);
    out.push_back(lam[a] - 1);
    out.insert(out.end(), lam.begin() + a + 1, lam.end());
  } else {
    if (lam[a - 1] < 1) return std::nullopt;
    out.assign(lam.begin(), lam.begin() + a - 1);
    out.push_back(lam[a - 1] - 1);
    out.push_back(1);
    out.insert(out.end(), lam.begin() + a, lam.end());
  }
  return out;
}

int letter_shift(int i, const Weight& lam, ShiftConvention c) {
  int a = iabs(i);
  auto part = [&](int j) { return j >= 1 && j <= lam.n() ? lam.at(j) : 0; };
  if (c == ShiftConvention::Corrected) return i > 0 ? 1 - part(a + 1) : 1 - part(a);
  // lambda = sum_j a_j omega_j with a_j = lambda_j - lambda_{j+1} for j < n.
  auto coef = [&](int j) { return j >= 1 && j < lam.n() ? lam.at(j) - lam.at(j + 1) : 0; };
  if (i > 0) {
    int r = 1 + coef(a + 1);
    for (int j = 1; j < a; ++j) r += coef(j);
    return r;
  }
  return 2 - coef(a) - coef(a + 1);
}

const Elem& SplitBimodule::zeta_power(int a) const {
  static const Elem zero;
  if (a < 0 || a >= static_cast<int>(zeta_pow.size())) return zero;
  return zeta_pow[a];
}

int CoinvWordModule::index(int b, const std::vector<int>& a) const {
  int idx = b;
  for (std::size_t q = 0; q < radix.size(); ++q) idx = idx * radix[q] + a[q];
  return idx;
}

std::pair<int, std::vector<int>> CoinvWordModule::split(int idx) const {
  std::vector<int> a(radix.size());
  for (std::size_t q = radix.size(); q-- > 0;) {
    a[q] = idx % radix[q];
    idx /= radix[q];
  }
  return {idx, a};
}

// ---------------------------------------------------------------------------
// Backend

std::shared_ptr<const CoinvariantRing> CoinvariantBackend::ring(const std::vector<int>& mu) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rings_.find(mu);
    if (it != rings_.end()) return it->second;
  }
  auto r = build_coinvariant_ring(mu);
  std::lock_guard<std::mutex> lock(mu_);
  return rings_.emplace(mu, r).first->second;
}

std::shared_ptr<const SplitBimodule> CoinvariantBackend::split_bimodule(int i, const Weight& lam) {
  auto key = std::make_pair(i, lam.v);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = splits_.find(key);
    if (it != splits_.end()) return it->second;
  }
  std::shared_ptr<SplitBimodule> s;
  auto fine = refine(lam.v, i);
  auto left = apply_root_unbounded(lam, i);
  if (fine && left) {
    s = std::make_shared<SplitBimodule>();
    int a = iabs(i);
    s->letter = i;
    s->right = lam;
    s->left = *left;
    s->ring = ring(*fine);
    s->zeta_block = a;
    int pl = i > 0 ? a - 1 : a;
    int pr = i > 0 ? a : a - 1;
    s->left_hom = build_merge_hom(ring(left->v), s->ring, pl);
    s->right_hom = build_merge_hom(ring(lam.v), s->ring, pr);
    s->rank = left->v[pl];
    Elem zeta = s->ring->gen(s->zeta_block, 1);
    s->zeta_pow.push_back(s->ring->one());
    for (int e = 1; e <= s->ring->top(); ++e) s->zeta_pow.push_back(s->ring->mul(s->zeta_pow.back(), zeta));
    // Solve for the left-module coordinates of every basis element.
    int dl = s->left_hom.coarse->dim();
    int dm = s->ring->dim();
    if (dl * s->rank != dm) throw ConstructionError("split bimodule: rank does not match dimensions");
    SparseMat<Q> b(dm, dm);
    for (int e = 0; e < s->rank; ++e)
      for (int c = 0; c < dl; ++c) b.col[e * dl + c] = s->ring->mul(s->left_hom.mat.col[c], s->zeta_power(e));
    SparseMat<Q> inv;
    try {
      inv = inverse(b);
    } catch (const std::domain_error&) {
      throw ConstructionError("split bimodule: zeta powers are not a left basis");
    }
    s->decompose.resize(dm);
    for (int x = 0; x < dm; ++x) {
      std::map<int, Elem> by_power;
      for (const auto& [row, c] : inv.col[x].e) by_power[row / dl].e.emplace_back(row % dl, c);
      for (auto& [e, el] : by_power) s->decompose[x].emplace_back(e, std::move(el));
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return splits_.emplace(key, s).first->second;
}

std::shared_ptr<const CoinvWordModule> CoinvariantBackend::word_module(const Word& w, const Weight& lam) {
  auto key = std::make_pair(w, lam.v);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = words_.find(key);
    if (it != words_.end()) return it->second;
  }
  auto m = std::make_shared<CoinvWordModule>();
  m->word = w;
  m->lam = lam;
  bool nonneg = true;
  for (int x : lam.v) nonneg = nonneg && x >= 0;
  auto ws = nonneg ? word_weights(w, lam, false) : std::nullopt;
  if (ws) {
    m->weights = *ws;
    bool ok = true;
    for (std::size_t q = 0; q < w.size() && ok; ++q) {
      auto s = split_bimodule(w[q], (*ws)[q + 1]);
      if (!s) ok = false;
      m->factors.push_back(s);
    }
    if (ok) {
      m->zero = false;
      int shift = 0;
      std::vector<int> first_half;
      if (w.empty()) {
        m->ring = ring(lam.v);
        for (int b = 0; b < m->ring->dim(); ++b) first_half.push_back(m->ring->half_degree(b));
      } else {
        const auto& r0 = m->factors[0]->ring;
        for (int b = 0; b < r0->dim(); ++b) first_half.push_back(r0->half_degree(b));
        for (std::size_t q = 1; q < w.size(); ++q) m->radix.push_back(m->factors[q]->rank);
        for (std::size_t q = 0; q < w.size(); ++q) shift += letter_shift(w[q], (*ws)[q + 1], shifts_);
      }
      m->first_dim = static_cast<int>(first_half.size());
      int total = m->first_dim;
      for (int r : m->radix) total *= r;
      std::vector<int> degs(total);
      for (int idx = 0; idx < total; ++idx) {
        auto [b, ex] = m->split(idx);
        int h = first_half[b];
        for (int x : ex) h += x;
        degs[idx] = 2 * h;
      }
      m->space = GradedSpace(degs, shift);
    } else {
      m->factors.clear();
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return words_.emplace(key, m).first->second;
}

GradedSpace CoinvariantBackend::space(const Word& w, const Weight& lam) { return word_module(w, lam)->space; }

bool CoinvariantBackend::supports(const Gen& g) const {
  if (g.kind == GenKind::Psi) return sgn(g.i) == sgn(g.j);
  return true;
}

SparseVec<Q> CoinvariantBackend::normalize(const CoinvWordModule& m, std::vector<Elem> f) {
  int L = m.length();
  if (L == 0) return f.at(0);
  Accumulator<Q> acc(m.dim());
  std::vector<int> a(m.radix.size(), 0);
  std::function<void(int, const Q&)> push = [&](int q, const Q& coef) {
    if (q == 0) {
      for (const auto& [b, x] : f[0].e) acc.add(m.index(b, a), coef * x);
      return;
    }
    const SplitBimodule& s = *m.factors[q];
    std::map<int, Elem> parts;
    for (const auto& [b, x] : f[q].e)
      for (const auto& [e, c] : s.decompose[b]) parts[e] = elem_add(parts[e], c, x);
    const SplitBimodule& prev = *m.factors[q - 1];
    Elem saved = f[q - 1];
    for (const auto& [e, c] : parts) {
      if (c.empty()) continue;
      a[q - 1] = e;
      f[q - 1] = prev.ring->mul(saved, prev.right_hom.apply(c));
      push(q - 1, coef);
    }
    f[q - 1] = saved;
    a[q - 1] = 0;
  };
  push(L - 1, Q(1));
  return acc.take();
}

namespace {

struct Pure {
  Q coef;
  std::vector<Elem> f;
};

// Left-module coordinates of a ring element of a split bimodule.
std::map<int, Elem> left_coordinates(const SplitBimodule& s, const Elem& x) {
  std::map<int, Elem> parts;
  for (const auto& [b, c] : x.e)
    for (const auto& [e, y] : s.decompose[b]) parts[e] = elem_add(parts[e], y, c);
  return parts;
}

// (exponent on the left factor, exponent on the right factor, coefficient)
using Terms = std::vector<std::tuple<int, int, int>>;

Terms psi_terms(int i, int j, int r1, int r2) {
  Terms t;
  bool neg = i < 0;
  int a = iabs(i), b = iabs(j);
  if (std::abs(a - b) > 1) {
    t.emplace_back(r2, r1, 1);
  } else if (a == b) {
    int p = neg ? r2 : r1, q = neg ? r1 : r2;
    for (int f = 0; f < p; ++f) t.emplace_back(r1 + r2 - 1 - f, f, 1);
    for (int g = 0; g < q; ++g) t.emplace_back(r1 + r2 - 1 - g, g, -1);
  } else if (a == b + 1) {
    if (!neg) {
      t.emplace_back(r2, r1 + 1, 1);
      t.emplace_back(r2 + 1, r1, -1);
    } else {
      t.emplace_back(r2, r1, 1);
    }
  } else {
    if (!neg) {
      t.emplace_back(r2, r1, 1);
    } else {
      t.emplace_back(r2 + 1, r1, 1);
      t.emplace_back(r2, r1 + 1, -1);
    }
  }
  return t;
}

}  // namespace

SparseMat<Q> CoinvariantBackend::generator(const Gen& g, const Word& u, const Word& v, const Weight& lam) {
  if (!supports(g)) throw std::invalid_argument("coinvariant backend: unsupported generator " + gen_str(g));
  Word gs = gen_source(g), gt = gen_target(g);
  Word src = u, tgt = u;
  src.insert(src.end(), gs.begin(), gs.end());
  src.insert(src.end(), v.begin(), v.end());
  tgt.insert(tgt.end(), gt.begin(), gt.end());
  tgt.insert(tgt.end(), v.begin(), v.end());
  auto ms = word_module(src, lam);
  auto mt = word_module(tgt, lam);
  SparseMat<Q> out(mt->dim(), ms->dim());
  if (ms->zero || mt->zero) return out;
  int p = static_cast<int>(u.size());
  int ls = static_cast<int>(gs.size());
  const Weight& mu = ms->weights[p + ls];
  if (mu != g.mu) throw std::invalid_argument("coinvariant backend: whisker weights do not match " + gen_str(g));
  int a = iabs(g.i);

  for (int idx = 0; idx < ms->dim(); ++idx) {
    auto [b, ex] = ms->split(idx);
    std::vector<Elem> fs;
    Elem ring_elem;  // the basis element when the source word is empty
    if (src.empty()) {
      ring_elem = Elem::unit(b);
    } else {
      fs.push_back(Elem::unit(b));
      for (std::size_t q = 1; q < src.size(); ++q) fs.push_back(ms->factors[q]->zeta_power(ex[q - 1]));
    }
    // Local value on the generator's slots.
    std::vector<Pure> local;
    std::optional<Elem> cap_value;
    switch (g.kind) {
      case GenKind::Y: {
        const SplitBimodule& s = *ms->factors[p];
        local.push_back(Pure{Q(1), {s.ring->mul(s.zeta_power(1), fs[p])}});
        break;
      }
      case GenKind::Cup: {
        const SplitBimodule& t0 = *mt->factors[p];
        const SplitBimodule& t1 = *mt->factors[p + 1];
        const CoinvariantRing& cm = *t1.right_hom.coarse;
        int top = g.i > 0 ? mu.at(a) : mu.at(a + 1);
        int block = g.i > 0 ? a - 1 : a;
        for (int f = 0; f <= top; ++f) {
          Elem right = t1.right_hom.apply(cm.gen(block, top - f));
          if (right.empty()) continue;
          local.push_back(Pure{Q((top - f) % 2 == 0 ? 1 : -1), {t0.zeta_power(f), right}});
        }
        break;
      }
      case GenKind::Cap: {
        const SplitBimodule& s0 = *ms->factors[p];
        const CoinvariantRing& cm = *s0.left_hom.coarse;
        int r2 = ex[p];  // exponent of the second slot
        int d = g.i > 0 ? mu.at(a + 1) : mu.at(a);
        int block = g.i > 0 ? a : a - 1;
        Elem acc;
        for (const auto& [r1, c] : left_coordinates(s0, fs[p])) {
          int m = r1 + r2 + 1 - d;
          Elem val = cm.dual(block, m);
          if (val.empty()) continue;
          acc = elem_add(acc, cm.mul(c, val), Q(m % 2 == 0 ? 1 : -1));
        }
        cap_value = acc;
        break;
      }
      case GenKind::Psi: {
        const SplitBimodule& s0 = *ms->factors[p];
        const SplitBimodule& t0 = *mt->factors[p];
        const SplitBimodule& t1 = *mt->factors[p + 1];
        int r2 = ex[p];
        for (const auto& [r1, c] : left_coordinates(s0, fs[p])) {
          Elem lc = t0.left_hom.apply(c);
          for (auto [x, y, k] : psi_terms(g.i, g.j, r1, r2)) {
            const Elem& zy = t1.zeta_power(y);
            if (zy.empty()) continue;
            Elem left = t0.ring->mul(lc, t0.zeta_power(x));
            if (left.empty()) continue;
            local.push_back(Pure{Q(k), {left, zy}});
          }
        }
        break;
      }
    }

    SparseVec<Q> col;
    if (cap_value) {
      Elem r = *cap_value;
      if (tgt.empty()) {
        col = r;
      } else {
        std::vector<Elem> tf(fs.begin(), fs.begin() + p);
        tf.insert(tf.end(), fs.begin() + p + 2, fs.end());
        if (p > 0) {
          const SplitBimodule& s = *mt->factors[p - 1];
          tf[p - 1] = s.ring->mul(tf[p - 1], s.right_hom.apply(r));
        } else {
          const SplitBimodule& s = *mt->factors[0];
          tf[0] = s.ring->mul(s.left_hom.apply(r), tf[0]);
        }
        col = normalize(*mt, std::move(tf));
      }
    } else {
      Accumulator<Q> acc(mt->dim());
      for (auto& pure : local) {
        std::vector<Elem> tf(fs.begin(), fs.begin() + p);
        tf.insert(tf.end(), pure.f.begin(), pure.f.end());
        tf.insert(tf.end(), fs.begin() + p + ls, fs.end());
        if (src.empty()) {
          const SplitBimodule& s = *mt->factors[0];
          tf[0] = s.ring->mul(s.left_hom.apply(ring_elem), tf[0]);
        }
        acc.add(normalize(*mt, std::move(tf)), pure.coef);
      }
      col = acc.take();
    }
    out.col[idx] = std::move(col);
  }
  return out;
}

int CoinvariantBackend::left_algebra_dim(const Word& w, const Weight& lam) {
  Weight top = lam;
  for (int i : w) {
    top.v[iabs(i) - 1] += sgn(i);
    top.v[iabs(i)] -= sgn(i);
  }
  for (int x : top.v)
    if (x < 0) return 0;
  return ring(top.v)->dim();
}

int CoinvariantBackend::right_algebra_dim(const Word&, const Weight& lam) {
  for (int x : lam.v)
    if (x < 0) return 0;
  return ring(lam.v)->dim();
}

SparseMat<Q> CoinvariantBackend::left_action(const Word& w, const Weight& lam, int h) {
  auto m = word_module(w, lam);
  SparseMat<Q> out(m->dim(), m->dim());
  if (m->zero) return out;
  for (int idx = 0; idx < m->dim(); ++idx) {
    auto [b, ex] = m->split(idx);
    if (w.empty()) {
      out.col[idx] = m->ring->mul(Elem::unit(h), Elem::unit(b));
      continue;
    }
    const SplitBimodule& s = *m->factors[0];
    Elem x = s.ring->mul(s.left_hom.apply(Elem::unit(h)), Elem::unit(b));
    for (const auto& [bb, c] : x.e) out.col[idx].e.emplace_back(m->index(bb, ex), c);
    std::sort(out.col[idx].e.begin(), out.col[idx].e.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
  }
  return out;
}

SparseMat<Q> CoinvariantBackend::right_action(const Word& w, const Weight& lam, int h) {
  auto m = word_module(w, lam);
  SparseMat<Q> out(m->dim(), m->dim());
  if (m->zero) return out;
  for (int idx = 0; idx < m->dim(); ++idx) {
    auto [b, ex] = m->split(idx);
    if (w.empty()) {
      out.col[idx] = m->ring->mul(Elem::unit(b), Elem::unit(h));
      continue;
    }
    std::vector<Elem> f{Elem::unit(b)};
    for (std::size_t q = 1; q < w.size(); ++q) f.push_back(m->factors[q]->zeta_power(ex[q - 1]));
    const SplitBimodule& s = *m->factors.back();
    f.back() = s.ring->mul(f.back(), s.right_hom.apply(Elem::unit(h)));
    out.col[idx] = normalize(*m, std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shift audit

namespace {

std::optional<std::pair<int, bool>> realized_degree(const SparseMat<Q>& mat, const GradedSpace& s, const GradedSpace& t) {
  std::optional<int> deg;
  bool homogeneous = true;
  for (int c = 0; c < mat.cols; ++c)
    for (const auto& [r, x] : mat.col[c].e) {
      int d = t.degree(r) - s.degree(c);
      if (!deg) deg = d;
      else if (*deg != d) homogeneous = false;
    }
  if (!deg) return std::nullopt;
  return std::make_pair(*deg, homogeneous);
}

}  // namespace

std::vector<ShiftAuditEntry> shift_audit(int k, int n) {
  CoinvariantBackend verbatim(n, ShiftConvention::Verbatim);
  CoinvariantBackend corrected(n, ShiftConvention::Corrected);
  std::vector<Gen> gens;
  for (const auto& lam : enumerate_weights(k, n))
    for (int a = 1; a < n; ++a) {
      for (int i : {a, -a}) {
        gens.push_back(Gen{GenKind::Y, i, 0, lam});
        gens.push_back(Gen{GenKind::Cup, i, 0, lam});
        gens.push_back(Gen{GenKind::Cap, i, 0, lam});
      }
      for (int b = 1; b < n; ++b) {
        gens.push_back(Gen{GenKind::Psi, a, b, lam});
        gens.push_back(Gen{GenKind::Psi, -a, -b, lam});
      }
    }
  std::vector<ShiftAuditEntry> out;
  for (const auto& g : gens) {
    ShiftAuditEntry e;
    e.gen = g;
    e.declared = gen_degree(g);
    SparseMat<Q> mat = corrected.generator(g, {}, {}, g.mu);
    auto rv = realized_degree(mat, verbatim.space(gen_source(g), g.mu), verbatim.space(gen_target(g), g.mu));
    auto rc = realized_degree(mat, corrected.space(gen_source(g), g.mu), corrected.space(gen_target(g), g.mu));
    if (rv && rc) {
      e.nonzero = true;
      e.verbatim = rv->first;
      e.corrected = rc->first;
      e.homogeneous = rv->second && rc->second;
    } else {
      e.verbatim = e.corrected = e.declared;
      e.homogeneous = true;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace arc2rep
