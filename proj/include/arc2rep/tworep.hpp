// Backend-agnostic 2-morphism expressions, their evaluation on a backend, and
// the relation catalog with its verifier.
#pragma once

#include "arc2rep/backend.hpp"
#include "arc2rep/errors.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace arc2rep {

// ---------------------------------------------------------------------------
// Expressions

struct Expr;
using ExprP = std::shared_ptr<const Expr>;

// A 2-morphism between two words, independent of the weight it is evaluated
// at. Evaluation happens in a context (u, v, lambda): the expression is
// whiskered by u on the left and v on the right, and lambda is the rightmost
// weight.
struct Expr {
  enum Kind { GenNode, Ident, Comp, Sum, Whisk, Bubble, Zero };
  Kind kind = Zero;
  Word src;
  Word tgt;
  Gen gen{};                                      // GenNode (gen.mu is filled in at evaluation)
  int bubble_index = 0;                           // Bubble
  int bubble_exp = 0;                             // Bubble, may be negative
  Word wu;                                        // Whisk
  Word wv;                                        // Whisk
  ExprP a;                                        // Comp: a after b; Whisk: inner
  ExprP b;                                        // Comp
  std::vector<std::pair<long long, ExprP>> terms;  // Sum
};

ExprP e_gen(GenKind kind, int i, int j = 0);
ExprP e_id(const Word& w);
ExprP e_zero(const Word& src, const Word& tgt);
// g after f; throws std::logic_error when tgt(f) != src(g).
ExprP e_comp(const ExprP& g, const ExprP& f);
// fs[0] after fs[1] after ... (the last element acts first).
ExprP e_chain(const std::vector<ExprP>& fs);
ExprP e_sum(const std::vector<std::pair<long long, ExprP>>& terms, const Word& src, const Word& tgt);
ExprP e_whisk(const Word& u, const ExprP& e, const Word& v);
ExprP e_power(const ExprP& e, int n);
// The bubble endomorphism of the identity with the given exponent; negative
// exponents denote fake bubbles, resolved at evaluation time.
ExprP e_bubble(int i, int exponent);
// Dotted cup (1_{-i} Y_i)^N o Cup_i and dotted cap Cap_i o (Y_{-i} 1_i)^N.
ExprP e_cup_dots(int i, int n);
ExprP e_cap_dots(int i, int n);
// The real bubble as a composite; requires exponent >= 0.
ExprP e_real_bubble(int i, int exponent);

// Which crossings a backend constructs directly.
using DirectPsi = std::function<bool(int, int)>;
// The crossing Psi_{i,j}: direct when available, otherwise built from positive
// crossings, cups and caps.
ExprP e_psi(int i, int j, const DirectPsi& direct);
// The two expressions for Psi_{j,i} with i, j negative in terms of Psi_{-j,-i}.
ExprP e_negative_psi_1(int j, int i, const DirectPsi& direct);
ExprP e_negative_psi_2(int j, int i, const DirectPsi& direct);
// Psi_{x,y} for x, y of opposite signs via a cup, a same-sign crossing and a cap.
ExprP e_mixed_psi(int x, int y, const DirectPsi& direct);

std::string expr_str(const ExprP& e);

// lambda + content(w) with no range check (entries may leave {0,1,2}).
Weight raw_add_content(const Weight& lam, const Word& w);

// The sequence index n of the bubble with this exponent in its generating
// series at weight mu: n = exponent + (alpha_i, mu) + 1.
int bubble_series_index(int i, int exponent, const Weight& mu);

// ---------------------------------------------------------------------------
// Evaluation

template <class F>
class Evaluator {
 public:
  struct Value {
    SparseMat<F> mat;
    std::optional<int> degree;  // absent for an explicit zero
  };

  explicit Evaluator(Backend<F>& be) : be_(be) {}

  Backend<F>& backend() { return be_; }

  // Drops cached values and releases the expressions they were keyed on.
  void clear() {
    cache_.clear();
    pins_.clear();
  }

  const GradedSpace& space(const Word& w, const Weight& lam) {
    auto key = std::make_pair(w, lam.v);
    auto it = spaces_.find(key);
    if (it != spaces_.end()) return it->second;
    return spaces_.emplace(key, be_.space(w, lam)).first->second;
  }

  const Value& eval(const ExprP& e, const Word& u, const Word& v, const Weight& lam) {
    Key key{e.get(), u, v, lam.v};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Value val = compute(e, u, v, lam);
    // Cache keys hold raw pointers, so the expression is kept alive with its entry.
    pins_.emplace(e.get(), e);
    return cache_.emplace(std::move(key), std::move(val)).first->second;
  }

  // The map as a graded map on the flattened spaces.
  GradedMap<F> graded(const ExprP& e, const Word& u, const Word& v, const Weight& lam) {
    const Value& val = eval(e, u, v, lam);
    return GradedMap<F>(space(cat(u, e->src, v), lam), space(cat(u, e->tgt, v), lam), val.degree.value_or(0), val.mat);
  }

  static Word cat(const Word& a, const Word& b, const Word& c) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    w.insert(w.end(), c.begin(), c.end());
    return w;
  }

 private:
  using Key = std::tuple<const Expr*, Word, Word, std::vector<int>>;

  SparseMat<F> zero_mat(const ExprP& e, const Word& u, const Word& v, const Weight& lam) {
    return SparseMat<F>(space(cat(u, e->tgt, v), lam).dim(), space(cat(u, e->src, v), lam).dim());
  }

  Value compute(const ExprP& e, const Word& u, const Word& v, const Weight& lam) {
    switch (e->kind) {
      case Expr::Zero: return Value{zero_mat(e, u, v, lam), std::nullopt};
      case Expr::Ident: {
        int d = space(cat(u, e->src, v), lam).dim();
        return Value{SparseMat<F>::identity(d), 0};
      }
      case Expr::GenNode: {
        Gen g = e->gen;
        g.mu = raw_add_content(lam, v);
        int deg = gen_degree(g);
        int ds = space(cat(u, e->src, v), lam).dim();
        int dt = space(cat(u, e->tgt, v), lam).dim();
        if (ds == 0 || dt == 0) return Value{SparseMat<F>(dt, ds), deg};
        return Value{be_.generator(g, u, v, lam), deg};
      }
      case Expr::Comp: {
        const Value& f = eval(e->b, u, v, lam);
        const Value& g = eval(e->a, u, v, lam);
        std::optional<int> deg;
        if (f.degree && g.degree) deg = *f.degree + *g.degree;
        return Value{multiply(g.mat, f.mat), deg};
      }
      case Expr::Whisk: return eval(e->a, cat(u, e->wu, {}), cat({}, e->wv, v), lam);
      case Expr::Sum: {
        SparseMat<F> acc = zero_mat(e, u, v, lam);
        std::optional<int> deg;
        for (const auto& [c, t] : e->terms) {
          const Value& tv = eval(t, u, v, lam);
          if (tv.degree) {
            if (deg && *deg != *tv.degree)
              throw ConstructionError("sum of terms of different degrees: " + expr_str(e));
            deg = tv.degree;
          }
          F fc(c);
          if (!fc.is_zero()) acc = linear_combination(acc, F(1), tv.mat, fc);
        }
        return Value{std::move(acc), deg};
      }
      case Expr::Bubble: return bubble(e, u, v, lam);
    }
    throw std::logic_error("Evaluator: unknown node");
  }

  // Real bubbles are composites; fake ones are solved from the generating
  // series identity using real bubbles of the opposite orientation.
  Value bubble(const ExprP& e, const Word& u, const Word& v, const Weight& lam) {
    int i = e->bubble_index, m = e->bubble_exp;
    Weight mu = raw_add_content(lam, v);
    int p = cartan_pairing(i, mu);
    int deg = 2 * m + 2 + 2 * p;
    if (m >= 0) {
      Value r = eval(real_bubble(i, m), u, v, lam);
      r.degree = deg;
      return r;
    }
    int nidx = m + p + 1;
    if (nidx < 0) return Value{zero_mat(e, u, v, lam), deg};
    int d = space(cat(u, {}, v), lam).dim();
    if (nidx == 0) return Value{SparseMat<F>::identity(d), deg};
    const Value& r0 = eval(fake_term(-i, p - 1), u, v, lam);
    if (!(r0.mat == SparseMat<F>::identity(d)))
      throw ConstructionError("fake bubble: leading term of the opposite series is not the identity at " + mu.str());
    SparseMat<F> acc(d, d);
    for (int s = 1; s <= nidx; ++s) {
      const Value& r = eval(fake_term(-i, p - 1 + s), u, v, lam);
      const Value& f = eval(fake_term(i, m - s), u, v, lam);
      acc = linear_combination(acc, F(1), multiply(r.mat, f.mat), F(-1));
    }
    return Value{std::move(acc), deg};
  }

  ExprP real_bubble(int i, int m) {
    auto key = std::make_pair(i, m);
    auto it = real_.find(key);
    if (it != real_.end()) return it->second;
    return real_.emplace(key, e_real_bubble(i, m)).first->second;
  }

  ExprP fake_term(int i, int m) {
    auto key = std::make_pair(i, m);
    auto it = fake_.find(key);
    if (it != fake_.end()) return it->second;
    return fake_.emplace(key, e_bubble(i, m)).first->second;
  }

  Backend<F>& be_;
  std::map<std::pair<Word, std::vector<int>>, GradedSpace> spaces_;
  std::map<Key, Value> cache_;
  std::map<const Expr*, ExprP> pins_;
  std::map<std::pair<int, int>, ExprP> real_;
  std::map<std::pair<int, int>, ExprP> fake_;
};

// ---------------------------------------------------------------------------
// Relation catalog

struct RelationInfo {
  std::string id;
  std::string family;
  std::string description;
};

// Every relation identifier known to the verifier, in report order.
const std::vector<RelationInfo>& relation_catalog();
const RelationInfo* find_relation(const std::string& id);
// Accepts relation ids and family names; nullopt if any entry is unknown.
// An empty list or {"all"} selects everything.
std::optional<std::vector<std::string>> resolve_relation_filter(const std::vector<std::string>& names);

struct RelationInstance {
  std::string relation;
  Weight lam;
  std::vector<int> indices;
};

// One equation lhs = rhs between 2-morphisms evaluated at (empty, empty, lambda).
struct RelationEquation {
  ExprP lhs;
  ExprP rhs;
};

struct BackendTraits {
  DirectPsi direct_psi;
  // Degree span (max - min) of the identity bimodule at a weight.
  std::function<int(const Weight&)> identity_degree_span;
  int n = 0;
};

// All well-formed instances for the selected relations over enumerate_weights(k, n).
std::vector<RelationInstance> enumerate_instances(int k, int n, const std::vector<std::string>& relations,
                                                  const BackendTraits& traits);

// The equation an instance asserts; throws ConstructionError for malformed input.
RelationEquation build_relation(const RelationInstance& inst, const BackendTraits& traits);

// True when the instance's source and target words are nonzero as weight
// sequences, independently of any backend.
bool instance_is_structurally_nonzero(const RelationInstance& inst, const BackendTraits& traits);

// ---------------------------------------------------------------------------
// Verification

enum class Status { Checked, Vacuous, Failed, SignAdjusted };
std::string status_str(Status s);

struct InstanceResult {
  RelationInstance inst;
  std::string backend;
  Status status = Status::Failed;
  std::optional<int> degree;
  int sign = 1;
  int source_dim = 0;
  int target_dim = 0;
  long long millis = 0;
  bool structural = false;  // words nonzero by the weight oracle
  std::string detail;
};

template <class F>
InstanceResult verify_instance(Evaluator<F>& ev, const RelationInstance& inst, const BackendTraits& traits) {
  auto start = std::chrono::steady_clock::now();
  ev.clear();
  InstanceResult res;
  res.inst = inst;
  res.backend = ev.backend().name();
  try {
    res.structural = instance_is_structurally_nonzero(inst, traits);
  } catch (const std::exception&) {
    res.structural = false;
  }
  auto finish = [&](Status s, std::string detail) {
    res.status = s;
    res.detail = std::move(detail);
    res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return res;
  };
  try {
    if (inst.relation == "generator-degree" || inst.relation == "generator-naturality") {
      Gen g{static_cast<GenKind>(inst.indices[0]), inst.indices[1], inst.indices[2], inst.lam};
      auto& be = ev.backend();
      GradedMap<F> f(be.space(gen_source(g), g.mu), be.space(gen_target(g), g.mu), gen_degree(g),
                     be.generator(g, {}, {}, g.mu));
      res.degree = f.degree;
      res.source_dim = f.source.dim();
      res.target_dim = f.target.dim();
      if (f.source.dim() == 0 || f.target.dim() == 0) return finish(Status::Vacuous, "");
      if (inst.relation == "generator-degree") {
        int c = f.first_inhomogeneous_entry();
        if (c >= 0) {
          std::string realized;
          for (auto [d, cnt] : f.realized_degrees()) realized += " " + std::to_string(d) + "x" + std::to_string(cnt);
          return finish(Status::Failed, "not homogeneous of degree " + std::to_string(f.degree) + "; realized:" + realized);
        }
        return finish(Status::Checked, "");
      }
      if (!check_bimodule_map(be, f, gen_source(g), gen_target(g), g.mu))
        return finish(Status::Failed, "does not commute with the algebra actions");
      return finish(Status::Checked, "");
    }
    RelationEquation eq = build_relation(inst, traits);
    auto lhs = ev.graded(eq.lhs, {}, {}, inst.lam);
    auto rhs = ev.graded(eq.rhs, {}, {}, inst.lam);
    const auto& lv = ev.eval(eq.lhs, {}, {}, inst.lam);
    const auto& rv = ev.eval(eq.rhs, {}, {}, inst.lam);
    res.source_dim = lhs.source.dim();
    res.target_dim = lhs.target.dim();
    if (lv.degree && rv.degree && *lv.degree != *rv.degree)
      return finish(Status::Failed, "sides have degrees " + std::to_string(*lv.degree) + " and " + std::to_string(*rv.degree));
    res.degree = lv.degree ? lv.degree : rv.degree;
    if (lhs.source.dim() == 0 || lhs.target.dim() == 0) return finish(Status::Vacuous, "");
    if (res.degree) {
      lhs.degree = rhs.degree = *res.degree;
      if (!lhs.is_homogeneous()) return finish(Status::Failed, "left side is not homogeneous");
      if (!rhs.is_homogeneous()) return finish(Status::Failed, "right side is not homogeneous");
    } else if (!lhs.is_zero() || !rhs.is_zero()) {
      return finish(Status::Failed, "nonzero side with no declared degree");
    }
    if (lhs.mat == rhs.mat) return finish(Status::Checked, "");
    if (F::characteristic == 0 && lhs.mat == scale(F(-1), rhs.mat)) {
      res.sign = -1;
      return finish(Status::SignAdjusted, "sides agree up to the global sign -1");
    }
    SparseMat<F> diff = lhs.mat - rhs.mat;
    return finish(Status::Failed, "sides differ in " + std::to_string(diff.nnz()) + " entries");
  } catch (const std::exception& ex) {
    return finish(Status::Failed, std::string("construction error: ") + ex.what());
  }
}

struct FamilyCoverage {
  int instances = 0;
  int nonvacuous = 0;
  int failed = 0;
  int sign_adjusted = 0;
  int structurally_nonzero = 0;  // instances whose words are nonzero by the weight oracle
};

struct SuiteReport {
  std::string backend;
  int k = 0;
  int n = 0;
  std::vector<InstanceResult> results;
  std::map<std::string, FamilyCoverage> families;
  long long millis = 0;

  int failures() const;
  // Families with a structurally nonzero instance but no non-vacuous one.
  std::vector<std::string> uncovered_families() const;
};

// Degree span of End(I_lambda) read from a backend.
template <class F>
int identity_span(Backend<F>& be, const Weight& lam) {
  GradedSpace s = be.space({}, lam);
  if (s.dim() == 0) return 0;
  int lo = s.degree(0), hi = s.degree(0);
  for (int x = 0; x < s.dim(); ++x) {
    lo = std::min(lo, s.degree(x));
    hi = std::max(hi, s.degree(x));
  }
  return hi - lo;
}

template <class F>
BackendTraits traits_of(Backend<F>& be) {
  BackendTraits t;
  t.n = be.n();
  Backend<F>* p = &be;
  t.direct_psi = [p](int i, int j) { return p->supports(Gen{GenKind::Psi, i, j, Weight{}}); };
  t.identity_degree_span = [p](const Weight& lam) { return identity_span(*p, lam); };
  return t;
}

int default_jobs();

// Verifies every instance; results are ordered by instance regardless of the
// number of worker threads. on_result, if given, is called in that order as
// results become available.
template <class F>
SuiteReport run_suite(Backend<F>& be, int k, const std::vector<std::string>& relations, int jobs,
                      const std::function<void(const InstanceResult&)>& on_result = {}) {
  auto start = std::chrono::steady_clock::now();
  BackendTraits traits = traits_of(be);
  // Span lookups hit the backend; warm them on this thread.
  std::map<std::vector<int>, int> spans;
  for (const auto& lam : enumerate_weights(k, be.n())) spans[lam.v] = traits.identity_degree_span(lam);
  traits.identity_degree_span = [spans](const Weight& lam) { return spans.at(lam.v); };
  auto insts = enumerate_instances(k, be.n(), relations, traits);
  SuiteReport rep;
  rep.backend = be.name();
  rep.k = k;
  rep.n = be.n();
  rep.results.resize(insts.size());
  std::vector<char> done(insts.size(), 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Evaluator<F> ev(be);
    for (;;) {
      std::size_t idx = next++;
      if (idx >= insts.size()) break;
      InstanceResult r = verify_instance(ev, insts[idx], traits);
      std::lock_guard<std::mutex> lock(mu);
      rep.results[idx] = std::move(r);
      done[idx] = 1;
      cv.notify_all();
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::size_t idx = 0; idx < insts.size(); ++idx) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return done[idx] != 0; });
    const InstanceResult& r = rep.results[idx];
    lock.unlock();
    if (on_result) on_result(r);
  }
  for (auto& t : pool) t.join();
  for (const auto& r : rep.results) {
    const RelationInfo* info = find_relation(r.inst.relation);
    FamilyCoverage& fc = rep.families[info ? info->family : r.inst.relation];
    ++fc.instances;
    if (r.status != Status::Vacuous) ++fc.nonvacuous;
    if (r.status == Status::Failed) ++fc.failed;
    if (r.status == Status::SignAdjusted) ++fc.sign_adjusted;
    if (r.structural) ++fc.structurally_nonzero;
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace arc2rep
