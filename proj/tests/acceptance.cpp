// Acceptance run: one PASS/FAIL line per criterion, with the measured time
// against each criterion's limit. Exits nonzero if any criterion fails.
#include "arc2rep/arcalg.hpp"
#include "arc2rep/arcrep.hpp"
#include "arc2rep/coinvrep.hpp"
#include "arc2rep/decat.hpp"
#include "arc2rep/tworep.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace arc2rep;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int g_failed = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& ex) {
    out.pass = false;
    out.notes.push_back(std::string("exception: ") + ex.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= limit_s) {
    out.pass = false;
    out.notes.push_back("runtime limit exceeded");
  }
  if (!out.pass) ++g_failed;
  std::ostringstream t;
  t.setf(std::ios::fixed);
  t.precision(2);
  t << secs << " s, limit " << limit_s << " s";
  std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << t.str() << ")\n";
  for (const auto& n : out.notes) std::cout << "      " << n << "\n";
  std::cout.flush();
}

long long factorial_formula(int r) {
  using boost::multiprecision::cpp_int;
  cpp_int f2r = 1, fr = 1;
  for (int x = 1; x <= 2 * r; ++x) f2r *= x;
  for (int x = 1; x <= r; ++x) fr *= x;
  return static_cast<long long>(f2r / (fr * fr * (r + 1)));
}

long long arc_dim_oracle(int r) {
  long long total = 0;
  for (const auto& a : enumerate_matchings(r))
    for (const auto& b : enumerate_matchings(r)) total += 1LL << close(a, FlatTangle::identity(2 * r), b).count;
  return total;
}

SparseVec<F2> combine(const std::vector<std::vector<SparseVec<F2>>>& table, const SparseVec<F2>& left, int right) {
  Accumulator<F2> acc(static_cast<int>(table.size()));
  for (const auto& [x, c] : left.e) acc.add(table[x][right], c);
  return acc.take();
}

SparseVec<F2> combine(const std::vector<std::vector<SparseVec<F2>>>& table, int left, const SparseVec<F2>& right) {
  Accumulator<F2> acc(static_cast<int>(table.size()));
  for (const auto& [y, c] : right.e) acc.add(table[left][y], c);
  return acc.take();
}

std::string kind_name(GenKind k) {
  switch (k) {
    case GenKind::Y: return "dot";
    case GenKind::Cup: return "cup";
    case GenKind::Cap: return "cap";
    case GenKind::Psi: return "crossing";
  }
  return "?";
}

std::string inst_str(const InstanceResult& r) {
  return r.inst.relation + " " + r.inst.lam.str() + " " + word_str(r.inst.indices);
}

struct Family {
  int instances = 0;
  int nonvacuous = 0;
  int failed = 0;
};

Family family_of(const SuiteReport& rep, const std::string& family) {
  Family f;
  auto it = rep.families.find(family);
  if (it == rep.families.end()) return f;
  f.instances = it->second.instances;
  f.nonvacuous = it->second.nonvacuous;
  f.failed = it->second.failed;
  return f;
}

void list_failures(Outcome& out, const SuiteReport& rep, int limit = 10) {
  int shown = 0;
  for (const auto& r : rep.results)
    if (r.status == Status::Failed && shown++ < limit) out.note("failed: " + inst_str(r) + ": " + r.detail);
}

}  // namespace

int main() {
  const int jobs = default_jobs();
  std::map<std::pair<int, int>, SuiteReport> arc_suites;
  std::map<std::pair<int, int>, SuiteReport> coinv_suites;
  const auto all = *resolve_relation_filter({"all"});

  criterion(1, "matching counts for r = 1..6 against the factorial formula", 1.0, [](Outcome& out) {
    const std::vector<long long> expected = {1, 2, 5, 14, 42, 132};
    std::string got;
    for (int r = 1; r <= 6; ++r) {
      long long c = static_cast<long long>(enumerate_matchings(r).size());
      got += (r > 1 ? "," : "") + std::to_string(c);
      out.require(c == expected[r - 1], "count at r = " + std::to_string(r));
      out.require(c == factorial_formula(r), "formula at r = " + std::to_string(r));
    }
    out.note("counts " + got);
  });

  criterion(2, "arc algebra dimensions, associativity and surgery-order independence for gamma <= 3", 30.0,
            [](Outcome& out) {
              const ArcAlgebra& h1 = arc_algebra(1);
              out.require(h1.dim() == 2, "dim H^1 = 2");
              out.require(graded_dim(h1.space()) == Laurent(1) + Laurent::monomial(2), "graded dim H^1 = 1 + q^2");
              out.require(arc_algebra(2).dim() == 12 && arc_dim_oracle(2) == 12, "dim H^2 = 12");
              long long triples = 0, pairs = 0;
              for (int r = 0; r <= 3; ++r) {
                const ArcAlgebra& h = arc_algebra(r);
                int n = h.dim();
                out.require(n == arc_dim_oracle(r), "dim H^" + std::to_string(r) + " against the circle count");
                std::vector<std::vector<SparseVec<F2>>> table(n, std::vector<SparseVec<F2>>(n));
                for (int u = 0; u < n; ++u)
                  for (int v = 0; v < n; ++v) {
                    table[u][v] = h.multiply_basis(u, v);
                    if (table[u][v] != h.multiply_basis(u, v, true))
                      out.require(false, "surgery order at r = " + std::to_string(r));
                    ++pairs;
                  }
                bool assoc = true;
                for (int u = 0; u < n; ++u)
                  for (int v = 0; v < n; ++v)
                    for (int w = 0; w < n; ++w) {
                      ++triples;
                      if (combine(table, table[u][v], w) != combine(table, u, table[v][w])) assoc = false;
                    }
                out.require(assoc, "associativity of H^" + std::to_string(r));
              }
              out.note("dims H^0..H^3 = " + std::to_string(arc_algebra(0).dim()) + "," +
                       std::to_string(arc_algebra(1).dim()) + "," + std::to_string(arc_algebra(2).dim()) + "," +
                       std::to_string(arc_algebra(3).dim()) + "; " + std::to_string(pairs) +
                       " products in both surgery orders; " + std::to_string(triples) + " triples");
            });

  criterion(3, "Relation suite on the arc backend over F2 at (1,2), (2,2), (2,3), (2,4)", 300.0, [&](Outcome& out) {
    for (auto [k, n] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}}) {
      ArcBackend be(n);
      SuiteReport rep = run_suite<F2>(be, k, all, jobs);
      std::string at = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
      int nonvac = 0;
      for (const auto& [f, c] : rep.families) nonvac += c.nonvacuous;
      out.require(rep.failures() == 0, "zero failures at " + at);
      auto unc = rep.uncovered_families();
      for (const auto& f : unc) out.require(false, "family " + f + " has no non-vacuous instance at " + at);
      list_failures(out, rep);
      out.note(at + ": " + std::to_string(rep.results.size()) + " instances, " + std::to_string(nonvac) +
               " non-vacuous, " + std::to_string(rep.failures()) + " failed, " + std::to_string(rep.millis) + " ms");
      arc_suites.emplace(std::pair{k, n}, std::move(rep));
    }
    std::set<std::string> covered;
    for (const auto& [kn, rep] : arc_suites)
      for (const auto& [f, c] : rep.families)
        if (c.nonvacuous > 0) covered.insert(f);
    std::set<std::string> families;
    for (const auto& info : relation_catalog()) families.insert(info.family);
    std::string missing;
    for (const auto& f : families)
      if (!covered.count(f)) missing += " " + f;
    out.note("families without a non-vacuous instance at any size (not applicable over F2 at these sizes):" +
             (missing.empty() ? std::string(" none") : missing));
  });

  criterion(4, "degree audit of every generator on both backends", 120.0, [&](Outcome& out) {
    for (auto [k, n] : {std::pair{2, 3}, std::pair{2, 4}}) {
      ArcBackend be(n);
      auto rep = run_suite<F2>(be, k, *resolve_relation_filter({"generator-degree"}), jobs);
      Family f = family_of(rep, "generator-degree");
      out.require(f.failed == 0 && f.nonvacuous > 0, "arc generators homogeneous of table degree");
      list_failures(out, rep);
      out.note("arc (" + std::to_string(k) + "," + std::to_string(n) + "): " + std::to_string(f.nonvacuous) +
               " nonzero generators, all homogeneous of the table degree");
    }
    for (auto [k, n] : {std::pair{2, 2}, std::pair{2, 3}}) {
      auto audit = shift_audit(k, n);
      int nonzero = 0, inhom = 0, mismatched = 0, offset_nonzero = 0;
      std::map<std::string, std::set<int>> offsets_by_kind;
      for (const auto& e : audit) {
        if (!e.nonzero) continue;
        ++nonzero;
        if (!e.homogeneous) ++inhom;
        if (e.corrected != e.declared) ++mismatched;
        if (e.offset() != 0) {
          ++offset_nonzero;
          offsets_by_kind[kind_name(e.gen.kind)].insert(e.offset());
        }
      }
      std::string at = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
      out.require(inhom == 0, "coinvariant generators homogeneous at " + at);
      out.require(mismatched == 0, "corrected shifts give the table degree at " + at);
      out.require(nonzero > 0, "nonzero coinvariant generators at " + at);
      std::string offs;
      for (const auto& [kind, s] : offsets_by_kind) {
        offs += " " + kind + ":{";
        bool first = true;
        for (int o : s) {
          offs += (first ? "" : ",") + std::to_string(o);
          first = false;
        }
        offs += "}";
      }
      out.note("coinvariant " + at + ": " + std::to_string(nonzero) + " nonzero generators, " +
               std::to_string(offset_nonzero) +
               " with a nonzero offset (declared - realized) under the printed shifts, each a single offset"
               " since every map is homogeneous;" +
               (offs.empty() ? std::string(" none") : offs) + "; 100% homogeneous of the table degree after correction");
      int shown = 0;
      for (const auto& e : audit)
        if (e.nonzero && e.offset() != 0 && shown++ < 6)
          out.note("  e.g. " + gen_str(e.gen) + ": printed shifts give " + std::to_string(e.verbatim) +
                   ", table degree " + std::to_string(e.declared) + ", offset " + std::to_string(e.offset()));
    }
  });

  criterion(5, "coinvariant backend over Q at (2,2) and (2,3)", 300.0, [&](Outcome& out) {
    std::set<std::vector<int>> comps;
    for (int n : {2, 3})
      for (const auto& lam : enumerate_weights(2, n)) {
        std::vector<int> c;
        for (int x : lam.v)
          if (x > 0) c.push_back(x);
        comps.insert(lam.v);
        comps.insert(c);
        for (int i = 1; i < n; ++i)
          for (int s : {i, -i})
            if (auto r = refine(lam.v, s)) comps.insert(*r);
      }
    comps.insert({2, 2});
    comps.insert({1, 1, 1, 1});
    int deltas = 0;
    for (const auto& mu : comps) {
      auto ring = build_coinvariant_ring(mu);
      out.require(ring->dim() == multinomial(mu), "dim C^mu = multinomial");
      auto poin = q_multinomial(mu);
      auto got = ring->dims_by_half_degree();
      out.require(std::vector<long long>(got.begin(), got.end()) == poin, "Poincare polynomial");
      for (int b = 0; b < static_cast<int>(mu.size()); ++b)
        for (int m = 0; m <= ring->size() + 1; ++m) {
          Accumulator<Q> acc(ring->dim());
          for (int j = 0; j <= m; ++j) acc.add(ring->mul(ring->gen(b, j), ring->dual(b, m - j)), Q(1));
          CoinvariantRing::Elem expect = m == 0 ? ring->one() : CoinvariantRing::Elem{};
          out.require(acc.take() == expect, "delta identity");
          ++deltas;
        }
    }
    out.note("C^(2,2) dim " + std::to_string(build_coinvariant_ring({2, 2})->dim()) + ", C^(1,1,1,1) dim " +
             std::to_string(build_coinvariant_ring({1, 1, 1, 1})->dim()) + "; " + std::to_string(comps.size()) +
             " rings against multinomials; delta identity in " + std::to_string(deltas) + " degrees");
    for (int n : {2, 3}) {
      CoinvariantBackend be(n);
      SuiteReport rep = run_suite<Q>(be, 2, all, jobs);
      std::string at = "(2," + std::to_string(n) + ")";
      out.require(rep.failures() == 0, "zero failures at " + at);
      list_failures(out, rep);
      int signs = 0, nonvac = 0;
      for (const auto& [f, c] : rep.families) {
        signs += c.sign_adjusted;
        nonvac += c.nonvacuous;
      }
      out.note(at + ": " + std::to_string(rep.results.size()) + " instances, " + std::to_string(nonvac) +
               " non-vacuous, " + std::to_string(rep.failures()) + " failed, " + std::to_string(signs) +
               " sign-adjusted, " + std::to_string(rep.millis) + " ms");
      for (const auto& r : rep.results)
        if (r.status == Status::SignAdjusted) out.note("  sign-adjusted (sign -1): " + inst_str(r));
      coinv_suites.emplace(std::pair{2, n}, std::move(rep));
    }
  });

  criterion(6, "bubble series multiply to the identity series on both backends at every weight", 60.0,
            [&](Outcome& out) {
              out.require(!arc_suites.empty() && !coinv_suites.empty(), "suites from criteria 3 and 5 available");
              for (const auto& [kn, rep] : arc_suites) {
                Family f = family_of(rep, "bubble-series");
                std::string at = "arc (" + std::to_string(kn.first) + "," + std::to_string(kn.second) + ")";
                out.require(f.failed == 0 && f.nonvacuous > 0, "bubble series at " + at);
                out.note(at + ": " + std::to_string(f.nonvacuous) + " coefficients checked");
              }
              for (const auto& [kn, rep] : coinv_suites) {
                Family f = family_of(rep, "bubble-series");
                std::string at = "coinvariant (" + std::to_string(kn.first) + "," + std::to_string(kn.second) + ")";
                out.require(f.failed == 0 && f.nonvacuous > 0, "bubble series at " + at);
                out.note(at + ": " + std::to_string(f.nonvacuous) + " coefficients checked");
              }
            });

  criterion(7, "naturality of every generator at (2,3) on both backends", 60.0, [&](Outcome& out) {
    auto a = arc_suites.find({2, 3});
    auto c = coinv_suites.find({2, 3});
    out.require(a != arc_suites.end() && c != coinv_suites.end(), "suites at (2,3) available");
    if (a == arc_suites.end() || c == coinv_suites.end()) return;
    Family fa = family_of(a->second, "generator-naturality");
    Family fc = family_of(c->second, "generator-naturality");
    out.require(fa.failed == 0 && fa.nonvacuous > 0, "arc generators are bimodule maps");
    out.require(fc.failed == 0 && fc.nonvacuous > 0, "coinvariant generators are bimodule maps");
    out.note("arc: " + std::to_string(fa.nonvacuous) + " nonzero generators; coinvariant: " +
             std::to_string(fc.nonvacuous) + " nonzero generators; each checked on every basis element");
  });

  criterion(8, "decategorification at (2,3) and (2,4)", 120.0, [](Outcome& out) {
    for (auto [k, n] : {std::pair{2, 3}, std::pair{2, 4}}) {
      std::string at = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
      auto q = check_qgroup(k, n);
      out.require(q.failures() == 0, "quantum group relations at " + at);
      auto w = weight_dim_report(k, n);
      out.require(w.failures() == 0, "weight dimensions against tableau counts at " + at);
      out.require(w.total == w.weyl, "total dimension against the Weyl formula at " + at);
      out.note(at + ": " + std::to_string(q.checks.size()) + " Laurent-matrix identities, " +
               std::to_string(q.failures()) + " failed; weight dimensions total " + std::to_string(w.total) +
               " = Weyl " + std::to_string(w.weyl));
    }
    auto bim = bimodule_dims_report(2, 3);
    out.require(bim.failures() == 0, "bimodule graded-dimension identities at (2,3)");
    out.note("(2,3): " + std::to_string(bim.checks.size()) + " summand-wise graded-dimension identities, " +
             std::to_string(bim.failures()) + " failed");
    auto e = weight_dim_check(Weight({1, 1, 1, 1}), 2, 4);
    out.require(e.matchings == 2 && e.ssyt == 2, "(1,1,1,1) has dimension 2");
    out.note("(1,1,1,1): matchings " + std::to_string(e.matchings) + ", tableaux " + std::to_string(e.ssyt) +
             ", Catalan(gamma) " + std::to_string(e.catalan) + ", printed binom(2s,s)/(s+1) with s = 4 active points " +
             std::to_string(e.printed_formula) + " (does not match)");
  });

  std::cout << (g_failed == 0 ? "all criteria passed" : std::to_string(g_failed) + " criteria failed") << "\n";
  return g_failed == 0 ? 0 : 1;
}
