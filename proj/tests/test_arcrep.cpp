#include <doctest.h>

#include "arc2rep/arcrep.hpp"

using namespace arc2rep;

namespace {

GradedMap<F2> gen_map(ArcBackend& be, const Gen& g, const Weight& lam, const Word& u = {}, const Word& v = {}) {
  Word src = u, tgt = u;
  for (int x : gen_source(g)) src.push_back(x);
  for (int x : gen_target(g)) tgt.push_back(x);
  src.insert(src.end(), v.begin(), v.end());
  tgt.insert(tgt.end(), v.begin(), v.end());
  return GradedMap<F2>(be.space(src, lam), be.space(tgt, lam), gen_degree(g), be.generator(g, u, v, lam));
}

std::vector<Gen> all_generators(int k, int n) {
  std::vector<Gen> gens;
  for (const auto& lam : enumerate_weights(k, n)) {
    for (int a = 1; a < n; ++a) {
      for (int i : {a, -a}) {
        gens.push_back(Gen{GenKind::Y, i, 0, lam});
        gens.push_back(Gen{GenKind::Cup, i, 0, lam});
        gens.push_back(Gen{GenKind::Cap, i, 0, lam});
      }
      for (int b = 1; b < n; ++b) gens.push_back(Gen{GenKind::Psi, a, b, lam});
    }
  }
  return gens;
}

}  // namespace

TEST_CASE("arc word bimodules: examples") {
  ArcBackend be(2);
  for (const auto& lam : enumerate_weights(1, 2))
    CHECK(be.space({}, lam).dim() == arc_algebra(lam.gamma()).dim());
  Weight lam({0, 2});
  auto b = be.bimodule({-1, 1}, lam);
  REQUIRE_FALSE(b->zero);
  auto id = be.bimodule({}, lam);
  Laurent a = Laurent::monomial(-1) + Laurent::monomial(1);
  CHECK(b->summand_graded_dim(0, 0) == a * id->summand_graded_dim(0, 0));
  CHECK(be.bimodule({1, 1}, Weight({1, 1}))->zero);
  CHECK(be.space({1, 1}, Weight({1, 1})).dim() == 0);
}

TEST_CASE("arc generators: homogeneity, degrees, naturality and y squared") {
  for (auto [k, n] : {std::pair{1, 2}, std::pair{2, 3}}) {
    ArcBackend be(n);
    int nonzero = 0;
    for (const auto& g : all_generators(k, n)) {
      auto f = gen_map(be, g, g.mu);
      CHECK_MESSAGE(f.is_homogeneous(), gen_str(g));
      CHECK_MESSAGE(check_bimodule_map<F2>(be, f, gen_source(g), gen_target(g), g.mu), gen_str(g));
      if (!f.is_zero()) ++nonzero;
      if (g.kind == GenKind::Y) CHECK(compose(f, f).is_zero());
    }
    CHECK(nonzero > 0);
  }
}

TEST_CASE("arc generators: explicit cases") {
  ArcBackend be(2);
  Weight lam({0, 2});
  // Cup at (0,2) sends v to 1 (x) v; cap is the trace.
  auto cup = gen_map(be, Gen{GenKind::Cup, 1, 0, lam}, lam);
  REQUIRE(cup.mat.rows == 2);
  REQUIRE(cup.mat.cols == 1);
  CHECK(cup.mat.at(0, 0) == F2(1));
  CHECK(cup.mat.at(1, 0) == F2(0));
  CHECK(cup.degree == -1);
  auto cap = gen_map(be, Gen{GenKind::Cap, 1, 0, lam}, lam);
  CHECK(cap.mat.at(0, 0) == F2(0));
  CHECK(cap.mat.at(0, 1) == F2(1));
  // psi_{1,1} at (0,2) acts as kappa on the circle.
  auto psi = gen_map(be, Gen{GenKind::Psi, 1, 1, lam}, lam);
  REQUIRE(psi.mat.rows == 2);
  CHECK(psi.mat.at(0, 0) == F2(0));
  CHECK(psi.mat.at(1, 0) == F2(0));
  CHECK(psi.mat.at(0, 1) == F2(1));
  CHECK(psi.degree == -2);
  // (1,2): cup and cap are identity maps.
  ArcBackend be3(3);
  Weight l12({1, 2, 1});
  auto cup12 = gen_map(be3, Gen{GenKind::Cup, 1, 0, l12}, l12);
  CHECK(cup12.mat == SparseMat<F2>::identity(cup12.mat.rows));
}

TEST_CASE("arc generators: distant crossings are isotopies") {
  // The two closures number their circles differently, so the crossing is a
  // relabelling of circles: a permutation matrix inverted by the reverse crossing.
  ArcBackend be(4);
  int tested = 0;
  for (const auto& lam : enumerate_weights(2, 4)) {
    auto f = gen_map(be, Gen{GenKind::Psi, 1, 3, lam}, lam);
    if (f.mat.rows == 0) continue;
    ++tested;
    CHECK(f.mat.rows == f.mat.cols);
    for (const auto& c : f.mat.col) CHECK(c.e.size() == 1);
    CHECK(f.degree == 0);
    CHECK(f.is_homogeneous());
    auto g = gen_map(be, Gen{GenKind::Psi, 3, 1, lam}, lam);
    CHECK(multiply(g.mat, f.mat) == SparseMat<F2>::identity(f.mat.rows));
  }
  CHECK(tested > 0);
}

TEST_CASE("check_bimodule_map rejects a corrupted map") {
  ArcBackend be(3);
  Weight lam({1, 1, 2});
  auto f = gen_map(be, Gen{GenKind::Y, 1, 0, lam}, lam);
  REQUIRE(f.mat.cols > 0);
  CHECK(check_bimodule_map<F2>(be, GradedMap<F2>::identity(f.source), {1}, {1}, lam));
  auto bad = f;
  bad.mat.set(0, 0, bad.mat.at(0, 0) + F2(1));
  CHECK_FALSE(check_bimodule_map<F2>(be, bad, {1}, {1}, lam));
}
