#include <doctest.h>

#include "arc2rep/graded.hpp"

#include <random>

using namespace arc2rep;

namespace {

// Independent rank oracle: dense Gaussian elimination over the rationals on a
// list of column vectors.
int dense_rank_q(std::vector<std::vector<long long>> cols, int n) {
  std::vector<std::vector<Q>> m(cols.size(), std::vector<Q>(n, Q(0)));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int i = 0; i < n; ++i) m[c][i] = Q(cols[c][i]);
  int rank = 0;
  for (int i = 0; i < n && rank < static_cast<int>(m.size()); ++i) {
    int piv = -1;
    for (std::size_t c = rank; c < m.size(); ++c)
      if (!m[c][i].is_zero()) {
        piv = static_cast<int>(c);
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (static_cast<int>(c) == rank || m[c][i].is_zero()) continue;
      Q f = m[c][i] * m[rank][i].inverse();
      for (int k = 0; k < n; ++k) m[c][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// A = span{1, x} with degrees -1, +1; A (x) A with basis 11, 1x, x1, xx.
GradedSpace a_tensor_a() { return GradedSpace({-2, 0, 0, 2}, 0, {"11", "1x", "x1", "xx"}); }

}  // namespace

TEST_CASE("scalars: field axioms spot checks") {
  CHECK(F2(1) + F2(1) == F2(0));
  CHECK(F2(1) * F2(1) == F2(1));
  CHECK_THROWS(F2(0).inverse());
  Q a(1, 3), b(2, 3);
  CHECK(a + b == Q(1));
  CHECK(a * Q(3) == Q(1));
  CHECK(b.inverse() == Q(3, 2));
  CHECK(-a + a == Q(0));
  CHECK_THROWS(Q(0).inverse());
}

TEST_CASE("quotient_with_section: trivial examples") {
  GradedSpace amb({0, 0});
  auto q0 = quotient_with_section<Q>(amb, {});
  CHECK(q0.space.dim() == 2);

  SparseVec<Q> rel;
  rel.e = {{0, Q(1)}, {1, Q(-1)}};
  auto q1 = quotient_with_section<Q>(amb, {rel});
  CHECK(q1.space.dim() == 1);
  CHECK(apply(q1.project.mat, SparseVec<Q>::unit(0)) == apply(q1.project.mat, SparseVec<Q>::unit(1)));
}

TEST_CASE("quotient_with_section: A(x)A modulo x(x)1 - 1(x)x") {
  GradedSpace amb = a_tensor_a();
  SparseVec<Q> rel;
  rel.e = {{1, Q(-1)}, {2, Q(1)}};  // x(x)1 - 1(x)x
  auto q = quotient_with_section<Q>(amb, {rel});
  auto dims = q.space.dims_by_degree();
  CHECK(dims[-2] == 1);
  CHECK(dims[0] == 1);
  CHECK(dims[2] == 1);
  // Oracle: per-degree dimension equals ambient dimension minus relation rank.
  CHECK(3 == 4 - dense_rank_q({{0, -1, 1, 0}}, 4));
  // section then project is the identity.
  auto sp = compose(q.project, q.section);
  CHECK(map_equal(sp, GradedMap<Q>::identity(q.space)));
  // project kills the relation.
  CHECK(apply(q.project.mat, rel).empty());
  // project then section is idempotent.
  auto ps = compose(q.section, q.project);
  CHECK(map_equal(compose(ps, ps), ps));
}

TEST_CASE("quotient_with_section: rejects non-homogeneous relations") {
  SparseVec<Q> rel;
  rel.e = {{0, Q(1)}, {1, Q(1)}};
  CHECK_THROWS_AS(quotient_with_section<Q>(a_tensor_a(), {rel}), std::invalid_argument);
}

TEST_CASE("quotient_with_section: random homogeneous relations match the rank oracle") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    int n0 = 1 + trial % 4, n1 = 1 + (trial / 4) % 4;
    std::vector<int> degs(n0, 0);
    degs.insert(degs.end(), n1, 2);
    GradedSpace amb(degs);
    std::vector<SparseVec<Q>> rels;
    std::vector<std::vector<long long>> cols0, cols1;
    for (int r = 0; r < 3; ++r) {
      bool low = (r + trial) % 2 == 0;
      std::vector<long long> dense(n0 + n1, 0);
      SparseVec<Q> v;
      for (int i = 0; i < n0 + n1; ++i) {
        if ((i < n0) != low) continue;
        dense[i] = coef(rng);
        if (dense[i]) v.e.emplace_back(i, Q(dense[i]));
      }
      rels.push_back(v);
      (low ? cols0 : cols1).push_back(dense);
    }
    auto q = quotient_with_section<Q>(amb, rels);
    int rank = dense_rank_q(cols0, n0 + n1) + dense_rank_q(cols1, n0 + n1);
    CHECK(q.space.dim() == n0 + n1 - rank);
    CHECK(map_equal(compose(q.project, q.section), GradedMap<Q>::identity(q.space)));
    for (const auto& r : rels) CHECK(apply(q.project.mat, r).empty());
    CHECK(q.project.is_homogeneous());
    CHECK(q.section.is_homogeneous());
  }
}

TEST_CASE("graded_dim examples and shift law") {
  CHECK(graded_dim(GradedSpace()).is_zero());
  GradedSpace a({-1, 1});
  CHECK(graded_dim(a) == Laurent::monomial(-1) + Laurent::monomial(1));
  GradedSpace aa = a_tensor_a();
  CHECK(graded_dim(aa) == graded_dim(a) * graded_dim(a));
  for (int s = -4; s <= 4; ++s) CHECK(graded_dim(aa.shifted(s)) == Laurent::monomial(s) * graded_dim(aa));
}

TEST_CASE("map_equal semantics") {
  GradedSpace v({0, 2});
  auto id = GradedMap<F2>::identity(v);
  auto z = GradedMap<F2>::zero(v, v, 0);
  CHECK(map_equal(id, id));
  CHECK_FALSE(map_equal(id, z));
  CHECK(map_equal(add(id, id), z));
  auto z2 = GradedMap<F2>::zero(v, v, 2);
  CHECK_THROWS_AS(map_equal(id, z2), std::invalid_argument);
  auto zs = GradedMap<F2>::zero(v.shifted(1), v, 0);
  CHECK_THROWS_AS(map_equal(id, zs), std::invalid_argument);
}

TEST_CASE("graded maps: composition degree is additive and homogeneity is detected") {
  GradedSpace v({0, 2, 4});
  SparseMat<Q> up(3, 3);
  up.set(1, 0, Q(1));
  up.set(2, 1, Q(3));
  GradedMap<Q> f(v, v, 2, up);
  CHECK(f.is_homogeneous());
  auto ff = compose(f, f);
  CHECK(ff.degree == 4);
  CHECK(ff.is_homogeneous());
  CHECK(ff.mat.at(2, 0) == Q(3));
  SparseMat<Q> bad = up;
  bad.set(0, 0, Q(1));
  CHECK_FALSE(GradedMap<Q>(v, v, 2, bad).is_homogeneous());
}

TEST_CASE("linear algebra helpers") {
  SparseMat<Q> m(2, 2);
  m.set(0, 0, Q(2));
  m.set(0, 1, Q(1));
  m.set(1, 1, Q(1));
  auto inv = inverse(m);
  CHECK(multiply(m, inv) == SparseMat<Q>::identity(2));
  CHECK(rank(m) == 2);
  SparseMat<F2> s(2, 2);
  s.set(0, 0, F2(1));
  s.set(1, 0, F2(1));
  s.set(0, 1, F2(1));
  s.set(1, 1, F2(1));
  CHECK(rank(s) == 1);
  CHECK_THROWS(inverse(s));
}

TEST_CASE("Laurent polynomials") {
  Laurent q = Laurent::monomial(1), qi = Laurent::monomial(-1);
  CHECK((q + qi).is_bar_symmetric());
  CHECK_FALSE(q.is_bar_symmetric());
  CHECK(Laurent::quantum_int(2) == q + qi);
  CHECK(Laurent::quantum_int(3) * (q - qi) == Laurent::monomial(3) - Laurent::monomial(-3));
  CHECK(Laurent::quantum_int(-2) == -(q + qi));
  CHECK((q + qi).str() == "q^-1 + q");
}
