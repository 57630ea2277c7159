#include <doctest.h>

#include "arc2rep/weights.hpp"

#include <set>

using namespace arc2rep;

namespace {

// Brute force over all of {0,1,2}^n.
std::set<std::vector<int>> brute_weights(int k, int n) {
  std::set<std::vector<int>> out;
  int total = 1;
  for (int j = 0; j < n; ++j) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<int> v(n);
    int c = code, s = 0;
    for (int j = 0; j < n; ++j) {
      v[j] = c % 3;
      c /= 3;
      s += v[j];
    }
    if (s == 2 * k) out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_weights examples") {
  auto w = enumerate_weights(1, 2);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Weight({2, 0}));
  CHECK(w[1] == Weight({1, 1}));
  CHECK(w[2] == Weight({0, 2}));
  CHECK(enumerate_weights(2, 2).size() == 1);
  CHECK(enumerate_weights(2, 3).size() == 6);
  CHECK(enumerate_weights(3, 2).empty());
}

TEST_CASE("enumerate_weights agrees with brute force and the generating function") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto w = enumerate_weights(k, n);
      auto b = brute_weights(k, n);
      CHECK(w.size() == b.size());
      CHECK(static_cast<long long>(w.size()) == weight_count_generating(k, n));
      for (std::size_t j = 0; j < w.size(); ++j) {
        CHECK(b.count(w[j].v) == 1);
        if (j) CHECK(w[j].v < w[j - 1].v);
      }
    }
  }
}

TEST_CASE("cartan_pairing examples") {
  CHECK(cartan_pairing(1, Weight({1, 1, 0})) == 0);
  CHECK(cartan_pairing(1, Weight({0, 2, 0})) == -2);
  CHECK(cartan_pairing(-1, Weight({0, 2, 0})) == 2);
  CHECK(cartan_pairing(2, Weight({2, 1, 0})) == 1);
}

TEST_CASE("apply_root examples") {
  CHECK(*apply_root(Weight({1, 1}), 1) == Weight({2, 0}));
  CHECK_FALSE(apply_root(Weight({2, 0}), 1).has_value());
  CHECK_FALSE(apply_root(Weight({0, 2}), -1).has_value());
  CHECK(*apply_root_unbounded(Weight({2, 1}), 1) == Weight({3, 0}));
}

TEST_CASE("word_content examples") {
  CHECK(word_content({}, 3) == std::vector<int>{0, 0});
  CHECK(word_content({1, -1}, 3) == std::vector<int>{0, 0});
  CHECK(word_content({1, 2, 1}, 3) == std::vector<int>{2, 1});
}

TEST_CASE("root action properties over all weights") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& lam : enumerate_weights(k, n)) {
        for (int a = 1; a < n; ++a) {
          for (int i : {a, -a}) {
            auto up = apply_root(lam, i);
            if (!up) continue;
            CHECK(cartan_pairing(i, *up) == cartan_pairing(i, lam) + 2);
            auto back = apply_root(*up, -i);
            REQUIRE(back.has_value());
            CHECK(*back == lam);
          }
        }
      }
    }
  }
}

TEST_CASE("word_weights applies letters right to left") {
  auto ws = word_weights({-1, 1}, Weight({0, 2}));
  REQUIRE(ws.has_value());
  CHECK((*ws)[2] == Weight({0, 2}));
  CHECK((*ws)[1] == Weight({1, 1}));
  CHECK((*ws)[0] == Weight({0, 2}));
  CHECK_FALSE(word_weights({1, 1}, Weight({1, 1})).has_value());
}
