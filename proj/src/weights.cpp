#include "arc2rep/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace arc2rep {

int Weight::total() const { return std::accumulate(v.begin(), v.end(), 0); }

int Weight::gamma() const { return static_cast<int>(std::count(v.begin(), v.end(), 1)) / 2; }

bool Weight::valid() const {
  for (int x : v)
    if (x < 0 || x > 2) return false;
  return total() % 2 == 0;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
  return s + ")";
}

std::vector<Weight> enumerate_weights(int k, int n) {
  std::vector<Weight> out;
  if (k < 0 || n < 1 || 2 * k > 2 * n) return out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    for (int x = 2; x >= 0; --x) {
      if (x > left || left - x > 2 * (n - pos - 1)) continue;
      cur[pos] = x;
      rec(pos + 1, left - x);
    }
  };
  rec(0, 2 * k);
  return out;
}

int cartan_pairing(int i, const Weight& lam) {
  int a = iabs(i);
  if (a < 1 || a >= lam.n()) throw std::out_of_range("cartan_pairing: index out of range");
  return sgn(i) * (lam.at(a) - lam.at(a + 1));
}

int cartan_entry(int i, int j) {
  int a = iabs(i), b = iabs(j);
  int base = a == b ? 2 : (iabs(a - b) == 1 ? -1 : 0);
  return sgn(i) * sgn(j) * base;
}

std::optional<Weight> apply_root_unbounded(const Weight& lam, int i) {
  int a = iabs(i);
  if (a < 1 || a >= lam.n()) throw std::out_of_range("apply_root: index out of range");
  Weight r = lam;
  r.v[a - 1] += sgn(i);
  r.v[a] -= sgn(i);
  if (r.v[a - 1] < 0 || r.v[a] < 0) return std::nullopt;
  return r;
}

std::optional<Weight> apply_root(const Weight& lam, int i) {
  auto r = apply_root_unbounded(lam, i);
  if (!r) return r;
  int a = iabs(i);
  if (r->v[a - 1] > 2 || r->v[a] > 2) return std::nullopt;
  return r;
}

std::vector<int> word_content(const Word& w, int n) {
  std::vector<int> c(std::max(n - 1, 0), 0);
  for (int i : w) {
    if (iabs(i) < 1 || iabs(i) >= n) throw std::out_of_range("word_content: index out of range");
    c[iabs(i) - 1] += sgn(i);
  }
  return c;
}

std::optional<Weight> add_content(const Weight& lam, const Word& w) {
  Weight r = lam;
  for (int i : w) {
    int a = iabs(i);
    if (a < 1 || a >= lam.n()) throw std::out_of_range("add_content: index out of range");
    r.v[a - 1] += sgn(i);
    r.v[a] -= sgn(i);
  }
  for (int x : r.v)
    if (x < 0) return std::nullopt;
  return r;
}

std::optional<std::vector<Weight>> word_weights(const Word& w, const Weight& lam, bool bounded) {
  std::vector<Weight> ws(w.size() + 1);
  ws[w.size()] = lam;
  for (std::size_t j = w.size(); j-- > 0;) {
    auto nxt = bounded ? apply_root(ws[j + 1], w[j]) : apply_root_unbounded(ws[j + 1], w[j]);
    if (!nxt) return std::nullopt;
    ws[j] = *nxt;
  }
  return ws;
}

std::string word_str(const Word& w) {
  std::string s = "(";
  for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "," : "") + std::to_string(w[j]);
  return s + ")";
}

long long weight_count_generating(int k, int n) {
  std::vector<long long> poly{1};
  for (int t = 0; t < n; ++t) {
    std::vector<long long> nxt(poly.size() + 2, 0);
    for (std::size_t d = 0; d < poly.size(); ++d)
      for (int e = 0; e <= 2; ++e) nxt[d + e] += poly[d];
    poly = std::move(nxt);
  }
  return 2 * k < static_cast<int>(poly.size()) ? poly[2 * k] : 0;
}

}  // namespace arc2rep
