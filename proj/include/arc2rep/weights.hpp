// Weights of the representation with highest weight 2*omega_k of sl(n), signed
// simple-root indices and words in them.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace arc2rep {

// Entries lambda_1..lambda_n in {0,1,2}; stored 0-indexed.
struct Weight {
  std::vector<int> v;

  Weight() = default;
  explicit Weight(std::vector<int> entries) : v(std::move(entries)) {}

  int n() const { return static_cast<int>(v.size()); }
  int total() const;
  int k() const { return total() / 2; }
  // 1-indexed access, matching the usual lambda_i notation.
  int at(int i) const { return v[i - 1]; }
  // Half the number of entries equal to 1.
  int gamma() const;
  bool valid() const;  // all entries in {0,1,2} with even total
  std::string str() const;

  friend bool operator==(const Weight& a, const Weight& b) { return a.v == b.v; }
  friend bool operator!=(const Weight& a, const Weight& b) { return a.v != b.v; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.v < b.v; }
};

using Word = std::vector<int>;  // letters are signed indices, written left to right

inline int sgn(int i) { return i > 0 ? 1 : -1; }
inline int iabs(int i) { return i < 0 ? -i : i; }

// All weights of length n over {0,1,2} summing to 2k, in decreasing
// lexicographic order so that (2,0) precedes (1,1) precedes (0,2).
std::vector<Weight> enumerate_weights(int k, int n);

// (alpha_i, lambda) = sgn(i) * (lambda_|i| - lambda_|i|+1).
int cartan_pairing(int i, const Weight& lam);

// (alpha_i, alpha_j) for signed indices.
int cartan_entry(int i, int j);

// lambda + alpha_i, or nullopt when an entry leaves {0,1,2}.
std::optional<Weight> apply_root(const Weight& lam, int i);

// lambda + alpha_i on compositions with arbitrary nonnegative parts.
std::optional<Weight> apply_root_unbounded(const Weight& lam, int i);

// c_1..c_{n-1} with c_i = #(i) - #(-i).
std::vector<int> word_content(const Word& w, int n);

// lambda + content(w), or nullopt if out of range as a plain vector operation.
std::optional<Weight> add_content(const Weight& lam, const Word& w);

// Weights met while applying the letters of w to lambda from right to left:
// result[j] is the weight to the right of letter j (so result[w.size()] = lambda
// and result[0] is the leftmost weight). nullopt if any step leaves the range.
std::optional<std::vector<Weight>> word_weights(const Word& w, const Weight& lam, bool bounded = true);

std::string word_str(const Word& w);

// Number of nonnegative compositions of 2k into n parts bounded by 2, from the
// coefficient of z^{2k} in (1 + z + z^2)^n.
long long weight_count_generating(int k, int n);

}  // namespace arc2rep
