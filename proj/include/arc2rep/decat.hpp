// Decategorification of the arc model: Laurent matrices of the functors E_i on
// the Grothendieck groups of the weight categories, the quantum sl(n)
// relations they satisfy, graded-dimension identities between bimodules, and
// weight-space dimensions checked against tableau counts.
#pragma once

#include "arc2rep/arcrep.hpp"
#include "arc2rep/laurent.hpp"
#include "arc2rep/weights.hpp"

#include <memory>
#include <string>
#include <vector>

namespace arc2rep {

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static LaurentMatrix identity(int n);
  static LaurentMatrix scalar(int n, const Laurent& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Laurent& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Laurent& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  bool is_zero() const;
  std::string str() const;

  LaurentMatrix& operator+=(const LaurentMatrix& o);
  LaurentMatrix& operator-=(const LaurentMatrix& o);
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const Laurent& s, const LaurentMatrix& m);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Laurent> e_;
};

// The functor of a word at one source weight. Rows are matchings of gamma of
// the target weight, columns matchings of gamma of the source weight. A word
// that leaves the weight range has target dimension 0.
struct DecatMatrix {
  Word word;
  Weight source;
  Weight target;
  bool target_valid = false;
  LaurentMatrix m;
};

// q + q^{-1}.
Laurent quantum_two();

class Decategorifier {
 public:
  Decategorifier(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<Weight>& weights() const { return weights_; }
  // Number of matchings of gamma(lam): the rank of the Grothendieck group.
  int weight_dim(const Weight& lam) const;

  // Entry (b, a) is the graded dimension of the (b, a) summand of E_w I_lam,
  // shift included.
  DecatMatrix summand_matrix(const Word& w, const Weight& lam);
  // Summand matrix of the identity bimodule H_lam: the graded Cartan matrix.
  LaurentMatrix cartan(const Weight& lam);
  // Class of E_i applied to the indecomposable projective P_a, expanded in the
  // projectives P_b: q^{gamma(lam) - gamma(lam + alpha_i)} (q + q^{-1})^c when
  // the tangle of E_i applied to the cup diagram a is b plus c closed circles.
  DecatMatrix projective_matrix(int i, const Weight& lam);
  // Product of the letters' projective matrices.
  DecatMatrix projective_matrix(const Word& w, const Weight& lam);

 private:
  int k_;
  int n_;
  std::vector<Weight> weights_;
  ArcBackend arc_;
};

// Summand matrices of a word at every weight of (k, n).
std::vector<DecatMatrix> decat_matrix(const Word& w, int k, int n);

struct DecatCheck {
  std::string relation;
  Weight lam;
  std::vector<int> indices;
  bool pass = false;
  std::string detail;
};

struct DecatReport {
  std::vector<DecatCheck> checks;
  int failures() const;
  int passed() const { return static_cast<int>(checks.size()) - failures(); }
};

// The quantum sl(n) relations on the projective matrices at every weight:
// K relations, K E_j = q^{a_ij} E_j K, the commutator in the form
// (q - q^{-1}) [E_i, E_{-i}] = (q^p - q^{-p}) Id, commutation of distant and of
// opposite-sign distinct indices, and the quantum Serre relation. Also checks
// multiplicativity and the summand factorization D_w = C_top X_w on every word
// of length at most max_word.
DecatReport check_qgroup(int k, int n, int max_word = 3);

// Graded-dimension identities between the arc bimodules of the functor
// isomorphisms for E_i E_{-j}, E_i E_j and E_i E_i E_j, and E_i E_{-i}, summand
// by summand. These are dimension-level checks, not isomorphisms.
DecatReport bimodule_dims(Decategorifier& d, const Weight& lam, int i, int j);
// All weights and all signed index pairs.
DecatReport bimodule_dims_report(int k, int n);

// Number of semistandard tableaux of shape (2^k) with entries in 1..n and
// content lam, by brute-force filling.
long long ssyt_count(const Weight& lam, int k);
// dim V_{2 omega_k} from the Weyl dimension formula.
long long weyl_dimension(int k, int n);

struct WeightDimEntry {
  Weight lam;
  int gamma = 0;
  long long matchings = 0;
  long long catalan = 0;
  long long printed_formula = 0;  // binom(2s, s) / (s + 1) with s = 2 gamma active points
  long long ssyt = 0;
  bool pass = false;  // matchings == catalan == ssyt
};

WeightDimEntry weight_dim_check(const Weight& lam, int k, int n);

struct WeightDimReport {
  std::vector<WeightDimEntry> entries;
  long long total = 0;
  long long weyl = 0;
  int failures() const;
};

WeightDimReport weight_dim_report(int k, int n);

}  // namespace arc2rep
