// The coinvariant-ring model over Q: rings C^mu of partial flag varieties,
// splitting bimodules C^{lambda(i)} with their distinguished generator zeta,
// tensor products over intermediate rings, and the generating 2-morphisms.
#pragma once

#include "arc2rep/backend.hpp"
#include "arc2rep/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace arc2rep {

// Largest total size of a composition the ring builder accepts.
inline constexpr int kMaxCoinvariantSize = 8;

// A commutative polynomial in the ring generators, keyed by exponent vectors.
using Poly = std::map<std::vector<int>, Q>;

// C^mu = Q[x_{j,r} : 1 <= r <= mu_j] modulo the homogeneous parts of
// prod_j (1 + x_{j,1} t + ... + x_{j,mu_j} t^{mu_j}) = 1. The generator x_{j,r}
// has cohomological degree 2r. Blocks are 0-indexed.
class CoinvariantRing {
 public:
  using Elem = SparseVec<Q>;

  explicit CoinvariantRing(std::vector<int> mu);

  const std::vector<int>& composition() const { return mu_; }
  int size() const { return size_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  // Half the top cohomological degree.
  int top() const { return top_; }
  // Cohomological degree of basis element b.
  int degree(int b) const { return 2 * half_degree_[b]; }
  int half_degree(int b) const { return half_degree_[b]; }
  std::string basis_label(int b) const;
  // Number of normal-form basis elements in each half degree.
  std::vector<int> dims_by_half_degree() const;

  Elem one() const { return Elem::unit(0); }
  // x(mu)_{block,r}: 1 for r = 0 and 0 for r < 0 or r > mu_block.
  Elem gen(int block, int r) const;
  // The degree-2m part of prod over blocks other than `block`; 1 for m = 0, 0 for m < 0.
  Elem dual(int block, int m) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, int e) const;
  // Normal form of a polynomial in the generators.
  Elem reduce(const Poly& p) const;

  int generator_count() const { return static_cast<int>(gens_.size()); }
  // The (block, r) pair of generator g.
  std::pair<int, int> generator(int g) const { return gens_[g]; }
  // The normal-form monomial behind basis element b.
  const std::vector<int>& basis_monomial(int b) const { return basis_[b]; }

 private:
  struct DegreePiece {
    std::vector<std::vector<int>> monomials;
    std::map<std::vector<int>, int> index;
    RowEchelon<Q> ech;
    std::vector<int> basis_of;  // ambient index -> global basis index, or -1
  };

  Elem reduce_monomial(const std::vector<int>& m) const;
  Elem basis_product(int a, int b) const;

  std::vector<int> mu_;
  int size_ = 0;
  int top_ = 0;
  std::vector<std::pair<int, int>> gens_;
  std::map<std::pair<int, int>, int> gen_index_;
  std::vector<DegreePiece> pieces_;  // by half degree 0..top
  std::vector<std::vector<int>> basis_;
  std::vector<int> half_degree_;
  std::vector<std::vector<Elem>> table_;  // eager products for small rings
};

// Checks the capacity bound and builds C^mu.
std::shared_ptr<const CoinvariantRing> build_coinvariant_ring(const std::vector<int>& mu);

// (sum mu)! / prod mu_j!.
long long multinomial(const std::vector<int>& mu);
// The Poincare polynomial of C^mu in q = t^2, as coefficients by half degree,
// from the product of Gaussian binomials computed by Pascal's rule.
std::vector<long long> q_multinomial(const std::vector<int>& mu);

// The ring map C^coarse -> C^fine where coarse merges fine blocks p and p+1.
struct MergeHom {
  std::shared_ptr<const CoinvariantRing> coarse;
  std::shared_ptr<const CoinvariantRing> fine;
  int p = 0;
  SparseMat<Q> mat;  // images of the coarse basis

  CoinvariantRing::Elem apply(const CoinvariantRing::Elem& x) const { return arc2rep::apply(mat, x); }
};

MergeHom build_merge_hom(std::shared_ptr<const CoinvariantRing> coarse, std::shared_ptr<const CoinvariantRing> fine,
                         int p);

// Refinements lambda(i) and lambda(-i) of a composition; nullopt when a part
// would become negative.
std::optional<std::vector<int>> refine(const std::vector<int>& lam, int i);

enum class ShiftConvention { Verbatim, Corrected };

// Grading shift of E_i I_lambda: r_{i,lambda} and s_{i,lambda} as printed, or
// 1 - lambda_{i+1} and 1 - lambda_i after correction.
int letter_shift(int i, const Weight& lam, ShiftConvention c);

// E_i I_lambda = C^{lambda(i)} as a (C^{lambda+alpha_i}, C^lambda)-bimodule. It is
// free as a left module on zeta^0, ..., zeta^{rank-1}.
struct SplitBimodule {
  int letter = 0;
  Weight right;
  Weight left;
  std::shared_ptr<const CoinvariantRing> ring;
  MergeHom left_hom;
  MergeHom right_hom;
  int zeta_block = 0;
  int rank = 0;
  std::vector<CoinvariantRing::Elem> zeta_pow;  // zeta^a for a <= ring top
  // decompose[b] lists (a, c) with basis element b = sum_a left(c) zeta^a.
  std::vector<std::vector<std::pair<int, CoinvariantRing::Elem>>> decompose;

  const CoinvariantRing::Elem& zeta_power(int a) const;
};

// E_w I_lambda flattened: basis b (x) zeta^{a_2} (x) ... (x) zeta^{a_L} with b a
// basis element of the leftmost factor.
struct CoinvWordModule {
  bool zero = true;
  Word word;
  Weight lam;
  std::vector<Weight> weights;  // weights[q] is left of letter q; weights[L] = lam
  std::vector<std::shared_ptr<const SplitBimodule>> factors;
  std::shared_ptr<const CoinvariantRing> ring;  // C^lam for the empty word
  std::vector<int> radix;                       // rank of each factor after the first
  int first_dim = 0;
  GradedSpace space;

  int dim() const { return space.dim(); }
  int length() const { return static_cast<int>(word.size()); }
  int index(int b, const std::vector<int>& a) const;
  // Inverse of index: the first-factor basis element and the zeta exponents.
  std::pair<int, std::vector<int>> split(int idx) const;
};

class CoinvariantBackend : public Backend<Q> {
 public:
  explicit CoinvariantBackend(int n, ShiftConvention shifts = ShiftConvention::Corrected) : n_(n), shifts_(shifts) {}

  std::string name() const override { return "coinvariant"; }
  int n() const override { return n_; }
  ShiftConvention shifts() const { return shifts_; }

  std::shared_ptr<const CoinvariantRing> ring(const std::vector<int>& mu);
  std::shared_ptr<const SplitBimodule> split_bimodule(int i, const Weight& lam);
  std::shared_ptr<const CoinvWordModule> word_module(const Word& w, const Weight& lam);

  GradedSpace space(const Word& w, const Weight& lam) override;
  bool supports(const Gen& g) const override;
  SparseMat<Q> generator(const Gen& g, const Word& u, const Word& v, const Weight& lam) override;

  int left_algebra_dim(const Word& w, const Weight& lam) override;
  int right_algebra_dim(const Word& w, const Weight& lam) override;
  SparseMat<Q> left_action(const Word& w, const Weight& lam, int h) override;
  SparseMat<Q> right_action(const Word& w, const Weight& lam, int h) override;

  // Coordinates of the pure tensor f_0 (x) ... (x) f_{L-1} in the flattened basis;
  // f_q is an element of factor q's ring.
  SparseVec<Q> normalize(const CoinvWordModule& m, std::vector<CoinvariantRing::Elem> f);

 private:
  int n_;
  ShiftConvention shifts_;
  std::mutex mu_;
  std::map<std::vector<int>, std::shared_ptr<const CoinvariantRing>> rings_;
  std::map<std::pair<int, std::vector<int>>, std::shared_ptr<const SplitBimodule>> splits_;
  std::map<std::pair<Word, std::vector<int>>, std::shared_ptr<const CoinvWordModule>> words_;
};

// One generator in the degree audit of the shift conventions.
struct ShiftAuditEntry {
  Gen gen;
  int declared = 0;          // from the degree table
  int verbatim = 0;          // realized with the printed shifts
  int corrected = 0;         // realized with the corrected shifts
  bool homogeneous = false;  // the map has a single realized degree
  bool nonzero = false;
  int offset() const { return declared - verbatim; }
};

// Every generator the backend builds directly at (k, n), realized under both
// shift conventions.
std::vector<ShiftAuditEntry> shift_audit(int k, int n);

}  // namespace arc2rep
