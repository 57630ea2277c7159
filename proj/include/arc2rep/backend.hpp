// The interface shared by the arc-algebra and coinvariant-ring models.
#pragma once

#include "arc2rep/graded.hpp"
#include "arc2rep/weights.hpp"

#include <string>

namespace arc2rep {

enum class GenKind { Y, Cup, Cap, Psi };

// A generating 2-morphism. mu is the weight on the right of its source word.
//   Y_i:       E_i        -> E_i
//   Cup_i:     (empty)    -> E_{-i} E_i
//   Cap_i:     E_{-i} E_i -> (empty)
//   Psi_{i,j}: E_i E_j    -> E_j E_i
struct Gen {
  GenKind kind;
  int i = 0;
  int j = 0;
  Weight mu;
};

Word gen_source(const Gen& g);
Word gen_target(const Gen& g);
// Degree from the degree table.
int gen_degree(const Gen& g);
std::string gen_str(const Gen& g);

template <class F>
class Backend {
 public:
  virtual ~Backend() = default;

  virtual std::string name() const = 0;
  virtual int n() const = 0;

  // The flattened bimodule E_w I_lambda; dimension 0 when the 1-morphism is zero.
  virtual GradedSpace space(const Word& w, const Weight& lam) = 0;

  // Whether the backend constructs g directly.
  virtual bool supports(const Gen& g) const = 0;

  // Matrix of 1_u g 1_v on E_{u src v} I_lam -> E_{u tgt v} I_lam, where
  // lam + content(v) = g.mu.
  virtual SparseMat<F> generator(const Gen& g, const Word& u, const Word& v, const Weight& lam) = 0;

  // Actions of the algebras at the two ends: basis element h acting on E_w I_lam.
  virtual int left_algebra_dim(const Word& w, const Weight& lam) = 0;
  virtual int right_algebra_dim(const Word& w, const Weight& lam) = 0;
  virtual SparseMat<F> left_action(const Word& w, const Weight& lam, int h) = 0;
  virtual SparseMat<F> right_action(const Word& w, const Weight& lam, int h) = 0;
};

// True iff f commutes with both actions on every basis element.
template <class F>
bool check_bimodule_map(Backend<F>& be, const GradedMap<F>& f, const Word& src, const Word& tgt, const Weight& lam) {
  int nl = be.left_algebra_dim(src, lam);
  if (nl != be.left_algebra_dim(tgt, lam)) return false;
  for (int h = 0; h < nl; ++h)
    if (multiply(f.mat, be.left_action(src, lam, h)) != multiply(be.left_action(tgt, lam, h), f.mat)) return false;
  int nr = be.right_algebra_dim(src, lam);
  if (nr != be.right_algebra_dim(tgt, lam)) return false;
  for (int h = 0; h < nr; ++h)
    if (multiply(f.mat, be.right_action(src, lam, h)) != multiply(be.right_action(tgt, lam, h), f.mat)) return false;
  return true;
}

}  // namespace arc2rep
