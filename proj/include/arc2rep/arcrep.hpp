// The arc-algebra model over F2: bimodules of flat tangles and the generating
// 2-morphisms realized as cobordism maps between closed diagrams.
#pragma once

#include "arc2rep/arcalg.hpp"
#include "arc2rep/backend.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace arc2rep {

// E_w I_lambda as the direct sum over matching pairs (top a, bottom b) of the
// TQFT applied to the closure cups(b) ++ D ++ caps(a).
struct ArcBimodule {
  struct Summand {
    int a;
    int b;
    int offset;
    ClosedDiagram closed;
  };

  bool zero = true;
  Word word;
  Weight lam;
  Weight top;
  std::vector<Layer> layers;  // D, bottom to top
  int r_bot = 0;
  int r_top = 0;
  std::vector<Summand> summands;  // ordered by (a, b)
  GradedSpace space;

  int dim() const { return space.dim(); }
  const Summand& summand(int a, int b) const;
  // Graded dimension of the (a, b) summand, shift included.
  Laurent summand_graded_dim(int a, int b) const;
};

// The layers of E_w I_lambda listed bottom to top, or nullopt if zero.
std::optional<std::vector<Layer>> arc_word_layers(const Word& w, const Weight& lam);

class ArcBackend : public Backend<F2> {
 public:
  explicit ArcBackend(int n) : n_(n) {}

  std::string name() const override { return "arc"; }
  int n() const override { return n_; }

  std::shared_ptr<const ArcBimodule> bimodule(const Word& w, const Weight& lam);
  GradedSpace space(const Word& w, const Weight& lam) override;
  bool supports(const Gen& g) const override;
  SparseMat<F2> generator(const Gen& g, const Word& u, const Word& v, const Weight& lam) override;

  int left_algebra_dim(const Word& w, const Weight& lam) override;
  int right_algebra_dim(const Word& w, const Weight& lam) override;
  SparseMat<F2> left_action(const Word& w, const Weight& lam, int h) override;
  SparseMat<F2> right_action(const Word& w, const Weight& lam, int h) override;

 private:
  SparseMat<F2> action(const Word& w, const Weight& lam, int h, bool left);

  int n_;
  std::mutex mu_;
  std::map<std::pair<Word, std::vector<int>>, std::shared_ptr<const ArcBimodule>> cache_;
};

}  // namespace arc2rep
