#pragma once
#include <memory>
#include <optional>
#include <vector>

#include "mwf/cg_action.hpp"
#include "mwf/group_algebra.hpp"
#include "mwf/metaplectic.hpp"

namespace mwf {

// Demazure-Lusztig operators T_a = c(a) (w_a *) + b(a) id with
//   b(a) = (v-1)/(1 - e^{n(a)a}),  c(a) = (1 - v e^{-n(a)a})/(1 - e^{n(a)a}),
// their word compositions, the symmetrizer P = sum_w T_w, and the closed
// alternating-sum form of P(e^l).
class DLOperators {
 public:
  explicit DLOperators(std::shared_ptr<const MetaplecticData> md)
      : md_(std::move(md)), cg_(md_) {}

  const MetaplecticData& md() const { return *md_; }
  const CGAction& cg() const { return cg_; }
  int n() const { return md_->n(); }
  std::size_t rank() const { return md_->rs().rank(); }

  RationalElement b_fn(int a) const;
  RationalElement c_fn(int a) const;

  RationalElement t_simple_rational(int a, const RationalElement& f) const;
  // polynomial-to-polynomial form; throws on inexact division (never expected)
  AlgebraElement t_simple(int a, const AlgebraElement& f) const;
  AlgebraElement t_word(const std::vector<int>& word, const AlgebraElement& f) const;

  // closed form of T_a(e^l) for <l,a> >= 0
  AlgebraElement t_closed_form(int a, const LatticeVector& lam) const;

  // P(e^l) = sum over W of T_w(e^l), canonical reduced words; l dominant
  AlgebraElement symmetrize(const LatticeVector& lam) const;
  // (Dv/D) sum_w (-1)^{l(w)} (prod_{b in inversions(w^{-1})} e^{-n(b)b}) (w * e^l)
  RationalElement cs_rhs(const LatticeVector& lam) const;

  // Dv = prod_{g>0} (1 - v e^{-n(g)g}); D is the same product at v = 1
  AlgebraElement delta_v() const;
  AlgebraElement delta_1() const;

  struct Whittaker {
    bool dominant = false;
    AlgebraElement value;  // v^{<rho,l>} sum_w T_w(e^l); zero when nondominant
  };
  Whittaker whittaker(const LatticeVector& lam) const;

  // closed form of (T_1 + T_a)(e^l) on the rank-one line through l:
  // e^l + (1-v) sum_{1<=k<=<l,a>, n(a)|k} e^{l-ka} + v g_{Q(a)(1+<l,a>)} e^{w_a l - a};
  // for rank one this is the full Whittaker sum without the outer v^{<rho,l>}
  AlgebraElement whittaker_line_closed(int a, const LatticeVector& lam) const;

 private:
  std::shared_ptr<const MetaplecticData> md_;
  CGAction cg_;
};

// Rank 2: compare the two alternating m-letter T-words on a box.
BraidReport verify_braid_dl(const DLOperators& dl, int box);

}  // namespace mwf
