#pragma once
#include <map>
#include <memory>
#include <vector>

#include "mwf/group_algebra.hpp"
#include "mwf/metaplectic.hpp"

namespace mwf {

// A word in the free product <s,t | s^2 = t^2 = 1>, stored reduced, i.e. as
// an alternating sequence of letters in {0,1}.
using StarWord = std::vector<int>;

StarWord star_concat(int letter, const StarWord& w);

// Expansion of a product of Demazure-Lusztig letters in the twisted group
// algebra V[<s,t>_star], multiplication f[w] g[w'] = f g^w [w w'] where the
// coefficient is moved across by the ordinary Weyl action of the image of w.
struct TwistedExpansion {
  std::map<StarWord, RationalElement> coeffs;
};

class TwistedAlgebra {
 public:
  explicit TwistedAlgebra(std::shared_ptr<const MetaplecticData> md) : md_(std::move(md)) {}

  const MetaplecticData& md() const { return *md_; }
  int n() const { return md_->n(); }
  std::size_t rank() const { return md_->rs().rank(); }

  // metaplectic coefficients on the sublattice spanned by n(g)g:
  //   b(g) = (v-1)/(1 - e^{n(g)g}),  c(g) = (1 - v e^{-n(g)g})/(1 - e^{n(g)g})
  RationalElement b_fn(const LatticeVector& coroot) const;
  RationalElement c_fn(const LatticeVector& coroot) const;
  // non-metaplectic control coefficients (v plays the role of q^{-1}):
  //   b0(g) = (1-v)/(1 - e^{g}),  c0(g) = (1 - v e^{-g})/(1 - e^{g})
  RationalElement b_classical(const LatticeVector& coroot) const;
  RationalElement c_classical(const LatticeVector& coroot) const;

  // product T_{l_1} ... T_{l_m} expanded over the star group; metaplectic
  // selects b_fn/c_fn versus b_classical/c_classical
  TwistedExpansion expand(const std::vector<int>& letters, bool metaplectic) const;
  // same expansion but collapsed onto the finite Weyl group (image of the
  // star group under multiplication), keyed by element id
  std::map<int, RationalElement> expand_weyl(const std::vector<int>& letters,
                                             bool metaplectic) const;

  struct FgReport {
    long cases = 0;
    long failures = 0;
    bool top_ok = false;
    bool ok() const { return failures == 0 && top_ok; }
  };
  // expand the two alternating m-letter products (m = order of w_a w_b) and
  // compare coefficients star-word by star-word; the two top words must both
  // carry prod_{g>0} c(g)
  FgReport verify_fg(bool metaplectic) const;

 private:
  RationalElement cb_build(const LatticeVector& num_exp, const LatticeVector& den_exp,
                           bool b_form) const;
  std::shared_ptr<const MetaplecticData> md_;
};

}  // namespace mwf
