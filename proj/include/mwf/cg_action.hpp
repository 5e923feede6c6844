#pragma once
#include <memory>
#include <vector>

#include "mwf/group_algebra.hpp"
#include "mwf/metaplectic.hpp"

namespace mwf {

// The star action of simple reflections on the localized group algebra:
// on a monomial e^l,
//   w_a * e^l = e^{w_a l} / (1 - v e^{-n(a)a}) *
//     [ (1-v) e^{res_{n(a)}(<l,a>) a} - v g_{Q(a)+B(l,a)} (e^{(n(a)-1)a} - e^{-a}) ]
// extended linearly over numerators and through the ordinary Weyl action on
// denominators.
class CGAction {
 public:
  explicit CGAction(std::shared_ptr<const MetaplecticData> md) : md_(std::move(md)) {}

  const MetaplecticData& md() const { return *md_; }
  int n() const { return md_->n(); }
  std::size_t rank() const { return md_->rs().rank(); }

  RationalElement star_simple(int a, const RationalElement& f) const;
  // word acts right-to-left: (b1,...,br) * f = w_{b1} * (... * (w_{br} * f))
  RationalElement star_word(const std::vector<int>& word, const RationalElement& f) const;
  RationalElement star_monomial_lattice(int a, const LatticeVector& lam) const;

  // w_a * (h f) = h^{w_a} (w_a * f) for h supported on the sublattice L0.
  bool check_h_linearity(int a, const AlgebraElement& h, const RationalElement& f) const;

 private:
  std::shared_ptr<const MetaplecticData> md_;
};

struct BraidReport {
  long cases = 0;
  std::vector<LatticeVector> failures;
  bool ok() const { return failures.empty(); }
};

// Rank 2: compare the two alternating m-letter star words on every lattice
// point of the box {-box..box}^2, m = Coxeter number of the pair.
BraidReport verify_braid_cg(const CGAction& cg, int box);

int coxeter_m(const RootSystem& rs);  // order of w_0 w_1 in rank 2

}  // namespace mwf
