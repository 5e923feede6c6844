#pragma once
#include <memory>
#include <vector>

#include "mwf/group_algebra.hpp"
#include "mwf/metaplectic.hpp"

namespace mwf {

// Spherical Demazure-Lusztig operators built from the ordinary Weyl action:
//   Ts_a = cs(a) [w_a] + bs(a) [1],
//   cs(a) = (1 - v e^{n(a)a})/(1 - e^{n(a)a}),  bs(a) = (v-1)/(1 - e^{n(a)a}),
// together with the spherical function and the Poincare-series identity
// sum_w G^w = W(v) for G = prod_{g>0} cs(g).
class SphericalOps {
 public:
  explicit SphericalOps(std::shared_ptr<const MetaplecticData> md) : md_(std::move(md)) {}

  const MetaplecticData& md() const { return *md_; }
  int n() const { return md_->n(); }
  std::size_t rank() const { return md_->rs().rank(); }

  RationalElement cs_fn(const LatticeVector& coroot) const;
  RationalElement bs_fn(const LatticeVector& coroot) const;

  // Ts_a(e^l) is a polynomial only when n(a) | <l,a>: modulo 1 - e^{n(a)a}
  // the numerator reduces to (1-v)(e^{res a} - 1), res = <l,a> mod n(a).  The
  // operators therefore act on the fraction field; only coset-summed values
  // collapse back to polynomials.
  RationalElement ts_simple_rational(int a, const RationalElement& f) const;
  RationalElement ts_word_rational(const std::vector<int>& word, const RationalElement& f) const;
  // exact-division variants; throw when the result is not a polynomial
  AlgebraElement ts_simple(int a, const AlgebraElement& f) const;
  AlgebraElement ts_word(const std::vector<int>& word, const AlgebraElement& f) const;

  // (Ts_a + 1)(Ts_a - v) f, which must vanish
  RationalElement hecke_defect(int a, const RationalElement& f) const;

  // prod_{g>0} (1 - v e^{-n(g)g})/(1 - e^{-n(g)g}); negative exponents,
  // unlike the operator coefficient cs_fn
  RationalElement gamma() const;
  // Poincare polynomial of a set of Weyl elements as a coefficient in v
  CoeffElement poincare(const std::vector<int>& ids) const;

  // v^{<rho,l>} sum over minimal coset representatives of Ts_w(e^l); l dominant
  RationalElement spherical_rational(const LatticeVector& lam) const;
  // same, collapsed by exact division; throws when the value is not polynomial
  // (possible when some <l,a> is not divisible by n(a))
  AlgebraElement spherical_via_t(const LatticeVector& lam) const;
  // sum_w G^w e^{wl} (no stabilizer division, no v^{<rho,l>} factor)
  RationalElement gamma_sum(const LatticeVector& lam) const;

  // W_l(v) * sum_{W^l} Ts_w(e^l) == sum_w G^w e^{wl}
  bool verify_spherical_routes(const LatticeVector& lam) const;
  // sum_w G^w == W(v)
  bool verify_macdonald() const;
  bool verify_hecke(const LatticeVector& lam) const;
  bool verify_stabilizer_property(const LatticeVector& lam) const;

 private:
  std::shared_ptr<const MetaplecticData> md_;
};

}  // namespace mwf
