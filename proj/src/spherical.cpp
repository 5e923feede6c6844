#include "mwf/spherical.hpp"

#include <stdexcept>

namespace mwf {

RationalElement SphericalOps::cs_fn(const LatticeVector& coroot) const {
  int nn = n();
  int ng = md_->n_of_coroot(coroot);
  AlgebraElement num = AlgebraElement::one(nn, rank());
  num.add_term(ng * coroot, -CoeffElement::v_pow(nn, 1));
  RationalElement out(std::move(num));
  out.divide_by_binomial(ng * coroot, 0, 1);
  return out;
}

RationalElement SphericalOps::bs_fn(const LatticeVector& coroot) const {
  int nn = n();
  int ng = md_->n_of_coroot(coroot);
  AlgebraElement num = AlgebraElement::one(nn, rank())
                           .scaled(CoeffElement::v_pow(nn, 1) - CoeffElement::one(nn));
  RationalElement out(std::move(num));
  out.divide_by_binomial(ng * coroot, 0, 1);
  return out;
}

RationalElement SphericalOps::ts_simple_rational(int a, const RationalElement& f) const {
  const RootSystem& rs = md_->rs();
  LatticeVector av = rs.simple_coroot(a);
  return cs_fn(av) * f.weyl(rs, rs.simple_reflection(a)) + bs_fn(av) * f;
}

AlgebraElement SphericalOps::ts_simple(int a, const AlgebraElement& f) const {
  auto p = ts_simple_rational(a, RationalElement(f)).as_polynomial();
  if (!p) throw std::logic_error("spherical operator produced a non-polynomial");
  return *p;
}

RationalElement SphericalOps::ts_word_rational(const std::vector<int>& word,
                                               const RationalElement& f) const {
  RationalElement out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = ts_simple_rational(*it, out);
  return out;
}

AlgebraElement SphericalOps::ts_word(const std::vector<int>& word, const AlgebraElement& f) const {
  AlgebraElement out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = ts_simple(*it, out);
  return out;
}

RationalElement SphericalOps::hecke_defect(int a, const RationalElement& f) const {
  int nn = n();
  RationalElement tf = ts_simple_rational(a, f);
  RationalElement out = ts_simple_rational(a, tf);
  out += tf.scaled(CoeffElement::one(nn) - CoeffElement::v_pow(nn, 1));
  out -= f.scaled(CoeffElement::v_pow(nn, 1));
  return out;
}

RationalElement SphericalOps::gamma() const {
  // note the negative exponents, unlike the operator coefficient cs_fn
  int nn = n();
  RationalElement out(AlgebraElement::one(nn, rank()));
  for (const auto& g : md_->rs().positive_coroots()) {
    int ng = md_->n_of_coroot(g);
    AlgebraElement num = AlgebraElement::one(nn, rank());
    num.add_term(-ng * g, -CoeffElement::v_pow(nn, 1));
    RationalElement factor(std::move(num));
    factor.divide_by_binomial(-ng * g, 0, 1);
    out = out * factor;
  }
  return out;
}

CoeffElement SphericalOps::poincare(const std::vector<int>& ids) const {
  CoeffElement out = CoeffElement::zero(n());
  for (int id : ids) out += CoeffElement::v_pow(n(), md_->rs().weyl()[id].length);
  return out;
}

RationalElement SphericalOps::spherical_rational(const LatticeVector& lam) const {
  const RootSystem& rs = md_->rs();
  if (!rs.is_dominant(lam)) throw std::invalid_argument("dominant l required");
  auto [stab, reps] = rs.stabilizer_and_cosets(lam);
  RationalElement acc = RationalElement::zero(n(), rank());
  RationalElement e(AlgebraElement::monomial(n(), lam));
  for (int id : reps) acc += ts_word_rational(rs.weyl()[id].word, e);
  return acc.scaled(CoeffElement::v_pow(n(), rs.rho_pairing(lam)));
}

AlgebraElement SphericalOps::spherical_via_t(const LatticeVector& lam) const {
  auto p = spherical_rational(lam).as_polynomial();
  if (!p) throw std::logic_error("spherical value failed to collapse to a polynomial");
  return *p;
}

RationalElement SphericalOps::gamma_sum(const LatticeVector& lam) const {
  const RootSystem& rs = md_->rs();
  RationalElement acc = RationalElement::zero(n(), rank());
  RationalElement g = gamma();
  for (const auto& w : rs.weyl())
    acc += g.weyl(rs, w) * RationalElement(AlgebraElement::monomial(n(), rs.apply(w, lam)));
  return acc;
}

bool SphericalOps::verify_spherical_routes(const LatticeVector& lam) const {
  const RootSystem& rs = md_->rs();
  if (!rs.is_dominant(lam)) throw std::invalid_argument("dominant l required");
  auto [stab, reps] = rs.stabilizer_and_cosets(lam);
  RationalElement acc = RationalElement::zero(n(), rank());
  RationalElement e(AlgebraElement::monomial(n(), lam));
  for (int id : reps) acc += ts_word_rational(rs.weyl()[id].word, e);
  return acc.scaled(poincare(stab)).equals(gamma_sum(lam));
}

bool SphericalOps::verify_macdonald() const {
  const RootSystem& rs = md_->rs();
  RationalElement acc = RationalElement::zero(n(), rank());
  RationalElement g = gamma();
  std::vector<int> all;
  for (const auto& w : rs.weyl()) {
    acc += g.weyl(rs, w);
    all.push_back(w.id);
  }
  RationalElement want(AlgebraElement::one(n(), rank()).scaled(poincare(all)));
  return acc.equals(want);
}

bool SphericalOps::verify_hecke(const LatticeVector& lam) const {
  RationalElement e(AlgebraElement::monomial(n(), lam));
  RationalElement zero = RationalElement::zero(n(), rank());
  for (std::size_t a = 0; a < rank(); ++a)
    if (!hecke_defect(static_cast<int>(a), e).equals(zero)) return false;
  return true;
}

bool SphericalOps::verify_stabilizer_property(const LatticeVector& lam) const {
  const RootSystem& rs = md_->rs();
  auto [stab, reps] = rs.stabilizer_and_cosets(lam);
  AlgebraElement e = AlgebraElement::monomial(n(), lam);
  for (int id : stab) {
    const auto& w = rs.weyl()[id];
    // every simple step inside the stabilizer has pairing 0, so the
    // exact-division path applies
    if (ts_word(w.word, e) != e.scaled(CoeffElement::v_pow(n(), w.length))) return false;
  }
  return true;
}

}  // namespace mwf
