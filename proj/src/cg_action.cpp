#include "mwf/cg_action.hpp"

#include <stdexcept>

namespace mwf {

RationalElement CGAction::star_simple(int a, const RationalElement& f) const {
  const RootSystem& rs = md_->rs();
  const WeylElement& wa = rs.simple_reflection(a);
  LatticeVector av = rs.simple_coroot(a);
  int na = md_->n_of_coroot(av);
  long long Qa = md_->Q(av);
  int nn = n();

  CoeffElement one_minus_v = CoeffElement::one(nn) - CoeffElement::v_pow(nn, 1);
  AlgebraElement num(nn, rank());
  for (const auto& [lam, c] : f.num().terms()) {
    LatticeVector wlam = rs.apply(wa, lam);
    int pa = rs.pairing(lam, a);
    int res = MetaplecticData::residue(pa, na);
    num.add_term(wlam + res * av, c * one_minus_v);
    CoeffElement g = c * CoeffElement::gauss(nn, Qa + md_->B(lam, av)) * CoeffElement::v_pow(nn, 1);
    num.add_term(wlam + (na - 1) * av, -g);
    num.add_term(wlam - av, g);
  }
  RationalElement out(std::move(num));
  out.divide_by_binomial(-na * av, 1, 1);  // 1 - v e^{-n(a)a}
  for (const auto& [b, m] : f.den()) {
    LatticeVector wmu = rs.apply(wa, b.mu);
    for (int k = 0; k < m; ++k) out.divide_by_binomial(wmu, b.v_exp, b.coef);
  }
  return out;
}

RationalElement CGAction::star_word(const std::vector<int>& word, const RationalElement& f) const {
  RationalElement out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = star_simple(*it, out);
  return out;
}

RationalElement CGAction::star_monomial_lattice(int a, const LatticeVector& lam) const {
  return star_simple(a, RationalElement(AlgebraElement::monomial(n(), lam)));
}

bool CGAction::check_h_linearity(int a, const AlgebraElement& h, const RationalElement& f) const {
  for (const auto& [lam, c] : h.terms())
    if (!md_->in_lambda0(lam))
      throw std::invalid_argument("h support outside the sublattice L0: " + lam.str());
  RationalElement lhs = star_simple(a, RationalElement(h) * f);
  AlgebraElement hw = h.weyl(md_->rs(), md_->rs().simple_reflection(a));
  RationalElement rhs = RationalElement(hw) * star_simple(a, f);
  return lhs.equals(rhs);
}

int coxeter_m(const RootSystem& rs) {
  if (rs.rank() != 2) throw std::invalid_argument("coxeter_m requires rank 2");
  int st = rs.product(rs.simple_reflection(0).id, rs.simple_reflection(1).id);
  int m = 1, cur = st;
  while (cur != 0) {
    cur = rs.product(cur, st);
    ++m;
  }
  return m;
}

BraidReport verify_braid_cg(const CGAction& cg, int box) {
  const RootSystem& rs = cg.md().rs();
  int m = coxeter_m(rs);
  std::vector<int> w1, w2;
  for (int i = 0; i < m; ++i) {
    w1.push_back(i % 2);
    w2.push_back(1 - i % 2);
  }
  BraidReport rep;
  for (int x = -box; x <= box; ++x)
    for (int y = -box; y <= box; ++y) {
      LatticeVector lam{x, y};
      RationalElement f(AlgebraElement::monomial(cg.n(), lam));
      ++rep.cases;
      if (!cg.star_word(w1, f).equals(cg.star_word(w2, f))) rep.failures.push_back(lam);
    }
  return rep;
}

}  // namespace mwf
