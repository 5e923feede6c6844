#include "mwf/dl_operators.hpp"

#include <stdexcept>

namespace mwf {

RationalElement DLOperators::b_fn(int a) const {
  int nn = n();
  LatticeVector av = md_->rs().simple_coroot(a);
  int na = md_->n_of_coroot(av);
  AlgebraElement num = AlgebraElement::one(nn, rank())
                           .scaled(CoeffElement::v_pow(nn, 1) - CoeffElement::one(nn));
  RationalElement out(std::move(num));
  out.divide_by_binomial(na * av, 0, 1);
  return out;
}

RationalElement DLOperators::c_fn(int a) const {
  int nn = n();
  LatticeVector av = md_->rs().simple_coroot(a);
  int na = md_->n_of_coroot(av);
  AlgebraElement num = AlgebraElement::one(nn, rank());
  num.add_term(-na * av, -CoeffElement::v_pow(nn, 1));
  RationalElement out(std::move(num));
  out.divide_by_binomial(na * av, 0, 1);
  return out;
}

RationalElement DLOperators::t_simple_rational(int a, const RationalElement& f) const {
  return c_fn(a) * cg_.star_simple(a, f) + b_fn(a) * f;
}

AlgebraElement DLOperators::t_simple(int a, const AlgebraElement& f) const {
  auto p = t_simple_rational(a, RationalElement(f)).as_polynomial();
  if (!p) throw std::logic_error("Demazure-Lusztig operator produced a non-polynomial");
  return *p;
}

AlgebraElement DLOperators::t_word(const std::vector<int>& word, const AlgebraElement& f) const {
  AlgebraElement out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = t_simple(*it, out);
  return out;
}

AlgebraElement DLOperators::t_closed_form(int a, const LatticeVector& lam) const {
  const RootSystem& rs = md_->rs();
  int pa = rs.pairing(lam, a);
  if (pa < 0) throw std::invalid_argument("closed form requires <l,a> >= 0");
  int nn = n();
  LatticeVector av = rs.simple_coroot(a);
  int na = md_->n_of_coroot(av);
  long long Qa = md_->Q(av);
  AlgebraElement out(nn, rank());
  CoeffElement one_minus_v = CoeffElement::one(nn) - CoeffElement::v_pow(nn, 1);
  for (int k = 1; k * na <= pa; ++k) out.add_term(lam - (k * na) * av, one_minus_v);
  out.add_term(rs.apply(rs.simple_reflection(a), lam) - av,
               CoeffElement::v_pow(nn, 1) * CoeffElement::gauss(nn, Qa + md_->B(lam, av)));
  return out;
}

AlgebraElement DLOperators::symmetrize(const LatticeVector& lam) const {
  const RootSystem& rs = md_->rs();
  if (!rs.is_dominant(lam)) throw std::invalid_argument("symmetrizer requires dominant l");
  AlgebraElement acc(n(), rank());
  AlgebraElement e = AlgebraElement::monomial(n(), lam);
  for (const auto& w : rs.weyl()) acc += t_word(w.word, e);
  return acc;
}

AlgebraElement DLOperators::delta_v() const {
  int nn = n();
  AlgebraElement d = AlgebraElement::one(nn, rank());
  for (const auto& g : md_->rs().positive_coroots()) {
    AlgebraElement f = AlgebraElement::one(nn, rank());
    f.add_term(-md_->n_of_coroot(g) * g, -CoeffElement::v_pow(nn, 1));
    d *= f;
  }
  return d;
}

AlgebraElement DLOperators::delta_1() const {
  int nn = n();
  AlgebraElement d = AlgebraElement::one(nn, rank());
  for (const auto& g : md_->rs().positive_coroots()) {
    AlgebraElement f = AlgebraElement::one(nn, rank());
    f.add_term(-md_->n_of_coroot(g) * g, -CoeffElement::one(nn));
    d *= f;
  }
  return d;
}

RationalElement DLOperators::cs_rhs(const LatticeVector& lam) const {
  const RootSystem& rs = md_->rs();
  int nn = n();
  RationalElement acc = RationalElement::zero(nn, rank());
  RationalElement e(AlgebraElement::monomial(nn, lam));
  for (const auto& w : rs.weyl()) {
    LatticeVector shift(rank());
    for (const auto& g : rs.inversions(rs.weyl()[w.inverse]))
      shift += -md_->n_of_coroot(g) * g;
    RationalElement term = cg_.star_word(w.word, e);
    term.multiply_num(AlgebraElement::monomial(nn, shift));
    if (w.length % 2) term = -term;
    acc += term;
  }
  acc.multiply_num(delta_v());
  for (const auto& g : rs.positive_coroots())
    acc.divide_by_binomial(-md_->n_of_coroot(g) * g, 0, 1);
  return acc;
}

DLOperators::Whittaker DLOperators::whittaker(const LatticeVector& lam) const {
  Whittaker out;
  out.dominant = md_->rs().is_dominant(lam);
  if (!out.dominant) {
    out.value = AlgebraElement::zero(n(), rank());
    return out;
  }
  out.value = symmetrize(lam).scaled(CoeffElement::v_pow(n(), md_->rs().rho_pairing(lam)));
  return out;
}

AlgebraElement DLOperators::whittaker_line_closed(int a, const LatticeVector& lam) const {
  const RootSystem& rs = md_->rs();
  int pa = rs.pairing(lam, a);
  if (pa < 0) throw std::invalid_argument("nonnegative <l,a> required");
  int nn = n();
  LatticeVector av = rs.simple_coroot(a);
  int na = md_->n_of_coroot(av);
  long long Qa = md_->Q(av);
  AlgebraElement out = AlgebraElement::monomial(nn, lam);
  CoeffElement one_minus_v = CoeffElement::one(nn) - CoeffElement::v_pow(nn, 1);
  for (int k = 1; k <= pa; ++k)
    if (k % na == 0) out.add_term(lam - k * av, one_minus_v);
  out.add_term(rs.apply(rs.simple_reflection(a), lam) - av,
               CoeffElement::v_pow(nn, 1) * CoeffElement::gauss(nn, Qa * (1 + pa)));
  return out;
}

BraidReport verify_braid_dl(const DLOperators& dl, int box) {
  const RootSystem& rs = dl.md().rs();
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
      AlgebraElement e = AlgebraElement::monomial(dl.n(), lam);
      ++rep.cases;
      if (dl.t_word(w1, e) != dl.t_word(w2, e)) rep.failures.push_back(lam);
    }
  return rep;
}

}  // namespace mwf
