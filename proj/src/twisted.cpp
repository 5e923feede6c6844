#include "mwf/twisted.hpp"

#include <stdexcept>

#include "mwf/cg_action.hpp"

namespace mwf {

StarWord star_concat(int letter, const StarWord& w) {
  if (!w.empty() && w.front() == letter) return StarWord(w.begin() + 1, w.end());
  StarWord out;
  out.reserve(w.size() + 1);
  out.push_back(letter);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

RationalElement TwistedAlgebra::cb_build(const LatticeVector& num_exp,
                                         const LatticeVector& den_exp, bool b_form) const {
  int nn = n();
  AlgebraElement num(nn, rank());
  if (b_form) {
    num = AlgebraElement::one(nn, rank())
              .scaled(CoeffElement::v_pow(nn, 1) - CoeffElement::one(nn));
  } else {
    num = AlgebraElement::one(nn, rank());
    num.add_term(num_exp, -CoeffElement::v_pow(nn, 1));
  }
  RationalElement out(std::move(num));
  out.divide_by_binomial(den_exp, 0, 1);
  return out;
}

RationalElement TwistedAlgebra::b_fn(const LatticeVector& coroot) const {
  int ng = md_->n_of_coroot(coroot);
  return cb_build(-ng * coroot, ng * coroot, true);
}

RationalElement TwistedAlgebra::c_fn(const LatticeVector& coroot) const {
  int ng = md_->n_of_coroot(coroot);
  return cb_build(-ng * coroot, ng * coroot, false);
}

RationalElement TwistedAlgebra::b_classical(const LatticeVector& coroot) const {
  // numerator 1-v rather than v-1
  int nn = n();
  AlgebraElement num = AlgebraElement::one(nn, rank())
                           .scaled(CoeffElement::one(nn) - CoeffElement::v_pow(nn, 1));
  RationalElement out(std::move(num));
  out.divide_by_binomial(coroot, 0, 1);
  return out;
}

RationalElement TwistedAlgebra::c_classical(const LatticeVector& coroot) const {
  return cb_build(-coroot, coroot, false);
}

TwistedExpansion TwistedAlgebra::expand(const std::vector<int>& letters,
                                        bool metaplectic) const {
  const RootSystem& rs = md_->rs();
  TwistedExpansion acc;
  acc.coeffs[StarWord{}] = RationalElement(AlgebraElement::one(n(), rank()));
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    int a = *it;
    LatticeVector av = rs.simple_coroot(a);
    RationalElement ca = metaplectic ? c_fn(av) : c_classical(av);
    RationalElement ba = metaplectic ? b_fn(av) : b_classical(av);
    const WeylElement& wa = rs.simple_reflection(a);
    TwistedExpansion next;
    for (const auto& [y, f] : acc.coeffs) {
      auto add = [&](const StarWord& key, RationalElement val) {
        auto [pos, fresh] = next.coeffs.emplace(key, val);
        if (!fresh) pos->second += val;
      };
      add(star_concat(a, y), ca * f.weyl(rs, wa));
      add(y, ba * f);
    }
    acc = std::move(next);
  }
  return acc;
}

std::map<int, RationalElement> TwistedAlgebra::expand_weyl(const std::vector<int>& letters,
                                                           bool metaplectic) const {
  const RootSystem& rs = md_->rs();
  std::map<int, RationalElement> acc;
  acc[rs.identity().id] = RationalElement(AlgebraElement::one(n(), rank()));
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    int a = *it;
    LatticeVector av = rs.simple_coroot(a);
    RationalElement ca = metaplectic ? c_fn(av) : c_classical(av);
    RationalElement ba = metaplectic ? b_fn(av) : b_classical(av);
    const WeylElement& wa = rs.simple_reflection(a);
    std::map<int, RationalElement> next;
    for (const auto& [y, f] : acc) {
      auto add = [&](int key, RationalElement val) {
        auto [pos, fresh] = next.emplace(key, val);
        if (!fresh) pos->second += val;
      };
      add(rs.product(wa.id, y), ca * f.weyl(rs, wa));
      add(y, ba * f);
    }
    acc = std::move(next);
  }
  return acc;
}

TwistedAlgebra::FgReport TwistedAlgebra::verify_fg(bool metaplectic) const {
  const RootSystem& rs = md_->rs();
  if (rs.rank() != 2) throw std::invalid_argument("rank-2 system required");
  int m = coxeter_m(rs);
  std::vector<int> left, right;
  for (int i = 0; i < m; ++i) {
    left.push_back(i % 2);
    right.push_back(1 - i % 2);
  }

  RationalElement top_want(AlgebraElement::one(n(), rank()));
  for (const auto& g : rs.positive_coroots())
    top_want = top_want * (metaplectic ? c_fn(g) : c_classical(g));

  FgReport rep;
  TwistedExpansion el = expand(left, metaplectic);
  TwistedExpansion er = expand(right, metaplectic);
  RationalElement zero = RationalElement::zero(n(), rank());
  auto at = [&](const TwistedExpansion& e, const StarWord& y) -> const RationalElement& {
    auto pos = e.coeffs.find(y);
    return pos == e.coeffs.end() ? zero : pos->second;
  };

  std::map<StarWord, int> keys;
  for (const auto& [y, f] : el.coeffs) keys.emplace(y, 0);
  for (const auto& [y, f] : er.coeffs) keys.emplace(y, 0);
  for (const auto& [y, unused] : keys) {
    if (y == StarWord(left) || y == StarWord(right)) continue;
    ++rep.cases;
    if (!at(el, y).equals(at(er, y))) ++rep.failures;
  }
  rep.top_ok = at(el, left).equals(at(er, right)) && at(el, left).equals(top_want);
  return rep;
}

}  // namespace mwf
