#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwf/gauss_ring.hpp"
#include "mwf/lattice.hpp"
#include "mwf/root_system.hpp"

namespace mwf {

// Sparse group-algebra element: coweight -> coefficient.
class AlgebraElement {
 public:
  AlgebraElement() : n_(1), rank_(0) {}
  AlgebraElement(int n, std::size_t rank) : n_(n), rank_(rank) {}

  static AlgebraElement zero(int n, std::size_t rank) { return AlgebraElement(n, rank); }
  static AlgebraElement one(int n, std::size_t rank);
  static AlgebraElement monomial(int n, const LatticeVector& lam, CoeffElement c);
  static AlgebraElement monomial(int n, const LatticeVector& lam);

  int n() const { return n_; }
  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<LatticeVector, CoeffElement>& terms() const { return terms_; }
  CoeffElement coeff(const LatticeVector& lam) const;

  void add_term(const LatticeVector& lam, const CoeffElement& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement operator-() const;
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }
  AlgebraElement scaled(const CoeffElement& c) const;
  AlgebraElement shifted(const LatticeVector& mu) const;  // multiply by e^mu

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  AlgebraElement weyl(const RootSystem& rs, const WeylElement& w) const;

  // lex-greatest exponent and its coefficient; element must be nonzero
  std::pair<LatticeVector, CoeffElement> leading() const;

  std::string str() const;

 private:
  int n_;
  std::size_t rank_;
  std::map<LatticeVector, CoeffElement> terms_;
};

// Canonical binomial 1 - coef * v^{v_exp} * e^{mu} with mu lex-positive.
struct Binomial {
  LatticeVector mu;
  int v_exp = 0;
  Rational coef = 1;

  friend bool operator<(const Binomial& a, const Binomial& b) {
    if (a.mu != b.mu) return a.mu < b.mu;
    if (a.v_exp != b.v_exp) return a.v_exp < b.v_exp;
    return a.coef < b.coef;
  }
  friend bool operator==(const Binomial& a, const Binomial& b) {
    return a.mu == b.mu && a.v_exp == b.v_exp && a.coef == b.coef;
  }
  CoeffElement unit(int n) const { return CoeffElement::v_pow(n, v_exp, coef); }
  AlgebraElement expand(int n) const;
};

// Exact quotient f / b, or nullopt when the division is inexact.
std::optional<AlgebraElement> divide_exact(const AlgebraElement& f, const Binomial& b);

// Fraction num / prod_b b^{m_b} with the denominator kept factored into
// canonical binomials; never reduced to lowest terms, equality by
// cross-multiplication.
class RationalElement {
 public:
  RationalElement() = default;
  explicit RationalElement(AlgebraElement num) : num_(std::move(num)) {}

  static RationalElement zero(int n, std::size_t rank) {
    return RationalElement(AlgebraElement::zero(n, rank));
  }

  int n() const { return num_.n(); }
  std::size_t rank() const { return num_.rank(); }
  const AlgebraElement& num() const { return num_; }
  const std::map<Binomial, int>& den() const { return den_; }
  AlgebraElement den_expanded() const;
  bool is_zero() const { return num_.is_zero(); }

  // Divide by the raw binomial 1 - coef*v^{v_exp}*e^{mu} (any mu != 0),
  // canonicalizing the factor and folding the unit into the numerator.
  RationalElement& divide_by_binomial(const LatticeVector& mu, int v_exp, const Rational& coef);
  RationalElement& multiply_num(const AlgebraElement& f) { num_ *= f; return *this; }

  RationalElement& operator+=(const RationalElement& o);
  RationalElement& operator-=(const RationalElement& o);
  friend RationalElement operator+(RationalElement a, const RationalElement& b) { return a += b; }
  friend RationalElement operator-(RationalElement a, const RationalElement& b) { return a -= b; }
  RationalElement operator-() const;
  friend RationalElement operator*(const RationalElement& a, const RationalElement& b);
  RationalElement scaled(const CoeffElement& c) const;

  RationalElement weyl(const RootSystem& rs, const WeylElement& w) const;

  bool equals(const RationalElement& o) const;

  // Cancel denominator factors that divide the numerator exactly.
  void simplify();
  // Full exact division by the denominator; nullopt if the fraction is not polynomial.
  std::optional<AlgebraElement> as_polynomial() const;

  std::string str() const;

 private:
  AlgebraElement num_;
  std::map<Binomial, int> den_;
};

// One-direction formal expansion: coefficients on base + j*step points.
struct SeriesSlice {
  LatticeVector step;
  int cutoff = 0;
  std::map<LatticeVector, CoeffElement> coeffs;

  CoeffElement at(int n, const LatticeVector& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? CoeffElement::zero(n) : it->second;
  }
};

// Expand x in nonnegative powers of e^{step}; every denominator factor must be
// 1 - c e^{p*step} with p > 0. Points whose tail is not fully captured by the
// cutoff are dropped, so reported coefficients are exact.
SeriesSlice series_expand(const RationalElement& x, const LatticeVector& step, int cutoff);

}  // namespace mwf
