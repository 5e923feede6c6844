#pragma once
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwf/rational.hpp"

namespace mwf {

// Monomial v^{v_exp} * prod_{i=1..n-1} g_i^{g[i-1]}, stored in canonical form:
// for i < n-i never both g_i and g_{n-i} present (pair reduces to v^{-1});
// for even n, g_{n/2} appears with exponent at most 1 (square reduces to v^{-1}).
struct GaussMonomial {
  int v_exp = 0;
  std::vector<int> g;  // size n-1; entry i-1 is the exponent of g_i

  friend bool operator<(const GaussMonomial& a, const GaussMonomial& b) {
    if (a.v_exp != b.v_exp) return a.v_exp < b.v_exp;
    return a.g < b.g;
  }
  friend bool operator==(const GaussMonomial& a, const GaussMonomial& b) {
    return a.v_exp == b.v_exp && a.g == b.g;
  }
};

// Element of the coefficient ring: rational combinations of GaussMonomials
// subject to g_0 = -1, g_i g_{n-i} = v^{-1}, indices mod n.
class CoeffElement {
 public:
  CoeffElement() : n_(1) {}
  explicit CoeffElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("cover degree must be positive");
  }

  static CoeffElement zero(int n) { return CoeffElement(n); }
  static CoeffElement scalar(int n, const Rational& r);
  static CoeffElement one(int n) { return scalar(n, 1); }
  static CoeffElement v_pow(int n, int j, const Rational& r = 1);
  // r * g_k with k reduced mod n; g_0 collapses to -1.
  static CoeffElement gauss(int n, long long k, const Rational& r = 1);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GaussMonomial, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  CoeffElement& operator+=(const CoeffElement& o);
  CoeffElement& operator-=(const CoeffElement& o);
  friend CoeffElement operator+(CoeffElement a, const CoeffElement& b) { return a += b; }
  friend CoeffElement operator-(CoeffElement a, const CoeffElement& b) { return a -= b; }
  CoeffElement operator-() const;
  friend CoeffElement operator*(const CoeffElement& a, const CoeffElement& b);
  CoeffElement& operator*=(const CoeffElement& o) { return *this = *this * o; }
  CoeffElement scaled(const Rational& r) const;

  friend bool operator==(const CoeffElement& a, const CoeffElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CoeffElement& a, const CoeffElement& b) { return !(a == b); }

  // True iff a single term with no g factors (hence invertible in the v-Laurent ring).
  bool is_unit_monomial() const;
  CoeffElement unit_inverse() const;
  bool is_single_monomial() const { return terms_.size() == 1; }

  // v -> 1/q, g_k -> table[k]; table has size n.
  std::complex<double> specialize(double q, const std::vector<std::complex<double>>& gauss_table) const;
  // Exact specialization at v -> 1 (used for Delta = Delta_1); g's must be absent.
  CoeffElement at_v_one() const;

  std::string str() const;

 private:
  void add_term(GaussMonomial m, const Rational& r);
  static GaussMonomial reduce(int n, GaussMonomial m);

  int n_;
  std::map<GaussMonomial, Rational> terms_;

  friend class AlgebraElement;
};

}  // namespace mwf
