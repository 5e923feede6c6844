#include "mwf/gauss_ring.hpp"

#include <cmath>
#include <sstream>

namespace mwf {

GaussMonomial CoeffElement::reduce(int n, GaussMonomial m) {
  // g_i g_{n-i} = v^{-1}; for even n also g_{n/2}^2 = v^{-1}.
  for (int i = 1; 2 * i < n; ++i) {
    int j = n - i;
    int k = std::min(m.g[i - 1], m.g[j - 1]);
    if (k > 0) {
      m.g[i - 1] -= k;
      m.g[j - 1] -= k;
      m.v_exp -= k;
    }
  }
  if (n % 2 == 0 && n > 1) {
    int h = n / 2;
    m.v_exp -= m.g[h - 1] / 2;
    m.g[h - 1] %= 2;
  }
  return m;
}

void CoeffElement::add_term(GaussMonomial m, const Rational& r) {
  if (r == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), r);
  } else {
    it->second += r;
    if (it->second == 0) terms_.erase(it);
  }
}

CoeffElement CoeffElement::scalar(int n, const Rational& r) {
  CoeffElement x(n);
  GaussMonomial m;
  m.g.assign(n - 1, 0);
  x.add_term(std::move(m), r);
  return x;
}

CoeffElement CoeffElement::v_pow(int n, int j, const Rational& r) {
  CoeffElement x(n);
  GaussMonomial m;
  m.v_exp = j;
  m.g.assign(n - 1, 0);
  x.add_term(std::move(m), r);
  return x;
}

CoeffElement CoeffElement::gauss(int n, long long k, const Rational& r) {
  long long kk = ((k % n) + n) % n;
  if (kk == 0) return scalar(n, -r);
  CoeffElement x(n);
  GaussMonomial m;
  m.g.assign(n - 1, 0);
  m.g[static_cast<std::size_t>(kk) - 1] = 1;
  x.add_term(std::move(m), r);
  return x;
}

CoeffElement& CoeffElement::operator+=(const CoeffElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("coefficient ring degree mismatch");
  for (const auto& [m, r] : o.terms_) add_term(m, r);
  return *this;
}

CoeffElement& CoeffElement::operator-=(const CoeffElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("coefficient ring degree mismatch");
  for (const auto& [m, r] : o.terms_) add_term(m, -r);
  return *this;
}

CoeffElement CoeffElement::operator-() const {
  CoeffElement x(n_);
  for (const auto& [m, r] : terms_) x.terms_.emplace(m, -r);
  return x;
}

CoeffElement operator*(const CoeffElement& a, const CoeffElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("coefficient ring degree mismatch");
  CoeffElement x(a.n_);
  for (const auto& [ma, ra] : a.terms_) {
    for (const auto& [mb, rb] : b.terms_) {
      GaussMonomial m;
      m.v_exp = ma.v_exp + mb.v_exp;
      m.g.resize(ma.g.size());
      for (std::size_t i = 0; i < m.g.size(); ++i) m.g[i] = ma.g[i] + mb.g[i];
      x.add_term(CoeffElement::reduce(a.n_, std::move(m)), ra * rb);
    }
  }
  return x;
}

CoeffElement CoeffElement::scaled(const Rational& r) const {
  CoeffElement x(n_);
  if (r == 0) return x;
  for (const auto& [m, c] : terms_) x.terms_.emplace(m, c * r);
  return x;
}

bool CoeffElement::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& m = terms_.begin()->first;
  for (int e : m.g)
    if (e != 0) return false;
  return true;
}

CoeffElement CoeffElement::unit_inverse() const {
  if (!is_unit_monomial()) throw std::logic_error("not an invertible monomial");
  const auto& [m, r] = *terms_.begin();
  return v_pow(n_, -m.v_exp, Rational(1) / r);
}

std::complex<double> CoeffElement::specialize(double q, const std::vector<std::complex<double>>& gauss_table) const {
  if (static_cast<int>(gauss_table.size()) != n_) throw std::invalid_argument("gauss table size mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& [m, r] : terms_) {
    std::complex<double> t = static_cast<double>(r) * std::pow(q, -m.v_exp);
    for (std::size_t i = 0; i < m.g.size(); ++i)
      for (int e = 0; e < m.g[i]; ++e) t *= gauss_table[i + 1];
    acc += t;
  }
  return acc;
}

CoeffElement CoeffElement::at_v_one() const {
  CoeffElement x(n_);
  for (const auto& [m, r] : terms_) {
    GaussMonomial m1 = m;
    m1.v_exp = 0;
    x.add_term(std::move(m1), r);
  }
  return x;
}

std::string CoeffElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, r] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << r;
    if (m.v_exp != 0) os << "*v^" << m.v_exp;
    for (std::size_t i = 0; i < m.g.size(); ++i)
      if (m.g[i] != 0) {
        os << "*g" << (i + 1);
        if (m.g[i] != 1) os << "^" << m.g[i];
      }
  }
  return os.str();
}

}  // namespace mwf
