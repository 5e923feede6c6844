#include "mwf/group_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace mwf {

AlgebraElement AlgebraElement::one(int n, std::size_t rank) {
  return monomial(n, LatticeVector(rank));
}

AlgebraElement AlgebraElement::monomial(int n, const LatticeVector& lam, CoeffElement c) {
  AlgebraElement f(n, lam.rank());
  f.add_term(lam, c);
  return f;
}

AlgebraElement AlgebraElement::monomial(int n, const LatticeVector& lam) {
  return monomial(n, lam, CoeffElement::one(n));
}

CoeffElement AlgebraElement::coeff(const LatticeVector& lam) const {
  auto it = terms_.find(lam);
  return it == terms_.end() ? CoeffElement::zero(n_) : it->second;
}

void AlgebraElement::add_term(const LatticeVector& lam, const CoeffElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(lam);
  if (it == terms_.end()) {
    terms_.emplace(lam, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("coefficient ring degree mismatch");
  for (const auto& [lam, c] : o.terms_) add_term(lam, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("coefficient ring degree mismatch");
  for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement f(n_, rank_);
  for (const auto& [lam, c] : terms_) f.terms_.emplace(lam, -c);
  return f;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("coefficient ring degree mismatch");
  AlgebraElement f(a.n_, a.rank_);
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) f.add_term(la + lb, ca * cb);
  return f;
}

AlgebraElement AlgebraElement::scaled(const CoeffElement& c) const {
  AlgebraElement f(n_, rank_);
  for (const auto& [lam, x] : terms_) f.add_term(lam, x * c);
  return f;
}

AlgebraElement AlgebraElement::shifted(const LatticeVector& mu) const {
  AlgebraElement f(n_, rank_);
  for (const auto& [lam, x] : terms_) f.terms_.emplace(lam + mu, x);
  return f;
}

AlgebraElement AlgebraElement::weyl(const RootSystem& rs, const WeylElement& w) const {
  AlgebraElement f(n_, rank_);
  for (const auto& [lam, x] : terms_) f.terms_.emplace(rs.apply(w, lam), x);
  return f;
}

std::pair<LatticeVector, CoeffElement> AlgebraElement::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero element");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    os << "(" << c.str() << ")*e" << lam.str();
  }
  return os.str();
}

AlgebraElement Binomial::expand(int n) const {
  AlgebraElement f = AlgebraElement::one(n, mu.rank());
  f.add_term(mu, -unit(n));
  return f;
}

std::optional<AlgebraElement> divide_exact(const AlgebraElement& f, const Binomial& b) {
  int n = f.n();
  if (f.is_zero()) return f;
  // inverse of the leading coefficient -coef*v^{v_exp} of the binomial
  CoeffElement lead_inv = CoeffElement::v_pow(n, -b.v_exp, Rational(-1) / b.coef);
  AlgebraElement q(n, f.rank());
  AlgebraElement r = f;
  std::size_t guard = 20000 + 50 * f.size();
  while (!r.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    auto [lam, c] = r.leading();
    LatticeVector e = lam - b.mu;
    CoeffElement qc = c * lead_inv;
    q.add_term(e, qc);
    // subtract qc*e^e * (1 - unit*e^mu)
    r.add_term(e, -qc);
    r.add_term(lam, -c);
  }
  return q;
}

AlgebraElement RationalElement::den_expanded() const {
  AlgebraElement d = AlgebraElement::one(n(), rank());
  for (const auto& [b, m] : den_)
    for (int k = 0; k < m; ++k) d *= b.expand(n());
  return d;
}

RationalElement& RationalElement::divide_by_binomial(const LatticeVector& mu, int v_exp,
                                                     const Rational& coef) {
  int sgn = mu.lex_sign();
  if (sgn == 0) {
    if (v_exp != 0) throw std::invalid_argument("scalar binomial denominator with v is unsupported");
    if (coef == 1) throw std::invalid_argument("zero denominator");
    num_ = num_.scaled(CoeffElement::scalar(n(), Rational(1) / (Rational(1) - coef)));
    return *this;
  }
  if (coef == 0) throw std::invalid_argument("degenerate binomial");
  Binomial b;
  if (sgn > 0) {
    b.mu = mu;
    b.v_exp = v_exp;
    b.coef = coef;
  } else {
    // 1 - c e^mu = (-c e^mu)(1 - c^{-1} e^{-mu}); fold the unit inverse into num
    b.mu = -mu;
    b.v_exp = -v_exp;
    b.coef = Rational(1) / coef;
    num_ = num_.shifted(-mu).scaled(CoeffElement::v_pow(n(), -v_exp, Rational(-1) / coef));
  }
  den_[b] += 1;
  return *this;
}

namespace {

AlgebraElement expand_product(int n, std::size_t rank, const std::map<Binomial, int>& fac) {
  AlgebraElement f = AlgebraElement::one(n, rank);
  for (const auto& [b, m] : fac)
    for (int k = 0; k < m; ++k) f *= b.expand(n);
  return f;
}

}  // namespace

RationalElement& RationalElement::operator+=(const RationalElement& o) {
  std::map<Binomial, int> lcm = den_;
  for (const auto& [b, m] : o.den_) {
    auto it = lcm.find(b);
    if (it == lcm.end()) lcm.emplace(b, m);
    else it->second = std::max(it->second, m);
  }
  std::map<Binomial, int> extra1, extra2;
  for (const auto& [b, m] : lcm) {
    int m1 = 0, m2 = 0;
    if (auto it = den_.find(b); it != den_.end()) m1 = it->second;
    if (auto it = o.den_.find(b); it != o.den_.end()) m2 = it->second;
    if (m - m1 > 0) extra1.emplace(b, m - m1);
    if (m - m2 > 0) extra2.emplace(b, m - m2);
  }
  num_ = num_ * expand_product(n(), rank(), extra1) +
         o.num_ * expand_product(n(), rank(), extra2);
  den_ = std::move(lcm);
  return *this;
}

RationalElement& RationalElement::operator-=(const RationalElement& o) { return *this += -o; }

RationalElement RationalElement::operator-() const {
  RationalElement x(-num_);
  x.den_ = den_;
  return x;
}

RationalElement operator*(const RationalElement& a, const RationalElement& b) {
  RationalElement x(a.num_ * b.num_);
  x.den_ = a.den_;
  for (const auto& [f, m] : b.den_) x.den_[f] += m;
  return x;
}

RationalElement RationalElement::scaled(const CoeffElement& c) const {
  RationalElement x(num_.scaled(c));
  x.den_ = den_;
  return x;
}

RationalElement RationalElement::weyl(const RootSystem& rs, const WeylElement& w) const {
  RationalElement x(num_.weyl(rs, w));
  for (const auto& [b, m] : den_) {
    LatticeVector wmu = rs.apply(w, b.mu);
    for (int k = 0; k < m; ++k) x.divide_by_binomial(wmu, b.v_exp, b.coef);
  }
  return x;
}

bool RationalElement::equals(const RationalElement& o) const {
  // cancel common factors, then cross-multiply
  std::map<Binomial, int> d1 = den_, d2 = o.den_;
  for (auto& [b, m] : d1) {
    auto it = d2.find(b);
    if (it == d2.end()) continue;
    int c = std::min(m, it->second);
    m -= c;
    it->second -= c;
  }
  return num_ * expand_product(n(), rank(), d2) == o.num_ * expand_product(n(), rank(), d1);
}

void RationalElement::simplify() {
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = divide_exact(num_, it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = (it->second == 0) ? den_.erase(it) : std::next(it);
  }
}

std::optional<AlgebraElement> RationalElement::as_polynomial() const {
  AlgebraElement f = num_;
  for (const auto& [b, m] : den_)
    for (int k = 0; k < m; ++k) {
      auto q = divide_exact(f, b);
      if (!q) return std::nullopt;
      f = std::move(*q);
    }
  return f;
}

std::string RationalElement::str() const {
  std::ostringstream os;
  os << "[" << num_.str() << "]";
  for (const auto& [b, m] : den_)
    os << " / [" << b.expand(n()).str() << "]^" << m;
  return os.str();
}

SeriesSlice series_expand(const RationalElement& x, const LatticeVector& step, int cutoff) {
  if (step.lex_sign() == 0) throw std::invalid_argument("zero expansion direction");
  int n = x.n();
  std::size_t idx = 0;
  while (step[idx] == 0) ++idx;

  auto step_multiple = [&](const LatticeVector& v) -> std::optional<int> {
    if (v[idx] % step[idx] != 0) return std::nullopt;
    int j = v[idx] / step[idx];
    if (j * step != v) return std::nullopt;
    return j;
  };

  // every denominator factor must sit on the expansion line with positive step
  std::vector<std::pair<int, CoeffElement>> factors;  // (p, c) for 1 - c e^{p*step}
  for (const auto& [b, m] : x.den()) {
    auto p = step_multiple(b.mu);
    if (!p || *p <= 0)
      throw std::invalid_argument("denominator factor off the expansion line: " + b.mu.str());
    for (int k = 0; k < m; ++k) factors.emplace_back(*p, b.unit(n));
  }

  // extra headroom: largest separation along the line between numerator terms
  int spread = 0;
  for (const auto& [l1, c1] : x.num().terms())
    for (const auto& [l2, c2] : x.num().terms())
      if (auto j = step_multiple(l1 - l2)) spread = std::max(spread, *j);
  int D = cutoff + spread;

  // combined inverse series of all factors, indexed by step multiples
  std::map<int, CoeffElement> S;
  S.emplace(0, CoeffElement::one(n));
  for (const auto& [p, c] : factors) {
    std::map<int, CoeffElement> next;
    for (const auto& [j, s] : S) {
      CoeffElement ck = CoeffElement::one(n);
      for (int k = 0; j + k * p <= D; ++k) {
        auto [it, fresh] = next.emplace(j + k * p, s * ck);
        if (!fresh) it->second += s * ck;
        ck *= c;
      }
    }
    S = std::move(next);
  }

  SeriesSlice out;
  out.step = step;
  out.cutoff = cutoff;
  for (const auto& [lam, a] : x.num().terms())
    for (const auto& [j, s] : S) {
      LatticeVector p = lam + j * step;
      CoeffElement v = a * s;
      if (v.is_zero()) continue;
      auto [it, fresh] = out.coeffs.emplace(p, v);
      if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) out.coeffs.erase(it);
      }
    }
  // drop points whose tail is not fully captured
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
    bool complete = true;
    for (const auto& [lam, a] : x.num().terms()) {
      auto j = step_multiple(it->first - lam);
      if (j && *j > D) complete = false;
    }
    it = complete ? std::next(it) : out.coeffs.erase(it);
  }
  return out;
}

}  // namespace mwf
