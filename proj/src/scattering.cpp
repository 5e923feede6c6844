#include "mwf/scattering.hpp"

#include <cmath>
#include <stdexcept>

namespace mwf {

namespace {

int ceil_div(int k, int n) {
  int q = k / n, r = k % n;
  return q + (r > 0 ? 1 : 0);
}

}  // namespace

RationalElement Scattering::c_fn(int a) const {
  int nn = n();
  LatticeVector av = md_->rs().simple_coroot(a);
  int na = md_->n_of_coroot(av);
  AlgebraElement num = AlgebraElement::one(nn, md_->rs().rank());
  num.add_term(-na * av, -CoeffElement::v_pow(nn, 1));
  RationalElement out(std::move(num));
  out.divide_by_binomial(na * av, 0, 1);
  return out;
}

GammaSeries Scattering::gamma_series(int a, const LatticeVector& xi, int cutoff,
                                     const OracleConfig& cfg) const {
  const RootSystem& rs = md_->rs();
  LatticeVector av = rs.simple_coroot(a);
  int na = md_->n_of_coroot(av);
  long long Qa = md_->Q(av);
  int pa = rs.pairing(xi, a);
  double q = static_cast<double>(cfg.p);
  auto gt = gauss_numeric(cfg);
  LatticeVector wxi = rs.apply(rs.simple_reflection(a), xi);

  GammaSeries out;
  out.exceptional_point = wxi - av;
  long long gidx = ((static_cast<long long>(pa) + 1) * Qa % n() + n()) % n();
  out.exceptional = std::pow(q, rs.rho_pairing(out.exceptional_point)) *
                    (1.0 / q) * gt[static_cast<std::size_t>(gidx)] * std::pow(q, 1 + pa);
  for (int m = 0; m <= cutoff * na; ++m) {
    if (MetaplecticData::residue(m - pa, na) != 0) continue;
    LatticeVector mu = wxi + m * av;
    double val = std::pow(q, rs.rho_pairing(mu)) * (1.0 - 1.0 / q) * std::pow(q, pa - m);
    out.regular.emplace_back(mu, val);
  }
  return out;
}

bool Scattering::verify_intertwiner(int a, const LatticeVector& xi, int cutoff,
                                    const OracleConfig& cfg, double tol) const {
  const RootSystem& rs = md_->rs();
  LatticeVector av = rs.simple_coroot(a);
  int na = md_->n_of_coroot(av);
  double q = static_cast<double>(cfg.p);
  auto gt = gauss_numeric(cfg);

  RationalElement lhs = c_fn(a) * cg_.star_monomial_lattice(a, xi);
  SeriesSlice slice = series_expand(lhs, na * av, cutoff + 2);
  double scale = std::pow(q, rs.rho_pairing(xi));
  auto lhs_at = [&](const LatticeVector& p) {
    return scale * slice.at(n(), p).specialize(q, gt);
  };

  GammaSeries gs = gamma_series(a, xi, cutoff, cfg);
  if (std::abs(lhs_at(gs.exceptional_point) - gs.exceptional) > tol) return false;
  for (const auto& [mu, val] : gs.regular)
    if (std::abs(lhs_at(mu) - val) > tol) return false;
  // non-admissible points on the progression must vanish
  LatticeVector wxi = rs.apply(rs.simple_reflection(a), xi);
  int pa = rs.pairing(xi, a);
  for (int m = 0; m <= cutoff * na; ++m) {
    if (MetaplecticData::residue(m - pa, na) == 0) continue;
    if (std::abs(lhs_at(wxi + m * av)) > tol) return false;
  }
  return true;
}

Scattering::TauPair Scattering::tau_coeffs(int a, const LatticeVector& mu) const {
  const RootSystem& rs = md_->rs();
  int nn = n();
  LatticeVector av = rs.simple_coroot(a);
  int na = md_->n_of_coroot(av);
  int pa = rs.pairing(mu, a);
  int res = MetaplecticData::residue(pa, na);
  TauPair out;
  AlgebraElement num = AlgebraElement::monomial(nn, (res - pa) * av)
                           .scaled(CoeffElement::one(nn) - CoeffElement::v_pow(nn, 1));
  out.diag = RationalElement(std::move(num));
  out.diag.divide_by_binomial(-na * av, 0, 1);
  out.off = CoeffElement::v_pow(nn, 1) *
            CoeffElement::gauss(nn, -md_->Q(av) - md_->B(mu, av));
  return out;
}

bool Scattering::ceiling_identity(int n) {
  for (int k = -20; k <= 20; ++k)
    if (k + MetaplecticData::residue(-k, n) != ceil_div(k, n) * n) return false;
  return true;
}

bool Scattering::verify_mcnamara(int a, const LatticeVector& mu) const {
  const RootSystem& rs = md_->rs();
  int nn = n();
  LatticeVector av = rs.simple_coroot(a);
  int na = md_->n_of_coroot(av);
  int k = rs.pairing(mu, a);

  // first coefficient after a -> -a, res-based
  AlgebraElement n1 = AlgebraElement::monomial(nn, -(k + MetaplecticData::residue(-k, na)) * av)
                          .scaled(CoeffElement::one(nn) - CoeffElement::v_pow(nn, 1));
  RationalElement t1(std::move(n1));
  t1.divide_by_binomial(na * av, 0, 1);
  // ceiling-based form
  AlgebraElement n2 = AlgebraElement::monomial(nn, (-ceil_div(k, na) * na) * av)
                          .scaled(CoeffElement::one(nn) - CoeffElement::v_pow(nn, 1));
  RationalElement t2(std::move(n2));
  t2.divide_by_binomial(na * av, 0, 1);
  if (!t1.equals(t2)) return false;

  // second coefficient: v g_{-Q(a) + B(mu,a)}
  CoeffElement off_sub = CoeffElement::v_pow(nn, 1) *
                         CoeffElement::gauss(nn, -md_->Q(-av) - md_->B(mu, -av));
  CoeffElement off_printed = CoeffElement::v_pow(nn, 1) *
                             CoeffElement::gauss(nn, -md_->Q(av) + md_->B(mu, av));
  return off_sub == off_printed && ceiling_identity(na);
}

Scattering::ScatterReport Scattering::verify_scattering(int a, const AlgebraElement& F,
                                                        int window, int cutoff,
                                                        const OracleConfig& cfg,
                                                        double tol) const {
  const RootSystem& rs = md_->rs();
  std::size_t r = rs.rank();
  LatticeVector av = rs.simple_coroot(a);
  int na = md_->n_of_coroot(av);
  long long Qa = md_->Q(av);
  double q = static_cast<double>(cfg.p);
  auto gt = gauss_numeric(cfg);

  RationalElement lhs = c_fn(a) * cg_.star_simple(a, RationalElement(F));
  SeriesSlice slice = series_expand(lhs, na * av, cutoff);

  // reject windows whose points are not fully captured by the cutoff
  std::size_t idx = 0;
  while (av[idx] == 0) ++idx;
  auto on_line_beyond = [&](const LatticeVector& diff) {
    int denom = na * av[idx];
    if (diff[idx] % denom != 0) return false;
    int j = diff[idx] / denom;
    if (j * (na * av) != diff) return false;
    return j > cutoff;
  };

  auto f_at = [&](const LatticeVector& p) { return F.coeff(p).specialize(q, gt); };

  ScatterReport rep;
  std::vector<int> c(r, -window);
  while (true) {
    LatticeVector mu{std::vector<int>(c)};
    for (const auto& [lam, cc] : lhs.num().terms())
      if (on_line_beyond(mu - lam))
        throw std::invalid_argument("window exceeds the expanded slice");
    int pmu = rs.pairing(mu, a);
    int res = MetaplecticData::residue(pmu, na);
    std::complex<double> rhs = 0.0;
    for (int k = 0; k <= cutoff + 2 * window + 4; ++k)
      rhs += (1.0 - 1.0 / q) * f_at(mu + (res - pmu + k * na) * av);
    long long gidx = ((-Qa - md_->B(mu, av)) % n() + n()) % n();
    rhs += (1.0 / q) * gt[static_cast<std::size_t>(gidx)] *
           f_at(rs.apply(rs.simple_reflection(a), mu) - av);
    std::complex<double> got = slice.at(n(), mu).specialize(q, gt);
    double resid = std::abs(got - rhs);
    ++rep.cases;
    rep.max_residual = std::max(rep.max_residual, resid);
    if (resid > tol) ++rep.failures;
    std::size_t i = 0;
    while (i < r && ++c[i] == window + 1) c[i++] = -window;
    if (i == r) break;
  }
  return rep;
}

}  // namespace mwf
