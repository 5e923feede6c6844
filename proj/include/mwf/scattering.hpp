#pragma once
#include <complex>
#include <memory>
#include <vector>

#include "mwf/cg_action.hpp"
#include "mwf/group_algebra.hpp"
#include "mwf/metaplectic.hpp"
#include "mwf/padic_oracle.hpp"

namespace mwf {

// Psi-weighted coefficient list of the rank-one intertwiner applied to e^{xi}:
// one exceptional point at w_a xi - a and a regular progression w_a xi + m a.
struct GammaSeries {
  LatticeVector exceptional_point;
  std::complex<double> exceptional;
  std::vector<std::pair<LatticeVector, std::complex<double>>> regular;
};

class Scattering {
 public:
  explicit Scattering(std::shared_ptr<const MetaplecticData> md)
      : md_(std::move(md)), cg_(md_) {}

  const MetaplecticData& md() const { return *md_; }
  int n() const { return md_->n(); }

  // exceptional: q^{<rho,mu>} q^{-1} g_{(<xi,a>+1)Q(a)} q^{1+<xi,a>};
  // regular (m >= 0, m = <xi,a> mod n(a), m <= cutoff*n(a)):
  //   q^{<rho,mu>} (1-q^{-1}) q^{-m+<xi,a>}
  GammaSeries gamma_series(int a, const LatticeVector& xi, int cutoff,
                           const OracleConfig& cfg) const;

  // q^{<rho,xi>} * [series coefficients of c(a)(w_a * e^{xi})] against the
  // Psi-weighted gamma series, within tol
  bool verify_intertwiner(int a, const LatticeVector& xi, int cutoff,
                          const OracleConfig& cfg, double tol = 1e-9) const;

  struct TauPair {
    RationalElement diag;  // (1-v) e^{(res_{n(a)}(<mu,a>) - <mu,a>) a} / (1 - e^{-n(a)a})
    CoeffElement off;      // v g_{-Q(a) - B(mu,a)}
  };
  TauPair tau_coeffs(int a, const LatticeVector& mu) const;

  // substitute a -> -a in tau_coeffs and compare the res-based and
  // ceiling-based forms of the first coefficient; the second must be
  // v g_{-Q(a) + B(mu,a)}
  bool verify_mcnamara(int a, const LatticeVector& mu) const;
  // k + res_n(-k) = ceil(k/n) n for k in [-20, 20]
  static bool ceiling_identity(int n);

  struct ScatterReport {
    long cases = 0;
    long failures = 0;
    double max_residual = 0;
  };
  // coefficient identity for the expansion of c(a)(w_a * F) against the tau
  // pair, on the window box {-window..window}^rank, numerically at q = cfg.p
  ScatterReport verify_scattering(int a, const AlgebraElement& F, int window, int cutoff,
                                  const OracleConfig& cfg, double tol = 1e-9) const;

  // the c-function of the star action (negative-exponent numerator)
  RationalElement c_fn(int a) const;

 private:
  std::shared_ptr<const MetaplecticData> md_;
  CGAction cg_;
};

}  // namespace mwf
