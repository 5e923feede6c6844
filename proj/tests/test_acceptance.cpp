// Acceptance gate: runs the ten criteria end to end and prints one line per
// criterion with its runtime and tolerance. Exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "character_oracle.h"
#include "mwf/dl_operators.hpp"
#include "mwf/padic_oracle.hpp"
#include "mwf/scattering.hpp"
#include "mwf/spherical.hpp"
#include "mwf/twisted.hpp"

using namespace mwf;

namespace {

std::shared_ptr<const MetaplecticData> make_md(const std::string& label, int n,
                                               int kappa = 1) {
  return std::make_shared<MetaplecticData>(
      std::make_shared<RootSystem>(cartan_from_label(label)), n, kappa);
}

template <class F>
void sweep_box(std::size_t rank, int lo, int hi, F f) {
  std::vector<int> c(rank, lo);
  while (true) {
    f(LatticeVector{std::vector<int>(c)});
    std::size_t i = 0;
    while (i < rank && ++c[i] > hi) c[i++] = lo;
    if (i == rank) break;
  }
}

struct Criterion {
  const char* name;
  const char* tolerance;
  std::function<bool()> run;
};

// --- A1: rank-one closed forms, exact -------------------------------------
bool a1() {
  bool ok = true;
  for (int n : {1, 2, 3, 4})
    for (int kappa : {1, 2}) {
      // even pairings <l,a> in {0,2,4,6} on the rank-one lattice itself
      DLOperators dl1(make_md("A1", n, kappa));
      for (int x = 0; x <= 3; ++x) {
        LatticeVector lam{x};
        if (x > 0)
          ok = ok && dl1.t_simple(0, AlgebraElement::monomial(n, lam)) ==
                         dl1.t_closed_form(0, lam);
        ok = ok && dl1.symmetrize(lam) == dl1.whittaker_line_closed(0, lam);
      }
      // odd pairings realized on the line {t,t} inside A2, <lam,a_0> = t
      DLOperators dl2(make_md("A2", n, kappa));
      for (int t = 1; t <= 6; t += 2) {
        LatticeVector lam{t, t};
        AlgebraElement e = AlgebraElement::monomial(n, lam);
        ok = ok && dl2.t_simple(0, e) == dl2.t_closed_form(0, lam);
        ok = ok && e + dl2.t_simple(0, e) == dl2.whittaker_line_closed(0, lam);
      }
    }
  return ok;
}

// --- A2: numeric Gauss-sum relations ---------------------------------------
bool a2() {
  bool ok = true;
  for (auto [p, n] : std::vector<std::pair<long long, int>>{{7, 3}, {13, 2}, {13, 3}, {29, 7}}) {
    OracleConfig cfg;
    cfg.p = p;
    cfg.n = n;
    cfg.validate();
    auto g = gauss_numeric(cfg);
    ok = ok && std::abs(g[0] - std::complex<double>(-1, 0)) < 1e-10;
    for (int k = 1; k < n; ++k)
      ok = ok && std::abs(g[k] * g[(n - k) % n] - std::complex<double>(double(p), 0)) < 1e-8;
  }
  return ok;
}

// --- A3: rank-one oracle vs symbolic ---------------------------------------
bool a3() {
  bool ok = true;
  for (long long p : {7, 13})
    for (int n : {1, 2, 3}) {
      if ((p - 1) % (2 * n) != 0) continue;
      OracleConfig cfg;
      cfg.p = p;
      cfg.n = n;
      cfg.validate();
      auto gt = gauss_numeric(cfg);
      double q = static_cast<double>(p);
      DLOperators dl1(make_md("A1", n));
      DLOperators dl2(make_md("A2", n));
      for (int pa = 0; pa <= 4; ++pa) {
        auto table = rank1_whittaker_oracle(cfg, pa);
        LatticeVector base, step;
        AlgebraElement sym;
        if (pa % 2 == 0) {
          base = LatticeVector{pa / 2};
          step = LatticeVector{1};
          sym = dl1.whittaker_line_closed(0, base);
        } else {
          base = LatticeVector{pa, pa};
          step = LatticeVector{1, 0};
          sym = dl2.whittaker_line_closed(0, base);
        }
        for (const auto& [k, val] : table)
          ok = ok && std::abs(sym.coeff(base - k * step).specialize(q, gt) - val) < 1e-8;
        for (const auto& [lam, c] : sym.terms())
          ok = ok && table.count((base - lam)[0] / step[0]) == 1;
      }
    }
  return ok;
}

// --- A4: braid relations for the star action and the T operators -----------
bool a4() {
  bool ok = true;
  for (int n : {1, 2, 3, 4}) {
    for (const char* label : {"A2", "B2"}) {
      ok = ok && verify_braid_cg(CGAction(make_md(label, n)), 2).ok();
      ok = ok && verify_braid_dl(DLOperators(make_md(label, n)), 2).ok();
    }
    ok = ok && verify_braid_cg(CGAction(make_md("G2", n)), 1).ok();
    ok = ok && verify_braid_dl(DLOperators(make_md("G2", n)), 1).ok();
  }
  return ok;
}

// --- A5: symmetrizer equals the alternating star sum -----------------------
bool a5() {
  bool ok = true;
  auto check = [&](const char* label, int n) {
    DLOperators dl(make_md(label, n));
    const RootSystem& rs = dl.md().rs();
    sweep_box(rs.rank(), 0, 2, [&](const LatticeVector& lam) {
      if (!rs.is_dominant(lam)) return;
      ok = ok && RationalElement(dl.symmetrize(lam)).equals(dl.cs_rhs(lam));
    });
  };
  for (int n : {1, 2, 3}) check("A2", n);
  for (int n : {1, 2}) check("B2", n);
  return ok;
}

// --- A6: classical degeneration against the Freudenthal oracle -------------
bool a6() {
  bool ok = true;
  auto md = make_md("A2", 1);
  DLOperators dl(md);
  AlgebraElement dv = dl.delta_v();
  sweep_box(2, 0, 2, [&](const LatticeVector& lam) {
    if (!md->rs().is_dominant(lam)) return;
    auto table = freudenthal(*md, lam);
    AlgebraElement chi(1, 2);
    for (const auto& [mu, m] : table) chi.add_term(mu, CoeffElement::scalar(1, Rational(m)));
    ok = ok && dl.cs_rhs(lam).equals(RationalElement(chi * dv));
    if (lam == LatticeVector{1, 1})
      ok = ok && table.size() == 7 && table.at(LatticeVector{0, 0}) == 2;
  });
  return ok;
}

// --- A7: spherical suite ----------------------------------------------------
bool a7() {
  bool ok = true;
  for (const char* label : {"A1", "A2", "B2", "G2"})
    for (int n : {1, 2, 3}) {
      SphericalOps sph(make_md(label, n));
      const RootSystem& rs = sph.md().rs();
      ok = ok && sph.verify_macdonald();
      ok = ok && sph.spherical_via_t(LatticeVector(rs.rank())) ==
                     AlgebraElement::one(n, rs.rank());
      sweep_box(rs.rank(), -1, 1, [&](const LatticeVector& lam) {
        ok = ok && sph.verify_hecke(lam);
        if (rs.is_dominant(lam)) ok = ok && sph.verify_stabilizer_property(lam);
      });
      int routes_done = 0;
      sweep_box(rs.rank(), 0, 3, [&](const LatticeVector& lam) {
        if (!rs.is_dominant(lam) || routes_done >= 2) return;
        ++routes_done;
        ok = ok && sph.verify_spherical_routes(lam);
      });
    }
  return ok;
}

// --- A8: intertwiner, ceiling, normalization, scattering --------------------
bool a8() {
  bool ok = true;
  for (int k = 1; k <= 6; ++k) ok = ok && Scattering::ceiling_identity(k);
  for (long long p : {7, 13})
    for (int n : {1, 2, 3}) {
      if ((p - 1) % (2 * n) != 0) continue;
      OracleConfig cfg;
      cfg.p = p;
      cfg.n = n;
      cfg.validate();
      Scattering sc1(make_md("A1", n));
      for (int x = -2; x <= 2; ++x)
        ok = ok && sc1.verify_intertwiner(0, LatticeVector{x}, 8, cfg);
      Scattering sc2(make_md("A2", n));
      sweep_box(2, -2, 2, [&](const LatticeVector& xi) {
        for (int a : {0, 1}) ok = ok && sc2.verify_intertwiner(a, xi, 8, cfg);
      });
    }
  for (const char* label : {"A1", "A2", "B2"})
    for (int n : {1, 2, 3}) {
      Scattering s(make_md(label, n));
      sweep_box(s.md().rs().rank(), -2, 2, [&](const LatticeVector& mu) {
        for (std::size_t a = 0; a < s.md().rs().rank(); ++a)
          ok = ok && s.verify_mcnamara(static_cast<int>(a), mu);
      });
    }
  // 100 seeded random families per configuration, tolerance 1e-9
  std::mt19937 rng(20260824);
  std::uniform_int_distribution<int> coord(-2, 2), pick(1, 4);
  for (auto [label, n, p] : std::vector<std::tuple<const char*, int, long long>>{
           {"A1", 2, 13}, {"A2", 2, 13}, {"A1", 3, 7}}) {
    auto md = make_md(label, n);
    OracleConfig cfg;
    cfg.p = p;
    cfg.n = n;
    cfg.validate();
    Scattering sc(md);
    std::size_t r = md->rs().rank();
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement F(n, r);
      int terms = pick(rng);
      for (int t = 0; t < terms; ++t) {
        std::vector<int> cc(r);
        for (auto& x : cc) x = coord(rng);
        F.add_term(LatticeVector{cc}, CoeffElement::v_pow(n, 0, pick(rng)));
      }
      if (F.is_zero()) continue;
      for (std::size_t a = 0; a < r; ++a)
        ok = ok && sc.verify_scattering(static_cast<int>(a), F, 2, 24, cfg).failures == 0;
    }
  }
  return ok;
}

// --- A9: twisted-algebra expansion lemma -----------------------------------
bool a9() {
  bool ok = true;
  for (const char* label : {"A2", "B2", "G2"}) {
    for (int n : {2, 3}) {
      TwistedAlgebra tw(make_md(label, n));
      ok = ok && tw.verify_fg(true).ok();
    }
    TwistedAlgebra ctl(make_md(label, 1));
    ok = ok && ctl.verify_fg(false).ok();
  }
  return ok;
}

// --- A10: seeded algebraic property suites ---------------------------------
bool a10() {
  bool ok = true;
  std::mt19937 rng(20260824);
  std::uniform_int_distribution<int> coord(-3, 3), sys(0, 2), deg(1, 4), vp(-2, 2);
  const char* labels[3] = {"A1", "A2", "B2"};

  // star involution
  for (int t = 0; t < 1000 && ok; ++t) {
    auto md = make_md(labels[sys(rng)], deg(rng));
    CGAction cg(md);
    std::size_t r = md->rs().rank();
    std::vector<int> c(r);
    for (auto& x : c) x = coord(rng);
    int a = std::uniform_int_distribution<int>(0, static_cast<int>(r) - 1)(rng);
    RationalElement f(AlgebraElement::monomial(md->n(), LatticeVector{c}));
    ok = cg.star_simple(a, cg.star_simple(a, f)).equals(f);
  }
  // semilinearity over the congruence sublattice
  for (int t = 0; t < 1000 && ok; ++t) {
    auto md = make_md(labels[sys(rng)], deg(rng));
    CGAction cg(md);
    std::size_t r = md->rs().rank();
    std::vector<int> c(r);
    for (auto& x : c) x = coord(rng);
    int a = std::uniform_int_distribution<int>(0, static_cast<int>(r) - 1)(rng);
    const auto& basis = md->lambda0_basis();
    LatticeVector h = basis[static_cast<std::size_t>(t) % basis.size()];
    ok = cg.check_h_linearity(a, AlgebraElement::monomial(md->n(), h),
                              RationalElement(AlgebraElement::monomial(md->n(), LatticeVector{c})));
  }
  // the Weyl action is a ring automorphism
  for (int t = 0; t < 1000 && ok; ++t) {
    auto md = make_md(labels[sys(rng)], deg(rng));
    const RootSystem& rs = md->rs();
    std::size_t r = rs.rank();
    auto rand_elt = [&]() {
      AlgebraElement f(md->n(), r);
      for (int k = 0; k < 2; ++k) {
        std::vector<int> c(r);
        for (auto& x : c) x = coord(rng);
        f.add_term(LatticeVector{c}, CoeffElement::v_pow(md->n(), vp(rng)));
      }
      return f;
    };
    AlgebraElement f = rand_elt(), g = rand_elt();
    const WeylElement& w =
        rs.weyl()[std::uniform_int_distribution<std::size_t>(0, rs.weyl().size() - 1)(rng)];
    ok = (f * g).weyl(rs, w) == f.weyl(rs, w) * g.weyl(rs, w);
  }
  // specialize is a ring homomorphism
  {
    OracleConfig cfg;
    cfg.p = 13;
    cfg.n = 3;
    cfg.validate();
    auto gt = gauss_numeric(cfg);
    std::uniform_int_distribution<int> gk(0, 2);
    for (int t = 0; t < 1000 && ok; ++t) {
      CoeffElement x = CoeffElement::v_pow(3, vp(rng)) + CoeffElement::gauss(3, gk(rng));
      CoeffElement y = CoeffElement::gauss(3, gk(rng), Rational(vp(rng)));
      ok = std::abs((x * y).specialize(13, gt) -
                    x.specialize(13, gt) * y.specialize(13, gt)) < 1e-9;
    }
  }
  // fraction equality is invariant under common factors and detects inequality
  for (int t = 0; t < 1000 && ok; ++t) {
    auto md = make_md(labels[sys(rng)], deg(rng));
    std::size_t r = md->rs().rank();
    std::vector<int> c(r);
    for (auto& x : c) x = coord(rng);
    AlgebraElement f = AlgebraElement::monomial(md->n(), LatticeVector{c});
    LatticeVector g = md->rs().simple_coroot(0);
    Binomial extra{2 * g, 1, 1};
    // f e^g / (1-e^g) == f e^g (1 - v e^{2g}) / ((1-e^g)(1 - v e^{2g}))
    RationalElement lhs(f.shifted(g));
    lhs.divide_by_binomial(g, 0, 1);
    RationalElement rhs(f.shifted(g) * extra.expand(md->n()));
    rhs.divide_by_binomial(g, 0, 1);
    rhs.divide_by_binomial(2 * g, 1, 1);
    RationalElement other(f);
    other.divide_by_binomial(g, 0, 1);
    ok = lhs.equals(rhs) && !lhs.equals(other);
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"A1 rank-one closed forms", "exact", a1},
      {"A2 Gauss-sum relations", "1e-10 / 1e-8", a2},
      {"A3 oracle vs symbolic rank-one", "1e-8", a3},
      {"A4 braid relations (star and T)", "exact", a4},
      {"A5 symmetrizer identity", "exact", a5},
      {"A6 classical character degeneration", "exact", a6},
      {"A7 spherical suite", "exact", a7},
      {"A8 intertwiner and scattering", "1e-9", a8},
      {"A9 twisted expansion lemma", "exact", a9},
      {"A10 property suites (1000 cases each)", "exact / 1e-9", a10},
  };
  bool all = true;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("%-40s FAIL (exception: %s)\n", c.name, e.what());
      all = false;
      continue;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%-40s %s (%.2fs, tol %s)\n", c.name, ok ? "PASS" : "FAIL", secs, c.tolerance);
    all = all && ok;
  }
  return all ? 0 : 1;
}
