#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "mwf/dl_operators.hpp"
#include "mwf/json_io.hpp"
#include "mwf/padic_oracle.hpp"
#include "mwf/scattering.hpp"
#include "mwf/spherical.hpp"
#include "mwf/twisted.hpp"

namespace py = pybind11;
using namespace mwf;

namespace {

std::shared_ptr<const MetaplecticData> make_md(const std::string& cartan, int n, int kappa) {
  return std::make_shared<MetaplecticData>(
      std::make_shared<RootSystem>(cartan_from_label(cartan)), n, kappa);
}

OracleConfig make_cfg(long long p, int n, int kappa) {
  OracleConfig cfg;
  cfg.p = p;
  cfg.n = n;
  cfg.kappa = kappa;
  cfg.validate();
  return cfg;
}

std::string whittaker_json(const std::string& cartan, int n, int kappa,
                           const std::vector<int>& lam) {
  auto md = make_md(cartan, n, kappa);
  DLOperators dl(md);
  auto w = dl.whittaker(LatticeVector{lam});
  json out = {{"lambda", lam}, {"dominant", w.dominant}, {"value", algebra_to_json(w.value)}};
  out.update(parameter_echo(*md, cartan));
  return out.dump();
}

std::string spherical_json(const std::string& cartan, int n, int kappa,
                           const std::vector<int>& lam) {
  auto md = make_md(cartan, n, kappa);
  SphericalOps sph(md);
  RationalElement value = sph.spherical_rational(LatticeVector{lam});
  auto poly = value.as_polynomial();
  json out = {{"lambda", lam}, {"polynomial", poly.has_value()}};
  out["value"] = poly ? algebra_to_json(*poly) : rational_to_json(value);
  out.update(parameter_echo(*md, cartan));
  return out.dump();
}

std::string star_json(const std::string& cartan, int n, int kappa, int a,
                      const std::vector<int>& lam) {
  auto md = make_md(cartan, n, kappa);
  CGAction cg(md);
  return rational_to_json(cg.star_monomial_lattice(a, LatticeVector{lam})).dump();
}

std::string t_json(const std::string& cartan, int n, int kappa, int a,
                   const std::vector<int>& lam) {
  auto md = make_md(cartan, n, kappa);
  DLOperators dl(md);
  return algebra_to_json(dl.t_simple(a, AlgebraElement::monomial(n, LatticeVector{lam}))).dump();
}

}  // namespace

PYBIND11_MODULE(_pymwf, m) {
  m.doc() = "exact engine and numeric oracle for metaplectic Whittaker functions";

  m.def("whittaker_json", &whittaker_json, py::arg("cartan"), py::arg("n") = 1,
        py::arg("kappa") = 1, py::arg("lam") = std::vector<int>{});
  m.def("spherical_json", &spherical_json, py::arg("cartan"), py::arg("n") = 1,
        py::arg("kappa") = 1, py::arg("lam") = std::vector<int>{});
  m.def("star_json", &star_json, py::arg("cartan"), py::arg("n"), py::arg("kappa"),
        py::arg("a"), py::arg("lam"));
  m.def("t_json", &t_json, py::arg("cartan"), py::arg("n"), py::arg("kappa"),
        py::arg("a"), py::arg("lam"));

  m.def(
      "verify_braid",
      [](const std::string& cartan, int n, int kappa, int box) {
        auto md = make_md(cartan, n, kappa);
        return verify_braid_cg(CGAction(md), box).ok() &&
               verify_braid_dl(DLOperators(md), box).ok();
      },
      py::arg("cartan"), py::arg("n") = 1, py::arg("kappa") = 1, py::arg("box") = 1);
  m.def(
      "verify_symmetrizer",
      [](const std::string& cartan, int n, int kappa, const std::vector<int>& lam) {
        auto md = make_md(cartan, n, kappa);
        DLOperators dl(md);
        LatticeVector l{lam};
        return RationalElement(dl.symmetrize(l)).equals(dl.cs_rhs(l));
      },
      py::arg("cartan"), py::arg("n"), py::arg("kappa"), py::arg("lam"));
  m.def(
      "verify_macdonald",
      [](const std::string& cartan, int n, int kappa) {
        return SphericalOps(make_md(cartan, n, kappa)).verify_macdonald();
      },
      py::arg("cartan"), py::arg("n") = 1, py::arg("kappa") = 1);
  m.def(
      "verify_fg",
      [](const std::string& cartan, int n, int kappa, bool metaplectic) {
        return TwistedAlgebra(make_md(cartan, n, kappa)).verify_fg(metaplectic).ok();
      },
      py::arg("cartan"), py::arg("n"), py::arg("kappa") = 1, py::arg("metaplectic") = true);

  m.def(
      "gauss_table",
      [](long long p, int n, int kappa) { return gauss_numeric(make_cfg(p, n, kappa)); },
      py::arg("p"), py::arg("n"), py::arg("kappa") = 1);
  m.def(
      "rank1_whittaker",
      [](long long p, int n, int kappa, int pairing) {
        return rank1_whittaker_oracle(make_cfg(p, n, kappa), pairing);
      },
      py::arg("p"), py::arg("n"), py::arg("kappa") = 1, py::arg("pairing") = 0);
  m.def(
      "verify_intertwiner",
      [](const std::string& cartan, int n, long long p, int a, const std::vector<int>& xi,
         int cutoff) {
        return Scattering(make_md(cartan, n, 1))
            .verify_intertwiner(a, LatticeVector{xi}, cutoff, make_cfg(p, n, 1));
      },
      py::arg("cartan"), py::arg("n"), py::arg("p"), py::arg("a"), py::arg("xi"),
      py::arg("cutoff") = 8);
}
