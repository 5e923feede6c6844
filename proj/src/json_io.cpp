#include "mwf/json_io.hpp"

#include <sstream>

namespace mwf {

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

json coeff_to_json(const CoeffElement& c) {
  json out = json::array();
  for (const auto& [m, r] : c.terms()) {
    json term;
    term["v"] = m.v_exp;
    term["g"] = m.g;
    term["c"] = rational_str(r);
    out.push_back(term);
  }
  return out;
}

json algebra_to_json(const AlgebraElement& f) {
  json terms = json::array();
  for (const auto& [lam, c] : f.terms()) {
    json t;
    t["coweight"] = lam.c;
    t["coeff"] = coeff_to_json(c);
    terms.push_back(t);
  }
  return json{{"terms", terms}};
}

json rational_to_json(const RationalElement& f) {
  json den = json::array();
  for (const auto& [b, power] : f.den()) {
    json d;
    d["mu"] = b.mu.c;
    d["v"] = b.v_exp;
    d["c"] = rational_str(b.coef);
    d["power"] = power;
    den.push_back(d);
  }
  return json{{"num", algebra_to_json(f.num())}, {"den", den}};
}

json complex_to_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

json parameter_echo(const MetaplecticData& md, const std::string& cartan_label) {
  json out;
  out["cartan"] = cartan_label;
  out["n"] = md.n();
  out["kappa"] = md.kappa();
  out["q_values"] = md.q_values();
  out["n_table"] = md.n_table();
  json basis = json::array();
  for (const auto& b : md.lambda0_basis()) basis.push_back(b.c);
  out["lambda0_basis"] = basis;
  return out;
}

CartanSpec cartan_from_json(const json& src) {
  if (src.is_string()) return cartan_from_label(src.get<std::string>());
  if (src.is_object() && src.contains("cartan_matrix"))
    return cartan_from_matrix(src["cartan_matrix"].get<std::vector<std::vector<int>>>());
  throw std::invalid_argument("expected a type label or a cartan_matrix object");
}

}  // namespace mwf
