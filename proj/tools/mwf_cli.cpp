#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "mwf/dl_operators.hpp"
#include "mwf/json_io.hpp"
#include "mwf/padic_oracle.hpp"
#include "mwf/scattering.hpp"
#include "mwf/spherical.hpp"
#include "mwf/twisted.hpp"

using namespace mwf;

namespace {

int get_int(const json& job, const char* key, int def) {
  return job.contains(key) ? job.at(key).get<int>() : def;
}

std::shared_ptr<const MetaplecticData> make_md(const json& job) {
  CartanSpec spec = job.contains("cartan_matrix") ? cartan_from_json(job)
                                                  : cartan_from_label(job.at("cartan"));
  return std::make_shared<MetaplecticData>(std::make_shared<RootSystem>(spec),
                                           get_int(job, "n", 1), get_int(job, "kappa", 1));
}

LatticeVector lambda_from(const json& job, std::size_t rank) {
  auto v = job.at("lambda").get<std::vector<int>>();
  if (v.size() != rank) throw std::invalid_argument("lambda has the wrong rank");
  return LatticeVector{std::move(v)};
}

// visit every lattice point of {lo..hi}^rank
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

OracleConfig make_cfg(const json& job) {
  OracleConfig cfg;
  cfg.p = job.at("p").get<long long>();
  cfg.n = get_int(job, "n", 1);
  cfg.kappa = get_int(job, "kappa", 1);
  cfg.validate();
  return cfg;
}

struct JobResult {
  bool ok = true;
  json payload;
};

JobResult run_compute_whittaker(const json& job) {
  auto md = make_md(job);
  const RootSystem& rs = md->rs();
  DLOperators dl(md);
  LatticeVector lam = lambda_from(job, rs.rank());
  JobResult res;
  res.payload["lambda"] = lam.c;
  auto w = dl.whittaker(lam);
  res.payload["dominant"] = w.dominant;
  res.payload["t_sum"] = algebra_to_json(w.value);
  if (w.dominant) {
    auto closed = dl.cs_rhs(lam).as_polynomial();
    if (!closed) throw std::logic_error("alternating star sum failed to collapse");
    AlgebraElement cf =
        closed->scaled(CoeffElement::v_pow(md->n(), rs.rho_pairing(lam)));
    res.payload["closed_form"] = algebra_to_json(cf);
    res.payload["equal"] = (cf == w.value);
    res.ok = (cf == w.value);
  }
  if (job.contains("q")) {
    OracleConfig cfg;
    cfg.p = job.at("q").get<long long>();
    cfg.n = md->n();
    cfg.kappa = md->kappa();
    cfg.validate();
    auto gt = gauss_numeric(cfg);
    double q = static_cast<double>(cfg.p);
    json numeric = json::array();
    for (const auto& [mu, c] : w.value.terms())
      numeric.push_back({{"coweight", mu.c}, {"value", complex_to_json(c.specialize(q, gt))}});
    res.payload["numeric"] = numeric;
    res.payload["q"] = cfg.p;
  }
  return res;
}

JobResult run_compute_spherical(const json& job) {
  auto md = make_md(job);
  SphericalOps sph(md);
  LatticeVector lam = lambda_from(job, md->rs().rank());
  JobResult res;
  res.payload["lambda"] = lam.c;
  RationalElement value = sph.spherical_rational(lam);
  auto poly = value.as_polynomial();
  res.payload["polynomial"] = poly.has_value();
  if (poly)
    res.payload["value"] = algebra_to_json(*poly);
  else
    res.payload["value"] = rational_to_json(value);
  bool routes = sph.verify_spherical_routes(lam);
  res.payload["routes_agree"] = routes;
  res.ok = routes;
  if (job.contains("q") && poly) {
    double q = job.at("q").get<double>();
    std::vector<std::complex<double>> table(static_cast<std::size_t>(md->n()));
    json numeric = json::array();
    for (const auto& [mu, c] : poly->terms())
      numeric.push_back({{"coweight", mu.c}, {"value", complex_to_json(c.specialize(q, table))}});
    res.payload["numeric"] = numeric;
    res.payload["q"] = q;
  }
  return res;
}

json braid_json(const BraidReport& rep) {
  json fails = json::array();
  for (const auto& p : rep.failures) fails.push_back(p.c);
  return json{{"cases", rep.cases}, {"failures", fails}};
}

JobResult run_verify(const std::string& what, const json& job) {
  auto md = make_md(job);
  const RootSystem& rs = md->rs();
  int box = get_int(job, "box", 2);
  JobResult res;

  if (what == "cg-braid") {
    auto rep = verify_braid_cg(CGAction(md), box);
    res.payload = braid_json(rep);
    res.ok = rep.ok();
  } else if (what == "dl-braid") {
    auto rep = verify_braid_dl(DLOperators(md), box);
    res.payload = braid_json(rep);
    res.ok = rep.ok();
  } else if (what == "symmetrizer" || what == "cs") {
    DLOperators dl(md);
    long cases = 0, failures = 0;
    sweep_box(rs.rank(), 0, box, [&](const LatticeVector& lam) {
      if (!rs.is_dominant(lam)) return;
      ++cases;
      if (!RationalElement(dl.symmetrize(lam)).equals(dl.cs_rhs(lam))) ++failures;
    });
    res.payload = {{"identity", "symmetrizer-alternating-sum"}, {"cases", cases},
                   {"failures", failures}};
    res.ok = failures == 0;
  } else if (what == "fg") {
    TwistedAlgebra tw(md);
    auto rep = tw.verify_fg(true);
    auto ctl = tw.verify_fg(false);
    res.payload = {{"identity", "alternating-product-coefficients"},
                   {"cases", rep.cases},
                   {"failures", rep.failures},
                   {"top_ok", rep.top_ok},
                   {"control_cases", ctl.cases},
                   {"control_failures", ctl.failures},
                   {"control_top_ok", ctl.top_ok}};
    res.ok = rep.ok() && ctl.ok();
  } else if (what == "macdonald") {
    SphericalOps sph(md);
    bool ok = sph.verify_macdonald();
    res.payload = {{"identity", "macdonald-poincare"}, {"ok", ok}};
    res.ok = ok;
  } else if (what == "hecke") {
    SphericalOps sph(md);
    long cases = 0, failures = 0;
    sweep_box(rs.rank(), -box, box, [&](const LatticeVector& lam) {
      ++cases;
      bool ok = sph.verify_hecke(lam);
      if (ok && rs.is_dominant(lam)) ok = sph.verify_stabilizer_property(lam);
      if (!ok) ++failures;
    });
    res.payload = {{"identity", "hecke-quadratic"}, {"cases", cases}, {"failures", failures}};
    res.ok = failures == 0;
  } else if (what == "intertwiner") {
    auto cfg = make_cfg(job);
    Scattering sc(md);
    int cutoff = get_int(job, "cutoff", 8);
    long cases = 0, failures = 0;
    sweep_box(rs.rank(), -box, box, [&](const LatticeVector& xi) {
      for (std::size_t a = 0; a < rs.rank(); ++a) {
        ++cases;
        if (!sc.verify_intertwiner(static_cast<int>(a), xi, cutoff, cfg)) ++failures;
      }
    });
    res.payload = {{"identity", "intertwiner-series"}, {"cases", cases}, {"failures", failures}};
    res.ok = failures == 0;
  } else if (what == "tau") {
    Scattering sc(md);
    long cases = 0, failures = 0;
    sweep_box(rs.rank(), -box, box, [&](const LatticeVector& mu) {
      for (std::size_t a = 0; a < rs.rank(); ++a) {
        ++cases;
        if (!sc.verify_mcnamara(static_cast<int>(a), mu)) ++failures;
      }
    });
    bool ceiling = true;
    for (int k = 1; k <= 6; ++k) ceiling = ceiling && Scattering::ceiling_identity(k);
    res.payload = {{"identity", "coefficient-normalization"}, {"cases", cases},
                   {"failures", failures}, {"ceiling_ok", ceiling}};
    res.ok = failures == 0 && ceiling;
  } else if (what == "scattering") {
    auto cfg = make_cfg(job);
    Scattering sc(md);
    int cutoff = get_int(job, "cutoff", 24);
    int trials = get_int(job, "trials", 20);
    unsigned seed = static_cast<unsigned>(get_int(job, "seed", 20260824));
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coord(-2, 2), pick(1, 4);
    long cases = 0, failures = 0;
    double max_residual = 0;
    for (int t = 0; t < trials; ++t) {
      AlgebraElement F(md->n(), rs.rank());
      int terms = pick(rng);
      for (int k = 0; k < terms; ++k) {
        std::vector<int> cc(rs.rank());
        for (auto& x : cc) x = coord(rng);
        F.add_term(LatticeVector{cc}, CoeffElement::v_pow(md->n(), 0, pick(rng)));
      }
      if (F.is_zero()) continue;
      for (std::size_t a = 0; a < rs.rank(); ++a) {
        auto rep = sc.verify_scattering(static_cast<int>(a), F, box, cutoff, cfg);
        cases += rep.cases;
        failures += rep.failures;
        max_residual = std::max(max_residual, rep.max_residual);
      }
    }
    res.payload = {{"identity", "coefficient-recursion"}, {"seed", seed}, {"trials", trials},
                   {"cases", cases}, {"failures", failures}, {"max_residual", max_residual}};
    res.ok = failures == 0;
  } else if (what == "involution") {
    CGAction cg(md);
    long cases = 0, failures = 0;
    sweep_box(rs.rank(), -box, box, [&](const LatticeVector& lam) {
      RationalElement e(AlgebraElement::monomial(md->n(), lam));
      for (std::size_t a = 0; a < rs.rank(); ++a) {
        ++cases;
        if (!cg.star_simple(static_cast<int>(a), cg.star_simple(static_cast<int>(a), e))
                 .equals(e))
          ++failures;
      }
    });
    res.payload = {{"identity", "star-involution"}, {"cases", cases}, {"failures", failures}};
    res.ok = failures == 0;
  } else {
    throw std::invalid_argument("unknown verify target: " + what);
  }
  res.payload.update(parameter_echo(*md, job.contains("cartan") ? job.at("cartan") : "custom"));
  return res;
}

JobResult run_oracle(const std::string& what, const json& job) {
  JobResult res;
  if (what == "gauss") {
    auto cfg = make_cfg(job);
    auto table = gauss_numeric(cfg);
    json g = json::array();
    for (const auto& z : table) g.push_back(complex_to_json(z));
    res.payload = {{"p", cfg.p}, {"n", cfg.n}, {"g", g}};
  } else if (what == "rank1") {
    auto cfg = make_cfg(job);
    int pairing = get_int(job, "pairing", 0);
    auto table = rank1_whittaker_oracle(cfg, pairing);
    json values = json::array();
    for (const auto& [k, z] : table) values.push_back({{"k", k}, {"value", complex_to_json(z)}});
    res.payload = {{"p", cfg.p}, {"n", cfg.n}, {"kappa", cfg.kappa},
                   {"pairing", pairing}, {"values", values}};
  } else {
    throw std::invalid_argument("unknown oracle target: " + what);
  }
  return res;
}

JobResult run_job(const json& job) {
  std::string command = job.at("command").get<std::string>();
  std::istringstream is(command);
  std::string group, what;
  is >> group >> what;
  JobResult res;
  if (group == "compute" && what == "whittaker") {
    res = run_compute_whittaker(job);
  } else if (group == "compute" && what == "spherical") {
    res = run_compute_spherical(job);
  } else if (group == "verify") {
    res = run_verify(what, job);
  } else if (group == "oracle") {
    res = run_oracle(what, job);
  } else {
    throw std::invalid_argument("unknown command: " + command);
  }
  res.payload["command"] = command;
  if (job.contains("cartan") && !res.payload.contains("cartan")) {
    auto md = make_md(job);
    res.payload.update(parameter_echo(*md, job.at("cartan")));
  }
  res.payload["ok"] = res.ok;
  return res;
}

int thread_count() {
  if (const char* env = std::getenv("MWF_THREADS")) {
    int k = std::atoi(env);
    if (k > 0) return k;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

JobResult run_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open jobs file: " + path);
  json config = json::parse(in);
  auto jobs = config.at("jobs");
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      try {
        results[i] = run_job(jobs[i]);
      } catch (const std::exception& e) {
        results[i].ok = false;
        results[i].payload = {{"error", e.what()}, {"job", jobs[i]}};
      }
    }
  };
  int k = std::min<int>(thread_count(), static_cast<int>(jobs.size()) + 1);
  std::vector<std::thread> pool;
  for (int t = 0; t + 1 < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  JobResult summary;
  long failures = 0;
  json out = json::array();
  for (auto& r : results) {
    if (!r.ok) ++failures;
    out.push_back(r.payload);
  }
  summary.ok = failures == 0;
  summary.payload = {{"jobs", jobs.size()}, {"failures", failures}, {"results", out}};
  return summary;
}

void emit(const JobResult& res, const std::string& mode) {
  if (mode == "text") {
    std::cout << (res.ok ? "ok" : "FAIL");
    for (const char* key : {"cases", "failures", "jobs"})
      if (res.payload.contains(key)) std::cout << " " << key << "=" << res.payload[key];
    std::cout << "\n";
  } else {
    std::cout << res.payload.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine and numeric oracle for metaplectic Whittaker functions"};
  app.require_subcommand(0, 1);

  std::string jobs_file, output = "json";
  app.add_option("--jobs", jobs_file, "batch config file with a jobs array");
  app.add_option("--output", output)->check(CLI::IsMember({"json", "text"}));

  struct Common {
    std::string cartan = "A1", lambda;
    int n = 1, kappa = 1, box = 2, cutoff = -1, seed = 20260824, trials = 20, pairing = 0;
    long long q = 0, p = 0;
  } opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cartan", opt.cartan);
    sub->add_option("--n", opt.n);
    sub->add_option("--kappa", opt.kappa);
    sub->add_option("--lambda", opt.lambda, "comma-separated coroot coordinates");
    sub->add_option("--q", opt.q);
    sub->add_option("--p", opt.p);
    sub->add_option("--box", opt.box);
    sub->add_option("--cutoff", opt.cutoff);
    sub->add_option("--seed", opt.seed);
    sub->add_option("--trials", opt.trials);
    sub->add_option("--pairing", opt.pairing);
  };

  std::string compute_what, verify_what, oracle_what;
  auto* compute = app.add_subcommand("compute", "evaluate a Whittaker or spherical value");
  compute->add_option("what", compute_what)->required()
      ->check(CLI::IsMember({"whittaker", "spherical"}));
  add_common(compute);
  auto* verify = app.add_subcommand("verify", "check an operator identity");
  verify->add_option("what", verify_what)->required()
      ->check(CLI::IsMember({"cg-braid", "dl-braid", "symmetrizer", "cs", "fg", "macdonald",
                             "hecke", "intertwiner", "tau", "scattering", "involution"}));
  add_common(verify);
  auto* oracle = app.add_subcommand("oracle", "run the numeric residue-field oracle");
  oracle->add_option("what", oracle_what)->required()
      ->check(CLI::IsMember({"gauss", "rank1"}));
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!jobs_file.empty()) {
      JobResult res = run_batch(jobs_file);
      emit(res, output);
      return res.ok ? 0 : 1;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help() << "\n";
      return 2;
    }
    json job;
    job["n"] = opt.n;
    job["kappa"] = opt.kappa;
    job["cartan"] = opt.cartan;
    job["box"] = opt.box;
    job["seed"] = opt.seed;
    job["trials"] = opt.trials;
    if (opt.cutoff >= 0) job["cutoff"] = opt.cutoff;
    if (opt.q) job["q"] = opt.q;
    if (opt.p) job["p"] = opt.p;
    if (!opt.lambda.empty()) {
      std::vector<int> coords;
      std::istringstream is(opt.lambda);
      std::string piece;
      while (std::getline(is, piece, ',')) coords.push_back(std::stoi(piece));
      job["lambda"] = coords;
    }
    if (compute->parsed()) job["command"] = "compute " + compute_what;
    if (verify->parsed()) job["command"] = "verify " + verify_what;
    if (oracle->parsed()) {
      job["command"] = "oracle " + oracle_what;
      job["pairing"] = opt.pairing;
      job.erase("cartan");
    }
    JobResult res = run_job(job);
    emit(res, output);
    return res.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
