#include "mwf/padic_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mwf {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long pow_mod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

void OracleConfig::validate() {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  if ((p - 1) % (2LL * n) != 0) throw std::invalid_argument("p = 1 mod 2n required");
  // find a primitive root mod p
  std::vector<long long> prime_factors;
  long long m = p - 1;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  primitive_root = 0;
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long f : prime_factors)
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      primitive_root = g;
      break;
    }
  }
  if (primitive_root == 0) throw std::logic_error("no primitive root found");
  dlog.assign(static_cast<std::size_t>(p), 0);
  long long x = 1;
  for (int j = 0; j < p - 1; ++j) {
    dlog[static_cast<std::size_t>(x)] = j;
    x = x * primitive_root % p;
  }
}

std::complex<double> OracleConfig::chi_pow(long long u, long long e) const {
  long long j = dlog[static_cast<std::size_t>(((u % p) + p) % p)];
  long long a = ((j * (e % n)) % n + n) % n;
  double t = 2.0 * std::numbers::pi * static_cast<double>(a) / n;
  return {std::cos(t), std::sin(t)};
}

std::vector<std::complex<double>> gauss_numeric(const OracleConfig& cfg) {
  std::vector<std::complex<double>> out(cfg.n);
  for (int k = 0; k < cfg.n; ++k) {
    std::complex<double> acc = 0.0;
    for (long long u = 1; u < cfg.p; ++u) {
      double t = -2.0 * std::numbers::pi * static_cast<double>(u) / static_cast<double>(cfg.p);
      acc += cfg.chi_pow(u, -k) * std::complex<double>(std::cos(t), std::sin(t));
    }
    out[k] = acc;
  }
  return out;
}

std::complex<double> rank1_integral(const OracleConfig& cfg, int pairing, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  int m = std::max(1, k - pairing);
  if (m > 4) throw std::invalid_argument("residue ring too large (m > 4)");
  long long pm = 1;
  for (int i = 0; i < m; ++i) pm *= cfg.p;
  int j = k - pairing;  // psi sees p^{-j} r
  std::complex<double> acc = 0.0;
  for (long long r = 1; r < pm; ++r) {
    if (r % cfg.p == 0) continue;
    std::complex<double> term = cfg.chi_pow(r, -static_cast<long long>(k) * cfg.kappa);
    if (j > 0) {
      long long pj = 1;
      for (int i = 0; i < j; ++i) pj *= cfg.p;
      double t = 2.0 * std::numbers::pi * static_cast<double>(r % pj) / static_cast<double>(pj);
      term *= std::complex<double>(std::cos(t), std::sin(t));
    }
    acc += term;
  }
  return acc / static_cast<double>(pm);
}

std::map<int, std::complex<double>> rank1_whittaker_oracle(const OracleConfig& cfg, int pairing) {
  if (pairing < 0 || pairing > 4) throw std::invalid_argument("pairing out of oracle range");
  std::map<int, std::complex<double>> out;
  out[0] = 1.0;
  for (int k = 1; k <= pairing + 2; ++k) out[k] = rank1_integral(cfg, pairing, k);
  return out;
}

}  // namespace mwf
