#pragma once
#include <complex>
#include <map>
#include <vector>

namespace mwf {

// Residue-field data for the numeric oracle: prime p with p = 1 mod 2n, a
// multiplicative character chi of exact order n built on a primitive root, and
// the additive character psi(x/p^j) = exp(2 pi i x / p^j).
struct OracleConfig {
  long long p = 7;
  int n = 1;
  int kappa = 1;
  long long primitive_root = 0;       // filled by validate()
  std::vector<int> dlog;              // dlog[u] for u in 1..p-1

  void validate();                    // throws on bad (p, n)
  std::complex<double> chi_pow(long long u, long long e) const;  // chi(u)^e
};

// g_k = sum over units u of chi(u)^{-k} exp(-2 pi i u / p), k = 0..n-1
std::vector<std::complex<double>> gauss_numeric(const OracleConfig& cfg);

// Brute-force rank-one integral over (Z/p^m)^*, m = max(1, k - pairing):
//   I(k) = p^{-m} sum_r chi(r mod p)^{-k kappa} psi(p^{pairing-k} r)
// Throws when m exceeds the enumeration bound (m > 4).
std::complex<double> rank1_integral(const OracleConfig& cfg, int pairing, int k);

// Coefficient table of the rank-one Whittaker value without its outer
// q^{<rho,l>} factor: shift -k (coefficient of e^{l - k a}) -> complex value.
std::map<int, std::complex<double>> rank1_whittaker_oracle(const OracleConfig& cfg, int pairing);

}  // namespace mwf
