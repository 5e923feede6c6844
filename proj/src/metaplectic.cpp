#include "mwf/metaplectic.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "mwf/rational.hpp"

namespace mwf {

MetaplecticData::MetaplecticData(std::shared_ptr<const RootSystem> rs, int n, int kappa)
    : rs_(std::move(rs)), n_(n), kappa_(kappa) {
  if (n_ < 1) throw std::invalid_argument("cover degree must be positive");
  if (kappa_ == 0) throw std::invalid_argument("kappa must be nonzero");
  std::size_t r = rs_->rank();
  const auto& d = rs_->symmetrizer();
  int dmax = *std::max_element(d.begin(), d.end());
  // Q_i = kappa * dmax / d_i, so the short coroot (largest d) gets kappa.
  std::vector<long long> Qi(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (dmax % d[i] != 0) throw std::invalid_argument("symmetrizer does not divide evenly");
    Qi[i] = static_cast<long long>(kappa_) * (dmax / d[i]);
  }
  Bmat_.assign(r, std::vector<long long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      Bmat_[i][j] = (i == j) ? 2 * Qi[i] : rs_->spec().C[i][j] * Qi[j];
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (Bmat_[i][j] != Bmat_[j][i]) throw std::logic_error("bilinear form not symmetric");
  compute_lambda0_basis();
}

long long MetaplecticData::B(const LatticeVector& lam, const LatticeVector& mu) const {
  long long acc = 0;
  for (std::size_t i = 0; i < rs_->rank(); ++i)
    for (std::size_t j = 0; j < rs_->rank(); ++j) acc += lam[i] * Bmat_[i][j] * mu[j];
  return acc;
}

long long MetaplecticData::Q(const LatticeVector& lam) const { return B(lam, lam) / 2; }

bool MetaplecticData::is_coroot(const LatticeVector& g) const {
  const auto& pos = rs_->positive_coroots();
  LatticeVector m = -g;
  return std::find(pos.begin(), pos.end(), g) != pos.end() ||
         std::find(pos.begin(), pos.end(), m) != pos.end();
}

int MetaplecticData::n_of_coroot(const LatticeVector& g) const {
  if (!is_coroot(g)) throw std::invalid_argument("not a coroot: " + g.str());
  long long q = std::llabs(Q(g));
  return static_cast<int>(n_ / std::gcd(static_cast<long long>(n_), q));
}

int MetaplecticData::residue(long long k, int m) {
  long long r = k % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

bool MetaplecticData::in_lambda0(const LatticeVector& lam) const {
  for (std::size_t i = 0; i < rs_->rank(); ++i)
    if (residue(B(lam, rs_->simple_coroot(static_cast<int>(i))), n_) != 0) return false;
  return true;
}

void MetaplecticData::compute_lambda0_basis() {
  std::size_t r = rs_->rank();
  // generators: lifts of all residue classes mod n satisfying the congruences, plus n*e_i
  std::vector<std::vector<long long>> gens;
  std::vector<int> res(r, 0);
  while (true) {
    LatticeVector lam(r);
    for (std::size_t i = 0; i < r; ++i) lam[i] = res[i];
    if (in_lambda0(lam) && !lam.is_zero())
      gens.emplace_back(lam.c.begin(), lam.c.end());
    std::size_t pos = 0;
    while (pos < r && ++res[pos] == n_) res[pos++] = 0;
    if (pos == r) break;
  }
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<long long> v(r, 0);
    v[i] = n_;
    gens.push_back(std::move(v));
  }
  // column-style Hermite reduction: bring the generator matrix to upper-triangular
  // form with positive diagonal pivots
  std::size_t m = gens.size();
  for (std::size_t row = 0; row < r; ++row) {
    std::size_t piv = row;
    // gcd out everything in this row across columns >= row
    for (std::size_t c = row + 1; c < m; ++c) {
      while (gens[c][row] != 0) {
        if (gens[piv][row] == 0 || (std::llabs(gens[c][row]) < std::llabs(gens[piv][row]))) {
          std::swap(gens[piv], gens[c]);
          continue;
        }
        long long f = gens[c][row] / gens[piv][row];
        for (std::size_t k = 0; k < r; ++k) gens[c][k] -= f * gens[piv][k];
      }
    }
    if (gens[piv][row] < 0)
      for (std::size_t k = 0; k < r; ++k) gens[piv][k] = -gens[piv][k];
    if (gens[piv][row] == 0) throw std::logic_error("sublattice not of full rank");
    // reduce earlier pivot columns against this one
    for (std::size_t c = 0; c < row; ++c) {
      long long f = gens[c][row] / gens[piv][row];
      if (gens[c][row] % gens[piv][row] != 0)
        f -= (gens[c][row] % gens[piv][row] < 0) ? 1 : 0;
      for (std::size_t k = 0; k < r; ++k) gens[c][k] -= f * gens[piv][k];
    }
  }
  lambda0_basis_.clear();
  for (std::size_t c = 0; c < r; ++c) {
    LatticeVector b(r);
    for (std::size_t k = 0; k < r; ++k) b[k] = static_cast<int>(gens[c][k]);
    lambda0_basis_.push_back(std::move(b));
  }
}

std::vector<long long> MetaplecticData::q_values() const {
  std::vector<long long> out;
  for (const auto& g : rs_->positive_coroots()) out.push_back(Q(g));
  return out;
}

std::vector<int> MetaplecticData::n_table() const {
  std::vector<int> out;
  for (const auto& g : rs_->positive_coroots()) out.push_back(n_of_coroot(g));
  return out;
}

MetaplecticData::Rank2Class MetaplecticData::rank2_classify() const {
  if (rs_->rank() != 2) throw std::invalid_argument("rank2_classify requires rank 2");
  Rank2Class out;
  long long Q0 = Q(rs_->simple_coroot(0)), Q1 = Q(rs_->simple_coroot(1));
  out.B12 = B(rs_->simple_coroot(0), rs_->simple_coroot(1));
  if (out.B12 == 0) {
    out.type = "A1xA1";
    return out;
  }
  long long qmin = std::min(std::llabs(Q0), std::llabs(Q1));
  long long qmax = std::max(std::llabs(Q0), std::llabs(Q1));
  if (qmax % qmin != 0) throw std::logic_error("unexpected Q ratio");
  out.ratio = static_cast<int>(qmax / qmin);
  long long qsmall = (std::llabs(Q0) <= std::llabs(Q1)) ? Q0 : Q1;
  if (out.B12 != -out.ratio * qsmall) throw std::logic_error("trichotomy certificate failed");
  switch (out.ratio) {
    case 1: out.type = "A2"; break;
    case 2: out.type = "B2"; break;
    case 3: out.type = "G2"; break;
    default: throw std::logic_error("Q ratio outside {1,2,3}");
  }
  return out;
}

MetaplecticData::Rank2Iso MetaplecticData::rank2_iso() const {
  if (rs_->rank() != 2) throw std::invalid_argument("rank2_iso requires rank 2");
  if (rank2_classify().type == "A1xA1")
    throw std::invalid_argument("rank2_iso undefined for orthogonal pairs");
  Rank2Iso out;
  LatticeVector a0 = rs_->simple_coroot(0), a1 = rs_->simple_coroot(1);
  int n0 = n_of_coroot(a0), n1 = n_of_coroot(a1);
  out.swapped = (n0 != n1);
  out.image0 = out.swapped ? a1 : a0;
  out.image1 = out.swapped ? a0 : a1;
  // certificate: the map preserves the Q-ratio of the basis vectors
  Rational lhs = Rational(Q(out.image0)) / Q(out.image1);
  Rational rhs = Rational(static_cast<long long>(n0) * n0 * Q(a0)) /
                 (static_cast<long long>(n1) * n1 * Q(a1));
  out.qb_certified = (lhs == rhs);
  return out;
}

}  // namespace mwf
