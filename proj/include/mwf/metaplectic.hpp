#pragma once
#include <memory>
#include <string>
#include <vector>

#include "mwf/root_system.hpp"

namespace mwf {

// Cover data: degree n, W-invariant quadratic form Q with Q(short coroot) = kappa,
// polarized bilinear form B, per-coroot rescaling n(g), and the sublattice
// L0 = { l : B(l, a_i) == 0 mod n for all simple coroots a_i }.
class MetaplecticData {
 public:
  MetaplecticData(std::shared_ptr<const RootSystem> rs, int n, int kappa = 1);

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
  int n() const { return n_; }
  int kappa() const { return kappa_; }

  long long Q(const LatticeVector& lam) const;
  long long B(const LatticeVector& lam, const LatticeVector& mu) const;

  bool is_coroot(const LatticeVector& g) const;
  // n(g) = n / gcd(n, |Q(g)|) for a coroot g.
  int n_of_coroot(const LatticeVector& g) const;

  // Least nonnegative residue of k mod m.
  static int residue(long long k, int m);

  const std::vector<LatticeVector>& lambda0_basis() const { return lambda0_basis_; }
  bool in_lambda0(const LatticeVector& lam) const;

  std::vector<long long> q_values() const;  // Q per positive coroot
  std::vector<int> n_table() const;         // n(g) per positive coroot

  struct Rank2Class {
    std::string type;   // "A1xA1", "A2", "B2", "G2"
    int ratio = 0;      // |Q| ratio of the two simple coroots (0 for A1xA1)
    long long B12 = 0;  // B of the two simple coroots
  };
  Rank2Class rank2_classify() const;

  struct Rank2Iso {
    bool swapped = false;   // generator assignment swaps the two rescaled coroots
    LatticeVector image0;   // image of n(a0)a0
    LatticeVector image1;   // image of n(a1)a1
    bool qb_certified = false;  // Q-ratio preserved on the basis
  };
  Rank2Iso rank2_iso() const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  int n_, kappa_;
  std::vector<std::vector<long long>> Bmat_;  // B(e_i, e_j); diagonal 2*Q_i
  std::vector<LatticeVector> lambda0_basis_;

  void compute_lambda0_basis();
};

}  // namespace mwf
