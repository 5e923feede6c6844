#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mwf/lattice.hpp"

namespace mwf {

struct CartanSpec {
  std::string label;                  // "A2", "B3", ... or "custom"
  std::vector<std::vector<int>> C;    // C[i][j] = <a_i^vee, a_j>
  std::size_t rank() const { return C.size(); }
};

CartanSpec cartan_from_label(const std::string& label);
CartanSpec cartan_from_matrix(const std::vector<std::vector<int>>& C);

struct WeylElement {
  int id = 0;
  std::vector<int> mat;     // rank x rank row-major; (w l)_i = sum_j mat[i*r+j] l_j
  std::vector<int> word;    // canonical reduced word (lex-least among shortest)
  int length = 0;
  int inverse = 0;          // id of w^{-1}
};

class RootSystem {
 public:
  explicit RootSystem(CartanSpec spec);

  std::size_t rank() const { return spec_.rank(); }
  const CartanSpec& spec() const { return spec_; }

  // <lambda, a_j> for the j-th simple root.
  int pairing(const LatticeVector& lam, int j) const;
  // <lambda, rho> = coordinate sum in the coroot basis.
  int rho_pairing(const LatticeVector& lam) const;
  bool is_dominant(const LatticeVector& lam) const;

  LatticeVector simple_coroot(int i) const;
  LatticeVector reflect(int i, const LatticeVector& lam) const;  // w_i(lambda)

  const std::vector<LatticeVector>& positive_coroots() const { return positive_coroots_; }
  // symmetrizer integers d_i with d_i C[i][j] = d_j C[j][i]
  const std::vector<int>& symmetrizer() const { return d_; }

  const std::vector<WeylElement>& weyl() const { return weyl_; }
  const WeylElement& identity() const { return weyl_[0]; }
  const WeylElement& longest() const { return weyl_[longest_id_]; }
  const WeylElement& simple_reflection(int i) const { return weyl_[simple_ids_[i]]; }
  const WeylElement& element_of_word(const std::vector<int>& word) const;

  LatticeVector apply(const WeylElement& w, const LatticeVector& lam) const;
  int product(int w1_id, int w2_id) const;  // id of w1*w2

  std::vector<LatticeVector> inversions(const WeylElement& w) const;  // R^vee(w)

  // All reduced words per element; materialized only when |W| <= 48.
  const std::vector<std::vector<std::vector<int>>>& all_reduced_words() const;
  bool words_materialized() const { return words_materialized_; }

  // For dominant lam: (stabilizer W_lam, minimal-length coset transversal W^lam), as element ids.
  std::pair<std::vector<int>, std::vector<int>> stabilizer_and_cosets(const LatticeVector& lam) const;

  // Length census of a set of elements: exponent of v^{-1} -> count.
  std::map<int, long> poincare_census(const std::vector<int>& ids) const;

 private:
  void validate_finite_type();
  void enumerate();

  CartanSpec spec_;
  std::vector<int> d_;
  std::vector<LatticeVector> positive_coroots_;
  std::vector<WeylElement> weyl_;
  std::map<std::vector<int>, int> mat_to_id_;
  std::vector<int> simple_ids_;
  int longest_id_ = 0;
  bool words_materialized_ = false;
  std::vector<std::vector<std::vector<int>>> all_words_;
};

}  // namespace mwf
