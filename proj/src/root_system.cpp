#include "mwf/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mwf/rational.hpp"

namespace mwf {

namespace {

std::vector<std::vector<int>> chain_A(std::size_t r) {
  std::vector<std::vector<int>> C(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    C[i][i] = 2;
    if (i + 1 < r) C[i][i + 1] = C[i + 1][i] = -1;
  }
  return C;
}

}  // namespace

CartanSpec cartan_from_label(const std::string& label) {
  CartanSpec s;
  s.label = label;
  if (label == "A1") s.C = chain_A(1);
  else if (label == "A2") s.C = chain_A(2);
  else if (label == "A3") s.C = chain_A(3);
  else if (label == "A4") s.C = chain_A(4);
  else if (label == "B2") s.C = {{2, -1}, {-2, 2}};
  else if (label == "B3") s.C = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  else if (label == "C3") s.C = {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
  else if (label == "D4") {
    s.C = chain_A(4);
    // central node 1 bonded to 0, 2, 3
    s.C[2][3] = s.C[3][2] = 0;
    s.C[1][3] = s.C[3][1] = -1;
  } else if (label == "G2") s.C = {{2, -3}, {-1, 2}};
  else if (label == "A1xA1") s.C = {{2, 0}, {0, 2}};
  else throw std::invalid_argument("unknown Cartan label: " + label);
  return s;
}

CartanSpec cartan_from_matrix(const std::vector<std::vector<int>>& C) {
  CartanSpec s;
  s.label = "custom";
  s.C = C;
  return s;
}

int RootSystem::pairing(const LatticeVector& lam, int j) const {
  int acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) acc += lam[i] * spec_.C[i][j];
  return acc;
}

int RootSystem::rho_pairing(const LatticeVector& lam) const {
  int acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) acc += lam[i];
  return acc;
}

bool RootSystem::is_dominant(const LatticeVector& lam) const {
  for (std::size_t j = 0; j < rank(); ++j)
    if (pairing(lam, static_cast<int>(j)) < 0) return false;
  return true;
}

LatticeVector RootSystem::simple_coroot(int i) const {
  LatticeVector v(rank());
  v[i] = 1;
  return v;
}

LatticeVector RootSystem::reflect(int i, const LatticeVector& lam) const {
  LatticeVector r = lam;
  r[i] -= pairing(lam, i);
  return r;
}

void RootSystem::validate_finite_type() {
  const auto& C = spec_.C;
  std::size_t r = rank();
  if (r == 0 || r > 4) throw std::invalid_argument("rank must be between 1 and 4");
  for (std::size_t i = 0; i < r; ++i) {
    if (C[i].size() != r) throw std::invalid_argument("Cartan matrix not square");
    if (C[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (C[i][j] > 0) throw std::invalid_argument("Cartan off-diagonal must be <= 0");
      if ((C[i][j] == 0) != (C[j][i] == 0))
        throw std::invalid_argument("Cartan zero pattern must be symmetric");
    }
  }
  // symmetrizer d_i > 0 with d_i C[i][j] = d_j C[j][i], via graph propagation
  std::vector<Rational> dr(r, 0);
  for (std::size_t start = 0; start < r; ++start) {
    if (dr[start] != 0) continue;
    dr[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < r; ++j) {
        if (C[i][j] == 0 || i == j) continue;
        Rational want = dr[i] * C[i][j] / C[j][i];
        if (dr[j] == 0) {
          dr[j] = want;
          stack.push_back(j);
        } else if (dr[j] != want) {
          throw std::invalid_argument("Cartan matrix not symmetrizable");
        }
      }
    }
  }
  Integer lcm_den = 1;
  for (const auto& x : dr) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  d_.resize(r);
  for (std::size_t i = 0; i < r; ++i)
    d_[i] = static_cast<int>(Integer(numerator(dr[i]) * (lcm_den / denominator(dr[i]))));
  // positive definiteness of d_i C[i][j] via leading principal minors
  std::vector<std::vector<Rational>> S(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) S[i][j] = Rational(d_[i]) * C[i][j];
  for (std::size_t k = 1; k <= r; ++k) {
    // determinant of leading k x k block by fraction-free elimination
    std::vector<std::vector<Rational>> M(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) M[i][j] = S[i][j];
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = c;
      while (piv < k && M[piv][c] == 0) ++piv;
      if (piv == k) {
        det = 0;
        break;
      }
      if (piv != c) {
        std::swap(M[piv], M[c]);
        det = -det;
      }
      det *= M[c][c];
      for (std::size_t i = c + 1; i < k; ++i) {
        Rational f = M[i][c] / M[c][c];
        for (std::size_t j = c; j < k; ++j) M[i][j] -= f * M[c][j];
      }
    }
    if (det <= 0) throw std::invalid_argument("Cartan matrix not of finite type");
  }
}

void RootSystem::enumerate() {
  std::size_t r = rank();
  auto mat_mul = [r](const std::vector<int>& A, const std::vector<int>& B) {
    std::vector<int> M(r * r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        int a = A[i * r + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < r; ++j) M[i * r + j] += a * B[k * r + j];
      }
    return M;
  };

  std::vector<std::vector<int>> refl(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<int> M(r * r, 0);
    for (std::size_t i = 0; i < r; ++i) M[i * r + i] = 1;
    for (std::size_t i = 0; i < r; ++i) M[j * r + i] -= spec_.C[i][j];
    refl[j] = std::move(M);
  }

  WeylElement e;
  e.id = 0;
  e.mat.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) e.mat[i * r + i] = 1;
  weyl_.push_back(e);
  mat_to_id_[e.mat] = 0;

  const std::size_t kMaxGroup = 1200;
  for (std::size_t head = 0; head < weyl_.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<int> M = mat_mul(weyl_[head].mat, refl[i]);
      if (mat_to_id_.count(M)) continue;
      WeylElement w;
      w.id = static_cast<int>(weyl_.size());
      w.mat = std::move(M);
      w.word = weyl_[head].word;
      w.word.push_back(static_cast<int>(i));
      w.length = weyl_[head].length + 1;
      mat_to_id_[w.mat] = w.id;
      weyl_.push_back(std::move(w));
      if (weyl_.size() > kMaxGroup) throw std::invalid_argument("Weyl group too large (non-finite type?)");
    }
  }

  simple_ids_.resize(r);
  for (std::size_t i = 0; i < r; ++i) simple_ids_[i] = mat_to_id_.at(refl[i]);
  for (auto& w : weyl_) {
    std::vector<int> rev(w.word.rbegin(), w.word.rend());
    std::vector<int> M(r * r, 0);
    for (std::size_t i = 0; i < r; ++i) M[i * r + i] = 1;
    for (int b : rev) M = mat_mul(M, refl[b]);
    w.inverse = mat_to_id_.at(M);
    if (w.length > weyl_[longest_id_].length) longest_id_ = w.id;
  }

  // positive coroots: orbit closure of the simple coroots
  std::set<LatticeVector> pos;
  for (std::size_t i = 0; i < r; ++i) pos.insert(simple_coroot(static_cast<int>(i)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<LatticeVector> cur(pos.begin(), pos.end());
    for (const auto& g : cur)
      for (std::size_t i = 0; i < r; ++i) {
        LatticeVector im = reflect(static_cast<int>(i), g);
        if (im.lex_sign() > 0 && !pos.count(im)) {
          pos.insert(im);
          grew = true;
        }
      }
  }
  positive_coroots_.assign(pos.begin(), pos.end());

  if (weyl_.size() <= 48) {
    words_materialized_ = true;
    all_words_.resize(weyl_.size());
    all_words_[0] = {{}};
    // elements sorted by id are sorted by length, so one pass suffices
    for (std::size_t id = 1; id < weyl_.size(); ++id) {
      const auto& w = weyl_[id];
      for (std::size_t i = 0; i < r; ++i) {
        int shorter = product(w.id, simple_ids_[i]);  // w * s_i
        if (weyl_[shorter].length != w.length - 1) continue;
        for (const auto& u : all_words_[shorter]) {
          std::vector<int> word = u;
          word.push_back(static_cast<int>(i));
          all_words_[id].push_back(std::move(word));
        }
      }
    }
  }
}

RootSystem::RootSystem(CartanSpec spec) : spec_(std::move(spec)) {
  validate_finite_type();
  enumerate();
}

const WeylElement& RootSystem::element_of_word(const std::vector<int>& word) const {
  int id = 0;
  for (int b : word) id = product(id, simple_ids_[b]);
  return weyl_[id];
}

LatticeVector RootSystem::apply(const WeylElement& w, const LatticeVector& lam) const {
  std::size_t r = rank();
  LatticeVector out(r);
  for (std::size_t i = 0; i < r; ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < r; ++j) acc += w.mat[i * r + j] * lam[j];
    out[i] = acc;
  }
  return out;
}

int RootSystem::product(int w1_id, int w2_id) const {
  std::size_t r = rank();
  const auto& A = weyl_[w1_id].mat;
  const auto& B = weyl_[w2_id].mat;
  std::vector<int> M(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      int a = A[i * r + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < r; ++j) M[i * r + j] += a * B[k * r + j];
    }
  return mat_to_id_.at(M);
}

std::vector<LatticeVector> RootSystem::inversions(const WeylElement& w) const {
  std::vector<LatticeVector> out;
  for (const auto& g : positive_coroots_)
    if (apply(w, g).lex_sign() < 0) out.push_back(g);
  return out;
}

const std::vector<std::vector<std::vector<int>>>& RootSystem::all_reduced_words() const {
  if (!words_materialized_) throw std::logic_error("reduced words not materialized (|W| > 48)");
  return all_words_;
}

std::pair<std::vector<int>, std::vector<int>> RootSystem::stabilizer_and_cosets(
    const LatticeVector& lam) const {
  std::vector<int> stab;
  for (const auto& w : weyl_)
    if (apply(w, lam) == lam) stab.push_back(w.id);
  std::vector<int> reps;
  std::vector<char> assigned(weyl_.size(), 0);
  for (const auto& w : weyl_) {  // id order = nondecreasing length
    if (assigned[w.id]) continue;
    reps.push_back(w.id);
    for (int u : stab) assigned[product(w.id, u)] = 1;
  }
  return {stab, reps};
}

std::map<int, long> RootSystem::poincare_census(const std::vector<int>& ids) const {
  std::map<int, long> census;
  for (int id : ids) census[weyl_[id].length]++;
  return census;
}

}  // namespace mwf
