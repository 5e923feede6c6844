#pragma once
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mwf {

// Coweight in the simple-coroot basis.
struct LatticeVector {
  std::vector<int> c;

  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : c(rank, 0) {}
  LatticeVector(std::initializer_list<int> init) : c(init) {}
  explicit LatticeVector(std::vector<int> v) : c(std::move(v)) {}

  std::size_t rank() const { return c.size(); }
  int& operator[](std::size_t i) { return c[i]; }
  int operator[](std::size_t i) const { return c[i]; }

  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }

  // +1 if first nonzero coordinate is positive, -1 if negative, 0 if zero.
  int lex_sign() const {
    for (int x : c) {
      if (x > 0) return 1;
      if (x < 0) return -1;
    }
    return 0;
  }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  LatticeVector operator-() const {
    LatticeVector r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
    return r;
  }
  friend LatticeVector operator*(int k, const LatticeVector& a) {
    LatticeVector r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = k * a.c[i];
    return r;
  }
  LatticeVector& operator+=(const LatticeVector& b) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c[i];
    return *this;
  }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.c == b.c; }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return a.c != b.c; }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.c < b.c; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
};

}  // namespace mwf
