#ifndef FACERING_LINALG_HPP
#define FACERING_LINALG_HPP

#include "facering/field.hpp"
#include "facering/rational.hpp"

#include <cstdint>
#include <vector>

namespace facering {

// Dense integer matrix (row-major). Boundary matrices have entries in
// {-1,0,1}; Artinian-reduction assemblies carry residues mod p.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}
  std::int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// rank over F_p (destructive Gaussian elimination on a copy)
int rank_mod_p(IntMat m, std::uint64_t p);

// rank over the rationals: fraction-free int64 elimination with overflow
// detection, escalating to arbitrary precision when needed
int rank_over_q(const IntMat& m);

int rank_over(const IntMat& m, const FieldSpec& field);

// --- generic exact elimination over a field -------------------------------

struct ModField {
  using Elem = std::uint64_t;
  std::uint64_t p;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(Elem x) const { return x == 0; }
  Elem add(Elem x, Elem y) const {
    Elem s = x + y;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem x, Elem y) const { return x >= y ? x - y : x + p - y; }
  Elem neg(Elem x) const { return x == 0 ? 0 : p - x; }
  Elem mul(Elem x, Elem y) const { return mulmod_u64(x, y, p); }
  Elem inv(Elem x) const { return invmod_u64(x, p); }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Elem>(r);
  }
};

struct RatField {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem neg(const Elem& x) const { return -x; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem inv(const Elem& x) const { return Rational(1) / x; }
  Elem from_int(long long v) const { return Rational(v); }
};

template <class F>
struct FMat {
  using Elem = typename F::Elem;
  int rows = 0;
  int cols = 0;
  std::vector<Elem> a;

  FMat() = default;
  FMat(int r, int c, const F& f)
      : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), f.zero()) {}
  Elem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Elem& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// in-place reduction to row echelon form; returns the rank and the pivot
// column of each eliminated row
template <class F>
int fmat_echelon(FMat<F>& m, const F& f, std::vector<int>* pivot_cols = nullptr) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!f.is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    auto inv = f.inv(m.at(rank, col));
    for (int c = col; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || f.is_zero(m.at(r, col))) continue;
      auto factor = m.at(r, col);
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

// kernel basis of m (as columns of the returned matrix)
template <class F>
FMat<F> fmat_kernel(FMat<F> m, const F& f) {
  std::vector<int> pivots;
  int rank = fmat_echelon(m, f, &pivots);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  FMat<F> ker(m.cols, m.cols - rank, f);
  int kcol = 0;
  for (int freec = 0; freec < m.cols; ++freec) {
    if (is_pivot[static_cast<size_t>(freec)]) continue;
    ker.at(freec, kcol) = f.one();
    for (int r = 0; r < rank; ++r)
      ker.at(pivots[static_cast<size_t>(r)], kcol) = f.neg(m.at(r, freec));
    ++kcol;
  }
  return ker;
}

}  // namespace facering

#endif
