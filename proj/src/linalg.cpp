#include "facering/linalg.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace facering {

int rank_mod_p(IntMat m, std::uint64_t p) {
  const int rows = m.rows, cols = m.cols;
  std::vector<std::uint64_t> a(m.a.size());
  for (size_t i = 0; i < m.a.size(); ++i) {
    std::int64_t v = m.a[i] % static_cast<std::int64_t>(p);
    if (v < 0) v += static_cast<std::int64_t>(p);
    a[i] = static_cast<std::uint64_t>(v);
  }
  auto at = [&](int r, int c) -> std::uint64_t& { return a[static_cast<size_t>(r) * cols + c]; };

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = col; c < cols; ++c) std::swap(at(piv, c), at(rank, c));
    std::uint64_t inv = invmod_u64(at(rank, col), p);
    for (int r = rank + 1; r < rows; ++r) {
      if (at(r, col) == 0) continue;
      std::uint64_t factor = mulmod_u64(at(r, col), inv, p);
      for (int c = col; c < cols; ++c) {
        std::uint64_t sub = mulmod_u64(factor, at(rank, c), p);
        at(r, c) = at(r, c) >= sub ? at(r, c) - sub : at(r, c) + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// Fraction-free (Bareiss) elimination with full pivoting in native int64.
// Returns the rank, or -1 if an intermediate product would overflow.
int rank_bareiss_i64(IntMat m) {
  const int rows = m.rows, cols = m.cols;
  auto at = [&](int r, int c) -> std::int64_t& { return m.a[static_cast<size_t>(r) * cols + c]; };

  std::int64_t prev = 1;
  int rank = 0;
  while (rank < rows && rank < cols) {
    // pick the smallest-magnitude nonzero pivot to limit growth
    int pr = -1, pc = -1;
    std::int64_t best = 0;
    for (int r = rank; r < rows; ++r)
      for (int c = rank; c < cols; ++c) {
        std::int64_t v = at(r, c);
        if (v == 0) continue;
        std::int64_t mag = v < 0 ? -v : v;
        if (pr < 0 || mag < best) {
          pr = r;
          pc = c;
          best = mag;
        }
      }
    if (pr < 0) break;
    if (pr != rank)
      for (int c = 0; c < cols; ++c) std::swap(at(pr, c), at(rank, c));
    if (pc != rank)
      for (int r = 0; r < rows; ++r) std::swap(at(r, pc), at(r, rank));

    const std::int64_t piv = at(rank, rank);
    for (int r = rank + 1; r < rows; ++r) {
      const std::int64_t head = at(r, rank);
      for (int c = rank + 1; c < cols; ++c) {
        std::int64_t t1, t2, num;
        if (__builtin_mul_overflow(at(r, c), piv, &t1)) return -1;
        if (__builtin_mul_overflow(head, at(rank, c), &t2)) return -1;
        if (__builtin_sub_overflow(t1, t2, &num)) return -1;
        at(r, c) = num / prev;  // exact by the Bareiss identity
      }
      at(r, rank) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

int rank_bareiss_big(const IntMat& src) {
  const int rows = src.rows, cols = src.cols;
  std::vector<BigInt> a(src.a.begin(), src.a.end());
  auto at = [&](int r, int c) -> BigInt& { return a[static_cast<size_t>(r) * cols + c]; };

  BigInt prev = 1;
  int rank = 0;
  while (rank < rows && rank < cols) {
    int pr = -1, pc = -1;
    for (int r = rank; r < rows && pr < 0; ++r)
      for (int c = rank; c < cols; ++c)
        if (!at(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    if (pr != rank)
      for (int c = 0; c < cols; ++c) std::swap(at(pr, c), at(rank, c));
    if (pc != rank)
      for (int r = 0; r < rows; ++r) std::swap(at(r, pc), at(r, rank));

    const BigInt piv = at(rank, rank);
    for (int r = rank + 1; r < rows; ++r) {
      const BigInt head = at(r, rank);
      for (int c = rank + 1; c < cols; ++c) at(r, c) = (at(r, c) * piv - head * at(rank, c)) / prev;
      at(r, rank) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_over_q(const IntMat& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  int r = rank_bareiss_i64(m);
  if (r >= 0) return r;
  return rank_bareiss_big(m);
}

int rank_over(const IntMat& m, const FieldSpec& field) {
  if (field.is_rational()) return rank_over_q(m);
  return rank_mod_p(m, field.characteristic);
}

BigInt binomial_big(long long m, long long k) {
  if (k < 0 || m < 0 || k > m) return 0;
  k = std::min(k, m - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (m - k + i);
    r /= i;
  }
  return r;
}

long long binomial_ll(long long m, long long k) {
  BigInt b = binomial_big(m, k);
  if (b > std::numeric_limits<long long>::max())
    throw std::overflow_error("binomial overflows int64");
  return static_cast<long long>(b);
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace facering
