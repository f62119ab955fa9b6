#ifndef FACERING_FACE_VECTORS_HPP
#define FACERING_FACE_VECTORS_HPP

#include "facering/complex.hpp"

#include <vector>

namespace facering {

// f-vector of a relative complex: entries f_{-1}, f_0, ..., f_{d-1} where
// d-1 is the dimension of the total complex. f_{-1} is 1 exactly when the
// empty face is a face of the pair (i.e. sub is void).
struct FaceVector {
  std::vector<long long> entries;  // entries[i] = f_{i-1}

  // f_k with k in [-1, dim]; zero outside the stored range
  long long f(int k) const {
    int idx = k + 1;
    if (idx < 0 || idx >= static_cast<int>(entries.size())) return 0;
    return entries[static_cast<size_t>(idx)];
  }
  int dim() const { return static_cast<int>(entries.size()) - 2; }
  bool operator==(const FaceVector&) const = default;
};

// h-vector h_0..h_d; out-of-range indices read as 0, which also gives the
// extended g-numbers their usual meaning (g_{d+1} = -h_d).
struct HVector {
  std::vector<long long> entries;  // entries[j] = h_j, size d+1

  long long h(int j) const {
    if (j < 0 || j >= static_cast<int>(entries.size())) return 0;
    return entries[static_cast<size_t>(j)];
  }
  long long g(int j) const { return j == 0 ? h(0) : h(j) - h(j - 1); }
  int d() const { return static_cast<int>(entries.size()) - 1; }
  bool operator==(const HVector&) const = default;
};

struct GVector {
  std::vector<long long> entries;  // entries[j] = g_j, size d+1
  long long g(int j) const {
    if (j < 0 || j >= static_cast<int>(entries.size())) return 0;
    return entries[static_cast<size_t>(j)];
  }
  bool operator==(const GVector&) const = default;
};

// Counts the i-faces of total that are not faces of sub. Throws on a void
// total complex.
FaceVector f_vector(const RelativeComplex& psi);

// h_j = sum_{i=0..j} (-1)^{j-i} C(d-i, d-j) f_{i-1}, for 0 <= j <= d.
// d defaults to dim(total) + 1; theorem checks that fix an ambient dimension
// pass it explicitly.
HVector h_vector(const RelativeComplex& psi, int d = -1);
HVector h_vector(const FaceVector& f, int d);
GVector g_vector(const RelativeComplex& psi, int d = -1);

// Inverse transform: f_{j-1} = sum_i C(d-i, d-j) h_i.
FaceVector f_from_h(const HVector& h);

}  // namespace facering

#endif
