#ifndef FACERING_HOMOLOGY_HPP
#define FACERING_HOMOLOGY_HPP

#include "facering/complex.hpp"
#include "facering/field.hpp"
#include "facering/linalg.hpp"

#include <cstdint>
#include <vector>

namespace facering {

// Reduced (or unreduced) Betti numbers of a relative complex. Entry slots run
// from degree -1 to dim(total); degree -1 can only be nonzero for the pair
// ({∅}, void).
struct BettiVector {
  FieldSpec field;
  std::vector<long long> b;  // b[deg + 1]

  long long at(int degree) const {
    int idx = degree + 1;
    if (idx < 0 || idx >= static_cast<int>(b.size())) return 0;
    return b[static_cast<size_t>(idx)];
  }
  int max_degree() const { return static_cast<int>(b.size()) - 2; }
};

struct BoundaryMatrix {
  IntMat mat;                        // rows: (k-1)-faces of the pair, cols: k-faces
  std::vector<VertexSet> row_faces;  // empty VertexSet stands for the augmentation row
  std::vector<VertexSet> col_faces;
};

// Chain boundary of the pair in degree k (columns = k-faces of total not in
// sub, rows = (k-1)-faces, signs by ascending-vertex position parity). The
// augmentation row to C_{-1} is present iff sub is void. Requires
// -1 <= k <= dim(total).
BoundaryMatrix boundary_matrix(const RelativeComplex& psi, int k);

BettiVector betti(const RelativeComplex& psi, const FieldSpec& field, bool reduced = true);

// Alternating face-count sum including the empty face.
long long reduced_euler_characteristic(const SimplicialComplex& delta);
// Same value, but additionally recomputed as the alternating Betti sum over
// the given field; throws std::logic_error if the two disagree.
long long euler_characteristic_checked(const SimplicialComplex& delta, const FieldSpec& field);

// true iff every connected component C has b~_d(C, ∂C; F) = 1 where d is the
// component's dimension. Requires a homology manifold (checked; throws
// std::invalid_argument otherwise). Implemented in recognition.cpp.
bool orientable(const SimplicialComplex& delta, const FieldSpec& field);

// --- induced-subcomplex Betti engine ---------------------------------------
//
// Precomputes the face lists and boundary incidences of a pair once so the
// reduced Betti numbers of every induced pair (Δ_W, Γ_W) can be evaluated
// quickly across the 2^n subsets W of a ground list. This is the hot path of
// the sigma-number and Hochster sweeps.
class InducedBettiEngine {
 public:
  // ground_ids must contain the support of total; at most 63 entries.
  InducedBettiEngine(const RelativeComplex& pair, std::vector<int> ground_ids);

  int n() const { return static_cast<int>(ground_.size()); }
  const std::vector<int>& ground_ids() const { return ground_; }
  int max_degree() const { return static_cast<int>(masks_.size()) - 2; }

  // out[deg + 1] = b~_deg(Δ_W, Γ_W); out is resized to max_degree() + 2
  void reduced_betti(std::uint64_t w, const FieldSpec& field, std::vector<long long>& out) const;

 private:
  std::vector<int> ground_;                       // ascending vertex ids
  std::vector<std::vector<std::uint64_t>> masks_;  // relative faces by cardinality
  // inc_[c][t]: (index into masks_[c-1], sign) pairs; subfaces lying in sub are dropped
  std::vector<std::vector<std::vector<std::pair<int, int>>>> inc_;
};

// sums[k][deg + 1] = sum over |W| = k of b~_deg(Δ_W, Γ_W), over all W.
// Deterministic for every thread count (0 = library default).
std::vector<std::vector<long long>> subset_betti_sums(const InducedBettiEngine& engine,
                                                      const FieldSpec& field, int threads = 0);

int default_thread_count();

}  // namespace facering

#endif
