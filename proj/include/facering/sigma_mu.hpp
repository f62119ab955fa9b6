#ifndef FACERING_SIGMA_MU_HPP
#define FACERING_SIGMA_MU_HPP

#include "facering/complex.hpp"
#include "facering/field.hpp"
#include "facering/rational.hpp"

#include <vector>

namespace facering {

// sigma~_i(Δ,Γ) = 1/(|V|+1) * sum over W ⊆ V of b~_i(Δ_W, Γ_W) / C(|V|,|W|),
// with V the ground set of the total complex (ghost vertices included; the
// value does not depend on them). Subset sums are grouped by cardinality and
// divided once, so all arithmetic outside the Betti computations is exact
// rational.
RationalVector sigma_vector(const RelativeComplex& psi, const FieldSpec& field, int threads = 0);
RationalVector sigma_vector_on(const RelativeComplex& psi, const std::vector<int>& ground,
                               const FieldSpec& field, int threads = 0);
Rational sigma_tilde(const RelativeComplex& psi, int i, const FieldSpec& field);

// mu_i(Δ,Γ) = sum over ground-set vertices v of sigma~_{i-1}(lk_Δ(v), lk_Γ(v));
// vertices whose link is void contribute 0.
RationalVector mu_vector(const RelativeComplex& psi, const FieldSpec& field, int threads = 0);
Rational mu(const RelativeComplex& psi, int i, const FieldSpec& field);

struct MorseRow {
  int i = 0;
  long long b = 0;        // unreduced b_i(Δ,Γ)
  Rational mu_i;          // mu_i(Δ,Γ)
  bool single_holds = false;
  Rational alt_b, alt_mu;  // alternating partial sums up to i
  bool alternating_holds = false;
};

// Morse-type inequalities b_i <= mu_i and their alternating partial-sum form,
// for 0 <= i <= up_to (default: dim + 1).
std::vector<MorseRow> morse_bounds(const RelativeComplex& psi, const FieldSpec& field,
                                   int up_to = -1);

struct OrderedMorseResult {
  long long lhs = 0;  // b_i(Δ,Γ)
  long long rhs = 0;  // sum of initial-segment link Betti numbers
  bool holds = false;
};

// One Morse inequality with respect to a vertex ordering: b_i(Δ,Γ) is at most
// the sum over k of b~_{i-1}(lk_Δ(v_k) induced on {v_1..v_{k-1}}, same for Γ).
// ordering must be a permutation of the ground set.
OrderedMorseResult ordered_morse(const RelativeComplex& psi, const std::vector<int>& ordering,
                                 const FieldSpec& field, int i);

// sigma~ computed on the ground set and on ground ∪ extra agree exactly for
// every degree. Throws if an extra vertex collides with the ground set.
bool ground_set_invariance(const SimplicialComplex& delta, const SimplicialComplex& gamma,
                           const VertexSet& extra, const FieldSpec& field);

struct DualityRow {
  int i = 0;
  Rational lhs, rhs;
  bool holds = false;
};

struct DualityReport {
  bool ball_part_applies = false;       // sigma duality (homology balls)
  std::vector<DualityRow> sigma_rows;   // σ~_{i-1}(Δ,∂Δ) vs σ~_{d-1-i}(Δ)
  bool sigma_holds = true;
  std::vector<DualityRow> mu_rows;      // mu_i(Δ,∂Δ) vs mu_{d-i}(Δ)
  bool mu_holds = true;
};

// Requires a homology ball or homology manifold with nonempty boundary over
// the field; throws std::invalid_argument on closed or unrecognized input.
DualityReport duality_checks(const SimplicialComplex& delta, const FieldSpec& field);

}  // namespace facering

#endif
