#ifndef FACERING_STANLEY_REISNER_HPP
#define FACERING_STANLEY_REISNER_HPP

#include "facering/complex.hpp"
#include "facering/field.hpp"
#include "facering/rational.hpp"

#include <cstdint>
#include <vector>

namespace facering {

// dimension of the degree-k piece of the Stanley-Reisner module of the pair:
// sum_i f_{i-1} * C(k-1, i-1), the number of degree-k monomials whose support
// is a face of the pair
long long hilbert_function(const RelativeComplex& psi, int k);

struct GradedBettiTable {
  int n = 0;  // number of polynomial variables (= ground-set size)
  FieldSpec field;
  std::vector<std::vector<long long>> beta;  // beta[i][j], homological i, total degree j
  bool truncated = false;
  int degree_bound = -1;  // -1 means the full table

  long long at(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(beta.size())) return 0;
    const auto& row = beta[static_cast<size_t>(i)];
    if (j >= static_cast<int>(row.size())) return 0;
    return row[static_cast<size_t>(j)];
  }
  int max_i() const { return static_cast<int>(beta.size()) - 1; }
  int max_j() const;
  // sum_{k>=0} (-1)^k beta_{i+k, i+l}
  long long alternating_sum(int i, int l) const;
  bool operator==(const GradedBettiTable& o) const { return beta == o.beta; }
};

// beta_{i,i+j} = sum over subsets W of the ground set with |W| = i+j of
// b~_{j-1}(Δ_W, Γ_W). The polynomial ring has one variable per ground-set
// element (ghosts included).
GradedBettiTable graded_betti(const RelativeComplex& psi, const FieldSpec& field, int threads = 0);

// Independent check of the subset-sum route: builds a minimal graded free
// resolution of the Stanley-Reisner module by iterated syzygy extraction,
// component by multidegree, with exact linear algebra. Entries with total
// degree <= degree_bound are exact; the truncated flag is set when
// degree_bound < n. Cost-gated at n <= 8. degree_bound < 0 means n.
GradedBettiTable resolution_oracle(const RelativeComplex& psi, const FieldSpec& field,
                                   int degree_bound = -1);

struct ArtinianReduction {
  std::vector<long long> dims;                     // quotient dimensions, degree 0..d+1
  std::vector<std::vector<std::uint64_t>> forms;   // form_count x n coefficient rows
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int form_count = 0;
};

// Quotient of the Stanley-Reisner module by `count` random linear forms over
// F_p (count must be d or d+1 where d = dim + 1); per-degree dimensions by
// exact modular elimination on monomial bases.
ArtinianReduction artinian_reduction(const RelativeComplex& psi, const FieldSpec& mod_p, int count,
                                     std::uint64_t seed);

// h'_j = h_j + C(d,j) sum_{i=1}^{j-1} (-1)^{j-i-1} b~_{i-1}(psi; F) and the
// socle-corrected h''. Both are indexed 0..d with d = dim + 1.
std::vector<long long> h_prime(const RelativeComplex& psi, const FieldSpec& field);
std::vector<long long> h_double_prime(const RelativeComplex& psi, const FieldSpec& field);

struct SchenzelResult {
  bool passed = false;
  bool inconclusive = false;  // retries exhausted; never a refutation
  int attempts = 0;
  std::uint64_t seed_used = 0;
  std::vector<long long> dims;
  std::vector<long long> expected;  // h'
};

// Quotient dimensions by d random forms must equal h' in every degree;
// retries with fresh seeds cover non-generic draws. Requires a homology
// manifold whose Betti profile agrees over the rationals and over F_p.
SchenzelResult schenzel_check(const SimplicialComplex& delta, const FieldSpec& mod_p,
                              std::uint64_t seed, int max_retries = 3);

enum class WlpVerdict { passes, fails_sampled, inconclusive };

struct WlpResult {
  WlpVerdict verdict = WlpVerdict::inconclusive;
  int trials_run = 0;
  int witness_trial = -1;  // trial index of the surjective sample
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
};

// Samples d generic forms plus one multiplier over F_p and checks that
// multiplication (F[Δ]/Θ)_{⌊d/2⌋} → (F[Δ]/Θ)_{⌊d/2⌋+1} is onto. A single
// surjective sample is an exact certificate. Requires a homology ball or
// sphere over F_p.
WlpResult wlp_test(const SimplicialComplex& delta, std::uint64_t p, int trials,
                   std::uint64_t seed);

}  // namespace facering

#endif
