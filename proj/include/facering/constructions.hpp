#ifndef FACERING_CONSTRUCTIONS_HPP
#define FACERING_CONSTRUCTIONS_HPP

#include "facering/complex.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace facering {

// Generators for the triangulation families exercised by the check harness.
// Everything here is deterministic; the seeded constructions reproduce the
// same complex bit for bit for the same seed.

// full k-simplex on {1..k+1}; boundary = all proper subsets (boundary of a
// point is the {∅} complex)
SimplicialComplex simplex(int k);
SimplicialComplex boundary_of_simplex(int k);

// cone with a fresh apex; throws if the apex is already in the ground set
SimplicialComplex cone(int apex, const SimplicialComplex& base);

// Δ ∪ (apex * ∂Δ) with ∂Δ read off the degree-1 ridges. Requires a pure
// complex with nonempty ridge boundary and a fresh apex.
SimplicialComplex cap_boundary(const SimplicialComplex& delta, int apex);

// Connected sum: relabels b's vertices above max(a), identifies facet_b with
// facet_a via phi and removes the glued facet. phi maps vertices of facet_a
// to vertices of facet_b; by default ascending order is paired.
SimplicialComplex connected_sum(const SimplicialComplex& a, const VertexSet& facet_a,
                                const SimplicialComplex& b, const VertexSet& facet_b,
                                std::vector<std::pair<int, int>> phi = {});

// d-sphere on n vertices built from the boundary of a (d+1)-simplex by n-d-2
// seeded-random facet subdivisions (connected sums with simplex boundaries)
SimplicialComplex stacked_sphere(int d, int n, std::uint64_t seed);

// facet tree of m d-simplices glued along seeded-random boundary ridges
SimplicialComplex stacked_ball(int d, int m, std::uint64_t seed);

// Boundary complex of the cyclic d-polytope with n vertices via Gale
// evenness (linear condition for odd d, cyclic condition for even d).
SimplicialComplex cyclic_polytope_boundary(int d, int n);

// drops the facet; maximal faces of what remains
SimplicialComplex remove_facet(const SimplicialComplex& delta, const VertexSet& facet);

// boundary of the d-dimensional cross-polytope on {1..2d} (octahedron at d=3)
SimplicialComplex cross_polytope_boundary(int d);

// the 6-vertex triangulation of the real projective plane
SimplicialComplex minimal_projective_plane();

}  // namespace facering

#endif
