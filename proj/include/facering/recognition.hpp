#ifndef FACERING_RECOGNITION_HPP
#define FACERING_RECOGNITION_HPP

#include "facering/complex.hpp"
#include "facering/field.hpp"

#include <string>
#include <vector>

namespace facering {

enum class PseudomanifoldStatus { closed, with_boundary, no };

struct PseudomanifoldReport {
  PseudomanifoldStatus status = PseudomanifoldStatus::no;
  SimplicialComplex boundary;  // generated by the degree-1 ridges; void when closed
  std::string reason;          // populated when status == no
};

// Checks purity, ridge degree <= 2 and connectivity of the links of nonempty
// faces of dimension <= dim-2.
PseudomanifoldReport is_normal_pseudomanifold(const SimplicialComplex& delta);

enum class HomologyClass { sphere, ball, closed_manifold, manifold_with_boundary, other };

struct HomologyClassification {
  HomologyClass cls = HomologyClass::other;
  SimplicialComplex boundary;            // generated by the boundary faces
  std::vector<VertexSet> boundary_faces;  // nonempty boundary faces
  std::string reason;                     // witness when cls == other
  bool is_manifold() const { return cls != HomologyClass::other; }
  bool has_boundary() const {
    return cls == HomologyClass::ball || cls == HomologyClass::manifold_with_boundary;
  }
};

// Tests every nonempty face link against the sphere/ball homology profiles
// over the field; for complexes with boundary additionally verifies that the
// boundary faces form a closed homology manifold.
HomologyClassification classify_homology(const SimplicialComplex& delta, const FieldSpec& field);

// (Δ, ∂Δ) with the boundary read off the degree-1 ridges. Requires a
// pseudomanifold (with or without boundary).
RelativeComplex interior_faces(const SimplicialComplex& delta);

// no interior faces of dimension <= dim - r - 1; throws on closed input
bool r_stacked_with_boundary(const SimplicialComplex& delta, int r);

// dim >= 3: g_2 = 0; dim 2: greedy degree-3 vertex reduction; dim 1: any
// cycle counts. Requires classify_homology(...) == sphere.
bool is_stacked_sphere(const SimplicialComplex& delta, const FieldSpec& field);

struct PropertyLVertex {
  int vertex = 0;
  bool boundary_vertex = false;
  bool ok = false;
  std::string detail;
};

struct PropertyLReport {
  bool holds = false;
  std::vector<PropertyLVertex> vertices;
};

// Equality-case test: every interior-vertex link is a stacked sphere and
// every boundary-vertex link B satisfies 2 C(d+2,2) σ~_0(B,∂B) = f_0(B,∂B)
// exactly. Requires a homology manifold with boundary of dimension >= 3.
PropertyLReport property_L(const SimplicialComplex& delta, const FieldSpec& field);

// maximal connected subcomplexes ({∅} and void have none)
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& delta);
bool is_connected(const SimplicialComplex& delta);

}  // namespace facering

#endif
