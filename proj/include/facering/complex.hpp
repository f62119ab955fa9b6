#ifndef FACERING_COMPLEX_HPP
#define FACERING_COMPLEX_HPP

#include "facering/vertex_set.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace facering {

// An abstract simplicial complex stored by its inclusion-maximal faces.
//
// Two degenerate complexes are distinguished: the void complex (no faces at
// all, empty facet list) and the complex {∅} (facet list containing only the
// empty set). The ground set may strictly contain the vertex support; "ghost"
// vertices matter for sigma-number computations.
//
// Instances are immutable after construction; the face enumeration cache is
// built lazily and may be shared freely across threads.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void complex, empty ground set

  // Prunes duplicates and non-maximal sets. ground defaults to the union of
  // the facets. Throws std::invalid_argument if ground misses a listed vertex.
  static SimplicialComplex from_facets(std::vector<VertexSet> facets,
                                       std::optional<VertexSet> ground = std::nullopt);

  static SimplicialComplex void_complex() { return SimplicialComplex(); }
  // The complex whose only face is the empty set.
  static SimplicialComplex empty_face_complex();

  bool is_void() const { return facets_.empty(); }
  // dimension; throws std::domain_error on the void complex. dim({∅}) = -1.
  int dim() const;
  bool is_pure() const;

  const std::vector<VertexSet>& facets() const { return facets_; }
  const VertexSet& ground_set() const { return ground_; }
  VertexSet support() const;

  bool is_face(const VertexSet& f) const;

  // All faces grouped by cardinality: result[c] lists the faces with c
  // vertices, each list sorted. result[0] = {∅} unless the complex is void.
  // Memoized; safe for concurrent readers.
  const std::vector<std::vector<VertexSet>>& faces_by_card() const;
  // number of k-dimensional faces (k = -1 counts the empty face)
  long long face_count(int k) const;

  // lk(f) = {G : f ∪ G a face, f ∩ G = ∅}; the void complex if f is not a face.
  SimplicialComplex link(const VertexSet& f) const;
  // closed star: all faces G with f ∪ G a face
  SimplicialComplex star(const VertexSet& f) const;
  // all faces not containing v; ground set loses v
  SimplicialComplex delete_vertex(int v) const;
  // faces contained in w, with ground set w
  SimplicialComplex induced(const VertexSet& w) const;

  // All missing k-faces: (k+1)-subsets of the support that are not faces but
  // whose proper subsets are all faces.
  std::vector<VertexSet> missing_faces(int k) const;

  // Equality compares facets and ground set.
  bool operator==(const SimplicialComplex& o) const {
    return facets_ == o.facets_ && ground_ == o.ground_;
  }

 private:
  struct Cache;

  VertexSet ground_;
  std::vector<VertexSet> facets_;  // sorted, canonical

  mutable std::shared_ptr<const Cache> cache_;
  mutable std::shared_ptr<std::mutex> cache_mutex_ = std::make_shared<std::mutex>();
};

// A pair (total, sub) with sub a subcomplex of total; its faces are the faces
// of total that are not faces of sub. (total, void) is total itself.
class RelativeComplex {
 public:
  RelativeComplex() = default;

  // Validates sub ⊆ total; the error message carries a witness facet.
  static RelativeComplex make(SimplicialComplex total, SimplicialComplex sub);
  static RelativeComplex whole(SimplicialComplex total);

  const SimplicialComplex& total() const { return total_; }
  const SimplicialComplex& sub() const { return sub_; }
  bool sub_is_void() const { return sub_.is_void(); }

  // true iff the empty face belongs to the relative complex
  bool has_relative_empty_face() const { return !total_.is_void() && sub_.is_void(); }

  // dimension of the total complex (throws on void total)
  int dim() const { return total_.dim(); }

  // the pair (lk_total(v), lk_sub(v))
  RelativeComplex vertex_link(int v) const;
  // the pair (total_W, sub_W)
  RelativeComplex induced(const VertexSet& w) const;

 private:
  SimplicialComplex total_;
  SimplicialComplex sub_;
};

// Convenience free functions mirroring the library surface.
SimplicialComplex build_complex(std::vector<VertexSet> facets,
                                std::optional<VertexSet> ground = std::nullopt);
RelativeComplex relative(SimplicialComplex total, SimplicialComplex sub);

}  // namespace facering

#endif
