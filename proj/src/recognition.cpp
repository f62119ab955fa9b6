#include "facering/recognition.hpp"

#include "facering/face_vectors.hpp"
#include "facering/homology.hpp"
#include "facering/sigma_mu.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace facering {

namespace {

std::map<VertexSet, int> ridge_degrees(const SimplicialComplex& delta) {
  std::map<VertexSet, int> degree;
  for (const auto& f : delta.facets())
    for (int v : f) {
      VertexSet r = f;
      r.erase(v);
      ++degree[r];
    }
  return degree;
}

SimplicialComplex ridge_boundary(const SimplicialComplex& delta) {
  std::vector<VertexSet> facets;
  for (const auto& [r, deg] : ridge_degrees(delta))
    if (deg == 1) facets.push_back(r);
  if (facets.empty()) return SimplicialComplex::void_complex();
  return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& delta) {
  if (delta.is_void()) return {};
  std::vector<int> verts = delta.support().elements();
  if (verts.empty()) return {};  // the {∅} complex
  std::map<int, int> slot;
  for (size_t i = 0; i < verts.size(); ++i) slot[verts[i]] = static_cast<int>(i);

  std::vector<int> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const auto& f : delta.facets()) {
    int prev = -1;
    for (int v : f) {
      int cur = slot[v];
      if (prev >= 0) parent[static_cast<size_t>(find(cur))] = find(prev);
      prev = cur;
    }
  }
  std::map<int, std::vector<VertexSet>> groups;
  for (const auto& f : delta.facets())
    if (!f.empty()) groups[find(slot[f.min_element()])].push_back(f);
  std::vector<SimplicialComplex> out;
  for (auto& [root, facets] : groups) out.push_back(SimplicialComplex::from_facets(facets));
  return out;
}

bool is_connected(const SimplicialComplex& delta) {
  return connected_components(delta).size() == 1;
}

PseudomanifoldReport is_normal_pseudomanifold(const SimplicialComplex& delta) {
  PseudomanifoldReport rep;
  if (delta.is_void() || delta.dim() < 0) {
    rep.reason = "void or empty complex";
    return rep;
  }
  if (!delta.is_pure()) {
    rep.reason = "not pure";
    return rep;
  }
  int d = delta.dim();
  bool has_free_ridge = false;
  for (const auto& [r, deg] : ridge_degrees(delta)) {
    if (deg > 2) {
      rep.reason = "ridge " + r.to_string() + " lies in " + std::to_string(deg) + " facets";
      return rep;
    }
    if (deg == 1) has_free_ridge = true;
  }
  // links of nonempty faces of dimension <= d-2 must be connected
  const auto& byc = delta.faces_by_card();
  for (int c = 1; c <= d - 1 && c < static_cast<int>(byc.size()); ++c) {
    for (const auto& f : byc[static_cast<size_t>(c)]) {
      SimplicialComplex lk = delta.link(f);
      if (!is_connected(lk)) {
        rep.reason = "link of " + f.to_string() + " is disconnected";
        return rep;
      }
    }
  }
  rep.status = has_free_ridge ? PseudomanifoldStatus::with_boundary : PseudomanifoldStatus::closed;
  if (has_free_ridge) rep.boundary = ridge_boundary(delta);
  return rep;
}

namespace {

// reduced homology profile tests: a j-sphere has b~_j = 1 and nothing else,
// a j-ball (j >= 0) is acyclic; S^{-1} is the {∅} complex
bool sphere_profile(const BettiVector& b, int j) {
  for (int deg = -1; deg <= b.max_degree(); ++deg)
    if (b.at(deg) != (deg == j ? 1 : 0)) return false;
  return j <= b.max_degree();
}

bool ball_profile(const BettiVector& b) {
  for (int deg = -1; deg <= b.max_degree(); ++deg)
    if (b.at(deg) != 0) return false;
  return true;
}

}  // namespace

HomologyClassification classify_homology(const SimplicialComplex& delta, const FieldSpec& field) {
  HomologyClassification out;
  if (delta.is_void() || delta.dim() < 0) {
    out.reason = "void or empty complex";
    return out;
  }
  const int d = delta.dim();
  const auto& byc = delta.faces_by_card();
  for (int c = 1; c < static_cast<int>(byc.size()); ++c) {
    for (const auto& g : byc[static_cast<size_t>(c)]) {
      SimplicialComplex lk = delta.link(g);
      int expected = d - c;  // link of a (c-1)-face should look like S or B of this dim
      if (lk.is_void()) {
        out.reason = "face " + g.to_string() + " has void link";
        return out;
      }
      // the {∅} link corresponds to expected = -1
      BettiVector b = betti(RelativeComplex::whole(lk), field, true);
      if (sphere_profile(b, expected) && (lk.dim() == expected)) {
        continue;  // interior face
      }
      if (expected >= 0 && ball_profile(b) && lk.dim() == expected) {
        out.boundary_faces.push_back(g);
        continue;
      }
      out.reason = "link of " + g.to_string() + " is neither a homology sphere nor ball of dim " +
                   std::to_string(expected);
      return out;
    }
  }

  if (out.boundary_faces.empty()) {
    BettiVector b = betti(RelativeComplex::whole(delta), field, true);
    out.cls = sphere_profile(b, d) ? HomologyClass::sphere : HomologyClass::closed_manifold;
    return out;
  }

  // boundary faces plus ∅ must form a closed (d-1)-dimensional homology manifold
  out.boundary = SimplicialComplex::from_facets(out.boundary_faces);
  if (out.boundary.dim() != d - 1) {
    out.reason = "boundary faces have dimension " + std::to_string(out.boundary.dim()) +
                 ", expected " + std::to_string(d - 1);
    out.cls = HomologyClass::other;
    out.boundary = SimplicialComplex::void_complex();
    out.boundary_faces.clear();
    return out;
  }
  HomologyClassification bd = classify_homology(out.boundary, field);
  if (bd.cls != HomologyClass::sphere && bd.cls != HomologyClass::closed_manifold) {
    out.reason = "boundary is not a closed homology manifold (" + bd.reason + ")";
    out.cls = HomologyClass::other;
    out.boundary = SimplicialComplex::void_complex();
    out.boundary_faces.clear();
    return out;
  }

  BettiVector whole = betti(RelativeComplex::whole(delta), field, true);
  bool acyclic = ball_profile(whole);
  out.cls = (acyclic && bd.cls == HomologyClass::sphere) ? HomologyClass::ball
                                                         : HomologyClass::manifold_with_boundary;
  return out;
}

RelativeComplex interior_faces(const SimplicialComplex& delta) {
  PseudomanifoldReport pm = is_normal_pseudomanifold(delta);
  if (pm.status == PseudomanifoldStatus::no)
    throw std::invalid_argument("interior_faces: not a pseudomanifold (" + pm.reason + ")");
  if (pm.status == PseudomanifoldStatus::closed) return RelativeComplex::whole(delta);
  return RelativeComplex::make(delta, pm.boundary);
}

bool r_stacked_with_boundary(const SimplicialComplex& delta, int r) {
  if (r < 1) throw std::invalid_argument("stackedness order must be >= 1");
  PseudomanifoldReport pm = is_normal_pseudomanifold(delta);
  if (pm.status != PseudomanifoldStatus::with_boundary)
    throw std::invalid_argument("r_stacked_with_boundary needs a pseudomanifold with boundary");
  int d = delta.dim();
  FaceVector f = f_vector(RelativeComplex::make(delta, pm.boundary));
  for (int i = 0; i <= d - r - 1; ++i)
    if (f.f(i) != 0) return false;
  return true;
}

namespace {

bool is_boundary_of_simplex(const SimplicialComplex& delta) {
  int d = delta.dim();
  std::vector<int> verts = delta.support().elements();
  if (static_cast<int>(verts.size()) != d + 2) return false;
  VertexSet all;
  for (int v : verts) all.insert(v);
  if (static_cast<int>(delta.facets().size()) != d + 2) return false;
  for (const auto& f : delta.facets())
    if (f.size() != d + 1 || !f.subset_of(all)) return false;
  return true;
}

// greedy degree-3 reduction for 2-spheres: repeatedly replace the star of a
// degree-3 vertex by the opposite triangle
bool stacked_two_sphere(SimplicialComplex cur) {
  while (true) {
    if (is_boundary_of_simplex(cur)) return true;
    int pick = -1;
    VertexSet nbrs;
    for (int v : cur.support()) {
      SimplicialComplex lk = cur.link(VertexSet{v});
      if (lk.is_void()) continue;
      VertexSet nb = lk.support();
      if (nb.size() == 3) {
        pick = v;
        nbrs = nb;
        break;  // smallest vertex id wins: support iterates ascending
      }
    }
    if (pick < 0) return false;
    if (cur.is_face(nbrs)) return false;  // opposite triangle already present
    std::vector<VertexSet> facets;
    for (const auto& f : cur.facets())
      if (!f.contains(pick)) facets.push_back(f);
    facets.push_back(nbrs);
    cur = SimplicialComplex::from_facets(std::move(facets));
  }
}

}  // namespace

bool is_stacked_sphere(const SimplicialComplex& delta, const FieldSpec& field) {
  HomologyClassification cls = classify_homology(delta, field);
  if (cls.cls != HomologyClass::sphere)
    throw std::invalid_argument("is_stacked_sphere needs a homology sphere (" + cls.reason + ")");
  int d = delta.dim();
  if (d >= 3) {
    HVector h = h_vector(RelativeComplex::whole(delta));
    return h.g(2) == 0;
  }
  if (d == 2) return stacked_two_sphere(delta);
  if (d == 1) return delta.support().size() >= 3;  // every polygon bounds
  return true;  // S^0 is the boundary of an edge
}

PropertyLReport property_L(const SimplicialComplex& delta, const FieldSpec& field) {
  HomologyClassification cls = classify_homology(delta, field);
  if (!cls.has_boundary())
    throw std::invalid_argument("property_L needs a homology manifold with boundary");
  int d = delta.dim();
  if (d < 3) throw std::invalid_argument("property_L needs dimension >= 3");

  PropertyLReport rep;
  rep.holds = true;
  for (int v : delta.support()) {
    PropertyLVertex row;
    row.vertex = v;
    row.boundary_vertex = cls.boundary.is_face(VertexSet{v});
    SimplicialComplex lk = delta.link(VertexSet{v});
    if (row.boundary_vertex) {
      SimplicialComplex lk_boundary = cls.boundary.link(VertexSet{v});
      RelativeComplex pair = RelativeComplex::make(lk, lk_boundary);
      Rational lhs = Rational(2) * Rational(binomial_ll(d + 2, 2)) * sigma_tilde(pair, 0, field);
      Rational rhs = Rational(f_vector(pair).f(0));
      row.ok = (lhs == rhs);
      row.detail = "2 C(d+2,2) sigma_0(link pair) = " + rational_to_string(lhs) +
                   " vs interior link vertices " + rational_to_string(rhs);
    } else {
      row.ok = is_stacked_sphere(lk, field);
      row.detail = row.ok ? "interior link is a stacked sphere" : "interior link is not stacked";
    }
    if (!row.ok) rep.holds = false;
    rep.vertices.push_back(std::move(row));
  }
  return rep;
}

bool orientable(const SimplicialComplex& delta, const FieldSpec& field) {
  HomologyClassification cls = classify_homology(delta, field);
  if (!cls.is_manifold())
    throw std::invalid_argument("orientable needs a homology manifold (" + cls.reason + ")");
  for (const auto& comp : connected_components(delta)) {
    HomologyClassification c = classify_homology(comp, field);
    RelativeComplex pair = c.has_boundary() ? RelativeComplex::make(comp, c.boundary)
                                            : RelativeComplex::whole(comp);
    if (betti(pair, field, true).at(comp.dim()) != 1) return false;
  }
  return true;
}

}  // namespace facering
