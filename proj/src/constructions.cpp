#include "facering/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace facering {

SimplicialComplex simplex(int k) {
  if (k < 0) throw std::invalid_argument("simplex dimension must be >= 0");
  return SimplicialComplex::from_facets({VertexSet::range(1, k + 1)});
}

SimplicialComplex boundary_of_simplex(int k) {
  if (k < 0) throw std::invalid_argument("simplex dimension must be >= 0");
  if (k == 0) return SimplicialComplex::empty_face_complex();
  std::vector<VertexSet> facets;
  for (int drop = 1; drop <= k + 1; ++drop) {
    VertexSet f = VertexSet::range(1, k + 1);
    f.erase(drop);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cone(int apex, const SimplicialComplex& base) {
  if (base.ground_set().contains(apex))
    throw std::invalid_argument("cone apex " + std::to_string(apex) + " already present");
  if (base.is_void()) throw std::invalid_argument("cone over the void complex");
  std::vector<VertexSet> facets;
  for (const auto& f : base.facets()) {
    VertexSet g = f;
    g.insert(apex);
    facets.push_back(std::move(g));
  }
  VertexSet ground = base.ground_set();
  ground.insert(apex);
  return SimplicialComplex::from_facets(std::move(facets), ground);
}

namespace {

// ridges lying in exactly one facet, assuming a pure complex
std::vector<VertexSet> degree_one_ridges(const SimplicialComplex& delta) {
  std::map<VertexSet, int> degree;
  for (const auto& f : delta.facets())
    for (int v : f) {
      VertexSet r = f;
      r.erase(v);
      ++degree[r];
    }
  std::vector<VertexSet> out;
  for (const auto& [r, deg] : degree)
    if (deg == 1) out.push_back(r);
  return out;
}

}  // namespace

SimplicialComplex cap_boundary(const SimplicialComplex& delta, int apex) {
  if (delta.is_void() || delta.dim() < 1)
    throw std::invalid_argument("cap_boundary needs a complex of dimension >= 1");
  if (!delta.is_pure()) throw std::invalid_argument("cap_boundary needs a pure complex");
  if (delta.ground_set().contains(apex))
    throw std::invalid_argument("apex " + std::to_string(apex) + " already present");
  std::vector<VertexSet> boundary = degree_one_ridges(delta);
  if (boundary.empty()) throw std::invalid_argument("cap_boundary of a closed complex");
  std::vector<VertexSet> facets = delta.facets();
  for (const auto& r : boundary) {
    VertexSet f = r;
    f.insert(apex);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex connected_sum(const SimplicialComplex& a, const VertexSet& facet_a,
                                const SimplicialComplex& b, const VertexSet& facet_b,
                                std::vector<std::pair<int, int>> phi) {
  if (a.is_void() || b.is_void()) throw std::invalid_argument("connected sum of a void complex");
  if (!a.is_pure() || !b.is_pure())
    throw std::invalid_argument("connected sum needs pure complexes");
  if (a.dim() != b.dim())
    throw std::invalid_argument("connected sum dimension mismatch: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
  auto is_facet = [](const SimplicialComplex& c, const VertexSet& f) {
    return std::find(c.facets().begin(), c.facets().end(), f) != c.facets().end();
  };
  if (!is_facet(a, facet_a)) throw std::invalid_argument(facet_a.to_string() + " is not a facet");
  if (!is_facet(b, facet_b)) throw std::invalid_argument(facet_b.to_string() + " is not a facet");

  if (phi.empty()) {
    auto va = facet_a.elements(), vb = facet_b.elements();
    for (size_t i = 0; i < va.size(); ++i) phi.emplace_back(va[i], vb[i]);
  }
  // phi must be a bijection facet_a -> facet_b
  VertexSet dom, img;
  for (auto [x, y] : phi) {
    if (!facet_a.contains(x) || !facet_b.contains(y))
      throw std::invalid_argument("phi maps outside the glued facets");
    dom.insert(x);
    img.insert(y);
  }
  if (!(dom == facet_a) || !(img == facet_b) || static_cast<int>(phi.size()) != facet_a.size())
    throw std::invalid_argument("phi is not a bijection between the glued facets");

  // relabel b: facet_b vertices to their phi-partners, the rest to fresh ids
  std::map<int, int> relabel;
  for (auto [x, y] : phi) relabel[y] = x;
  int fresh = a.ground_set().empty() ? 0 : a.ground_set().max_element();
  for (int v : b.support())
    if (!relabel.count(v)) relabel[v] = ++fresh;

  std::vector<VertexSet> facets;
  for (const auto& f : a.facets())
    if (!(f == facet_a)) facets.push_back(f);
  for (const auto& f : b.facets()) {
    if (f == facet_b) continue;
    VertexSet g;
    for (int v : f) g.insert(relabel.at(v));
    facets.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex stacked_sphere(int d, int n, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("stacked_sphere needs dimension >= 1");
  if (n < d + 2)
    throw std::invalid_argument("stacked_sphere needs at least " + std::to_string(d + 2) +
                                " vertices, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> facets = boundary_of_simplex(d + 1).facets();
  for (int v = d + 3; v <= n; ++v) {
    size_t pick = static_cast<size_t>(rng() % facets.size());
    VertexSet f = facets[pick];
    facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(pick));
    for (int x : f) {
      VertexSet g = f;
      g.erase(x);
      g.insert(v);
      facets.push_back(std::move(g));
    }
    std::sort(facets.begin(), facets.end());
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex stacked_ball(int d, int m, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("stacked_ball needs dimension >= 1");
  if (m < 1) throw std::invalid_argument("stacked_ball needs at least one facet");
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> facets = {VertexSet::range(1, d + 1)};
  int next_vertex = d + 1;
  for (int step = 1; step < m; ++step) {
    SimplicialComplex cur = SimplicialComplex::from_facets(facets);
    std::vector<VertexSet> boundary = degree_one_ridges(cur);
    VertexSet r = boundary[static_cast<size_t>(rng() % boundary.size())];
    r.insert(++next_vertex);
    facets = cur.facets();
    facets.push_back(std::move(r));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cyclic_polytope_boundary(int d, int n) {
  if (d < 2 || n < d + 1)
    throw std::invalid_argument("cyclic_polytope_boundary needs d >= 2 and n >= d+1");
  const bool cyclic = (d % 2 == 0);
  std::vector<VertexSet> facets;
  std::vector<int> idx(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i + 1;
  while (true) {
    VertexSet s;
    for (int v : idx) s.insert(v);
    // Gale evenness: between consecutive non-members the number of members
    // must be even; the cyclic form also constrains the wrap-around gap.
    std::vector<int> comp;
    for (int v = 1; v <= n; ++v)
      if (!s.contains(v)) comp.push_back(v);
    bool ok = true;
    auto members_between = [&](int lo, int hi) {
      int c = 0;
      for (int v = lo + 1; v < hi; ++v)
        if (s.contains(v)) ++c;
      return c;
    };
    for (size_t i = 0; i + 1 < comp.size() && ok; ++i)
      if (members_between(comp[i], comp[i + 1]) % 2 != 0) ok = false;
    if (ok && cyclic && !comp.empty()) {
      int wrap = members_between(comp.back(), n + 1) + members_between(0, comp.front());
      if (wrap % 2 != 0) ok = false;
    }
    if (ok) facets.push_back(std::move(s));

    int i = d - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - d + i + 1) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < d; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex remove_facet(const SimplicialComplex& delta, const VertexSet& facet) {
  if (std::find(delta.facets().begin(), delta.facets().end(), facet) == delta.facets().end())
    throw std::invalid_argument(facet.to_string() + " is not a facet");
  std::vector<VertexSet> candidates;
  for (const auto& f : delta.facets())
    if (!(f == facet)) candidates.push_back(f);
  for (int v : facet) {
    VertexSet r = facet;
    r.erase(v);
    candidates.push_back(std::move(r));
  }
  return SimplicialComplex::from_facets(std::move(candidates), delta.ground_set());
}

SimplicialComplex cross_polytope_boundary(int d) {
  if (d < 1) throw std::invalid_argument("cross polytope dimension must be >= 1");
  std::vector<VertexSet> facets;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << d); ++pick) {
    VertexSet f;
    for (int axis = 0; axis < d; ++axis)
      f.insert(2 * axis + ((pick >> axis) & 1 ? 2 : 1));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex minimal_projective_plane() {
  return SimplicialComplex::from_facets({{1, 2, 3},
                                         {1, 2, 4},
                                         {1, 3, 5},
                                         {1, 4, 6},
                                         {1, 5, 6},
                                         {2, 3, 6},
                                         {2, 4, 5},
                                         {2, 5, 6},
                                         {3, 4, 5},
                                         {3, 4, 6}});
}

}  // namespace facering
