#include "facering/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace facering {

struct SimplicialComplex::Cache {
  std::vector<std::vector<VertexSet>> faces_by_card;
};

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> facets,
                                                 std::optional<VertexSet> ground) {
  SimplicialComplex c;
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // drop sets contained in another listed set
  std::vector<VertexSet> maximal;
  for (size_t i = 0; i < facets.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < facets.size() && !dominated; ++j)
      if (j != i && facets[i].subset_of(facets[j]) && !(facets[j].subset_of(facets[i])))
        dominated = true;
    if (!dominated) maximal.push_back(facets[i]);
  }
  c.facets_ = std::move(maximal);

  VertexSet supp;
  for (const auto& f : c.facets_) supp = supp.unite(f);
  if (ground) {
    if (!supp.subset_of(*ground))
      throw std::invalid_argument("ground set is missing listed vertices " +
                                  supp.minus(*ground).to_string());
    c.ground_ = *ground;
  } else {
    c.ground_ = supp;
  }
  return c;
}

SimplicialComplex SimplicialComplex::empty_face_complex() {
  SimplicialComplex c;
  c.facets_.push_back(VertexSet{});
  return c;
}

int SimplicialComplex::dim() const {
  if (is_void()) throw std::domain_error("dimension of the void complex is undefined");
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (is_void()) return true;
  int d = dim();
  for (const auto& f : facets_)
    if (f.size() - 1 != d) return false;
  return true;
}

VertexSet SimplicialComplex::support() const {
  VertexSet s;
  for (const auto& f : facets_) s = s.unite(f);
  return s;
}

bool SimplicialComplex::is_face(const VertexSet& f) const {
  for (const auto& g : facets_)
    if (f.subset_of(g)) return true;
  return false;
}

const std::vector<std::vector<VertexSet>>& SimplicialComplex::faces_by_card() const {
  static const std::vector<std::vector<VertexSet>> kVoid{};
  if (is_void()) return kVoid;
  std::lock_guard<std::mutex> lock(*cache_mutex_);
  if (!cache_) {
    auto cache = std::make_shared<Cache>();
    std::unordered_set<VertexSet> seen;
    cache->faces_by_card.resize(static_cast<size_t>(dim()) + 2);
    // downward closure of every facet
    for (const auto& fac : facets_) {
      std::vector<int> vs = fac.elements();
      size_t m = vs.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        VertexSet face;
        for (size_t i = 0; i < m; ++i)
          if (mask & (std::uint64_t{1} << i)) face.insert(vs[i]);
        if (seen.insert(face).second)
          cache->faces_by_card[static_cast<size_t>(face.size())].push_back(std::move(face));
      }
    }
    for (auto& bucket : cache->faces_by_card) std::sort(bucket.begin(), bucket.end());
    cache_ = std::move(cache);
  }
  return cache_->faces_by_card;
}

long long SimplicialComplex::face_count(int k) const {
  if (is_void()) return 0;
  const auto& byc = faces_by_card();
  int c = k + 1;
  if (c < 0 || c >= static_cast<int>(byc.size())) return 0;
  return static_cast<long long>(byc[static_cast<size_t>(c)].size());
}

SimplicialComplex SimplicialComplex::link(const VertexSet& f) const {
  if (!is_face(f)) return void_complex();
  std::vector<VertexSet> lk;
  for (const auto& g : facets_)
    if (f.subset_of(g)) lk.push_back(g.minus(f));
  // facets containing f yield incomparable differences, no pruning needed
  return from_facets(std::move(lk));
}

SimplicialComplex SimplicialComplex::star(const VertexSet& f) const {
  if (!is_face(f)) return void_complex();
  std::vector<VertexSet> st;
  for (const auto& g : facets_)
    if (f.subset_of(g)) st.push_back(g);
  return from_facets(std::move(st));
}

SimplicialComplex SimplicialComplex::delete_vertex(int v) const {
  std::vector<VertexSet> fs;
  for (const auto& g : facets_) {
    if (g.contains(v)) {
      VertexSet h = g;
      h.erase(v);
      fs.push_back(std::move(h));
    } else {
      fs.push_back(g);
    }
  }
  VertexSet ground = ground_;
  ground.erase(v);
  if (fs.empty()) return void_complex();
  return from_facets(std::move(fs), ground);
}

SimplicialComplex SimplicialComplex::induced(const VertexSet& w) const {
  if (is_void()) return void_complex();
  std::vector<VertexSet> fs;
  for (const auto& g : facets_) fs.push_back(g.intersect(w));
  return from_facets(std::move(fs), w);
}

std::vector<VertexSet> SimplicialComplex::missing_faces(int k) const {
  if (is_void()) throw std::domain_error("missing_faces of the void complex");
  std::vector<VertexSet> out;
  std::vector<int> vs = support().elements();
  int n = static_cast<int>(vs.size());
  int c = k + 1;
  if (c < 1 || c > n) return out;
  // enumerate c-subsets of the support
  std::vector<int> idx(static_cast<size_t>(c));
  for (int i = 0; i < c; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(vs[static_cast<size_t>(i)]);
    if (!is_face(s)) {
      bool all_proper_faces = true;
      for (int v : s) {
        VertexSet t = s;
        t.erase(v);
        if (!is_face(t)) {
          all_proper_faces = false;
          break;
        }
      }
      if (all_proper_faces) out.push_back(std::move(s));
    }
    // next combination
    int i = c - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - c + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < c; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

RelativeComplex RelativeComplex::make(SimplicialComplex total, SimplicialComplex sub) {
  for (const auto& f : sub.facets())
    if (!total.is_face(f))
      throw std::invalid_argument("sub is not a subcomplex: witness face " + f.to_string());
  RelativeComplex r;
  r.total_ = std::move(total);
  r.sub_ = std::move(sub);
  return r;
}

RelativeComplex RelativeComplex::whole(SimplicialComplex total) {
  RelativeComplex r;
  r.total_ = std::move(total);
  return r;
}

RelativeComplex RelativeComplex::vertex_link(int v) const {
  VertexSet f{v};
  RelativeComplex r;
  r.total_ = total_.link(f);
  r.sub_ = sub_.link(f);
  return r;
}

RelativeComplex RelativeComplex::induced(const VertexSet& w) const {
  RelativeComplex r;
  r.total_ = total_.induced(w);
  r.sub_ = sub_.induced(w);
  return r;
}

SimplicialComplex build_complex(std::vector<VertexSet> facets, std::optional<VertexSet> ground) {
  return SimplicialComplex::from_facets(std::move(facets), std::move(ground));
}

RelativeComplex relative(SimplicialComplex total, SimplicialComplex sub) {
  return RelativeComplex::make(std::move(total), std::move(sub));
}

}  // namespace facering
