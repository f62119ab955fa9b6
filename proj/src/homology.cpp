#include "facering/homology.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace facering {

namespace {

// boundary map between the relative c-faces and relative (c-1)-faces of a pair
IntMat boundary_between(const std::vector<VertexSet>& rows, const std::vector<VertexSet>& cols,
                        const SimplicialComplex& sub, bool sub_void) {
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    const VertexSet& face = cols[static_cast<size_t>(j)];
    int sign = 1;
    for (int v : face) {
      VertexSet f = face;
      f.erase(v);
      if (sub_void || !sub.is_face(f)) {
        auto it = std::lower_bound(rows.begin(), rows.end(), f);
        if (it == rows.end() || !(*it == f))
          throw std::logic_error("boundary face missing from row index");
        m.at(static_cast<int>(it - rows.begin()), j) = sign;
      }
      sign = -sign;
    }
  }
  return m;
}

// relative faces of the pair grouped by cardinality (slot 0 holds ∅ iff sub is void)
std::vector<std::vector<VertexSet>> relative_faces_by_card(const RelativeComplex& psi) {
  const auto& byc = psi.total().faces_by_card();
  std::vector<std::vector<VertexSet>> rel(byc.size());
  for (size_t c = 0; c < byc.size(); ++c)
    for (const auto& f : byc[c])
      if (psi.sub_is_void() || !psi.sub().is_face(f)) rel[c].push_back(f);
  return rel;
}

}  // namespace

BoundaryMatrix boundary_matrix(const RelativeComplex& psi, int k) {
  if (psi.total().is_void()) throw std::domain_error("boundary_matrix of the void complex");
  int dim = psi.total().dim();
  if (k < -1 || k > dim)
    throw std::out_of_range("boundary degree " + std::to_string(k) + " outside [-1, dim]");
  auto rel = relative_faces_by_card(psi);
  auto faces_at = [&](int c) -> std::vector<VertexSet> {
    if (c < 0 || c >= static_cast<int>(rel.size())) return {};
    return rel[static_cast<size_t>(c)];
  };
  BoundaryMatrix bm;
  bm.col_faces = faces_at(k + 1);
  bm.row_faces = faces_at(k);
  bm.mat = boundary_between(bm.row_faces, bm.col_faces, psi.sub(), psi.sub_is_void());
  return bm;
}

BettiVector betti(const RelativeComplex& psi, const FieldSpec& field, bool reduced) {
  if (psi.total().is_void()) throw std::domain_error("betti of the void complex");
  int dim = psi.total().dim();
  auto rel = relative_faces_by_card(psi);
  rel.resize(static_cast<size_t>(dim) + 2);

  // ranks[c] = rank of the map from cardinality c to cardinality c-1
  std::vector<int> ranks(rel.size() + 1, 0);
  for (size_t c = 1; c < rel.size(); ++c) {
    if (rel[c].empty() || rel[c - 1].empty()) continue;
    IntMat m = boundary_between(rel[c - 1], rel[c], psi.sub(), psi.sub_is_void());
    ranks[c] = rank_over(m, field);
  }

  BettiVector out;
  out.field = field;
  out.b.assign(rel.size(), 0);
  for (size_t c = 0; c < rel.size(); ++c)
    out.b[c] = static_cast<long long>(rel[c].size()) - ranks[c] - ranks[c + 1];

  if (!reduced && psi.sub_is_void()) {
    // dropping the augmentation removes degree -1 and bumps degree 0 by the
    // rank of the augmentation row (1 when there is any vertex)
    out.b[0] = 0;
    bool has_vertex = rel.size() > 1 && !rel[1].empty();
    if (has_vertex) out.b[1] += 1;
  }
  return out;
}

long long reduced_euler_characteristic(const SimplicialComplex& delta) {
  if (delta.is_void()) throw std::domain_error("euler characteristic of the void complex");
  const auto& byc = delta.faces_by_card();
  long long chi = 0;
  for (size_t c = 0; c < byc.size(); ++c) {
    long long term = static_cast<long long>(byc[c].size());
    chi += (c % 2 == 0) ? -term : term;  // cardinality c counts (c-1)-faces
  }
  return chi;
}

long long euler_characteristic_checked(const SimplicialComplex& delta, const FieldSpec& field) {
  long long chi = reduced_euler_characteristic(delta);
  BettiVector bv = betti(RelativeComplex::whole(delta), field, true);
  long long alt = 0;
  for (int deg = -1; deg <= bv.max_degree(); ++deg) {
    long long term = bv.at(deg);
    alt += (deg % 2 == 0) ? term : -term;
  }
  if (alt != chi)
    throw std::logic_error("euler characteristic mismatch: faces give " + std::to_string(chi) +
                           ", betti numbers give " + std::to_string(alt));
  return chi;
}

// --- InducedBettiEngine -----------------------------------------------------

InducedBettiEngine::InducedBettiEngine(const RelativeComplex& pair, std::vector<int> ground_ids) {
  std::sort(ground_ids.begin(), ground_ids.end());
  ground_ids.erase(std::unique(ground_ids.begin(), ground_ids.end()), ground_ids.end());
  if (ground_ids.size() > 63)
    throw std::invalid_argument("subset engine limited to 63 ground vertices, got " +
                                std::to_string(ground_ids.size()));
  ground_ = std::move(ground_ids);

  std::vector<int> bit_of(ground_.empty() ? 0 : ground_.back() + 1, -1);
  for (size_t i = 0; i < ground_.size(); ++i) bit_of[static_cast<size_t>(ground_[i])] = static_cast<int>(i);
  auto to_mask = [&](const VertexSet& f) {
    std::uint64_t m = 0;
    for (int v : f) {
      if (v >= static_cast<int>(bit_of.size()) || bit_of[static_cast<size_t>(v)] < 0)
        throw std::invalid_argument("ground list misses vertex " + std::to_string(v));
      m |= std::uint64_t{1} << bit_of[static_cast<size_t>(v)];
    }
    return m;
  };

  if (pair.total().is_void()) {
    masks_.clear();
    return;
  }
  auto rel = relative_faces_by_card(pair);
  rel.resize(static_cast<size_t>(pair.total().dim()) + 2);
  masks_.resize(rel.size());
  inc_.resize(rel.size());
  for (size_t c = 0; c < rel.size(); ++c) {
    masks_[c].reserve(rel[c].size());
    for (const auto& f : rel[c]) masks_[c].push_back(to_mask(f));
    std::sort(masks_[c].begin(), masks_[c].end());
  }
  for (size_t c = 1; c < rel.size(); ++c) {
    inc_[c].resize(masks_[c].size());
    for (size_t t = 0; t < masks_[c].size(); ++t) {
      std::uint64_t face = masks_[c][t];
      int sign = 1;
      std::uint64_t rest = face;
      while (rest) {
        std::uint64_t bit = rest & (~rest + 1);
        std::uint64_t sub = face ^ bit;
        const auto& prev = masks_[c - 1];
        auto it = std::lower_bound(prev.begin(), prev.end(), sub);
        if (it != prev.end() && *it == sub)
          inc_[c][t].emplace_back(static_cast<int>(it - prev.begin()), sign);
        sign = -sign;
        rest ^= bit;
      }
    }
  }
}

void InducedBettiEngine::reduced_betti(std::uint64_t w, const FieldSpec& field,
                                       std::vector<long long>& out) const {
  const size_t nc = masks_.size();
  out.assign(std::max<size_t>(nc, 1), 0);
  if (nc == 0) return;

  // selected faces per cardinality and their per-subset positions
  std::vector<std::vector<int>> sel(nc);
  std::vector<std::vector<int>> pos(nc);
  for (size_t c = 0; c < nc; ++c) {
    pos[c].assign(masks_[c].size(), -1);
    for (size_t t = 0; t < masks_[c].size(); ++t) {
      if ((masks_[c][t] & ~w) == 0) {
        pos[c][t] = static_cast<int>(sel[c].size());
        sel[c].push_back(static_cast<int>(t));
      }
    }
  }

  std::vector<int> ranks(nc + 1, 0);
  for (size_t c = 1; c < nc; ++c) {
    if (sel[c].empty() || sel[c - 1].empty()) continue;
    IntMat m(static_cast<int>(sel[c - 1].size()), static_cast<int>(sel[c].size()));
    for (size_t j = 0; j < sel[c].size(); ++j)
      for (const auto& [s, sg] : inc_[c][static_cast<size_t>(sel[c][j])])
        m.at(pos[c - 1][static_cast<size_t>(s)], static_cast<int>(j)) = sg;
    ranks[c] = rank_over(m, field);
  }
  for (size_t c = 0; c < nc; ++c)
    out[c] = static_cast<long long>(sel[c].size()) - ranks[c] - ranks[c + 1];
}

int default_thread_count() {
  if (const char* env = std::getenv("FACERING_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

std::vector<std::vector<long long>> subset_betti_sums(const InducedBettiEngine& engine,
                                                      const FieldSpec& field, int threads) {
  const int n = engine.n();
  if (n > 30) throw std::invalid_argument("subset sweep over more than 30 vertices");
  const std::uint64_t total = std::uint64_t{1} << n;
  const int degs = engine.max_degree() + 2;
  const size_t rows = static_cast<size_t>(n) + 1;

  if (threads <= 0) threads = default_thread_count();
  // fixed chunking, independent of the thread count, so results are
  // byte-for-byte reproducible
  const std::uint64_t chunk_count = std::min<std::uint64_t>(total, 256);
  const std::uint64_t chunk_size = (total + chunk_count - 1) / chunk_count;

  std::vector<std::vector<std::vector<long long>>> partial(
      chunk_count, std::vector<std::vector<long long>>(rows, std::vector<long long>(
                                                                 static_cast<size_t>(degs), 0)));
  std::atomic<std::uint64_t> next{0};
  auto work = [&]() {
    std::vector<long long> prof;
    while (true) {
      std::uint64_t chunk = next.fetch_add(1);
      if (chunk >= chunk_count) break;
      std::uint64_t lo = chunk * chunk_size;
      std::uint64_t hi = std::min(total, lo + chunk_size);
      auto& acc = partial[chunk];
      for (std::uint64_t w = lo; w < hi; ++w) {
        engine.reduced_betti(w, field, prof);
        int k = std::popcount(w);
        for (int d = 0; d < degs && d < static_cast<int>(prof.size()); ++d)
          acc[static_cast<size_t>(k)][static_cast<size_t>(d)] += prof[static_cast<size_t>(d)];
      }
    }
  };

  int nthreads = std::min<int>(threads, static_cast<int>(chunk_count));
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<std::vector<long long>> sums(rows, std::vector<long long>(static_cast<size_t>(degs), 0));
  for (const auto& acc : partial)
    for (size_t k = 0; k < rows; ++k)
      for (size_t d = 0; d < static_cast<size_t>(degs); ++d) sums[k][d] += acc[k][d];
  return sums;
}

}  // namespace facering
