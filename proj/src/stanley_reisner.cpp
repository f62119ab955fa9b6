#include "facering/stanley_reisner.hpp"

#include "facering/face_vectors.hpp"
#include "facering/homology.hpp"
#include "facering/linalg.hpp"
#include "facering/recognition.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace facering {

long long hilbert_function(const RelativeComplex& psi, int k) {
  if (k < 0) throw std::invalid_argument("hilbert_function needs k >= 0");
  if (psi.total().is_void()) throw std::domain_error("hilbert_function of the void complex");
  FaceVector f = f_vector(psi);
  long long acc = (k == 0) ? f.f(-1) : 0;
  for (int i = 1; i <= f.dim() + 1; ++i) acc += f.f(i - 1) * binomial_ll(k - 1, i - 1);
  return acc;
}

int GradedBettiTable::max_j() const {
  int m = -1;
  for (const auto& row : beta)
    for (int j = 0; j < static_cast<int>(row.size()); ++j)
      if (row[static_cast<size_t>(j)] != 0) m = std::max(m, j);
  return m;
}

long long GradedBettiTable::alternating_sum(int i, int l) const {
  long long acc = 0;
  for (int k = 0; i + k <= max_i(); ++k) {
    long long term = at(i + k, i + l);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

GradedBettiTable graded_betti(const RelativeComplex& psi, const FieldSpec& field, int threads) {
  GradedBettiTable table;
  table.field = field;
  std::vector<int> ground = psi.total().ground_set().elements();
  table.n = static_cast<int>(ground.size());
  table.beta.assign(static_cast<size_t>(table.n) + 1,
                    std::vector<long long>(static_cast<size_t>(table.n) + 1, 0));
  if (psi.total().is_void()) return table;

  InducedBettiEngine engine(psi, ground);
  auto sums = subset_betti_sums(engine, field, threads);
  for (int k = 0; k <= table.n; ++k) {
    for (int deg = -1; deg <= engine.max_degree(); ++deg) {
      long long count = sums[static_cast<size_t>(k)][static_cast<size_t>(deg + 1)];
      if (count == 0) continue;
      int j = deg + 1;  // b~_{j-1} contributes to beta_{|W|-j, |W|}
      int i = k - j;
      if (i < 0) throw std::logic_error("graded_betti: negative homological index");
      table.beta[static_cast<size_t>(i)][static_cast<size_t>(k)] += count;
    }
  }
  return table;
}

// --- resolution oracle ------------------------------------------------------
//
// Multidegrees are exponent vectors packed 8 bits per variable (the oracle is
// cost-gated at n <= 8 variables). Free modules are tracked by their
// generator multidegrees; the component of a free module at multidegree c has
// one coordinate per generator with multidegree <= c, and multiplying by a
// monomial is the identity on those coordinates. Kernels are computed per
// multidegree, and minimal generators are the kernel vectors that add new
// pivots beyond everything reachable from one multidegree below.

namespace {

using MDeg = std::uint64_t;

int mdeg_total(MDeg c, int n) {
  int t = 0;
  for (int i = 0; i < n; ++i) t += static_cast<int>((c >> (8 * i)) & 0xff);
  return t;
}

bool mdeg_le(MDeg a, MDeg c, int n) {
  for (int i = 0; i < n; ++i)
    if (((a >> (8 * i)) & 0xff) > ((c >> (8 * i)) & 0xff)) return false;
  return true;
}

int mdeg_lane(MDeg c, int i) { return static_cast<int>((c >> (8 * i)) & 0xff); }

MDeg mdeg_minus_var(MDeg c, int i) { return c - (MDeg{1} << (8 * i)); }

void enumerate_mdegs(int n, int bound, std::vector<MDeg>& out) {
  // all exponent vectors with total degree <= bound, ascending by total degree
  std::vector<MDeg> cur = {0};
  out = cur;
  for (int t = 1; t <= bound; ++t) {
    std::vector<MDeg> next;
    // raise each multidegree of total t-1 by one in the last nonzero-or-later
    // position to enumerate each vector exactly once
    for (MDeg c : cur) {
      int start = 0;
      for (int i = n - 1; i >= 0; --i)
        if (mdeg_lane(c, i) > 0) {
          start = i;
          break;
        }
      for (int i = start; i < n; ++i) next.push_back(c + (MDeg{1} << (8 * i)));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    cur = std::move(next);
  }
}

template <class F>
struct Resolver {
  using Elem = typename F::Elem;
  const F field;
  int n = 0;
  int bound = 0;
  std::vector<int> vars;         // ground ids
  std::vector<MDeg> mdegs;       // all multidegrees with total <= bound
  std::unordered_map<MDeg, char> present;  // multidegrees with M_c nonzero

  struct Level {
    std::vector<MDeg> gen_deg;
    // generator vectors in coordinates over ALL previous-level generators
    // (empty at level 0, where generators map to module monomials)
    std::vector<std::vector<Elem>> gen_vec;
  };
  std::vector<Level> levels;

  explicit Resolver(const F& f) : field(f) {}

  std::vector<int> eligible(const Level& lv, MDeg c) const {
    std::vector<int> e;
    for (int t = 0; t < static_cast<int>(lv.gen_deg.size()); ++t)
      if (mdeg_le(lv.gen_deg[static_cast<size_t>(t)], c, n)) e.push_back(t);
    return e;
  }

  // matrix of the level's map at multidegree c (level 0 maps into the module)
  FMat<F> map_at(int level, MDeg c, const std::vector<int>& cols_elig,
                 const std::vector<int>& rows_elig) const {
    const Level& lv = levels[static_cast<size_t>(level)];
    if (level == 0) {
      int rows = present.count(c) ? 1 : 0;
      FMat<F> m(rows, static_cast<int>(cols_elig.size()), field);
      if (rows == 1)
        for (int j = 0; j < m.cols; ++j) m.at(0, j) = field.one();
      return m;
    }
    FMat<F> m(static_cast<int>(rows_elig.size()), static_cast<int>(cols_elig.size()), field);
    for (int j = 0; j < m.cols; ++j) {
      const auto& vec = lv.gen_vec[static_cast<size_t>(cols_elig[static_cast<size_t>(j)])];
      for (int r = 0; r < m.rows; ++r) {
        int prev_gen = rows_elig[static_cast<size_t>(r)];
        if (prev_gen < static_cast<int>(vec.size())) m.at(r, j) = vec[static_cast<size_t>(prev_gen)];
      }
    }
    return m;
  }

  // runs the resolution and fills the Betti table
  void run(GradedBettiTable& table) {
    // level 0: minimal module generators, one per multidegree with M_c != 0
    // and every one-step predecessor zero
    Level l0;
    for (MDeg c : mdegs) {
      if (!present.count(c)) continue;
      bool gen = true;
      for (int i = 0; i < n && gen; ++i)
        if (mdeg_lane(c, i) > 0 && present.count(mdeg_minus_var(c, i))) gen = false;
      if (gen) l0.gen_deg.push_back(c);
    }
    levels.push_back(std::move(l0));
    record(table, 0);

    for (int level = 0;; ++level) {
      if (levels[static_cast<size_t>(level)].gen_deg.empty()) break;
      if (level > bound) break;  // deeper generators would exceed the bound
      const Level& lv = levels[static_cast<size_t>(level)];
      const Level* prev = level > 0 ? &levels[static_cast<size_t>(level - 1)] : nullptr;

      // kernel of the level map at every multidegree in range
      std::unordered_map<MDeg, FMat<F>> kernels;
      std::unordered_map<MDeg, std::vector<int>> elig;
      for (MDeg c : mdegs) {
        std::vector<int> ce = eligible(lv, c);
        std::vector<int> re = prev ? eligible(*prev, c) : std::vector<int>{};
        if (ce.empty()) {
          elig.emplace(c, std::move(ce));
          continue;
        }
        FMat<F> m = map_at(level, c, ce, re);
        kernels.emplace(c, fmat_kernel(std::move(m), field));
        elig.emplace(c, std::move(ce));
      }

      // minimal generators of the kernel: vectors adding pivots beyond the
      // span of the kernels one multidegree below
      Level next;
      for (MDeg c : mdegs) {
        auto kit = kernels.find(c);
        if (kit == kernels.end()) continue;
        const FMat<F>& kc = kit->second;
        if (kc.cols == 0) continue;
        const std::vector<int>& ce = elig.at(c);

        std::vector<std::vector<Elem>> below;  // embedded into the E(c) frame
        for (int i = 0; i < n; ++i) {
          if (mdeg_lane(c, i) == 0) continue;
          MDeg cp = mdeg_minus_var(c, i);
          auto bit = kernels.find(cp);
          if (bit == kernels.end()) continue;
          const FMat<F>& kp = bit->second;
          const std::vector<int>& pe = elig.at(cp);
          // position of each E(c') generator inside E(c)
          std::vector<int> where(pe.size());
          for (size_t t = 0; t < pe.size(); ++t)
            where[t] = static_cast<int>(
                std::lower_bound(ce.begin(), ce.end(), pe[t]) - ce.begin());
          for (int col = 0; col < kp.cols; ++col) {
            std::vector<Elem> v(ce.size(), field.zero());
            for (int r = 0; r < kp.rows; ++r)
              v[static_cast<size_t>(where[static_cast<size_t>(r)])] = kp.at(r, col);
            below.push_back(std::move(v));
          }
        }

        // eliminate [below | kernel basis]; kernel columns that land a new
        // pivot become generators
        FMat<F> a(static_cast<int>(ce.size()), static_cast<int>(below.size()) + kc.cols, field);
        for (size_t col = 0; col < below.size(); ++col)
          for (size_t r = 0; r < ce.size(); ++r)
            a.at(static_cast<int>(r), static_cast<int>(col)) = below[col][r];
        for (int col = 0; col < kc.cols; ++col)
          for (int r = 0; r < kc.rows; ++r)
            a.at(r, static_cast<int>(below.size()) + col) = kc.at(r, col);
        std::vector<int> pivots;
        fmat_echelon(a, field, &pivots);
        for (int p : pivots) {
          if (p < static_cast<int>(below.size())) continue;
          int col = p - static_cast<int>(below.size());
          // expand the chosen kernel vector to full previous-level coordinates
          std::vector<Elem> full(lv.gen_deg.size(), field.zero());
          for (int r = 0; r < kc.rows; ++r)
            full[static_cast<size_t>(ce[static_cast<size_t>(r)])] = kc.at(r, col);
          next.gen_deg.push_back(c);
          next.gen_vec.push_back(std::move(full));
        }
      }

      levels.push_back(std::move(next));
      record(table, level + 1);
    }
  }

  void record(GradedBettiTable& table, int level) const {
    const Level& lv = levels[static_cast<size_t>(level)];
    for (MDeg c : lv.gen_deg) {
      int j = mdeg_total(c, n);
      if (level >= static_cast<int>(table.beta.size()))
        table.beta.resize(static_cast<size_t>(level) + 1);
      auto& row = table.beta[static_cast<size_t>(level)];
      if (j >= static_cast<int>(row.size())) row.resize(static_cast<size_t>(j) + 1, 0);
      ++row[static_cast<size_t>(j)];
    }
  }
};

template <class F>
GradedBettiTable resolve_with(const RelativeComplex& psi, const F& field_obj,
                              const FieldSpec& field, int bound) {
  Resolver<F> res(field_obj);
  std::vector<int> ground = psi.total().ground_set().elements();
  res.n = static_cast<int>(ground.size());
  res.vars = ground;
  res.bound = bound;
  enumerate_mdegs(res.n, bound, res.mdegs);

  for (MDeg c : res.mdegs) {
    VertexSet supp;
    for (int i = 0; i < res.n; ++i)
      if (mdeg_lane(c, i) > 0) supp.insert(ground[static_cast<size_t>(i)]);
    if (psi.total().is_face(supp) && (psi.sub_is_void() || !psi.sub().is_face(supp)))
      res.present.emplace(c, 1);
  }

  GradedBettiTable table;
  table.n = res.n;
  table.field = field;
  table.beta.assign(static_cast<size_t>(res.n) + 1,
                    std::vector<long long>(static_cast<size_t>(res.n) + 1, 0));
  table.degree_bound = bound;
  table.truncated = bound < res.n;
  res.run(table);
  return table;
}

}  // namespace

GradedBettiTable resolution_oracle(const RelativeComplex& psi, const FieldSpec& field,
                                   int degree_bound) {
  if (psi.total().is_void()) throw std::domain_error("resolution_oracle of the void complex");
  int n = psi.total().ground_set().size();
  if (n > 8)
    throw std::invalid_argument("resolution_oracle is cost-gated at 8 variables, got " +
                                std::to_string(n));
  if (degree_bound < 0) degree_bound = n;
  if (field.is_rational()) return resolve_with(psi, RatField{}, field, degree_bound);
  return resolve_with(psi, ModField{field.characteristic}, field, degree_bound);
}

// --- monomial bases and Artinian reductions ---------------------------------

namespace {

struct RingBases {
  std::vector<int> vars;  // ground ids, ascending
  struct Mono {
    int face = 0;  // index into faces
    std::vector<std::uint8_t> e;
  };
  std::vector<VertexSet> faces;        // relative faces of the pair
  std::vector<std::vector<int>> ext;   // ext[face][var slot] = target face or -1
  std::vector<std::vector<Mono>> deg;  // monomial bases per degree 0..cap
  std::vector<std::unordered_map<std::string, int>> index;

  static std::string key(const std::vector<std::uint8_t>& e) {
    return std::string(e.begin(), e.end());
  }

  RingBases(const RelativeComplex& psi, int cap) {
    vars = psi.total().ground_set().elements();
    const int n = static_cast<int>(vars.size());
    std::unordered_map<VertexSet, int> face_slot;
    const auto& byc = psi.total().faces_by_card();
    for (const auto& bucket : byc)
      for (const auto& f : bucket)
        if (psi.sub_is_void() || !psi.sub().is_face(f)) {
          face_slot.emplace(f, static_cast<int>(faces.size()));
          faces.push_back(f);
        }
    ext.assign(faces.size(), std::vector<int>(static_cast<size_t>(n), -1));
    for (size_t fi = 0; fi < faces.size(); ++fi)
      for (int vi = 0; vi < n; ++vi) {
        VertexSet g = faces[fi];
        g.insert(vars[static_cast<size_t>(vi)]);
        auto it = face_slot.find(g);
        if (it != face_slot.end()) ext[fi][static_cast<size_t>(vi)] = it->second;
      }

    deg.resize(static_cast<size_t>(cap) + 1);
    index.resize(static_cast<size_t>(cap) + 1);
    // degree 0: the unit, when the empty face belongs to the pair
    auto empty_it = face_slot.find(VertexSet{});
    if (empty_it != face_slot.end()) {
      Mono one{empty_it->second, std::vector<std::uint8_t>(static_cast<size_t>(n), 0)};
      index[0].emplace(key(one.e), 0);
      deg[0].push_back(std::move(one));
    }
    // degree j from degree j-1 by single-variable extension; dedupe by key
    for (int j = 1; j <= cap; ++j) {
      // seed: faces all of whose monomial predecessors are missing (supports
      // entering the pair at this degree, e.g. relative faces of size j)
      for (size_t fi = 0; fi < faces.size(); ++fi)
        if (faces[fi].size() == j) {
          std::vector<std::uint8_t> e(static_cast<size_t>(n), 0);
          for (int v : faces[fi]) {
            int vi = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
            e[static_cast<size_t>(vi)] = 1;
          }
          if (index[static_cast<size_t>(j)].emplace(key(e), static_cast<int>(deg[static_cast<size_t>(j)].size())).second)
            deg[static_cast<size_t>(j)].push_back(Mono{static_cast<int>(fi), std::move(e)});
        }
      for (const Mono& m : deg[static_cast<size_t>(j - 1)])
        for (int vi = 0; vi < n; ++vi) {
          int target = ext[static_cast<size_t>(m.face)][static_cast<size_t>(vi)];
          if (target < 0) continue;
          std::vector<std::uint8_t> e = m.e;
          ++e[static_cast<size_t>(vi)];
          if (index[static_cast<size_t>(j)].emplace(key(e), static_cast<int>(deg[static_cast<size_t>(j)].size())).second)
            deg[static_cast<size_t>(j)].push_back(Mono{target, std::move(e)});
        }
    }
  }

  int dim(int j) const {
    if (j < 0 || j > static_cast<int>(deg.size()) - 1) return 0;
    return static_cast<int>(deg[static_cast<size_t>(j)].size());
  }

  // columns for theta * (each basis monomial of degree j-1) appended to m
  // starting at column col0; theta given by residue coefficients per variable
  void fill_form_columns(IntMat& m, int col0, int j, const std::vector<std::uint64_t>& theta) const {
    const int n = static_cast<int>(vars.size());
    const auto& src = deg[static_cast<size_t>(j - 1)];
    for (size_t s = 0; s < src.size(); ++s) {
      const Mono& mono = src[s];
      for (int vi = 0; vi < n; ++vi) {
        if (theta[static_cast<size_t>(vi)] == 0) continue;
        int target = ext[static_cast<size_t>(mono.face)][static_cast<size_t>(vi)];
        if (target < 0) continue;
        std::vector<std::uint8_t> e = mono.e;
        ++e[static_cast<size_t>(vi)];
        int row = index[static_cast<size_t>(j)].at(key(e));
        m.at(row, col0 + static_cast<int>(s)) += static_cast<std::int64_t>(theta[static_cast<size_t>(vi)]);
      }
    }
  }
};

std::vector<std::vector<std::uint64_t>> random_forms(int count, int n, std::uint64_t p,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::uint64_t>> forms(static_cast<size_t>(count),
                                                std::vector<std::uint64_t>(static_cast<size_t>(n)));
  for (auto& f : forms)
    for (auto& c : f) c = rng() % p;
  return forms;
}

}  // namespace

ArtinianReduction artinian_reduction(const RelativeComplex& psi, const FieldSpec& mod_p, int count,
                                     std::uint64_t seed) {
  if (mod_p.is_rational())
    throw std::invalid_argument("artinian_reduction samples over a prime field");
  if (psi.total().is_void()) throw std::domain_error("artinian_reduction of the void complex");
  const std::uint64_t p = mod_p.characteristic;
  const int d = psi.total().dim() + 1;
  if (count != d && count != d + 1)
    throw std::invalid_argument("form count must be d or d+1 (d = " + std::to_string(d) + ")");

  const int cap = d + 1;
  RingBases bases(psi, cap);
  const int n = static_cast<int>(bases.vars.size());

  ArtinianReduction red;
  red.prime = p;
  red.seed = seed;
  red.form_count = count;
  red.forms = random_forms(count, n, p, seed);
  red.dims.assign(static_cast<size_t>(cap) + 1, 0);
  for (int j = 0; j <= cap; ++j) {
    int dj = bases.dim(j);
    if (dj == 0) continue;
    int prev = bases.dim(j - 1);
    IntMat m(dj, count * prev);
    for (int l = 0; l < count; ++l)
      if (prev > 0) bases.fill_form_columns(m, l * prev, j, red.forms[static_cast<size_t>(l)]);
    red.dims[static_cast<size_t>(j)] = dj - rank_mod_p(std::move(m), p);
  }
  return red;
}

std::vector<long long> h_prime(const RelativeComplex& psi, const FieldSpec& field) {
  HVector h = h_vector(psi);
  int d = h.d();
  BettiVector b = betti(psi, field, true);
  std::vector<long long> out(static_cast<size_t>(d) + 1, 0);
  for (int j = 0; j <= d; ++j) {
    long long corr = 0;
    for (int i = 1; i <= j - 1; ++i) {
      long long term = b.at(i - 1);
      corr += ((j - i - 1) % 2 == 0) ? term : -term;
    }
    out[static_cast<size_t>(j)] = h.h(j) + binomial_ll(d, j) * corr;
  }
  if (out[static_cast<size_t>(d)] != b.at(d - 1))
    throw std::logic_error("h'_d disagrees with the top Betti number");
  return out;
}

std::vector<long long> h_double_prime(const RelativeComplex& psi, const FieldSpec& field) {
  std::vector<long long> out = h_prime(psi, field);
  int d = static_cast<int>(out.size()) - 1;
  BettiVector b = betti(psi, field, true);
  for (int j = 0; j < d; ++j) out[static_cast<size_t>(j)] -= binomial_ll(d, j) * b.at(j - 1);
  return out;
}

SchenzelResult schenzel_check(const SimplicialComplex& delta, const FieldSpec& mod_p,
                              std::uint64_t seed, int max_retries) {
  // consistency gate: the link-profile classification must call the input a
  // homology manifold over the rationals and over F_p alike (the Betti
  // numbers themselves may differ; h' below is taken over F_p)
  HomologyClassification over_q = classify_homology(delta, FieldSpec::rationals());
  HomologyClassification over_p = classify_homology(delta, mod_p);
  if (!over_q.is_manifold() || !over_p.is_manifold())
    throw std::invalid_argument("schenzel_check needs a homology manifold over both fields");
  if (over_q.has_boundary() != over_p.has_boundary())
    throw std::invalid_argument("schenzel_check: boundary classification differs between fields");

  RelativeComplex whole = RelativeComplex::whole(delta);
  SchenzelResult res;
  res.expected = h_prime(whole, mod_p);
  int d = delta.dim() + 1;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    ArtinianReduction red = artinian_reduction(whole, mod_p, d, seed + static_cast<std::uint64_t>(attempt));
    res.attempts = attempt + 1;
    res.seed_used = red.seed;
    res.dims = red.dims;
    bool ok = true;
    for (int j = 0; j <= d && ok; ++j)
      if (red.dims[static_cast<size_t>(j)] != res.expected[static_cast<size_t>(j)]) ok = false;
    if (ok && red.dims[static_cast<size_t>(d) + 1] != 0) ok = false;
    if (ok) {
      res.passed = true;
      return res;
    }
  }
  res.inconclusive = true;  // sampled forms may simply have missed genericity
  return res;
}

WlpResult wlp_test(const SimplicialComplex& delta, std::uint64_t p, int trials,
                   std::uint64_t seed) {
  FieldSpec field = FieldSpec::prime(p);
  HomologyClassification cls = classify_homology(delta, field);
  if (cls.cls != HomologyClass::ball && cls.cls != HomologyClass::sphere)
    throw std::invalid_argument("wlp_test needs a homology ball or sphere (" + cls.reason + ")");

  WlpResult res;
  res.seed = seed;
  res.prime = p;
  if (trials <= 0) return res;

  RelativeComplex whole = RelativeComplex::whole(delta);
  const int d = delta.dim() + 1;
  const int j0 = d / 2;
  RingBases bases(whole, j0 + 1);
  const int n = static_cast<int>(bases.vars.size());
  const int rows = bases.dim(j0 + 1);
  const int mid = bases.dim(j0);

  for (int t = 0; t < trials; ++t) {
    auto forms = random_forms(d + 1, n, p, seed + static_cast<std::uint64_t>(t));
    // surjectivity onto the quotient: omega*M_{j0} plus theta*M_{j0} must fill M_{j0+1}
    if (rows == 0) {
      res.verdict = WlpVerdict::passes;
      res.trials_run = t + 1;
      res.witness_trial = t;
      return res;
    }
    IntMat m(rows, (d + 1) * mid);
    for (int l = 0; l <= d; ++l)
      if (mid > 0) bases.fill_form_columns(m, l * mid, j0 + 1, forms[static_cast<size_t>(l)]);
    if (rank_mod_p(std::move(m), p) == rows) {
      res.verdict = WlpVerdict::passes;
      res.trials_run = t + 1;
      res.witness_trial = t;
      return res;
    }
  }
  res.verdict = WlpVerdict::fails_sampled;
  res.trials_run = trials;
  return res;
}

}  // namespace facering
