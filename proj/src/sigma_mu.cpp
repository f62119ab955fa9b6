#include "facering/sigma_mu.hpp"

#include "facering/homology.hpp"
#include "facering/recognition.hpp"

#include <algorithm>
#include <stdexcept>

namespace facering {

RationalVector sigma_vector_on(const RelativeComplex& psi, const std::vector<int>& ground,
                               const FieldSpec& field, int threads) {
  if (psi.total().is_void()) return RationalVector(-1);
  for (int v : psi.total().support())
    if (std::find(ground.begin(), ground.end(), v) == ground.end())
      throw std::invalid_argument("sigma ground set misses vertex " + std::to_string(v));

  InducedBettiEngine engine(psi, ground);
  auto sums = subset_betti_sums(engine, field, threads);
  const int n = engine.n();
  const int max_deg = engine.max_degree();

  RationalVector out(std::max(max_deg, -1));
  for (int deg = -1; deg <= max_deg; ++deg) {
    Rational acc = 0;
    for (int k = 0; k <= n; ++k) {
      long long s = sums[static_cast<size_t>(k)][static_cast<size_t>(deg + 1)];
      if (s != 0) acc += Rational(s) / Rational(binomial_big(n, k));
    }
    out.slot(deg) = acc / Rational(n + 1);
  }
  return out;
}

RationalVector sigma_vector(const RelativeComplex& psi, const FieldSpec& field, int threads) {
  return sigma_vector_on(psi, psi.total().ground_set().elements(), field, threads);
}

Rational sigma_tilde(const RelativeComplex& psi, int i, const FieldSpec& field) {
  return sigma_vector(psi, field).at(i);
}

RationalVector mu_vector(const RelativeComplex& psi, const FieldSpec& field, int threads) {
  if (psi.total().is_void()) return RationalVector(-1);
  int dim = psi.total().dim();
  RationalVector out(dim + 1);  // mu_0 .. mu_{dim+1}
  for (int v : psi.total().ground_set()) {
    if (!psi.total().is_face(VertexSet{v})) continue;  // void link contributes nothing
    RelativeComplex link = psi.vertex_link(v);
    RationalVector sig = sigma_vector(link, field, threads);
    for (int i = 0; i <= dim + 1; ++i) {
      const Rational& s = sig.at(i - 1);
      if (!s.is_zero()) out.slot(i) += s;
    }
  }
  return out;
}

Rational mu(const RelativeComplex& psi, int i, const FieldSpec& field) {
  if (i < 0) throw std::invalid_argument("mu is defined for degrees >= 0");
  return mu_vector(psi, field).at(i);
}

std::vector<MorseRow> morse_bounds(const RelativeComplex& psi, const FieldSpec& field, int up_to) {
  if (psi.total().is_void()) throw std::domain_error("morse_bounds of the void complex");
  int dim = psi.total().dim();
  if (up_to < 0) up_to = dim + 1;
  BettiVector b = betti(psi, field, /*reduced=*/false);
  RationalVector mu = mu_vector(psi, field);

  std::vector<MorseRow> rows;
  Rational alt_b = 0, alt_mu = 0;
  for (int i = 0; i <= up_to; ++i) {
    MorseRow row;
    row.i = i;
    row.b = b.at(i);
    row.mu_i = mu.at(i);
    row.single_holds = Rational(row.b) <= row.mu_i;
    // alternating partial sums: sum_{j<=i} (-1)^{i-j} x_j flips sign each step
    alt_b = Rational(row.b) - alt_b;
    alt_mu = row.mu_i - alt_mu;
    row.alt_b = alt_b;
    row.alt_mu = alt_mu;
    row.alternating_holds = alt_b <= alt_mu;
    rows.push_back(std::move(row));
  }
  return rows;
}

OrderedMorseResult ordered_morse(const RelativeComplex& psi, const std::vector<int>& ordering,
                                 const FieldSpec& field, int i) {
  if (psi.total().is_void()) throw std::domain_error("ordered_morse of the void complex");
  if (i < 0) throw std::invalid_argument("ordered_morse needs i >= 0");
  std::vector<int> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ground = psi.total().ground_set().elements();
  if (sorted != ground)
    throw std::invalid_argument("ordering is not a permutation of the ground set");

  OrderedMorseResult res;
  res.lhs = betti(psi, field, /*reduced=*/false).at(i);
  VertexSet prefix;
  for (int v : ordering) {
    if (psi.total().is_face(VertexSet{v})) {
      RelativeComplex link = psi.vertex_link(v).induced(prefix);
      if (!link.total().is_void())
        res.rhs += betti(link, field, /*reduced=*/true).at(i - 1);
    }
    prefix.insert(v);
  }
  res.holds = res.lhs <= res.rhs;
  return res;
}

bool ground_set_invariance(const SimplicialComplex& delta, const SimplicialComplex& gamma,
                           const VertexSet& extra, const FieldSpec& field) {
  for (int v : extra)
    if (delta.ground_set().contains(v))
      throw std::invalid_argument("extra vertex " + std::to_string(v) +
                                  " collides with the ground set");
  RelativeComplex psi = gamma.is_void() ? RelativeComplex::whole(delta)
                                        : RelativeComplex::make(delta, gamma);
  RationalVector base = sigma_vector_on(psi, delta.ground_set().elements(), field);
  RationalVector extended =
      sigma_vector_on(psi, delta.ground_set().unite(extra).elements(), field);
  int top = std::max(base.max_degree(), extended.max_degree());
  for (int deg = -1; deg <= top; ++deg)
    if (base.at(deg) != extended.at(deg)) return false;
  return true;
}

DualityReport duality_checks(const SimplicialComplex& delta, const FieldSpec& field) {
  HomologyClassification cls = classify_homology(delta, field);
  if (!cls.is_manifold())
    throw std::invalid_argument("duality_checks needs a homology manifold (" + cls.reason + ")");
  if (!cls.has_boundary())
    throw std::invalid_argument("duality_checks needs a nonempty boundary");

  DualityReport rep;
  RelativeComplex interior = RelativeComplex::make(delta, cls.boundary);
  RelativeComplex whole = RelativeComplex::whole(delta);

  if (cls.cls == HomologyClass::ball) {
    rep.ball_part_applies = true;
    int d = delta.dim() + 1;
    RationalVector rel = sigma_vector(interior, field);
    RationalVector abs = sigma_vector(whole, field);
    for (int i = 0; i <= d; ++i) {
      DualityRow row;
      row.i = i;
      row.lhs = rel.at(i - 1);
      row.rhs = abs.at(d - 1 - i);
      row.holds = row.lhs == row.rhs;
      if (!row.holds) rep.sigma_holds = false;
      rep.sigma_rows.push_back(std::move(row));
    }
  }

  {
    int d = delta.dim();
    RationalVector rel = mu_vector(interior, field);
    RationalVector abs = mu_vector(whole, field);
    for (int i = 0; i <= d; ++i) {
      DualityRow row;
      row.i = i;
      row.lhs = rel.at(i);
      row.rhs = abs.at(d - i);
      row.holds = row.lhs == row.rhs;
      if (!row.holds) rep.mu_holds = false;
      rep.mu_rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace facering
