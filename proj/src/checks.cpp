#include "facering/checks.hpp"

#include "facering/constructions.hpp"
#include "facering/face_vectors.hpp"
#include "facering/homology.hpp"
#include "facering/recognition.hpp"
#include "facering/sigma_mu.hpp"
#include "facering/stanley_reisner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace facering {

namespace {

const std::map<std::string, CheckId>& name_table() {
  static const std::map<std::string, CheckId> table = {
      {"dehn_sommerville", CheckId::dehn_sommerville},
      {"graebe", CheckId::graebe},
      {"h_and_g", CheckId::h_and_g},
      {"lbt_closed", CheckId::lbt_closed},
      {"main1", CheckId::main1},
      {"main1_equality", CheckId::main1_equality},
      {"h2_corollary", CheckId::h2_corollary},
      {"main2", CheckId::main2},
      {"thm55_mu", CheckId::thm55_mu},
      {"prop52", CheckId::prop52},
      {"prop61", CheckId::prop61},
      {"lemma62", CheckId::lemma62},
      {"thm63", CheckId::thm63},
      {"missing_faces_eq", CheckId::missing_faces_eq},
      {"criterion_ball", CheckId::criterion_ball},
      {"sharpness_facet_removed", CheckId::sharpness_facet_removed},
      {"duality_sigma", CheckId::duality_sigma},
      {"duality_mu", CheckId::duality_mu},
      {"morse", CheckId::morse},
      {"hochster_oracle", CheckId::hochster_oracle},
      {"schenzel", CheckId::schenzel},
      {"thm46", CheckId::thm46},
      {"thm49", CheckId::thm49},
      {"prop43_euler", CheckId::prop43_euler},
      {"lemma53", CheckId::lemma53},
      {"lemma54", CheckId::lemma54},
  };
  return table;
}

}  // namespace

std::string check_id_name(CheckId id) {
  for (const auto& [name, value] : name_table())
    if (value == id) return name;
  return "unknown";
}

std::optional<CheckId> parse_check_id(std::string_view name) {
  auto it = name_table().find(std::string(name));
  if (it == name_table().end()) return std::nullopt;
  return it->second;
}

const std::vector<CheckId>& all_check_ids() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const auto& [name, id] : name_table()) v.push_back(id);
    return v;
  }();
  return ids;
}

nlohmann::ordered_json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) {
    BigInt num = numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return nlohmann::ordered_json(static_cast<std::int64_t>(num));
    return nlohmann::ordered_json{{"num", num.str()}, {"den", "1"}};
  }
  return nlohmann::ordered_json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check_id_name(id);
  j["input"] = input;
  if (seed) j["seed"] = *seed;
  j["field"] = field;
  if (skipped_reason) {
    j["skipped_reason"] = *skipped_reason;
    return j;
  }
  j["lhs"] = rational_to_json(lhs);
  j["rhs"] = rational_to_json(rhs);
  j["relation"] = relation;
  j["holds"] = holds;
  j["equality"] = equality;
  j["witnesses"] = witnesses;
  return j;
}

namespace {

struct Ctx {
  const RelativeComplex& input;
  FieldSpec field;
  const CheckOptions& opts;
  CheckReport rep;

  Ctx(CheckId id, const RelativeComplex& in, const FieldSpec& f, const CheckOptions& o,
      const std::string& name)
      : input(in), field(f), opts(o) {
    rep.id = id;
    rep.input = name;
    rep.field = f.to_string();
  }

  CheckReport skip(const std::string& why) {
    rep.skipped_reason = why;
    return rep;
  }

  const SimplicialComplex& delta() const { return input.total(); }
};

// Accumulates rows of a single relation and keeps the extremal one for the
// report (smallest slack for inequalities, first failure for equalities).
struct Rows {
  std::string relation;
  bool have = false;
  Rational worst_lhs, worst_rhs;
  bool all_hold = true;
  bool any_equal = false;
  std::vector<std::string> notes;

  explicit Rows(std::string rel) : relation(std::move(rel)) {}

  bool row_holds(const Rational& lhs, const Rational& rhs) const {
    if (relation == "<=") return lhs <= rhs;
    if (relation == ">=") return lhs >= rhs;
    return lhs == rhs;
  }

  void add(const Rational& lhs, const Rational& rhs, const std::string& label) {
    bool ok = row_holds(lhs, rhs);
    if (lhs == rhs) any_equal = true;
    if (!ok) all_hold = false;
    // keep the tightest (or first violated) row
    bool take = !have;
    if (have) {
      Rational cur_slack = relation == ">=" ? worst_lhs - worst_rhs : worst_rhs - worst_lhs;
      Rational new_slack = relation == ">=" ? lhs - rhs : rhs - lhs;
      if (relation == "=")
        take = row_holds(worst_lhs, worst_rhs) && !ok;
      else
        take = new_slack < cur_slack;
    }
    if (take) {
      worst_lhs = lhs;
      worst_rhs = rhs;
      have = true;
    }
    notes.push_back(label + ": " + rational_to_string(lhs) + " " + relation + " " +
                    rational_to_string(rhs) + (ok ? "" : "  VIOLATED"));
  }

  void finish(CheckReport& rep) const {
    rep.relation = relation;
    rep.lhs = worst_lhs;
    rep.rhs = worst_rhs;
    rep.holds = all_hold;
    rep.equality = have && worst_lhs == worst_rhs;
    rep.witnesses = notes;
  }
};

long long reduced_b(const BettiVector& b, int i) { return b.at(i); }

// --- individual checks ------------------------------------------------------

CheckReport check_dehn_sommerville(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (!cls.has_boundary())
    return c.skip("needs an orientable homology manifold with nonempty boundary");
  if (!orientable(c.delta(), c.field)) return c.skip("input is not orientable over " + c.rep.field);
  int d = c.delta().dim() + 1;
  RelativeComplex pair = RelativeComplex::make(c.delta(), cls.boundary);
  std::vector<long long> rel = h_double_prime(pair, c.field);
  std::vector<long long> abs = h_double_prime(RelativeComplex::whole(c.delta()), c.field);
  bool connected = is_connected(c.delta());
  Rows rows("=");
  for (int i = 0; i <= d; ++i) {
    if ((i == 0 || i == d) && !connected) continue;
    rows.add(Rational(rel[static_cast<size_t>(i)]), Rational(abs[static_cast<size_t>(d - i)]),
             "h''_" + std::to_string(i) + "(D,dD) vs h''_" + std::to_string(d - i) + "(D)");
  }
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_graebe(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (!cls.has_boundary()) return c.skip("needs a homology manifold with nonempty boundary");
  int d = c.delta().dim() + 1;
  long long chi = reduced_euler_characteristic(c.delta());
  HVector habs = h_vector(RelativeComplex::whole(c.delta()));
  HVector hrel = h_vector(RelativeComplex::make(c.delta(), cls.boundary));
  Rows rows("=");
  for (int i = 0; i <= d; ++i) {
    long long sign = ((d - i) % 2 == 0) ? 1 : -1;
    Rational lhs = Rational(habs.h(d - i) + binomial_ll(d, i) * sign * chi);
    rows.add(lhs, Rational(hrel.h(i)), "i=" + std::to_string(i));
  }
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_h_and_g(Ctx c) {
  PseudomanifoldReport pm = is_normal_pseudomanifold(c.delta());
  if (pm.status != PseudomanifoldStatus::with_boundary)
    return c.skip("needs a normal pseudomanifold with nonempty boundary");
  int d = c.delta().dim() + 1;
  HVector habs = h_vector(RelativeComplex::whole(c.delta()));
  HVector hrel = h_vector(RelativeComplex::make(c.delta(), pm.boundary));
  HVector hbd = h_vector(RelativeComplex::whole(pm.boundary));
  Rows rows("=");
  for (int i = 0; i <= d; ++i)
    rows.add(Rational(habs.h(i)), Rational(hrel.h(i) + hbd.g(i)), "i=" + std::to_string(i));
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_lbt_closed(Ctx c) {
  PseudomanifoldReport pm = is_normal_pseudomanifold(c.delta());
  if (pm.status != PseudomanifoldStatus::closed)
    return c.skip("needs a closed normal pseudomanifold");
  int d = c.delta().dim();
  if (d < 3) return c.skip("needs dimension >= 3");
  RelativeComplex whole = RelativeComplex::whole(c.delta());
  BettiVector b = betti(whole, c.field, true);
  Rows rows(">=");
  rows.add(Rational(h_vector(whole).g(2)),
           Rational(binomial_ll(d + 2, 2) * (reduced_b(b, 1) - reduced_b(b, 0))), "g_2 bound");
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_main1(Ctx c) {
  PseudomanifoldReport pm = is_normal_pseudomanifold(c.delta());
  if (pm.status != PseudomanifoldStatus::with_boundary)
    return c.skip("needs a normal pseudomanifold with nonempty boundary");
  int d = c.delta().dim();
  if (d < 3) return c.skip("needs dimension >= 3");
  RelativeComplex pair = RelativeComplex::make(c.delta(), pm.boundary);
  BettiVector b = betti(pair, c.field, true);
  Rows rows(">=");
  rows.add(Rational(h_vector(pair).g(2)),
           Rational(binomial_ll(d + 2, 2) * (reduced_b(b, 1) - reduced_b(b, 0))),
           "relative g_2 bound");
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_main1_equality(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (!cls.has_boundary()) return c.skip("needs a homology manifold with nonempty boundary");
  int d = c.delta().dim();
  if (d < 3) return c.skip("needs dimension >= 3");
  RelativeComplex pair = RelativeComplex::make(c.delta(), cls.boundary);
  BettiVector b = betti(pair, c.field, true);
  long long lhs = h_vector(pair).g(2);
  long long rhs = binomial_ll(d + 2, 2) * (reduced_b(b, 1) - reduced_b(b, 0));
  bool eq = lhs == rhs;
  PropertyLReport lrep = property_L(c.delta(), c.field);
  // Betti-form equality implies property (L)
  c.rep.relation = "<=";
  c.rep.lhs = Rational(eq ? 1 : 0);
  c.rep.rhs = Rational(lrep.holds ? 1 : 0);
  c.rep.holds = !eq || lrep.holds;
  c.rep.equality = c.rep.lhs == c.rep.rhs;
  c.rep.witnesses.push_back("g_2(D,dD) = " + std::to_string(lhs) + ", betti bound = " +
                            std::to_string(rhs) + (eq ? " (equality)" : " (strict)"));
  c.rep.witnesses.push_back(std::string("property (L) ") + (lrep.holds ? "holds" : "fails"));
  for (const auto& v : lrep.vertices)
    if (!v.ok)
      c.rep.witnesses.push_back("vertex " + std::to_string(v.vertex) + ": " + v.detail);
  return c.rep;
}

CheckReport check_h2_corollary(Ctx c) {
  PseudomanifoldReport pm = is_normal_pseudomanifold(c.delta());
  if (pm.status != PseudomanifoldStatus::with_boundary)
    return c.skip("needs a normal pseudomanifold with nonempty boundary");
  PseudomanifoldReport bd = is_normal_pseudomanifold(pm.boundary);
  if (bd.status == PseudomanifoldStatus::no)
    return c.skip("boundary is not a normal pseudomanifold (" + bd.reason + ")");
  int d = c.delta().dim();
  if (d < 3) return c.skip("needs dimension >= 3");
  RelativeComplex whole = RelativeComplex::whole(c.delta());
  RelativeComplex pair = RelativeComplex::make(c.delta(), pm.boundary);
  RelativeComplex bpair = RelativeComplex::whole(pm.boundary);
  BettiVector brel = betti(pair, c.field, true);
  long long f0_int = f_vector(pair).f(0);
  Rows rows(">=");
  if (d >= 4) {
    BettiVector bbd = betti(bpair, c.field, true);
    long long rhs = f0_int +
                    binomial_ll(d + 2, 2) * (reduced_b(brel, 1) - reduced_b(brel, 0)) +
                    binomial_ll(d + 1, 2) * (reduced_b(bbd, 1) - reduced_b(bbd, 0));
    rows.add(Rational(h_vector(whole).h(2)), Rational(rhs), "h_2 bound (d >= 4)");
  } else {
    BettiVector bbd2 = betti(bpair, FieldSpec::prime(2), true);
    long long rhs = f0_int + 10 * (reduced_b(brel, 1) - reduced_b(brel, 0)) +
                    3 * (reduced_b(bbd2, 1) - 2 * reduced_b(bbd2, 0));
    rows.add(Rational(h_vector(whole).h(2)), Rational(rhs), "h_2 bound (d = 3, F_2 boundary)");
  }
  rows.finish(c.rep);
  return c.rep;
}

// samples WLP for every vertex link; nullopt when every link passes,
// otherwise the offending vertex
std::optional<int> links_fail_wlp(Ctx& c) {
  c.rep.seed = c.opts.seed;
  for (int v : c.delta().support()) {
    SimplicialComplex lk = c.delta().link(VertexSet{v});
    WlpResult w = wlp_test(lk, c.opts.prime, c.opts.trials, c.opts.seed);
    if (w.verdict != WlpVerdict::passes) return v;
  }
  return std::nullopt;
}

CheckReport check_main2(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (!cls.is_manifold()) return c.skip("needs a homology manifold (" + cls.reason + ")");
  int d = c.delta().dim();
  try {
    if (auto v = links_fail_wlp(c))
      return c.skip("link of vertex " + std::to_string(*v) + " did not pass sampled WLP");
  } catch (const std::invalid_argument& e) {
    return c.skip(std::string("link WLP gate failed: ") + e.what());
  }
  RelativeComplex pair = cls.has_boundary() ? RelativeComplex::make(c.delta(), cls.boundary)
                                            : RelativeComplex::whole(c.delta());
  BettiVector b = betti(pair, c.field, true);
  HVector h = h_vector(pair);
  Rows rows(">=");
  for (int r = 1; 2 * r <= d + 1; ++r) {
    long long alt = 0;
    for (int j = 1; j <= r; ++j) {
      long long term = reduced_b(b, j - 1);
      alt += ((r - j) % 2 == 0) ? term : -term;
    }
    rows.add(Rational(h.g(r)), Rational(binomial_ll(d + 2, r) * alt), "r=" + std::to_string(r));
  }
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_thm55_mu(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (!cls.is_manifold()) return c.skip("needs a homology manifold (" + cls.reason + ")");
  if (c.delta().ground_set().size() > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  int d = c.delta().dim();
  try {
    if (auto v = links_fail_wlp(c))
      return c.skip("link of vertex " + std::to_string(*v) + " did not pass sampled WLP");
  } catch (const std::invalid_argument& e) {
    return c.skip(std::string("link WLP gate failed: ") + e.what());
  }
  RelativeComplex pair = cls.has_boundary() ? RelativeComplex::make(c.delta(), cls.boundary)
                                            : RelativeComplex::whole(c.delta());
  RationalVector mu = mu_vector(pair, c.field, c.opts.threads);
  HVector h = h_vector(pair);
  Rows rows(">=");
  for (int r = 1; 2 * r <= d + 1; ++r) {
    Rational alt = 0;
    for (int k = 1; k <= r; ++k) {
      Rational term = mu.at(k - 1);
      alt += ((r - k) % 2 == 0) ? term : -term;
    }
    Rational g0 = Rational(h.g(0));
    alt += (r % 2 == 0) ? g0 : -g0;
    rows.add(Rational(h.g(r)), Rational(binomial_ll(d + 2, r)) * alt, "r=" + std::to_string(r));
  }
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_prop52(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (cls.cls != HomologyClass::ball && cls.cls != HomologyClass::sphere)
    return c.skip("needs a homology ball or sphere");
  if (c.delta().ground_set().size() > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  c.rep.seed = c.opts.seed;
  WlpResult w = wlp_test(c.delta(), c.opts.prime, c.opts.trials, c.opts.seed);
  if (w.verdict != WlpVerdict::passes) return c.skip("did not pass sampled WLP");
  int d = c.delta().dim() + 1;
  RelativeComplex pair = cls.cls == HomologyClass::ball
                             ? RelativeComplex::make(c.delta(), cls.boundary)
                             : RelativeComplex::whole(c.delta());
  RationalVector sig = sigma_vector(pair, c.field, c.opts.threads);
  HVector h = h_vector(pair);
  Rows rows("<=");
  for (int j = 0; 2 * j <= d - 1; ++j) {
    Rational lhs = 0, rhs = 0;
    for (int i = 0; i <= j; ++i) {
      Rational sterm = sig.at(i - 1);
      Rational gterm = Rational(h.g(i)) / Rational(binomial_big(d + 1, i));
      if ((j - i) % 2 == 0) {
        lhs += sterm;
        rhs += gterm;
      } else {
        lhs -= sterm;
        rhs -= gterm;
      }
    }
    rows.add(lhs, rhs / Rational(d + 2), "j=" + std::to_string(j));
  }
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_prop61(Ctx c) {
  PseudomanifoldReport pm = is_normal_pseudomanifold(c.delta());
  if (pm.status != PseudomanifoldStatus::with_boundary)
    return c.skip("needs a normal pseudomanifold with nonempty boundary");
  int d = c.delta().dim() + 1;
  if (d < 3) return c.skip("needs d >= 3");
  if (c.delta().ground_set().size() > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  RelativeComplex pair = RelativeComplex::make(c.delta(), pm.boundary);
  Rows rows("<=");
  rows.add(Rational(binomial_ll(d + 2, 2)) * sigma_tilde(pair, 0, c.field),
           Rational(f_vector(pair).f(0)) / 2, "sigma_0 bound");
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_lemma62(Ctx c) {
  PseudomanifoldReport pm = is_normal_pseudomanifold(c.delta());
  if (pm.status != PseudomanifoldStatus::closed)
    return c.skip("needs a closed normal pseudomanifold");
  int d = c.delta().dim() + 1;
  if (d < 3) return c.skip("needs d >= 3");
  if (c.delta().ground_set().size() > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  RelativeComplex whole = RelativeComplex::whole(c.delta());
  RationalVector sig = sigma_vector(whole, c.field, c.opts.threads);
  Rows rows("<=");
  rows.add(Rational(binomial_ll(d + 2, 2)) * (sig.at(0) - sig.at(-1)),
           Rational(f_vector(whole).f(0)) / 2 - (d + 1), "sigma gap bound");
  rows.finish(c.rep);

  // equality characterizes stacked spheres
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  bool stacked =
      cls.cls == HomologyClass::sphere ? is_stacked_sphere(c.delta(), c.field) : false;
  if (c.rep.equality != stacked) {
    c.rep.holds = false;
    c.rep.witnesses.push_back(std::string("equality-iff-stacked violated: equality ") +
                              (c.rep.equality ? "holds" : "fails") + ", stacked " +
                              (stacked ? "yes" : "no"));
  } else {
    c.rep.witnesses.push_back(std::string("equality iff stacked agrees (stacked ") +
                              (stacked ? "yes" : "no") + ")");
  }
  return c.rep;
}

CheckReport check_thm63(Ctx c) {
  PseudomanifoldReport pm = is_normal_pseudomanifold(c.delta());
  if (pm.status != PseudomanifoldStatus::with_boundary)
    return c.skip("needs a normal pseudomanifold with nonempty boundary");
  int d = c.delta().dim();
  if (d < 3) return c.skip("needs dimension >= 3");
  if (c.delta().ground_set().size() > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  RelativeComplex pair = RelativeComplex::make(c.delta(), pm.boundary);
  RationalVector mu = mu_vector(pair, c.field, c.opts.threads);
  Rows rows(">=");
  rows.add(Rational(h_vector(pair).g(2)),
           Rational(binomial_ll(d + 2, 2)) * (mu.at(1) - mu.at(0)), "mu form of the g_2 bound");
  rows.finish(c.rep);

  // the equality case is characterized by the link conditions (property L)
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (cls.has_boundary()) {
    PropertyLReport lrep = property_L(c.delta(), c.field);
    if (c.rep.equality != lrep.holds) {
      c.rep.holds = false;
      c.rep.witnesses.push_back(std::string("equality-iff-property-L violated: equality ") +
                                (c.rep.equality ? "holds" : "fails") + ", property (L) " +
                                (lrep.holds ? "holds" : "fails"));
    } else {
      c.rep.witnesses.push_back(std::string("equality iff property (L) agrees (" ) +
                                (lrep.holds ? "both hold" : "both fail") + ")");
    }
  }
  return c.rep;
}

CheckReport check_missing_faces_eq(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (cls.cls != HomologyClass::ball) return c.skip("needs a homology ball");
  int d = c.delta().dim() + 1;
  if (d < 3) return c.skip("needs d >= 3");
  if (c.delta().ground_set().size() > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  RelativeComplex pair = RelativeComplex::make(c.delta(), cls.boundary);
  Rational lhs = Rational(2 * binomial_ll(d + 2, 2)) * sigma_tilde(pair, 0, c.field);
  Rational rhs = Rational(f_vector(pair).f(0));
  long long missing = static_cast<long long>(c.delta().missing_faces(d - 1).size());
  bool eq_sigma = lhs == rhs;
  bool eq_missing = Rational(missing) == rhs;
  c.rep.relation = "iff";
  c.rep.lhs = lhs;
  c.rep.rhs = rhs;
  c.rep.holds = eq_sigma == eq_missing;
  c.rep.equality = eq_sigma;
  c.rep.witnesses.push_back("2 C(d+2,2) sigma_0(B,dB) = " + rational_to_string(lhs));
  c.rep.witnesses.push_back("interior vertices = " + rational_to_string(rhs));
  c.rep.witnesses.push_back("missing top-dimensional faces = " + std::to_string(missing));
  c.rep.witnesses.push_back(std::string("sigma equality ") + (eq_sigma ? "holds" : "fails") +
                            ", missing-face equality " + (eq_missing ? "holds" : "fails"));
  return c.rep;
}

CheckReport check_criterion_ball(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (cls.cls != HomologyClass::ball) return c.skip("needs a homology ball");
  int d = c.delta().dim();
  if (d < 3) return c.skip("needs dimension >= 3");
  RelativeComplex pair = RelativeComplex::make(c.delta(), cls.boundary);
  FaceVector f = f_vector(pair);
  Rows rows(">=");
  rows.add(Rational(h_vector(pair).g(2)), Rational(0), "relative g_2");
  rows.finish(c.rep);
  c.rep.witnesses.push_back("interior vertices = " + std::to_string(f.f(0)) +
                            ", interior edges = " + std::to_string(f.f(1)));
  if (c.rep.equality)
    c.rep.witnesses.push_back(
        "g_2(D,dD) = 0: splits as (no-interior-skeleton ball) # simplex boundaries");
  return c.rep;
}

CheckReport check_sharpness(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (!cls.has_boundary()) return c.skip("needs a homology manifold with nonempty boundary");
  int d = c.delta().dim();
  int s = std::max(2, c.opts.stackedness);
  if (2 * s > d + 1) return c.skip("no r with max(2,s) <= r <= (d+1)/2");
  RelativeComplex pair = RelativeComplex::make(c.delta(), cls.boundary);
  BettiVector b = betti(pair, c.field, true);
  HVector h = h_vector(pair);
  Rows rows("=");
  for (int r = s; 2 * r <= d + 1; ++r) {
    long long alt = 0;
    for (int j = 1; j <= r; ++j) {
      long long term = reduced_b(b, j - 1);
      alt += ((r - j) % 2 == 0) ? term : -term;
    }
    rows.add(Rational(h.g(r)), Rational(binomial_ll(d + 2, r) * alt), "r=" + std::to_string(r));
  }
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_duality_sigma(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (cls.cls != HomologyClass::ball) return c.skip("needs a homology ball");
  if (c.delta().ground_set().size() > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  DualityReport rep = duality_checks(c.delta(), c.field);
  Rows rows("=");
  for (const auto& row : rep.sigma_rows)
    rows.add(row.lhs, row.rhs, "sigma~_{i-1}(D,dD) vs sigma~_{d-1-i}(D), i=" + std::to_string(row.i));
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_duality_mu(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (!cls.has_boundary()) return c.skip("needs a homology manifold with nonempty boundary");
  if (c.delta().ground_set().size() > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  DualityReport rep = duality_checks(c.delta(), c.field);
  Rows rows("=");
  for (const auto& row : rep.mu_rows)
    rows.add(row.lhs, row.rhs, "mu_i(D,dD) vs mu_{d-i}(D), i=" + std::to_string(row.i));
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_morse(Ctx c) {
  if (c.delta().is_void()) return c.skip("void complex");
  if (c.delta().ground_set().size() > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  Rows rows("<=");
  for (const MorseRow& row : morse_bounds(c.input, c.field)) {
    rows.add(Rational(row.b), row.mu_i, "b_" + std::to_string(row.i) + " <= mu_" + std::to_string(row.i));
    rows.add(row.alt_b, row.alt_mu, "alternating form, i=" + std::to_string(row.i));
  }
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_hochster_oracle(Ctx c) {
  if (c.delta().is_void()) return c.skip("void complex");
  int n = c.delta().ground_set().size();
  if (n > c.opts.oracle_cap) return c.skip("over the oracle size cap");
  GradedBettiTable hoch = graded_betti(c.input, c.field, c.opts.threads);
  GradedBettiTable oracle = resolution_oracle(c.input, c.field, n);
  bool ok = true;
  long long total_h = 0, total_o = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      total_h += hoch.at(i, j);
      total_o += oracle.at(i, j);
      if (hoch.at(i, j) != oracle.at(i, j)) {
        ok = false;
        c.rep.witnesses.push_back("beta_{" + std::to_string(i) + "," + std::to_string(j) +
                                  "}: subset sum " + std::to_string(hoch.at(i, j)) +
                                  " vs resolution " + std::to_string(oracle.at(i, j)));
      }
    }
  c.rep.relation = "=";
  c.rep.lhs = Rational(total_h);
  c.rep.rhs = Rational(total_o);
  c.rep.holds = ok;
  c.rep.equality = ok;
  if (ok) c.rep.witnesses.push_back("tables agree, total Betti mass " + std::to_string(total_h));
  return c.rep;
}

CheckReport check_schenzel(Ctx c) {
  c.rep.seed = c.opts.seed;
  FieldSpec modp = FieldSpec::prime(c.opts.prime);
  SchenzelResult res;
  try {
    res = schenzel_check(c.delta(), modp, c.opts.seed, 3);
  } catch (const std::invalid_argument& e) {
    return c.skip(e.what());
  }
  if (res.inconclusive)
    return c.skip("inconclusive after " + std::to_string(res.attempts) + " sampled l.s.o.p.s");
  Rows rows("=");
  for (size_t j = 0; j < res.expected.size(); ++j)
    rows.add(Rational(res.dims[j]), Rational(res.expected[j]), "degree " + std::to_string(j));
  rows.finish(c.rep);
  c.rep.witnesses.push_back("attempts = " + std::to_string(res.attempts));
  return c.rep;
}

CheckReport check_thm46(Ctx c) {
  HomologyClassification cls = classify_homology(c.delta(), c.field);
  if (cls.cls != HomologyClass::ball && cls.cls != HomologyClass::sphere)
    return c.skip("needs a homology ball or sphere");
  int n = c.delta().ground_set().size();
  if (n > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  c.rep.seed = c.opts.seed;
  WlpResult w = wlp_test(c.delta(), c.opts.prime, c.opts.trials, c.opts.seed);
  if (w.verdict != WlpVerdict::passes) return c.skip("did not pass sampled WLP");
  int d = c.delta().dim() + 1;
  RelativeComplex pair = cls.cls == HomologyClass::ball
                             ? RelativeComplex::make(c.delta(), cls.boundary)
                             : RelativeComplex::whole(c.delta());
  GradedBettiTable table = graded_betti(pair, c.field, c.opts.threads);
  HVector h = h_vector(pair);
  Rows rows("<=");
  for (int l = 0; 2 * l <= d - 1; ++l)
    for (int i = 0; i <= n; ++i) {
      long long rhs = 0;
      for (int k = 0; k <= l; ++k) {
        long long term = h.g(l - k) * binomial_ll(n - d - 1, i + k);
        rhs += (k % 2 == 0) ? term : -term;
      }
      rows.add(Rational(table.alternating_sum(i, l)), Rational(rhs),
               "i=" + std::to_string(i) + ", l=" + std::to_string(l));
    }
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_thm49(Ctx c) {
  PseudomanifoldReport pm = is_normal_pseudomanifold(c.delta());
  if (pm.status != PseudomanifoldStatus::with_boundary)
    return c.skip("needs a normal pseudomanifold with nonempty boundary");
  int d = c.delta().dim() + 1;
  if (d < 3) return c.skip("needs d >= 3");
  int n = c.delta().ground_set().size();
  if (n > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  RelativeComplex pair = RelativeComplex::make(c.delta(), pm.boundary);
  GradedBettiTable table = graded_betti(pair, c.field, c.opts.threads);
  long long g1 = h_vector(pair).g(1);
  Rows rows("<=");
  for (int i = 0; i <= n; ++i)
    rows.add(Rational(table.at(i, i + 1)), Rational(g1 * binomial_ll(n - d - 1, i)),
             "i=" + std::to_string(i));
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_prop43_euler(Ctx c) {
  if (c.delta().is_void()) return c.skip("void complex");
  int n = c.delta().ground_set().size();
  if (n > c.opts.sigma_cap) return c.skip("over the sigma size cap");
  GradedBettiTable table = graded_betti(c.input, c.field, c.opts.threads);
  Rows rows("=");
  for (int l = 0; l <= n; ++l) {
    long long rhs = 0;
    for (int k = 0; k <= l; ++k) {
      long long term = hilbert_function(c.input, l - k) * binomial_ll(n, k);
      rhs += (k % 2 == 0) ? term : -term;
    }
    rows.add(Rational(table.alternating_sum(0, l)), Rational(rhs), "l=" + std::to_string(l));
  }
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_lemma53(Ctx c) {
  Rows rows("=");
  long long triples = 0;
  Rational worst_lhs, worst_rhs;
  bool all = true;
  for (int n = 1; n <= 30; ++n)
    for (int d = 0; d + 1 <= n; ++d)
      for (int r = 0; r <= d + 1; ++r) {
        Rational lhs = 0;
        for (int k = 0; k <= n; ++k) {
          BigInt num = binomial_big(n - d - 1, k - r);
          if (!num.is_zero()) lhs += Rational(num) / (Rational(n + 1) * Rational(binomial_big(n, k)));
        }
        Rational rhs = Rational(1) / (Rational(d + 2) * Rational(binomial_big(d + 1, r)));
        ++triples;
        if (lhs != rhs) {
          all = false;
          rows.add(lhs, rhs,
                   "n=" + std::to_string(n) + " d=" + std::to_string(d) + " r=" + std::to_string(r));
        }
        worst_lhs = lhs;
        worst_rhs = rhs;
      }
  if (all) rows.add(worst_lhs, worst_rhs, std::to_string(triples) + " (n,d,r) triples verified");
  rows.finish(c.rep);
  return c.rep;
}

CheckReport check_lemma54(Ctx c) {
  if (c.delta().is_void()) return c.skip("void complex");
  if (!c.delta().is_pure()) return c.skip("needs a pure complex");
  int d = c.delta().dim();
  HVector h = h_vector(c.input);
  Rows rows("=");
  for (int k = 0; k <= d + 1; ++k) {
    long long lhs = 0;
    for (int v : c.delta().ground_set()) {
      if (!c.delta().is_face(VertexSet{v})) continue;
      RelativeComplex link = c.input.vertex_link(v);
      lhs += h_vector(link).g(k);
    }
    long long rhs = (d + 2 - k) * h.g(k) + (k + 1) * h.g(k + 1);
    rows.add(Rational(lhs), Rational(rhs), "k=" + std::to_string(k));
  }
  rows.finish(c.rep);
  return c.rep;
}

}  // namespace

CheckReport run_check(CheckId id, const RelativeComplex& input, const FieldSpec& field,
                      const CheckOptions& opts, const std::string& input_name) {
  Ctx c(id, input, field, opts, input_name);
  switch (id) {
    case CheckId::dehn_sommerville: return check_dehn_sommerville(std::move(c));
    case CheckId::graebe: return check_graebe(std::move(c));
    case CheckId::h_and_g: return check_h_and_g(std::move(c));
    case CheckId::lbt_closed: return check_lbt_closed(std::move(c));
    case CheckId::main1: return check_main1(std::move(c));
    case CheckId::main1_equality: return check_main1_equality(std::move(c));
    case CheckId::h2_corollary: return check_h2_corollary(std::move(c));
    case CheckId::main2: return check_main2(std::move(c));
    case CheckId::thm55_mu: return check_thm55_mu(std::move(c));
    case CheckId::prop52: return check_prop52(std::move(c));
    case CheckId::prop61: return check_prop61(std::move(c));
    case CheckId::lemma62: return check_lemma62(std::move(c));
    case CheckId::thm63: return check_thm63(std::move(c));
    case CheckId::missing_faces_eq: return check_missing_faces_eq(std::move(c));
    case CheckId::criterion_ball: return check_criterion_ball(std::move(c));
    case CheckId::sharpness_facet_removed: return check_sharpness(std::move(c));
    case CheckId::duality_sigma: return check_duality_sigma(std::move(c));
    case CheckId::duality_mu: return check_duality_mu(std::move(c));
    case CheckId::morse: return check_morse(std::move(c));
    case CheckId::hochster_oracle: return check_hochster_oracle(std::move(c));
    case CheckId::schenzel: return check_schenzel(std::move(c));
    case CheckId::thm46: return check_thm46(std::move(c));
    case CheckId::thm49: return check_thm49(std::move(c));
    case CheckId::prop43_euler: return check_prop43_euler(std::move(c));
    case CheckId::lemma53: return check_lemma53(std::move(c));
    case CheckId::lemma54: return check_lemma54(std::move(c));
  }
  throw std::invalid_argument("unknown check id");
}

}  // namespace facering
