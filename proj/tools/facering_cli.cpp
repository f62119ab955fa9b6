// Command-line front end: face vectors, homology, sigma/mu numbers, graded
// Betti tables, WLP sampling, theorem checks and corpus runs over complexes
// in the plain text facet format.

#include "facering/checks.hpp"
#include "facering/constructions.hpp"
#include "facering/face_vectors.hpp"
#include "facering/homology.hpp"
#include "facering/io.hpp"
#include "facering/recognition.hpp"
#include "facering/sigma_mu.hpp"
#include "facering/stanley_reisner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace facering;

RelativeComplex load_pair(const std::string& file, const std::string& sub_file) {
  SimplicialComplex total = read_complex_file(file);
  if (sub_file.empty()) return RelativeComplex::whole(std::move(total));
  return RelativeComplex::make(std::move(total), read_complex_file(sub_file));
}

std::string class_name(HomologyClass c) {
  switch (c) {
    case HomologyClass::sphere: return "homology sphere";
    case HomologyClass::ball: return "homology ball";
    case HomologyClass::closed_manifold: return "closed homology manifold";
    case HomologyClass::manifold_with_boundary: return "homology manifold with boundary";
    case HomologyClass::other: return "other";
  }
  return "other";
}

int cmd_info(const std::string& file, const FieldSpec& field) {
  SimplicialComplex c = read_complex_file(file);
  if (c.is_void()) {
    std::cout << "void complex\n";
    return 0;
  }
  std::cout << "dimension " << c.dim() << ", vertices " << c.support().size() << ", facets "
            << c.facets().size();
  if (c.ground_set().size() != c.support().size())
    std::cout << " (ground set " << c.ground_set().size() << ")";
  std::cout << "\n";
  FaceVector f = f_vector(RelativeComplex::whole(c));
  std::cout << "f = (";
  for (size_t i = 0; i < f.entries.size(); ++i) std::cout << (i ? " " : "") << f.entries[i];
  std::cout << ")\n";
  HVector h = h_vector(RelativeComplex::whole(c));
  std::cout << "h = (";
  for (size_t i = 0; i < h.entries.size(); ++i) std::cout << (i ? " " : "") << h.entries[i];
  std::cout << ")\n";

  PseudomanifoldReport pm = is_normal_pseudomanifold(c);
  if (pm.status == PseudomanifoldStatus::no)
    std::cout << "not a normal pseudomanifold: " << pm.reason << "\n";
  else
    std::cout << "normal pseudomanifold, "
              << (pm.status == PseudomanifoldStatus::closed ? "closed" : "with boundary") << "\n";
  HomologyClassification cls = classify_homology(c, field);
  std::cout << "over " << field.to_string() << ": " << class_name(cls.cls);
  if (cls.cls == HomologyClass::other) std::cout << " (" << cls.reason << ")";
  std::cout << "\n";
  if (cls.has_boundary()) {
    std::cout << "boundary facets:\n";
    for (const auto& fct : cls.boundary.facets()) std::cout << "  " << fct.to_string() << "\n";
  }
  if (cls.is_manifold())
    std::cout << "orientable over " << field.to_string() << ": "
              << (orientable(c, field) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_fvec(const std::string& file, const std::string& sub) {
  RelativeComplex pair = load_pair(file, sub);
  FaceVector f = f_vector(pair);
  HVector h = h_vector(pair);
  std::cout << "f = (";
  for (size_t i = 0; i < f.entries.size(); ++i) std::cout << (i ? " " : "") << f.entries[i];
  std::cout << ")\nh = (";
  for (size_t i = 0; i < h.entries.size(); ++i) std::cout << (i ? " " : "") << h.entries[i];
  std::cout << ")\ng = (";
  for (int j = 0; j <= h.d(); ++j) std::cout << (j ? " " : "") << h.g(j);
  std::cout << ")\n";
  return 0;
}

int cmd_homology(const std::string& file, const std::string& sub, const FieldSpec& field,
                 bool unreduced) {
  RelativeComplex pair = load_pair(file, sub);
  BettiVector b = betti(pair, field, !unreduced);
  std::cout << (unreduced ? "b" : "reduced b") << " over " << field.to_string() << ":";
  for (int deg = -1; deg <= b.max_degree(); ++deg)
    std::cout << " b[" << deg << "]=" << b.at(deg);
  std::cout << "\n";
  return 0;
}

int cmd_sigma(const std::string& file, const std::string& sub, const FieldSpec& field, int degree,
              bool breakdown, bool mu_mode) {
  RelativeComplex pair = load_pair(file, sub);
  RationalVector v = mu_mode ? mu_vector(pair, field) : sigma_vector(pair, field);
  const char* label = mu_mode ? "mu" : "sigma~";
  int lo = mu_mode ? 0 : -1;
  if (degree != INT_MIN) {
    std::cout << label << "_" << degree << " = " << rational_to_string(v.at(degree)) << "\n";
    return 0;
  }
  for (int i = lo; i <= v.max_degree(); ++i)
    std::cout << label << "_" << i << " = " << rational_to_string(v.at(i)) << "\n";
  if (breakdown && !mu_mode) {
    InducedBettiEngine engine(pair, pair.total().ground_set().elements());
    auto sums = subset_betti_sums(engine, field);
    std::cout << "per-cardinality Betti sums (rows |W|, columns degree -1..):\n";
    for (size_t k = 0; k < sums.size(); ++k) {
      std::cout << "  |W|=" << k << ":";
      for (long long s : sums[k]) std::cout << " " << s;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_betti(const std::string& file, const std::string& sub, const FieldSpec& field, bool oracle,
              bool as_json) {
  RelativeComplex pair = load_pair(file, sub);
  GradedBettiTable t = oracle ? resolution_oracle(pair, field) : graded_betti(pair, field);
  if (as_json) {
    nlohmann::ordered_json j;
    j["n"] = t.n;
    j["field"] = field.to_string();
    j["truncated"] = t.truncated;
    j["beta"] = nlohmann::ordered_json::array();
    for (int i = 0; i <= t.max_i(); ++i)
      for (int jdeg = 0; jdeg <= (t.degree_bound < 0 ? t.n : t.degree_bound); ++jdeg)
        if (t.at(i, jdeg) != 0)
          j["beta"].push_back({{"i", i}, {"j", jdeg}, {"value", t.at(i, jdeg)}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "beta_{i,j} over " << field.to_string() << (oracle ? " (resolution oracle)" : "")
            << "\ni\\j";
  int jmax = std::max(0, t.max_j());
  for (int j = 0; j <= jmax; ++j) std::cout << "\t" << j;
  std::cout << "\n";
  for (int i = 0; i <= t.max_i(); ++i) {
    bool any = false;
    for (int j = 0; j <= jmax; ++j) any = any || t.at(i, j) != 0;
    if (!any) continue;
    std::cout << i;
    for (int j = 0; j <= jmax; ++j) std::cout << "\t" << t.at(i, j);
    std::cout << "\n";
  }
  if (t.truncated) std::cout << "(truncated at degree " << t.degree_bound << ")\n";
  return 0;
}

int cmd_wlp(const std::string& file, std::uint64_t prime, int trials, std::uint64_t seed) {
  SimplicialComplex c = read_complex_file(file);
  WlpResult r = wlp_test(c, prime, trials, seed);
  switch (r.verdict) {
    case WlpVerdict::passes:
      std::cout << "passes (witness trial " << r.witness_trial << ", seed " << seed << ", prime "
                << prime << ")\n";
      return 0;
    case WlpVerdict::fails_sampled:
      std::cout << "fails_sampled after " << r.trials_run << " trials\n";
      return 1;
    case WlpVerdict::inconclusive:
      std::cout << "inconclusive (no trials)\n";
      return 1;
  }
  return 1;
}

int cmd_reduce(const std::string& file, const std::string& sub, int extra, std::uint64_t prime,
               std::uint64_t seed) {
  RelativeComplex pair = load_pair(file, sub);
  int d = pair.total().dim() + 1;
  ArtinianReduction red = artinian_reduction(pair, FieldSpec::prime(prime), d + extra, seed);
  std::cout << "quotient dimensions by " << red.form_count << " random forms (seed " << seed
            << ", prime " << prime << "):\n";
  for (size_t j = 0; j < red.dims.size(); ++j)
    std::cout << "  degree " << j << ": " << red.dims[j] << "\n";
  return 0;
}

int cmd_check(const std::string& id_name, const std::string& file, const std::string& sub,
              const FieldSpec& field, const CheckOptions& opts, bool as_json) {
  auto id = parse_check_id(id_name);
  if (!id) {
    std::cerr << "unknown check id: " << id_name << "\n";
    return 2;
  }
  RelativeComplex pair = load_pair(file, sub);
  CheckReport rep = run_check(*id, pair, field, opts, file);
  if (as_json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else if (rep.skipped()) {
    std::cout << check_id_name(*id) << ": skipped (" << *rep.skipped_reason << ")\n";
  } else {
    std::cout << check_id_name(*id) << ": " << (rep.holds ? "holds" : "VIOLATED") << "  "
              << rational_to_string(rep.lhs) << " " << rep.relation << " "
              << rational_to_string(rep.rhs) << (rep.equality ? "  (equality)" : "") << "\n";
    for (const auto& w : rep.witnesses) std::cout << "  " << w << "\n";
  }
  if (rep.skipped()) return 0;
  return rep.holds ? 0 : 1;
}

int cmd_gen(const std::string& family, const std::vector<long long>& params, std::uint64_t seed,
            const std::string& out_path) {
  SimplicialComplex c;
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(family + " needs " + std::to_string(k) + " parameter(s)");
  };
  if (family == "simplex") {
    need(1);
    c = simplex(static_cast<int>(params[0]));
  } else if (family == "boundary-simplex") {
    need(1);
    c = boundary_of_simplex(static_cast<int>(params[0]));
  } else if (family == "stacked-sphere") {
    need(2);
    c = stacked_sphere(static_cast<int>(params[0]), static_cast<int>(params[1]), seed);
  } else if (family == "stacked-ball") {
    need(2);
    c = stacked_ball(static_cast<int>(params[0]), static_cast<int>(params[1]), seed);
  } else if (family == "cyclic") {
    need(2);
    c = cyclic_polytope_boundary(static_cast<int>(params[0]), static_cast<int>(params[1]));
  } else if (family == "cross") {
    need(1);
    c = cross_polytope_boundary(static_cast<int>(params[0]));
  } else if (family == "rp2") {
    need(0);
    c = minimal_projective_plane();
  } else {
    std::cerr << "unknown family " << family
              << " (known: simplex, boundary-simplex, stacked-sphere, stacked-ball, cyclic, "
                 "cross, rp2)\n";
    return 2;
  }
  if (out_path.empty() || out_path == "-")
    write_complex(std::cout, c);
  else
    write_complex_file(out_path, c);
  return 0;
}

int cmd_corpus(const std::string& suite, const std::vector<std::string>& id_names,
               const FieldSpec& field, const CheckOptions& opts, const std::string& json_out,
               int threads) {
  std::vector<CheckId> ids;
  if (id_names.empty()) {
    ids = all_check_ids();
  } else {
    for (const auto& name : id_names) {
      auto id = parse_check_id(name);
      if (!id) {
        std::cerr << "unknown check id: " << name << "\n";
        return 2;
      }
      ids.push_back(*id);
    }
  }
  CorpusRun run = run_corpus(suite, ids, field, opts, threads);
  for (const CheckReport& r : run.reports) {
    if (r.skipped()) continue;
    if (!r.holds)
      std::cout << "FAIL " << check_id_name(r.id) << " on " << r.input << "\n";
  }
  std::cout << "passed " << run.summary.passed << ", failed " << run.summary.failed
            << ", skipped " << run.summary.skipped << "\n";
  if (!json_out.empty()) {
    nlohmann::ordered_json j = corpus_to_json(run);
    j["suite"] = suite;
    j["field"] = field.to_string();
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "cannot write " << json_out << "\n";
      return 2;
    }
    out << j.dump(2) << "\n";
  }
  return run.summary.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants and theorem checks for (relative) simplicial complexes"};
  app.require_subcommand(1);

  std::string file, sub, field_str = "q", id_name, out_path, json_out, family, suite = "default";
  std::vector<long long> params;
  std::vector<std::string> id_names;
  bool unreduced = false, oracle = false, as_json = false, breakdown = false;
  int degree = INT_MIN, trials = 24, extra_forms = 0, threads = 0;
  std::uint64_t seed = 20240501, prime = 2147483647ull;

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", field_str, "coefficient field: q, f2, f3, f<p>");
  };

  CLI::App* info = app.add_subcommand("info", "classification and basic invariants");
  info->add_option("file", file)->required();
  add_field(info);

  CLI::App* fvec = app.add_subcommand("fvec", "f-, h- and g-vectors");
  fvec->add_option("file", file)->required();
  fvec->add_option("--sub", sub, "subcomplex file for a relative complex");

  CLI::App* hom = app.add_subcommand("homology", "Betti numbers");
  hom->add_option("file", file)->required();
  hom->add_option("--sub", sub);
  hom->add_flag("--unreduced", unreduced);
  add_field(hom);

  CLI::App* sig = app.add_subcommand("sigma", "normalized sigma-numbers");
  sig->add_option("file", file)->required();
  sig->add_option("--sub", sub);
  sig->add_option("-i", degree, "single degree");
  sig->add_flag("--breakdown", breakdown, "per-cardinality Betti sums");
  add_field(sig);

  CLI::App* mu = app.add_subcommand("mu", "mu-numbers");
  mu->add_option("file", file)->required();
  mu->add_option("--sub", sub);
  mu->add_option("-i", degree);
  add_field(mu);

  CLI::App* bet = app.add_subcommand("betti", "graded Betti table of the Stanley-Reisner module");
  bet->add_option("file", file)->required();
  bet->add_option("--sub", sub);
  bet->add_flag("--oracle", oracle, "use the resolution oracle instead of the subset sums");
  bet->add_flag("--json", as_json);
  add_field(bet);

  CLI::App* wlp = app.add_subcommand("wlp", "sampled weak Lefschetz test");
  wlp->add_option("file", file)->required();
  wlp->add_option("--prime", prime);
  wlp->add_option("--trials", trials);
  wlp->add_option("--seed", seed);

  CLI::App* red = app.add_subcommand("reduce", "Artinian reduction dimensions");
  red->add_option("file", file)->required();
  red->add_option("--sub", sub);
  red->add_option("--extra", extra_forms, "0 for d forms, 1 for d+1");
  red->add_option("--prime", prime);
  red->add_option("--seed", seed);

  CLI::App* chk = app.add_subcommand("check", "run one theorem check");
  chk->add_option("id", id_name)->required();
  chk->add_option("file", file)->required();
  chk->add_option("--sub", sub);
  chk->add_flag("--json", as_json);
  chk->add_option("--seed", seed);
  chk->add_option("--trials", trials);
  chk->add_option("--prime", prime);
  add_field(chk);

  CLI::App* gen = app.add_subcommand("gen", "emit a generated complex");
  gen->add_option("family", family)->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  CLI::App* cor = app.add_subcommand("corpus", "run checks over a named corpus");
  cor->add_option("suite", suite);
  cor->add_option("--ids", id_names, "check ids (default: all)");
  cor->add_option("--json", json_out, "write the full JSON report here");
  cor->add_option("--seed", seed);
  cor->add_option("--trials", trials);
  cor->add_option("--prime", prime);
  cor->add_option("--threads", threads);
  add_field(cor);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    FieldSpec field = FieldSpec::parse(field_str);
    CheckOptions opts;
    opts.seed = seed;
    opts.trials = trials;
    opts.prime = prime;
    opts.threads = threads;
    if (info->parsed()) return cmd_info(file, field);
    if (fvec->parsed()) return cmd_fvec(file, sub);
    if (hom->parsed()) return cmd_homology(file, sub, field, unreduced);
    if (sig->parsed()) return cmd_sigma(file, sub, field, degree, breakdown, false);
    if (mu->parsed()) return cmd_sigma(file, sub, field, degree, false, true);
    if (bet->parsed()) return cmd_betti(file, sub, field, oracle, as_json);
    if (wlp->parsed()) return cmd_wlp(file, prime, trials, seed);
    if (red->parsed()) return cmd_reduce(file, sub, extra_forms, prime, seed);
    if (chk->parsed()) return cmd_check(id_name, file, sub, field, opts, as_json);
    if (gen->parsed()) return cmd_gen(family, params, seed, out_path);
    if (cor->parsed()) return cmd_corpus(suite, id_names, field, opts, json_out, threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
