#include "facering/checks.hpp"
#include "facering/constructions.hpp"
#include "facering/homology.hpp"
#include "facering/recognition.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace facering {

namespace {

CorpusEntry whole(std::string name, SimplicialComplex c) {
  return CorpusEntry{std::move(name), RelativeComplex::whole(std::move(c))};
}

CorpusEntry pair(std::string name, SimplicialComplex total, SimplicialComplex sub) {
  return CorpusEntry{std::move(name), RelativeComplex::make(std::move(total), std::move(sub))};
}

SimplicialComplex moebius_band() {
  return SimplicialComplex::from_facets(
      {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}});
}

SimplicialComplex annulus() {
  return SimplicialComplex::from_facets(
      {{1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {3, 5, 6}, {1, 3, 6}, {1, 4, 6}});
}

SimplicialComplex two_disjoint_spheres() {
  std::vector<VertexSet> facets;
  for (const auto& f : boundary_of_simplex(4).facets()) facets.push_back(f);
  for (const auto& f : boundary_of_simplex(4).facets()) {
    VertexSet g;
    for (int v : f) g.insert(v + 5);
    facets.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

// ball obtained by gluing a simplex boundary onto the unique facet of a
// simplex: the smallest connected-sum ball with one interior vertex
SimplicialComplex simplex_sum_ball(int d) {
  SimplicialComplex t = simplex(d);
  SimplicialComplex s = boundary_of_simplex(d + 1);
  return connected_sum(t, t.facets()[0], s, s.facets()[0]);
}

std::vector<CorpusEntry> spheres_small() {
  std::vector<CorpusEntry> out;
  out.push_back(whole("sphere-bd-simplex-3", boundary_of_simplex(3)));
  out.push_back(whole("sphere-bd-simplex-4", boundary_of_simplex(4)));
  out.push_back(whole("sphere-bd-simplex-5", boundary_of_simplex(5)));
  out.push_back(whole("sphere-cross-3", cross_polytope_boundary(3)));
  out.push_back(whole("sphere-cross-4", cross_polytope_boundary(4)));
  out.push_back(whole("sphere-stacked-2-7-s11", stacked_sphere(2, 7, 11)));
  out.push_back(whole("sphere-stacked-3-7-s12", stacked_sphere(3, 7, 12)));
  out.push_back(whole("sphere-stacked-3-9-s13", stacked_sphere(3, 9, 13)));
  out.push_back(whole("sphere-stacked-4-9-s14", stacked_sphere(4, 9, 14)));
  out.push_back(whole("sphere-stacked-3-12-s15", stacked_sphere(3, 12, 15)));
  out.push_back(whole("sphere-cyclic-3-6", cyclic_polytope_boundary(3, 6)));
  out.push_back(whole("sphere-cyclic-3-7", cyclic_polytope_boundary(3, 7)));
  out.push_back(whole("sphere-cyclic-4-7", cyclic_polytope_boundary(4, 7)));
  out.push_back(whole("sphere-cyclic-4-8", cyclic_polytope_boundary(4, 8)));
  {
    SimplicialComplex a = boundary_of_simplex(4);
    SimplicialComplex sum = connected_sum(a, a.facets()[0], a, a.facets()[0]);
    out.push_back(whole("sphere-sum-bd4-bd4", std::move(sum)));
  }
  {
    SimplicialComplex a = cross_polytope_boundary(3);
    SimplicialComplex b = boundary_of_simplex(3);
    out.push_back(whole("sphere-sum-cross3-bd3", connected_sum(a, a.facets()[0], b, b.facets()[0])));
  }
  return out;
}

std::vector<CorpusEntry> closed_small() {
  std::vector<CorpusEntry> out = spheres_small();
  out.push_back(whole("closed-rp2", minimal_projective_plane()));
  out.push_back(whole("closed-two-spheres", two_disjoint_spheres()));
  return out;
}

std::vector<CorpusEntry> balls_small() {
  std::vector<CorpusEntry> out;
  out.push_back(whole("ball-simplex-3", simplex(3)));
  out.push_back(whole("ball-simplex-4", simplex(4)));
  out.push_back(whole("ball-stacked-2-4-s21", stacked_ball(2, 4, 21)));
  out.push_back(whole("ball-stacked-3-3-s22", stacked_ball(3, 3, 22)));
  out.push_back(whole("ball-stacked-3-6-s23", stacked_ball(3, 6, 23)));
  out.push_back(whole("ball-stacked-4-4-s24", stacked_ball(4, 4, 24)));
  {
    SimplicialComplex s = boundary_of_simplex(4);
    out.push_back(whole("ball-facet-removed-bd4", remove_facet(s, s.facets()[0])));
  }
  {
    SimplicialComplex s = boundary_of_simplex(5);
    out.push_back(whole("ball-facet-removed-bd5", remove_facet(s, s.facets()[0])));
  }
  {
    SimplicialComplex s = cyclic_polytope_boundary(4, 7);
    out.push_back(whole("ball-facet-removed-cyclic-4-7", remove_facet(s, s.facets()[0])));
  }
  {
    SimplicialComplex s = cyclic_polytope_boundary(4, 8);
    out.push_back(whole("ball-facet-removed-cyclic-4-8", remove_facet(s, s.facets()[0])));
  }
  {
    SimplicialComplex s = stacked_sphere(3, 8, 31);
    out.push_back(whole("ball-facet-removed-stacked-3-8-s31", remove_facet(s, s.facets()[0])));
  }
  {
    SimplicialComplex s = stacked_sphere(4, 8, 32);
    out.push_back(whole("ball-facet-removed-stacked-4-8-s32", remove_facet(s, s.facets()[0])));
  }
  {
    SimplicialComplex s = stacked_sphere(3, 8, 33);
    out.push_back(whole("ball-vertex-deleted-stacked-3-8-s33", s.delete_vertex(1)));
  }
  {
    SimplicialComplex s = stacked_sphere(4, 9, 34);
    out.push_back(whole("ball-vertex-deleted-stacked-4-9-s34", s.delete_vertex(2)));
  }
  out.push_back(whole("ball-vertex-deleted-cross-3", cross_polytope_boundary(3).delete_vertex(1)));
  out.push_back(whole("ball-cone-cross-3", cone(7, cross_polytope_boundary(3))));
  out.push_back(whole("ball-cone-cross-4", cone(9, cross_polytope_boundary(4))));
  out.push_back(whole("ball-cone-cyclic-3-6", cone(7, cyclic_polytope_boundary(3, 6))));
  out.push_back(whole("ball-cone-cyclic-4-7", cone(8, cyclic_polytope_boundary(4, 7))));
  out.push_back(whole("ball-sum-simplex-3", simplex_sum_ball(3)));
  out.push_back(whole("ball-sum-simplex-4", simplex_sum_ball(4)));
  {
    // two simplex boundaries summed onto a simplex: two interior vertices
    SimplicialComplex b = simplex_sum_ball(3);
    SimplicialComplex s = boundary_of_simplex(4);
    out.push_back(whole("ball-sum-simplex-3-twice", connected_sum(b, b.facets()[0], s, s.facets()[0])));
  }
  {
    SimplicialComplex t = stacked_ball(3, 3, 35);
    SimplicialComplex s = boundary_of_simplex(4);
    out.push_back(whole("ball-sum-stacked-3-3-s35", connected_sum(t, t.facets()[0], s, s.facets()[0])));
  }
  return out;
}

std::vector<CorpusEntry> boundary_small() {
  std::vector<CorpusEntry> out = balls_small();
  out.push_back(whole("bdm-moebius-5", moebius_band()));
  out.push_back(whole("bdm-annulus-6", annulus()));
  return out;
}

std::vector<CorpusEntry> pairs_small() {
  std::vector<CorpusEntry> out;
  SimplicialComplex tetra = simplex(3);
  out.push_back(pair("pair-solid-tetra-boundary", tetra, boundary_of_simplex(3)));
  SimplicialComplex fourcycle =
      SimplicialComplex::from_facets({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  out.push_back(whole("pair-four-cycle", fourcycle));
  out.push_back(pair("pair-four-cycle-two-points", fourcycle,
                     SimplicialComplex::from_facets({{1}, {3}})));
  SimplicialComplex octa = cross_polytope_boundary(3);
  out.push_back(pair("pair-octahedron-link", octa, octa.link(VertexSet{1})));
  SimplicialComplex ball33 = stacked_ball(3, 3, 41);
  out.push_back(CorpusEntry{"pair-stacked-ball-3-3-boundary", interior_faces(ball33)});
  out.push_back(whole("pair-rp2", minimal_projective_plane()));
  out.push_back(whole("pair-path-3", SimplicialComplex::from_facets({{1, 2}, {2, 3}, {3, 4}})));
  out.push_back(pair("pair-path-3-endpoint",
                     SimplicialComplex::from_facets({{1, 2}, {2, 3}, {3, 4}}),
                     SimplicialComplex::from_facets({{1}})));
  out.push_back(whole("pair-simplex-2", simplex(2)));
  return out;
}

}  // namespace

const std::vector<std::string>& corpus_suite_names() {
  static const std::vector<std::string> names = {"spheres-small", "closed-small", "balls-small",
                                                 "boundary-small", "pairs-small", "default"};
  return names;
}

std::vector<CorpusEntry> corpus_suite(const std::string& name) {
  if (name == "spheres-small") return spheres_small();
  if (name == "closed-small") return closed_small();
  if (name == "balls-small") return balls_small();
  if (name == "boundary-small") return boundary_small();
  if (name == "pairs-small") return pairs_small();
  if (name == "default") {
    std::vector<CorpusEntry> out = closed_small();
    for (auto& e : boundary_small()) out.push_back(std::move(e));
    for (auto& e : pairs_small()) out.push_back(std::move(e));
    return out;
  }
  throw std::invalid_argument("unknown corpus suite: " + name);
}

CorpusRun run_corpus(const std::string& suite, const std::vector<CheckId>& ids,
                     const FieldSpec& field, const CheckOptions& opts, int threads) {
  std::vector<CorpusEntry> entries = corpus_suite(suite);

  struct Task {
    CheckId id;
    const CorpusEntry* entry;  // null for input-independent checks
  };
  std::vector<Task> tasks;
  for (CheckId id : ids) {
    if (id == CheckId::lemma53) {
      tasks.push_back({id, nullptr});
      continue;
    }
    for (const CorpusEntry& e : entries) tasks.push_back({id, &e});
  }

  CheckOptions inner = opts;
  inner.threads = 1;  // the pool parallelizes across tasks

  std::vector<CheckReport> reports(tasks.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    while (true) {
      size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      const Task& task = tasks[t];
      if (task.entry == nullptr) {
        reports[t] = run_check(task.id, RelativeComplex::whole(simplex(0)), field, inner, "global");
      } else {
        reports[t] = run_check(task.id, task.entry->pair, field, inner, task.entry->name);
      }
    }
  };
  if (threads <= 0) threads = default_thread_count();
  threads = std::min<int>(threads, static_cast<int>(tasks.size()) + 1);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.id != b.id) return check_id_name(a.id) < check_id_name(b.id);
    return a.input < b.input;
  });

  CorpusRun run;
  run.reports = std::move(reports);
  for (const CheckReport& r : run.reports) {
    if (r.skipped())
      ++run.summary.skipped;
    else if (r.holds)
      ++run.summary.passed;
    else
      ++run.summary.failed;
  }
  return run;
}

nlohmann::ordered_json corpus_to_json(const CorpusRun& run) {
  nlohmann::ordered_json j;
  j["reports"] = nlohmann::ordered_json::array();
  for (const CheckReport& r : run.reports) j["reports"].push_back(r.to_json());
  j["summary"] = {{"passed", run.summary.passed},
                  {"failed", run.summary.failed},
                  {"skipped", run.summary.skipped}};
  return j;
}

}  // namespace facering
