#ifndef FACERING_CHECKS_HPP
#define FACERING_CHECKS_HPP

#include "facering/complex.hpp"
#include "facering/field.hpp"
#include "facering/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace facering {

// One executable check per named result. Each id binds a formula, its
// hypothesis gate and its dimension convention; inputs failing the gate are
// reported as skipped, never as failed.
enum class CheckId {
  dehn_sommerville,
  graebe,
  h_and_g,
  lbt_closed,
  main1,
  main1_equality,
  h2_corollary,
  main2,
  thm55_mu,
  prop52,
  prop61,
  lemma62,
  thm63,
  missing_faces_eq,
  criterion_ball,
  sharpness_facet_removed,
  duality_sigma,
  duality_mu,
  morse,
  hochster_oracle,
  schenzel,
  thm46,
  thm49,
  prop43_euler,
  lemma53,
  lemma54,
};

std::string check_id_name(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);
const std::vector<CheckId>& all_check_ids();

struct CheckOptions {
  std::uint64_t seed = 20240501;
  int trials = 24;
  std::uint64_t prime = 2147483647ull;  // sampling prime for WLP / l.s.o.p. draws
  int stackedness = 1;                  // s parameter of the sharpness family
  int threads = 0;
  int sigma_cap = 14;   // largest ground set for subset-sweep checks
  int oracle_cap = 8;   // largest ground set for resolution comparisons
};

struct CheckReport {
  CheckId id{};
  std::string input;
  std::string field;
  std::optional<std::uint64_t> seed;  // recorded for sampling-gated checks
  Rational lhs, rhs;                  // the extremal row of a multi-row check
  std::string relation;               // "<=", "=", ">=", "iff"
  bool holds = false;
  bool equality = false;  // lhs == rhs on the reported row (for inequalities)
  std::optional<std::string> skipped_reason;
  std::vector<std::string> witnesses;

  bool skipped() const { return skipped_reason.has_value(); }
  nlohmann::ordered_json to_json() const;
};

// Runs one check on the input pair (sub is ignored by the checks that derive
// the boundary themselves; pass the void complex when there is no sub).
CheckReport run_check(CheckId id, const RelativeComplex& input, const FieldSpec& field,
                      const CheckOptions& opts = {}, const std::string& input_name = "input");

// --- corpus -----------------------------------------------------------------

struct CorpusEntry {
  std::string name;
  RelativeComplex pair;
};

const std::vector<std::string>& corpus_suite_names();
std::vector<CorpusEntry> corpus_suite(const std::string& name);

struct CorpusSummary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

struct CorpusRun {
  std::vector<CheckReport> reports;  // canonical order: (check, input)
  CorpusSummary summary;
};

// Runs every requested check on every suite entry in a small worker pool;
// the report list and JSON serialization are identical for every thread
// count.
CorpusRun run_corpus(const std::string& suite, const std::vector<CheckId>& ids,
                     const FieldSpec& field, const CheckOptions& opts = {}, int threads = 0);

nlohmann::ordered_json corpus_to_json(const CorpusRun& run);

nlohmann::ordered_json rational_to_json(const Rational& r);

}  // namespace facering

#endif
