#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdlab/stallings.hpp"

namespace tdlab {

struct HtConfig {
  int rank = 2;
  std::size_t stages = 6;
  std::uint64_t seed = 0;
  /// Shuffle each length class of t candidates with a generator seeded by
  /// (seed, stage, length).
  bool shuffle = false;
  std::size_t conjugator_budget = 100000;
  std::size_t t_budget = 50000;
  std::size_t prefix_size = 32;
};

/// A recorded transitivity witness: t a_j H = b_j H for every j.
struct Witness {
  std::vector<FreeWord> a;
  std::vector<FreeWord> b;
  FreeWord t;
};

/// State after stage i of the construction.
struct Stage {
  std::size_t i = 0;
  CoreGraph H;
  /// The words g_j^{u_j} kept outside every later subgroup.
  std::vector<FreeWord> B;
  std::vector<FreeWord> conjugators;
  std::vector<Witness> witnesses;

  explicit Stage(int k) : H(k) {}
};

/// a_i H pairwise distinct and b_i H pairwise distinct. Throws
/// PreconditionError for empty or mismatched tuples.
bool is_admissible(const CoreGraph& H, const std::vector<FreeWord>& a,
                   const std::vector<FreeWord>& b);

/// Shortlex-least u with u^-1 g u outside H. It exists whenever H has
/// infinite index and g != 1, because a finitely generated subgroup of
/// infinite index in a free group contains no nontrivial normal subgroup.
/// Throws PreconditionError for g = 1 or finite index, BoundExceeded after
/// `budget` candidates. `tried` receives the number of candidates examined.
FreeWord find_conjugator_outside(const CoreGraph& H, const FreeWord& g,
                                 std::size_t budget = 100000,
                                 std::size_t* tried = nullptr);

struct ExtendResult {
  Stage stage;
  bool admissible = false;
  std::optional<FreeWord> t;
  std::size_t candidates = 0;
};

/// One inductive step: K = <H, b_1^-1 t a_1, ..., b_m^-1 t a_m> for the first
/// t in the candidate order with K avoiding B and of infinite index. An
/// inadmissible pair leaves H unchanged. Throws BoundExceeded after
/// config.t_budget candidates.
ExtendResult extend_stage(const Stage& s, const std::vector<FreeWord>& a,
                          const std::vector<FreeWord>& b, const HtConfig& config);

/// The i-th pair (i >= 1) of the diagonal enumeration of tuple pairs:
/// by d = m + R, then tuple length m, then the rank vector lexicographically,
/// where R is the largest shortlex rank among the 2m entries.
std::pair<std::vector<FreeWord>, std::vector<FreeWord>> tuple_pair(std::size_t i,
                                                                   int k);

struct StageRecord {
  std::size_t index = 0;
  FreeWord g;
  FreeWord u;
  FreeWord b_word;
  std::vector<FreeWord> a;
  std::vector<FreeWord> b;
  bool admissible = false;
  std::optional<FreeWord> t;
  std::size_t t_candidates = 0;
  std::size_t conjugator_candidates = 0;
  /// B after this stage.
  std::vector<FreeWord> B;
  std::vector<FreeWord> H_generators;
  std::size_t H_vertices = 0;
  std::vector<bool> b_outside;
  bool chain = true;
  bool infinite_index = true;
  /// same_coset(H_i, t a_j, b_j) for every witness recorded so far, in order.
  std::vector<bool> witnesses_hold;
};

struct WitnessCheck {
  std::size_t stage = 0;
  std::size_t j = 0;
  long long a_coset = -1;
  long long b_coset = -1;
  /// "ok", "outside-prefix" or "mismatch".
  std::string status;
};

struct BuildReport {
  HtConfig config;
  std::vector<StageRecord> stages;
  CosetActionPrefix action_prefix;
  std::vector<WitnessCheck> witness_checks;
  bool completed = true;
  std::string error;
  std::size_t total_t_candidates = 0;
  std::size_t total_conjugator_candidates = 0;
  std::size_t max_vertices = 1;
};

/// Reads "key = value" lines (# comments allowed) or a JSON object with the
/// HtConfig field names. Throws ParseError.
HtConfig parse_ht_config(std::string_view text);

/// Runs the whole construction. A failing stage stops the run; the report
/// then has completed = false and the stages finished so far.
BuildReport run_builder(const HtConfig& config);

/// Sorted-key JSON, two-space indent, trailing newline.
std::string report_to_json(const BuildReport& report);
/// Throws ParseError on malformed JSON or missing fields.
BuildReport report_from_json(std::string_view text);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Recomputes every certificate from the raw words with fresh graphs.
VerifyResult verify_report(const BuildReport& report);
VerifyResult verify_report_json(std::string_view text);

/// Problems with the stage invariants; empty when all hold. `previous` is
/// the subgroup of the preceding stage, if any.
std::vector<std::string> check_stage_invariants(const Stage& s,
                                                const CoreGraph* previous);

}  // namespace tdlab
