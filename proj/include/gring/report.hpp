#ifndef GRING_REPORT_HPP
#define GRING_REPORT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gring/free_verify.hpp"
#include "gring/group_spec.hpp"
#include "gring/units.hpp"

namespace gring {

struct RunConfig {
  std::string group_spec;  // family name, JSON spec, or "catalog"
  CoeffRing ring = CoeffRing::integers();
  std::optional<std::vector<int>> k_list;  // nullopt = all k in [1, |a|]
  int max_syllables = 8;
  int exponent_bound = 3;
  // Per-record cap on words evaluated by the freeness search inside a scan;
  // 0 means unlimited. Deep certified runs call certify_freeness directly.
  long long freeness_word_budget = 20000;
  bool run_freeness = true;
  bool dedup = false;
  enum class Format { Json, Markdown } format = Format::Json;
  int jobs = 1;
  BuildLimits limits;
  // Called with (records done, records total) as the scan advances; used by
  // the CLI to stream progress to stderr. May be invoked from worker threads
  // (serialized internally).
  std::function<void(long long, long long)> progress;
};

struct PredictedSummary {
  bool finite = false;
  long long order = 0;
  long long s_k = 0;
  std::string t_k;
  std::string case_tag;
  bool operator==(const PredictedSummary&) const = default;
};

struct OracleSummary {
  std::string verdict;  // "finite" | "certified_infinite" | "exceeds_bound"
  long long order = 0;
  bool operator==(const OracleSummary&) const = default;
};

struct FreenessSummary {
  bool ran = false;
  std::string claimed;
  int max_syllables = 0;
  int exponent_bound = 0;
  long long words_checked = 0;
  bool truncated = false;
  std::optional<std::string> counterexample;
  bool hypotheses_ok = true;
  bool operator==(const FreenessSummary&) const = default;
};

struct HydraSummary {
  bool ran = false;
  bool comm_nontrivial = false;
  bool comm_formula_match = false;
  bool second_comm_trivial = false;
  bool ok() const { return !ran || (comm_nontrivial && comm_formula_match && second_comm_trivial); }
  bool operator==(const HydraSummary&) const = default;
};

struct PhaseTimings {
  double family_ms = 0;
  double oracle_ms = 0;
  double freeness_ms = 0;
  double hydra_ms = 0;
  bool operator==(const PhaseTimings&) const = default;
};

struct ClassificationRecord {
  std::string group;
  std::string a_label, b_label;
  int a_index = 0, b_index = 0;
  int order_a = 0, M = 0, k = 0;
  bool k_valid = false;
  PredictedSummary predicted;
  OracleSummary oracle;
  bool match = false;
  FreenessSummary freeness;
  HydraSummary hydra;
  PhaseTimings timings;

  bool ok() const {
    return match && hydra.ok() && (!freeness.ran || !freeness.counterexample.has_value());
  }
  bool operator==(const ClassificationRecord&) const = default;
};

struct ScanSummary {
  long long total = 0;
  long long mismatches = 0;
  long long counterexamples = 0;
  long long hydra_failures = 0;
};

struct ScanResult {
  std::vector<ClassificationRecord> records;
  std::vector<std::string> notes;  // e.g. Dedekind / abelian negative controls
  ScanSummary summary;
  bool ok = false;
};

ScanResult run_scan(const RunConfig& config);

nlohmann::json scan_to_json(const ScanResult& result, const RunConfig& config);
std::vector<ClassificationRecord> records_from_json(const nlohmann::json& j);
std::string scan_to_markdown(const ScanResult& result, const RunConfig& config);

// Human-readable explanation of one (witness, k) verdict: which arithmetic
// condition fired and what the oracle and certifiers concluded.
std::string explain_record(const RunConfig& config, const std::string& a_cycles,
                           const std::string& b_cycles, int k);

struct PolyVerifySummary {
  SweepSummary power_identity;
  SweepSummary nonvanishing;
  bool ok() const { return power_identity.ok() && nonvanishing.ok(); }
};

// Runs both polynomial sweeps. `corrupt` is a testing hook: when set, the
// power-identity sweep uses the provided (possibly faulty) polynomial source.
PolyVerifySummary run_poly_verify(int power_n_max, int nonvanishing_n_max, int jls_max,
                                  const PowerPolyProvider& corrupt = {});

}  // namespace gring

#endif
