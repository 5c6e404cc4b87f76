#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strongpow/group.hpp"

namespace strongpow {

enum class CheckStatus { agree, disagree, skipped };
const char* to_string(CheckStatus s);

// One formula-vs-oracle comparison.
struct CheckRecord {
  std::string check;
  std::string group;
  std::size_t n = 0;
  bool cyclic = false;
  std::string formula_value;
  std::string oracle_value;
  CheckStatus status = CheckStatus::skipped;
  std::string note;
  // Set when a disagreement matches the known-discrepancy list.
  bool known = false;
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  std::size_t count(CheckStatus s) const;
  // Disagreements not covered by the known-discrepancy list.
  std::size_t unexplained() const;
};

// Check names understood by run_checks, in report order.
const std::vector<std::string>& all_check_names();

// A named group used by the corpus family and by the tests.
struct CorpusGroup {
  std::string spec;
  FiniteGroup group;
};

// Cyclic and noncyclic groups exercised by `verify --family corpus`, sorted
// by order and then by spec.
const std::vector<CorpusGroup>& corpus_groups();

// Runs the named checks on one group, one record per check.
std::vector<CheckRecord> run_checks(const std::string& spec, const FiniteGroup& g,
                                    const std::vector<std::string>& checks);

struct KnownDiscrepancy {
  std::string check;
  std::optional<bool> cyclic;
  std::size_t n_min = 0;
  std::optional<std::size_t> n_max;
  std::string explanation;

  bool matches(const CheckRecord& r) const;
};

// JSON array of {"check", "cyclic"?, "n_min"?, "n_max"?, "explanation"}.
std::vector<KnownDiscrepancy> parse_known_discrepancies(const std::string& json_text);
std::vector<KnownDiscrepancy> load_known_discrepancies(const std::string& path);

// Marks matching disagreements as known and appends the explanation to the
// record's note.
void apply_known(VerifyReport& report, const std::vector<KnownDiscrepancy>& known);

enum class Family { cyclic, corpus };

struct VerifyRequest {
  Family family = Family::cyclic;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::vector<std::string> checks;
  std::size_t threads = 1;
};

// Records in group order (n, then spec), checks in request order.
VerifyReport run_verify(const VerifyRequest& req);

std::string report_to_tsv(const VerifyReport& r);
std::string report_to_json(const VerifyReport& r);

// Worker count: STRONGPOW_THREADS if set and positive, else hardware
// concurrency (at least 1).
std::size_t default_thread_count();

// Calls job(i) for i in [0, count) on up to `threads` workers. Exceptions are
// rethrown on the calling thread after all workers stop.
template <typename Job>
void parallel_for(std::size_t count, std::size_t threads, Job job);

}  // namespace strongpow

#include "strongpow/detail/parallel.hpp"
