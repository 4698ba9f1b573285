#ifndef HILLPOLY_SWEEP_HPP
#define HILLPOLY_SWEEP_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hillpoly/hills.hpp"
#include "hillpoly/rootloc.hpp"
#include "hillpoly/serialize.hpp"

namespace hillpoly {

struct SweepConfig {
  int v_max = 1;
  int jobs = 1;
  std::filesystem::path log;
  bool resume = false;
};

/// Evidence for one hill: the critical-line certificate of Q_mu and the
/// negative-simple-roots verdict for P_mu.
struct SweepRecord {
  int index = 0;
  Hill hill;
  Poly q;
  Poly p;
  LineCertificate thm44;
  NegativeRootsResult conj47;
  /// Smallest h <= height with a nondegenerate difference equation of order h.
  std::optional<int> diffeq_order_found;
  double elapsed_ms = 0.0;

  bool pass() const { return thm44.on_line() && conj47.pass; }
};

SweepRecord compute_sweep_record(int index, const Hill& hill);

/// One NDJSON line (without the newline). Field order is fixed.
Json to_json(const SweepRecord& record);

/// The log contents are unusable for --resume.
class CorruptLog : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepOutcome {
  /// Every record of the final log, in index order.
  std::vector<Json> records;
  int resumed = 0;
  int computed = 0;
  int failures = 0;
  int max_degree = 0;
  double wall_seconds = 0.0;
};

/// $HILLPOLY_LOG_DIR (or the working directory) / sweep-v<v_max>.ndjson.
std::filesystem::path default_sweep_log(int v_max);

/// Runs the sweep, appending one line per hill to config.log in enumeration
/// order. Workers compute in any order; a single writer emits lines by index
/// and flushes each one. With resume, indices already logged are skipped; a
/// torn final line is dropped, any other inconsistency throws CorruptLog and
/// leaves the file untouched. Throws std::invalid_argument for v_max < 1 or
/// jobs < 1 and std::runtime_error for an unwritable log.
SweepOutcome run_sweep(const SweepConfig& config, const std::function<void(const Json&)>& on_record = {});

}  // namespace hillpoly

#endif  // HILLPOLY_SWEEP_HPP
