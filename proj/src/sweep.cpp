#include "hillpoly/sweep.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace hillpoly {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::optional<int> find_diffeq_order(const Poly& q, int height) {
  for (int h = 1; h <= height; ++h) {
    const DiffEqSolution sol = diffeq_search(q, h);
    if (sol.coefficients && !sol.degenerate) return h;
  }
  return std::nullopt;
}

struct ExistingLog {
  std::vector<Json> records;
  std::uintmax_t valid_bytes = 0;
  bool torn_tail = false;
};

ExistingLog read_existing_log(const std::filesystem::path& path, const std::vector<Hill>& hills) {
  ExistingLog log;
  std::ifstream in(path, std::ios::binary);
  if (!in) return log;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const bool complete = nl != std::string::npos;
    const std::string line = text.substr(pos, complete ? nl - pos : std::string::npos);
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      if (!complete) {
        log.torn_tail = true;
        break;
      }
      throw CorruptLog("sweep log " + path.string() + ": unparsable line " + std::to_string(log.records.size() + 1));
    }
    const std::size_t expected = log.records.size();
    if (!j.contains("index") || !j["index"].is_number_integer() || j["index"].get<std::size_t>() != expected)
      throw CorruptLog("sweep log " + path.string() + ": expected index " + std::to_string(expected));
    if (expected >= hills.size())
      throw CorruptLog("sweep log " + path.string() + ": more records than hills with this --v-max");
    if (!j.contains("hill") || j["hill"] != to_string(hills[expected]))
      throw CorruptLog("sweep log " + path.string() + ": record " + std::to_string(expected) +
                       " does not match the enumeration");
    if (!complete) {
      // a complete JSON object without its newline: keep it, finish the line
      log.records.push_back(std::move(j));
      log.valid_bytes = text.size();
      log.torn_tail = true;
      break;
    }
    log.records.push_back(std::move(j));
    pos = nl + 1;
    log.valid_bytes = pos;
  }
  return log;
}

}  // namespace

SweepRecord compute_sweep_record(int index, const Hill& hill) {
  const auto start = Clock::now();
  SweepRecord r;
  r.index = index;
  r.hill = hill;
  r.q = hill_q(hill);
  r.p = hill_dual(hill);
  try {
    r.thm44 = critical_line_check(r.q, 1);
  } catch (const std::invalid_argument& e) {
    r.thm44.verdict = LineVerdict::off_line;
    r.thm44.witness = e.what();
  }
  r.conj47 = negative_simple_roots_check(r.p);
  r.diffeq_order_found = find_diffeq_order(r.q, hill.height());
  r.elapsed_ms = ms_since(start);
  return r;
}

Json to_json(const SweepRecord& r) {
  Json j{{"index", r.index},
         {"hill", to_string(r.hill)},
         {"volume", r.hill.volume()},
         {"width", r.hill.width()},
         {"height", r.hill.height()},
         {"deg_q", r.q.deg()},
         {"deg_p", r.p.deg()},
         {"pass", r.pass()},
         {"q", poly_to_json(r.q, 's')},
         {"p", poly_to_json(r.p, 't')},
         {"thm44", to_json(r.thm44)},
         {"conj47", to_json(r.conj47)}};
  j["diffeq_order_found"] = r.diffeq_order_found ? Json(*r.diffeq_order_found) : Json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::filesystem::path default_sweep_log(int v_max) {
  const char* dir = std::getenv("HILLPOLY_LOG_DIR");
  const std::filesystem::path base = dir && *dir ? std::filesystem::path(dir) : std::filesystem::current_path();
  return base / ("sweep-v" + std::to_string(v_max) + ".ndjson");
}

SweepOutcome run_sweep(const SweepConfig& config, const std::function<void(const Json&)>& on_record) {
  if (config.v_max < 1) throw std::invalid_argument("sweep: --v-max must be >= 1");
  if (config.jobs < 1) throw std::invalid_argument("sweep: --jobs must be >= 1");
  const auto start = Clock::now();
  const std::vector<Hill> hills = enumerate_hills(config.v_max);

  SweepOutcome out;
  ExistingLog existing;
  if (config.resume) existing = read_existing_log(config.log, hills);

  if (config.resume && existing.torn_tail) {
    std::error_code ec;
    std::filesystem::resize_file(config.log, existing.valid_bytes, ec);
    if (ec) throw std::runtime_error("sweep: cannot repair " + config.log.string() + ": " + ec.message());
  }
  std::ofstream log(config.log, config.resume ? std::ios::app | std::ios::binary : std::ios::trunc | std::ios::binary);
  if (!log) throw std::runtime_error("sweep: cannot write log " + config.log.string());
  if (config.resume && existing.torn_tail && existing.valid_bytes > 0) {
    // the repaired tail may hold a complete record without its newline
    std::ifstream check(config.log, std::ios::binary);
    check.seekg(-1, std::ios::end);
    if (check.get() != '\n') log << '\n';
  }

  auto account = [&](const Json& j) {
    if (!j.value("pass", false)) ++out.failures;
    out.max_degree = std::max({out.max_degree, j.value("deg_q", 0), j.value("deg_p", 0)});
    if (on_record) on_record(j);
    out.records.push_back(j);
  };
  for (const auto& j : existing.records) account(j);
  out.resumed = static_cast<int>(existing.records.size());

  const int first = out.resumed;
  const int total = static_cast<int>(hills.size());
  std::mutex mu;
  std::condition_variable ready;
  std::map<int, SweepRecord> pending;
  std::exception_ptr error;
  std::atomic<int> next{first};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (int i = next++; i < total && !stop; i = next++) {
      try {
        SweepRecord rec = compute_sweep_record(i, hills[static_cast<std::size_t>(i)]);
        std::lock_guard lock(mu);
        pending.emplace(i, std::move(rec));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        stop = true;
      }
      ready.notify_one();
    }
  };

  std::vector<std::jthread> workers;
  const int n_workers = std::min(config.jobs, std::max(1, total - first));
  for (int w = 0; w < n_workers; ++w) workers.emplace_back(worker);

  for (int i = first; i < total; ++i) {
    SweepRecord rec;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return error || pending.count(i); });
      if (error) break;
      rec = std::move(pending.at(i));
      pending.erase(i);
    }
    const Json j = to_json(rec);
    log << j.dump() << '\n';
    log.flush();
    if (!log) {
      stop = true;
      workers.clear();
      throw std::runtime_error("sweep: write failed on " + config.log.string());
    }
    ++out.computed;
    account(j);
  }
  workers.clear();
  if (error) std::rethrow_exception(error);
  out.wall_seconds = ms_since(start) / 1000.0;
  return out;
}

}  // namespace hillpoly
