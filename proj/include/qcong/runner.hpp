#ifndef QCONG_RUNNER_HPP
#define QCONG_RUNNER_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcong/congruence.hpp"

namespace qcong {

// One executed check, as it appears in a report.
struct RunRecord {
  static constexpr long kNoValue = -1;

  std::string id;
  long n = kNoValue;    // truncation/index parameter, kNoValue when absent
  long p = kNoValue;    // prime, kNoValue when absent
  std::string params;   // instance label or sampling description
  std::string modulus;  // modulus or tolerance description
  CheckResult result;
  long time_ms = 0;
};

// JSON report: {"version":1,"seed":...,"results":[...]}. Byte-deterministic
// for a fixed input (timings are recorded only when the caller opts in).
std::string report_json(const std::vector<RunRecord>& results,
                        std::uint64_t seed);
// Fixed-width table with a verdict tally footer.
std::string report_text(const std::vector<RunRecord>& results);

// Worker count: QCONG_THREADS when set (>= 1), else the logical core count.
int worker_threads();

// Order-stable parallel execution of independent record producers.
std::vector<RunRecord> run_tasks(
    std::vector<std::function<RunRecord()>> tasks);

// The command line front end; returns the process exit code
// (0 = all pass/skip, 1 = some check failed, 2 = usage error).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qcong

#endif
