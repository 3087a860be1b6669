#ifndef QCONG_STATEMENTS_HPP
#define QCONG_STATEMENTS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcong/congruence.hpp"

namespace qcong {

enum class StatementKind { Proved, Conjecture, ExactIdentity };

// One checked instance of a statement at a given n: e.g. the M = n-1 variant,
// a particular parameter sample, or a particular d for d-parameterized
// families.
struct InstanceResult {
  std::string label;
  std::string modulus;
  CheckResult result;
};

struct Statement {
  std::string id;
  StatementKind kind;
  std::string summary;  // what the statement asserts, in plain words
  std::string domain;   // human-readable admissibility condition on n
  std::function<bool(long)> admissible;
  // Runs every instance of the statement at this n. The seed drives any
  // rational parameter sampling (deterministic for a fixed seed).
  std::function<std::vector<InstanceResult>(long n, std::uint64_t seed)> run;
};

// The full registry, in stable documented order.
const std::vector<Statement>& statements();
const Statement* find_statement(const std::string& id);

// Worst verdict over all instances at n (Fail dominates, then Skipped).
CheckResult check_statement(const std::string& id, long n,
                            std::uint64_t seed = 1);

struct ScanReport {
  std::string id;
  long lo = 0, hi = 0;
  long tested = 0;  // admissible n visited
  long pass = 0, fail = 0, skip = 0;
  // (n, instance label) of every failing instance; a nonempty list is a
  // reportable potential counterexample for Conjecture entries.
  std::vector<std::pair<long, std::string>> failures;
};

ScanReport scan(const std::string& id, long lo, long hi,
                std::uint64_t seed = 1);

// Catalog of all registry entries as a JSON array (id, kind, summary,
// domain), for docs and the CLI `list` subcommand.
std::string statements_catalog_json();

const char* kind_str(StatementKind k);

}  // namespace qcong

#endif
