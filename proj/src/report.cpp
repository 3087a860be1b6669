#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "qcong/runner.hpp"

namespace qcong {

namespace {

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    default:
      return "skipped";
  }
}

}  // namespace

std::string report_json(const std::vector<RunRecord>& results,
                        std::uint64_t seed) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["seed"] = seed;
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    nlohmann::ordered_json inst;
    if (r.n != RunRecord::kNoValue)
      inst["n"] = r.n;
    else
      inst["n"] = nullptr;
    if (r.p != RunRecord::kNoValue)
      inst["p"] = r.p;
    else
      inst["p"] = nullptr;
    inst["params"] = r.params;
    e["instance"] = std::move(inst);
    e["modulus"] = r.modulus;
    e["verdict"] = verdict_str(r.result.verdict);
    if (r.result.verdict == Verdict::Skipped && !r.result.reason.empty())
      e["reason"] = r.result.reason;
    e["detail"] = nlohmann::ordered_json::array();
    for (const auto& d : r.result.detail) {
      nlohmann::ordered_json f;
      f["factor"] = d.factor;
      f["required"] = d.required;
      f["achieved"] = d.achieved;
      e["detail"].push_back(std::move(f));
    }
    e["time_ms"] = r.time_ms;
    doc["results"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<RunRecord>& results) {
  std::ostringstream os;
  long pass = 0, fail = 0, skip = 0;
  char line[512];
  std::snprintf(line, sizeof line, "%-16s %-10s %-24s %-8s %s\n", "id",
                "instance", "modulus", "verdict", "detail");
  os << line;
  for (const auto& r : results) {
    std::string inst;
    if (r.n != RunRecord::kNoValue) inst += "n=" + std::to_string(r.n);
    if (r.p != RunRecord::kNoValue) {
      if (!inst.empty()) inst += " ";
      inst += "p=" + std::to_string(r.p);
    }
    if (inst.empty()) inst = "-";
    std::string det;
    if (r.result.verdict == Verdict::Skipped) {
      det = r.result.reason;
    } else {
      for (const auto& d : r.result.detail) {
        if (!det.empty()) det += "; ";
        det += d.factor + " " + std::to_string(d.achieved) + "/" +
               std::to_string(d.required);
      }
      if (!r.params.empty()) det = r.params + (det.empty() ? "" : "; " + det);
    }
    if (det.size() > 160) det = det.substr(0, 157) + "...";
    std::snprintf(line, sizeof line, "%-16s %-10s %-24s %-8s %s\n",
                  r.id.c_str(), inst.c_str(),
                  r.modulus.empty() ? "-" : r.modulus.c_str(),
                  verdict_str(r.result.verdict), det.c_str());
    os << line;
    switch (r.result.verdict) {
      case Verdict::Pass:
        ++pass;
        break;
      case Verdict::Fail:
        ++fail;
        break;
      default:
        ++skip;
        break;
    }
  }
  os << "total=" << results.size() << " pass=" << pass << " fail=" << fail
     << " skip=" << skip << "\n";
  return os.str();
}

int worker_threads() {
  if (const char* env = std::getenv("QCONG_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc >= 1 ? static_cast<int>(hc) : 1;
}

std::vector<RunRecord> run_tasks(
    std::vector<std::function<RunRecord()>> tasks) {
  std::vector<RunRecord> out(tasks.size());
  int nthreads = std::min<long>(worker_threads(), (long)tasks.size());
  if (nthreads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        out[i] = tasks[i]();
      }
    });
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace qcong
