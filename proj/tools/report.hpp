#pragma once

#include <chrono>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hypercomp::cli {

enum class Status { Pass, Fail, Skipped };

struct Verdict {
  std::string topic;
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

// Collects verdicts for one subcommand. Output is a pure function of the
// recorded data; wall-clock timings appear only when requested.
class Report {
 public:
  Report(std::string task, std::string domain) : task_(std::move(task)), domain_(std::move(domain)) {}

  nlohmann::ordered_json& inputs() { return inputs_; }
  nlohmann::ordered_json& results() { return results_; }

  void add(const std::string& topic, const std::string& name, bool passed, const std::string& detail = "") {
    verdicts_.push_back({topic, name, passed ? Status::Pass : Status::Fail, detail});
  }
  void skip(const std::string& topic, const std::string& name, const std::string& reason) {
    verdicts_.push_back({topic, name, Status::Skipped, reason});
  }
  void note(const std::string& text) { notes_.push_back(text); }
  void timing(const std::string& label, double ms) { timings_.emplace_back(label, ms); }

  bool ok() const {
    for (const auto& v : verdicts_)
      if (v.status == Status::Fail) return false;
    return true;
  }
  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& v : verdicts_) n += v.status == s;
    return n;
  }

  nlohmann::ordered_json to_json(bool with_timings) const;
  void write_markdown(std::ostream& out, bool with_timings) const;

 private:
  std::string task_, domain_;
  nlohmann::ordered_json inputs_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json results_ = nlohmann::ordered_json::object();
  std::vector<Verdict> verdicts_;
  std::vector<std::string> notes_;
  std::vector<std::pair<std::string, double>> timings_;
};

// Records the elapsed time of a scope into a report.
class ScopedTimer {
 public:
  ScopedTimer(Report& r, std::string label)
      : r_(r), label_(std::move(label)), t0_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() {
    r_.timing(label_, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count());
  }

 private:
  Report& r_;
  std::string label_;
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace hypercomp::cli
