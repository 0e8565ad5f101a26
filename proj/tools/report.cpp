#include "report.hpp"

#include <algorithm>
#include <iomanip>

#ifndef HYPERCOMP_VERSION
#define HYPERCOMP_VERSION "unknown"
#endif

namespace hypercomp::cli {

namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

const char* status_tag(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skipped:
      return "SKIP";
  }
  return "?";
}

}  // namespace

nlohmann::ordered_json Report::to_json(bool with_timings) const {
  nlohmann::ordered_json j;
  j["task"] = task_;
  j["version"] = HYPERCOMP_VERSION;
  j["domain"] = domain_;
  j["inputs"] = inputs_;
  j["verdict"] = ok() ? "pass" : "fail";
  j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skipped", count(Status::Skipped)}};
  auto checks = nlohmann::ordered_json::array();
  for (const auto& v : verdicts_) {
    nlohmann::ordered_json c;
    c["topic"] = v.topic;
    c["name"] = v.name;
    c["status"] = status_name(v.status);
    if (!v.detail.empty()) c["detail"] = v.detail;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  if (!results_.empty()) j["results"] = results_;
  if (!notes_.empty()) j["notes"] = notes_;
  if (with_timings) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [label, ms] : timings_) t[label] = ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

void Report::write_markdown(std::ostream& out, bool with_timings) const {
  out << "# hypercomp " << task_ << "\n\n";
  out << "- version: " << HYPERCOMP_VERSION << "\n";
  out << "- coefficient domain: " << domain_ << "\n";
  for (const auto& [k, v] : inputs_.items()) out << "- " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  out << "- verdict: " << (ok() ? "pass" : "fail") << " (" << count(Status::Pass) << " passed, " << count(Status::Fail)
      << " failed, " << count(Status::Skipped) << " skipped)\n";

  // Topics in order of first appearance.
  std::vector<std::string> topics;
  for (const auto& v : verdicts_)
    if (std::find(topics.begin(), topics.end(), v.topic) == topics.end()) topics.push_back(v.topic);
  for (const auto& t : topics) {
    out << "\n## " << t << "\n\n";
    for (const auto& v : verdicts_) {
      if (v.topic != t) continue;
      out << "- [" << status_tag(v.status) << "] " << v.name;
      if (!v.detail.empty()) out << ": " << v.detail;
      out << "\n";
    }
  }
  if (!results_.empty()) {
    out << "\n## Results\n\n";
    for (const auto& [k, v] : results_.items()) {
      if (v.is_array() && !v.empty() && v.front().is_string()) {
        out << "- " << k << ":\n";
        for (const auto& s : v) out << "  - `" << s.get<std::string>() << "`\n";
      } else {
        out << "- " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  }
  if (!notes_.empty()) {
    out << "\n## Notes\n\n";
    for (const auto& n : notes_) out << "- " << n << "\n";
  }
  if (with_timings && !timings_.empty()) {
    out << "\n## Timings\n\n";
    for (const auto& [label, ms] : timings_)
      out << "- " << label << ": " << std::fixed << std::setprecision(1) << ms << " ms\n";
  }
}

}  // namespace hypercomp::cli
