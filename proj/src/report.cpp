#include "lck/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace lck {

namespace {

using Json = nlohmann::ordered_json;

Json check_json(const Check& c) {
  Json w = Json::object();
  for (const auto& [k, v] : c.witnesses) w[k] = v;
  return Json{{"name", c.name},
              {"statement", c.statement},
              {"verdict", to_string(c.verdict)},
              {"informational", c.informational},
              {"witnesses", w}};
}

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  return Json{{"command", r.command},
              {"inputs", {{"source", r.source}, {"structure", r.structure}, {"digest", r.digest}}},
              {"findings", r.lines},
              {"checks", checks},
              {"exit_code", r.exit_code}};
}

}  // namespace

void Report::finalize() {
  if (exit_code > 1) return;
  exit_code = std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.failed(); }) ? 1 : 0;
}

std::string Report::text() const {
  std::string out = "== " + command + " " + source;
  if (!structure.empty()) out += " [" + structure + "]";
  out += "\n";
  for (const auto& l : lines) out += "  " + l + "\n";
  for (const auto& c : checks) {
    out += "  [" + to_string(c.verdict) + "]" + (c.informational ? " (info) " : " ") + c.name + ": " + c.statement;
    if (!c.witnesses.empty()) {
      out += "  {";
      for (std::size_t k = 0; k < c.witnesses.size(); ++k)
        out += (k ? ", " : "") + c.witnesses[k].first + " = " + c.witnesses[k].second;
      out += "}";
    }
    out += "\n";
  }
  return out;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string reports_json(const std::vector<Report>& reports, int exit_code) {
  if (reports.size() == 1) return report_json(reports.front()).dump(2) + "\n";
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  const std::string cmd = reports.empty() ? "" : reports.front().command;
  return Json{{"command", cmd}, {"reports", arr}, {"exit_code", exit_code}}.dump(2) + "\n";
}

}  // namespace lck
