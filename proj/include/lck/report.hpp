#pragma once

#include "lck/check.hpp"

#include <string>
#include <vector>

namespace lck {

/// Outcome of one command on one input.
struct Report {
  std::string command;
  std::string source;     // "builtin:u2" or a file path
  std::string structure;  // structure label, empty when not applicable
  std::string digest;     // FNV-1a of the canonical serialization of the input
  std::vector<std::string> lines;  // human-readable findings, printed before the checks
  std::vector<Check> checks;
  int exit_code = 0;

  /// 0 when no non-informational check failed, else 1. Codes above 1 are kept.
  void finalize();
  std::string text() const;
};

/// 64-bit FNV-1a, 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

/// One report as an object, several as {"command", "reports": [...], "exit_code"}.
std::string reports_json(const std::vector<Report>& reports, int exit_code);

}  // namespace lck
