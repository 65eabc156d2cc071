#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lck {

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);

/// One named predicate evaluated exactly. `statement` is the identity being
/// tested; witnesses are exact values rendered as text.
struct Check {
  std::string name;
  std::string statement;
  Verdict verdict = Verdict::Pass;
  bool informational = false;
  std::vector<std::pair<std::string, std::string>> witnesses;

  bool failed() const { return verdict == Verdict::Fail && !informational; }
};

inline Check make_check(std::string name, std::string statement, bool ok) {
  return Check{std::move(name), std::move(statement), ok ? Verdict::Pass : Verdict::Fail, false, {}};
}

}  // namespace lck
