#pragma once

#include <string>
#include <vector>

namespace superkit {

enum class CheckStatus { Pass, Fail, NotApplicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

/// One named verification step. `witness` is set for every failure (and
/// carries the unmet hypothesis for not_applicable).
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;

  bool passed() const { return status == CheckStatus::Pass; }
};

inline Check pass(std::string name) { return {std::move(name), CheckStatus::Pass, {}}; }
inline Check fail(std::string name, std::string witness) {
  return {std::move(name), CheckStatus::Fail, std::move(witness)};
}
inline Check not_applicable(std::string name, std::string reason) {
  return {std::move(name), CheckStatus::NotApplicable, std::move(reason)};
}
inline Check check_that(std::string name, bool ok, std::string witness) {
  return ok ? pass(std::move(name)) : fail(std::move(name), std::move(witness));
}

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

}  // namespace superkit
