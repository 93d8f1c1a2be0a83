#pragma once

/// @file report.hpp
/// Machine-readable run reports. A report is deterministic for a given
/// input: checks are sorted by id, all quantities are canonical rational
/// strings, and input bytes are fingerprinted with 64-bit FNV-1a so that
/// re-runs can be matched to their inputs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polarity/version.hpp"

namespace polarity {

/// 64-bit FNV-1a over raw bytes.
inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char ch : bytes) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ull;
  }
  return h;
}

/// The digest as 16 lowercase hex digits.
inline std::string fnv1a_hex(std::string_view bytes) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

struct CheckResult {
  std::string id;      ///< stable sort key, e.g. "curl.axl-skew-grad"
  std::string anchor;  ///< the identity spelled out in words/symbols
  bool passed = false;
  std::string lhs;     ///< exact value (canonical string) on the left
  std::string rhs;     ///< exact value on the right
  std::string detail;  ///< trial counts, counterexample index, notes
};

inline CheckResult check_pass(std::string id, std::string anchor, std::string detail = "") {
  return CheckResult{std::move(id), std::move(anchor), true, "", "", std::move(detail)};
}

inline CheckResult check_fail(std::string id, std::string anchor, std::string lhs, std::string rhs,
                              std::string detail = "") {
  return CheckResult{std::move(id),  std::move(anchor), false,
                     std::move(lhs), std::move(rhs),    std::move(detail)};
}

struct RunReport {
  std::string command;                       ///< "verify", "analyze" or "scenario"
  std::optional<std::uint64_t> seed;         ///< present for seeded runs
  std::optional<std::string> input_digest;   ///< FNV-1a hex of the input bytes
  nlohmann::ordered_json results;            ///< command-specific payload
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    if (seed) j["seed"] = *seed;
    if (input_digest) j["input_digest"] = *input_digest;
    if (!results.is_null()) j["results"] = results;
    std::vector<const CheckResult*> order;
    order.reserve(checks.size());
    for (const CheckResult& c : checks) order.push_back(&c);
    std::sort(order.begin(), order.end(),
              [](const CheckResult* a, const CheckResult* b) { return a->id < b->id; });
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckResult* c : order) {
      nlohmann::ordered_json jc;
      jc["id"] = c->id;
      jc["anchor"] = c->anchor;
      jc["status"] = c->passed ? "pass" : "fail";
      if (!c->lhs.empty()) jc["lhs"] = c->lhs;
      if (!c->rhs.empty()) jc["rhs"] = c->rhs;
      if (!c->detail.empty()) jc["detail"] = c->detail;
      arr.push_back(std::move(jc));
    }
    j["checks"] = std::move(arr);
    j["passed"] = all_passed();
    return j;
  }

  std::string to_string() const { return to_json().dump(2) + "\n"; }
};

}  // namespace polarity
