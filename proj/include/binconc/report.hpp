#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace binconc {

/// One JSON-lines record of a verification run:
/// {"suite", "case", "n", "k", "lhs", "rhs", "ok", "mode", "detail"}.
/// `n`/`k` are null when the check is not tied to a single (n, k).
struct ReportLine {
  std::string suite;
  std::string name;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  double lhs = 0;
  double rhs = 0;
  bool ok = false;
  bool exact = false;
  std::string detail;

  nlohmann::ordered_json json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["case"] = name;
    j["n"] = n ? nlohmann::ordered_json(*n) : nlohmann::ordered_json(nullptr);
    j["k"] = k ? nlohmann::ordered_json(*k) : nlohmann::ordered_json(nullptr);
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["ok"] = ok;
    j["mode"] = exact ? "exact" : "float";
    if (!detail.empty()) j["detail"] = detail;
    return j;
  }

  std::string jsonl() const { return json().dump(); }
};

}  // namespace binconc
