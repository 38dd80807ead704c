#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sumsetlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string summary;                 // aggregate facts, e.g. how many hypotheses held
  std::vector<std::string> failure_log;  // first few failures, by case id

  bool pass() const noexcept { return failures == 0 && cases > 0; }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::optional<std::size_t> cases_override;
  std::vector<CriterionResult> criteria;

  bool pass() const noexcept;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  /// Replaces the per-criterion case count of every randomized criterion.
  std::optional<std::size_t> cases;
  /// 0: SUMSETLAB_THREADS if set, otherwise hardware concurrency.
  unsigned threads = 0;
  /// Empty: all criteria 1..11.
  std::vector<int> only;
};

inline constexpr int kCriterionCount = 11;

SuiteReport run_suite(const SuiteOptions& opts = {});

/// One line per criterion, e.g. "criterion 3: PASS ...".
std::string format_line(const CriterionResult& r);
std::string format_text(const SuiteReport& r);
nlohmann::json to_json(const SuiteReport& r);

/// Worker count after applying SUMSETLAB_THREADS.
unsigned resolve_threads(unsigned requested);

}  // namespace sumsetlab
