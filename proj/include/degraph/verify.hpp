#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "degraph/arithmetic.hpp"
#include "degraph/enumerate.hpp"
#include "degraph/groups.hpp"

namespace degraph {

struct SweepBounds {
  u64 psl2_max_q = 10000;
  u64 suzuki_max_q_squared = 32768;  // 2^15
  u64 psl3_max_q = 200;
  u64 psu3_max_q = 200;
  std::size_t product_trials = 1000;
  u64 seed = 0x5eed;

  /// Throws Errc::invalid_argument when a bound is outside what the checkers
  /// can evaluate without overflow.
  void validate() const;

  /// Overrides from `key=value,...` with keys psl2, suzuki, psl3, psu3,
  /// trials, seed.
  static SweepBounds parse(std::string_view text, SweepBounds base);
  static SweepBounds parse(std::string_view text) { return parse(text, SweepBounds{}); }
};

enum class Status { pass, fail, skipped };
const char* to_string(Status s) noexcept;

struct Outcome {
  Status status = Status::pass;
  /// Summary on success; on failure a witness that reproduces it.
  std::string detail;
};

struct VerifyContext {
  const SweepBounds& bounds;
  const GroupCatalog& groups;
  const GraphCatalog& graphs;
};

struct Claim {
  std::string id;
  std::string description;
  /// "figure-transcription" marks claims that read hand-transcribed drawings
  /// from the graph catalog.
  std::vector<std::string> tags;
  std::function<Outcome(const VerifyContext&)> check;
};

struct ClaimResult {
  std::string id;
  Status status;
  std::string detail;
  std::chrono::duration<double> elapsed;
  std::vector<std::string> tags;
};

struct Report {
  SweepBounds bounds;
  std::vector<ClaimResult> claims;

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
};

/// Registered claims, in report order.
const std::vector<Claim>& registered_claims();

/// Runs every claim on up to `jobs` threads; the report is in registry order
/// regardless of scheduling. A claim that throws is reported as a failure.
Report run_all(const SweepBounds& bounds, unsigned jobs = 1,
               const GroupCatalog& groups = GroupCatalog::bundled(),
               const GraphCatalog& graphs = GraphCatalog::bundled());

/// Throws Errc::unknown_claim for an unregistered id.
ClaimResult run_one(std::string_view id, const SweepBounds& bounds,
                    const GroupCatalog& groups = GroupCatalog::bundled(),
                    const GraphCatalog& graphs = GraphCatalog::bundled());

nlohmann::json to_json(const Report& report);
std::string to_table(const Report& report);

}  // namespace degraph
