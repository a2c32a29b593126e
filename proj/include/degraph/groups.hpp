#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degraph/arithmetic.hpp"

namespace degraph {

enum class Family { psl2, suzuki, psl3, psu3, sporadic, alternating };

const char* to_string(Family family) noexcept;

/// Key into all group data. Families carry a parameter: q for PSL2/PSL3/PSU3,
/// q^2 = 2^(2m+1) for the Suzuki groups, n for the alternating groups.
/// Sporadic groups are named instead (upper case, e.g. "J1").
struct GroupSpec {
  Family family = Family::psl2;
  u64 parameter = 0;
  std::string name;

  static GroupSpec psl2(u64 q);
  static GroupSpec suzuki(u64 q_squared);
  static GroupSpec psl3(u64 q);
  static GroupSpec psu3(u64 q);
  static GroupSpec alternating(u64 n);
  static GroupSpec sporadic(std::string_view name);

  /// Command-line syntax: `psl2 125`, `suzuki 32`, `psl3 7`, `psu3 5`,
  /// `sporadic j1`, `alt 7`.
  static GroupSpec parse(std::string_view family, std::string_view parameter);

  /// "PSL2(64)", "Sz(8)", "A5", "J1", ...
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;
};

/// Resolves exceptional isomorphisms to one representative:
/// PSL2(4), PSL2(5) -> A5; PSL2(9) -> A6; PSL3(2) -> PSL2(7).
GroupSpec canonical(const GroupSpec& spec);

/// Sorted set of positive integers containing 1.
class DegreeSet {
 public:
  DegreeSet() : degrees_{1} {}
  explicit DegreeSet(std::vector<u64> degrees);

  const std::vector<u64>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  auto begin() const noexcept { return degrees_.begin(); }
  auto end() const noexcept { return degrees_.end(); }

  /// Union of the prime divisors of all degrees.
  PrimeSet primes() const;

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;
  std::string to_string() const;

 private:
  std::vector<u64> degrees_;
};

struct DegreeWithMultiplicity {
  u64 degree;
  u64 multiplicity;
  friend bool operator==(const DegreeWithMultiplicity&, const DegreeWithMultiplicity&) = default;
};

/// Irreducible character degrees of one group with multiplicities, as read
/// from the data directory. Construction enforces sum m*d^2 == order.
class DegreeTable {
 public:
  DegreeTable(std::string id, u64 order, std::vector<DegreeWithMultiplicity> degrees,
              std::map<std::string, std::vector<u64>> extras = {});

  /// Parses the line-oriented `key = value-list` format. `id` names the
  /// table in diagnostics.
  static DegreeTable parse(std::string_view text, std::string id);

  const std::string& id() const noexcept { return id_; }
  u64 order() const noexcept { return order_; }
  const std::vector<DegreeWithMultiplicity>& entries() const noexcept { return degrees_; }
  DegreeSet degree_set() const;

  /// Optional integer-list keys such as `maximal_indices`.
  const std::vector<u64>* extra(std::string_view key) const;

 private:
  std::string id_;
  u64 order_;
  std::vector<DegreeWithMultiplicity> degrees_;
  std::map<std::string, std::vector<u64>, std::less<>> extras_;
};

/// Degree tables bundled in `<data>/groups/*.txt`, keyed by file stem.
class GroupCatalog {
 public:
  GroupCatalog() = default;
  static GroupCatalog load(const std::filesystem::path& data_dir);
  /// Loads from the data directory configured at build time.
  static const GroupCatalog& bundled();

  void add(DegreeTable table);
  const DegreeTable* find(std::string_view id) const;
  const DegreeTable& at(std::string_view id) const;
  const std::map<std::string, DegreeTable, std::less<>>& tables() const noexcept {
    return tables_;
  }

  /// Table for the canonical form of `spec`, if one is bundled.
  const DegreeTable* table_for(const GroupSpec& spec) const;

  /// Sporadic names with a bundled table ("J1", "M11", ...).
  std::vector<std::string> sporadic_names() const;
  /// Every alternating/sporadic spec with a bundled table.
  std::vector<GroupSpec> bundled_specs() const;

 private:
  std::map<std::string, DegreeTable, std::less<>> tables_;
};

std::filesystem::path default_data_dir();

u64 group_order(const GroupSpec& spec, const GroupCatalog& catalog);

/// cd(S). PSL2 uses the closed formula; alternating, sporadic and the
/// exceptional cases with a bundled table use that table. Other families throw
/// Errc::unsupported_family.
DegreeSet character_degrees(const GroupSpec& spec, const GroupCatalog& catalog);

/// pi(S). For the Lie-type families this is the union of the prime sets of the
/// order's cyclotomic-style factors, so it never overflows for the supported
/// parameters.
PrimeSet prime_set_of_group(const GroupSpec& spec, const GroupCatalog& catalog);

enum class FourPrimeCase { case_r, case_mersenne, case_3t, none };

const char* to_string(FourPrimeCase c) noexcept;

/// Pattern match for PSL2(q) with |pi(S)| = 4:
///   case_r         q = r = max pi(S) is prime
///   case_mersenne  q = 2^s, s prime, 2^s - 1 = max pi(S) a Mersenne prime
///   case_3t        q = 3^t, t >= 5 prime
FourPrimeCase classify_four_prime_psl2(const GroupSpec& spec);

}  // namespace degraph
