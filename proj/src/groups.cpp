#include "degraph/groups.hpp"

#include <algorithm>
#include <cctype>
#include <bit>
#include <sstream>

#include "degraph/error.hpp"
#include "kv_format.hpp"

#ifndef DEGRAPH_DATA_DIR
#define DEGRAPH_DATA_DIR "data"
#endif

namespace degraph {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

PrimePowerForm require_prime_power(u64 q, u64 minimum, const char* family) {
  std::ostringstream msg;
  msg << family << ": parameter " << q;
  if (q < minimum) {
    msg << " must be a prime power >= " << minimum;
    throw Error(Errc::invalid_argument, msg.str());
  }
  auto pp = as_prime_power(q);
  if (!pp) {
    msg << " is not a prime power";
    throw Error(Errc::invalid_argument, msg.str());
  }
  return *pp;
}

u64 characteristic(const GroupSpec& spec) {
  return as_prime_power(spec.parameter)->prime;
}

// pi(S) for the Lie-type families, from the factors of the order.
PrimeSet lie_prime_set(const GroupSpec& spec) {
  const u64 q = spec.parameter;
  switch (spec.family) {
    case Family::psl2:
      return PrimeSet{characteristic(spec)} | prime_set(q - 1) | prime_set(q + 1);
    case Family::suzuki:
      return PrimeSet{2} | prime_set(q - 1) | prime_set(checked_add(checked_mul(q, q), 1));
    case Family::psl3:
      return PrimeSet{characteristic(spec)} | prime_set(q - 1) | prime_set(q + 1) |
             prime_set(checked_add(checked_mul(q, q), q + 1));
    case Family::psu3:
      return PrimeSet{characteristic(spec)} | prime_set(q - 1) | prime_set(q + 1) |
             prime_set(checked_add(checked_mul(q, q) - q, 1));
    default:
      break;
  }
  throw Error(Errc::unsupported_family, spec.to_string() + " is not a Lie-type family");
}

}  // namespace

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::psl2: return "psl2";
    case Family::suzuki: return "suzuki";
    case Family::psl3: return "psl3";
    case Family::psu3: return "psu3";
    case Family::sporadic: return "sporadic";
    case Family::alternating: return "alt";
  }
  return "?";
}

const char* to_string(FourPrimeCase c) noexcept {
  switch (c) {
    case FourPrimeCase::case_r: return "CASE_R";
    case FourPrimeCase::case_mersenne: return "CASE_MERSENNE";
    case FourPrimeCase::case_3t: return "CASE_3T";
    case FourPrimeCase::none: return "NONE";
  }
  return "?";
}

// --- GroupSpec ----------------------------------------------------------------

GroupSpec GroupSpec::psl2(u64 q) {
  require_prime_power(q, 4, "PSL2");
  return {Family::psl2, q, {}};
}

GroupSpec GroupSpec::suzuki(u64 q_squared) {
  // q^2 = 2^(2m+1) with m >= 1, i.e. an odd power of two from 8 upward.
  if (!is_power_of_two(q_squared) || q_squared < 8 ||
      (std::countr_zero(q_squared) % 2) == 0) {
    throw Error(Errc::invalid_argument, "Suzuki: parameter " + std::to_string(q_squared) +
                                            " must be 2^(2m+1) with m >= 1");
  }
  return {Family::suzuki, q_squared, {}};
}

GroupSpec GroupSpec::psl3(u64 q) {
  require_prime_power(q, 2, "PSL3");
  return {Family::psl3, q, {}};
}

GroupSpec GroupSpec::psu3(u64 q) {
  // PSU3(2) has order 72 and is solvable, so the family starts at q = 3.
  require_prime_power(q, 3, "PSU3");
  return {Family::psu3, q, {}};
}

GroupSpec GroupSpec::alternating(u64 n) {
  if (n < 5 || n > 8) {
    throw Error(Errc::invalid_argument,
                "alternating: degree " + std::to_string(n) + " outside the supported 5..8");
  }
  return {Family::alternating, n, {}};
}

GroupSpec GroupSpec::sporadic(std::string_view name) {
  auto n = upper(detail::trim(name));
  if (n.empty() || !std::all_of(n.begin(), n.end(), [](unsigned char c) {
        return std::isalnum(c) != 0;
      })) {
    throw Error(Errc::invalid_argument, "sporadic: bad group name `" + std::string(name) + "`");
  }
  return {Family::sporadic, 0, std::move(n)};
}

GroupSpec GroupSpec::parse(std::string_view family, std::string_view parameter) {
  const auto fam = lower(detail::trim(family));
  if (fam == "sporadic") return sporadic(parameter);

  static constexpr std::string_view known[] = {"psl2", "l2", "suzuki", "sz", "2b2", "psl3",
                                               "l3",   "psu3", "u3",  "alt", "a"};
  if (std::find(std::begin(known), std::end(known), fam) == std::end(known)) {
    throw Error(Errc::invalid_argument, "unknown group family `" + std::string(family) + "`");
  }
  const u64 value = detail::parse_u64(parameter, "group parameter");
  if (fam == "psl2" || fam == "l2") return psl2(value);
  if (fam == "suzuki" || fam == "sz" || fam == "2b2") return suzuki(value);
  if (fam == "psl3" || fam == "l3") return psl3(value);
  if (fam == "psu3" || fam == "u3") return psu3(value);
  if (fam == "alt" || fam == "a") return alternating(value);
  throw Error(Errc::invalid_argument, "unknown group family `" + std::string(family) + "`");
}

std::string GroupSpec::to_string() const {
  const auto p = std::to_string(parameter);
  switch (family) {
    case Family::psl2: return "PSL2(" + p + ")";
    case Family::suzuki: return "Sz(" + p + ")";
    case Family::psl3: return "PSL3(" + p + ")";
    case Family::psu3: return "PSU3(" + p + ")";
    case Family::alternating: return "A" + p;
    case Family::sporadic: return name;
  }
  return "?";
}

GroupSpec canonical(const GroupSpec& spec) {
  if (spec.family == Family::psl2) {
    if (spec.parameter == 4 || spec.parameter == 5) return GroupSpec::alternating(5);
    if (spec.parameter == 9) return GroupSpec::alternating(6);
  }
  if (spec.family == Family::psl3 && spec.parameter == 2) return GroupSpec::psl2(7);
  return spec;
}

// --- DegreeSet ----------------------------------------------------------------

DegreeSet::DegreeSet(std::vector<u64> degrees) {
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  if (degrees.empty() || degrees.front() != 1) {
    throw Error(Errc::invalid_argument, "degree set must contain 1 and only positive degrees");
  }
  degrees_ = std::move(degrees);
}

PrimeSet DegreeSet::primes() const {
  PrimeSet out;
  for (u64 d : degrees_) out |= prime_set(d);
  return out;
}

std::string DegreeSet::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < degrees_.size(); ++i) os << (i ? " " : "") << degrees_[i];
  return os.str();
}

// --- DegreeTable --------------------------------------------------------------

DegreeTable::DegreeTable(std::string id, u64 order, std::vector<DegreeWithMultiplicity> degrees,
                         std::map<std::string, std::vector<u64>> extras)
    : id_(std::move(id)), order_(order), degrees_(std::move(degrees)) {
  for (auto& [k, v] : extras) extras_.emplace(k, std::move(v));

  std::sort(degrees_.begin(), degrees_.end(),
            [](const auto& a, const auto& b) { return a.degree < b.degree; });
  bool has_trivial = false;
  u64 sum = 0;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    const auto& [d, m] = degrees_[i];
    if (d == 0 || m == 0) {
      throw Error(Errc::parse_error, id_ + ": degrees and multiplicities must be positive");
    }
    if (i > 0 && degrees_[i - 1].degree == d) {
      throw Error(Errc::parse_error, id_ + ": degree " + std::to_string(d) + " listed twice");
    }
    has_trivial |= d == 1;
    sum = checked_add(sum, checked_mul(m, checked_mul(d, d)));
  }
  if (!has_trivial) throw Error(Errc::parse_error, id_ + ": degree 1 missing");
  if (sum != order_) {
    throw Error(Errc::parse_error, id_ + ": sum of m*d^2 is " + std::to_string(sum) +
                                       " but order is " + std::to_string(order_));
  }
}

DegreeTable DegreeTable::parse(std::string_view text, std::string id) {
  std::optional<u64> order;
  std::vector<DegreeWithMultiplicity> degrees;
  bool saw_degrees = false;
  std::map<std::string, std::vector<u64>> extras;

  for (const auto& kv : detail::parse_key_values(text, id)) {
    const std::string where = id + ":" + std::to_string(kv.line);
    if (kv.key == "order") {
      order = detail::parse_u64(kv.value, where);
    } else if (kv.key == "degrees") {
      saw_degrees = true;
      for (const auto& item : detail::split_list(kv.value)) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
          degrees.push_back({detail::parse_u64(item, where), 1});
        } else {
          degrees.push_back({detail::parse_u64(std::string_view(item).substr(0, colon), where),
                             detail::parse_u64(std::string_view(item).substr(colon + 1), where)});
        }
      }
    } else {
      auto& list = extras[kv.key];
      for (const auto& item : detail::split_list(kv.value)) {
        list.push_back(detail::parse_u64(item, where));
      }
    }
  }
  if (!order) throw Error(Errc::parse_error, id + ": missing `order`");
  if (!saw_degrees) throw Error(Errc::parse_error, id + ": missing `degrees`");
  return DegreeTable(std::move(id), *order, std::move(degrees), std::move(extras));
}

DegreeSet DegreeTable::degree_set() const {
  std::vector<u64> ds;
  for (const auto& e : degrees_) ds.push_back(e.degree);
  return DegreeSet(std::move(ds));
}

const std::vector<u64>* DegreeTable::extra(std::string_view key) const {
  auto it = extras_.find(key);
  return it == extras_.end() ? nullptr : &it->second;
}

// --- GroupCatalog -------------------------------------------------------------

std::filesystem::path default_data_dir() { return DEGRAPH_DATA_DIR; }

GroupCatalog GroupCatalog::load(const std::filesystem::path& data_dir) {
  const auto dir = data_dir / "groups";
  if (!std::filesystem::is_directory(dir)) {
    throw Error(Errc::io_error, "group data directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  GroupCatalog catalog;
  for (const auto& f : files) {
    catalog.add(DegreeTable::parse(detail::read_file(f), f.stem().string()));
  }
  return catalog;
}

const GroupCatalog& GroupCatalog::bundled() {
  static const GroupCatalog catalog = load(default_data_dir());
  return catalog;
}

void GroupCatalog::add(DegreeTable table) {
  auto id = table.id();
  if (!tables_.emplace(id, std::move(table)).second) {
    throw Error(Errc::invalid_argument, "duplicate degree table `" + id + "`");
  }
}

const DegreeTable* GroupCatalog::find(std::string_view id) const {
  auto it = tables_.find(id);
  return it == tables_.end() ? nullptr : &it->second;
}

const DegreeTable& GroupCatalog::at(std::string_view id) const {
  if (const auto* t = find(id)) return *t;
  throw Error(Errc::invalid_argument, "no bundled degree table `" + std::string(id) + "`");
}

const DegreeTable* GroupCatalog::table_for(const GroupSpec& spec) const {
  const auto c = canonical(spec);
  switch (c.family) {
    case Family::alternating: return find("a" + std::to_string(c.parameter));
    case Family::sporadic: return find(lower(c.name));
    case Family::psl3: return c.parameter == 4 ? find("l3_4") : nullptr;
    case Family::suzuki: return c.parameter == 8 ? find("sz8") : nullptr;
    default: return nullptr;
  }
}

std::vector<std::string> GroupCatalog::sporadic_names() const {
  std::vector<std::string> out;
  for (const auto& [id, table] : tables_) {
    if (id.empty() || id.find('_') != std::string::npos) continue;
    if (id[0] == 'a' && id.size() == 2 && std::isdigit(static_cast<unsigned char>(id[1]))) continue;
    if (id == "sz8") continue;
    out.push_back(upper(id));
  }
  return out;
}

std::vector<GroupSpec> GroupCatalog::bundled_specs() const {
  std::vector<GroupSpec> out;
  for (u64 n = 5; n <= 8; ++n) {
    if (find("a" + std::to_string(n))) out.push_back(GroupSpec::alternating(n));
  }
  for (const auto& name : sporadic_names()) out.push_back(GroupSpec::sporadic(name));
  return out;
}

// --- group data ---------------------------------------------------------------

u64 group_order(const GroupSpec& spec, const GroupCatalog& catalog) {
  const u64 q = spec.parameter;
  switch (spec.family) {
    case Family::psl2: {
      const u64 d = gcd(2, q - 1);
      return checked_mul(q, checked_mul((q - 1) / d, q + 1));
    }
    case Family::psl3: {
      const u64 d = gcd(3, q - 1);
      const u64 q3 = checked_pow(q, 3);
      return checked_mul(checked_mul(q3, q3 - 1),
                         checked_mul((q - 1) / d, q + 1));
    }
    case Family::psu3: {
      const u64 d = gcd(3, q + 1);
      const u64 q3 = checked_pow(q, 3);
      return checked_mul(checked_mul(q3, checked_add(q3, 1) / d),
                         checked_mul(q - 1, q + 1));
    }
    case Family::suzuki: {
      const u64 q4 = checked_mul(q, q);
      return checked_mul(checked_mul(q4, checked_add(q4, 1)), q - 1);
    }
    case Family::alternating: {
      u64 f = 1;
      for (u64 i = 3; i <= q; ++i) f = checked_mul(f, i);
      return f;
    }
    case Family::sporadic: {
      if (const auto* t = catalog.table_for(spec)) return t->order();
      throw Error(Errc::invalid_argument, "unknown sporadic group `" + spec.name + "`");
    }
  }
  throw Error(Errc::invalid_argument, "bad group spec");
}

DegreeSet character_degrees(const GroupSpec& spec, const GroupCatalog& catalog) {
  if (const auto* t = catalog.table_for(spec)) return t->degree_set();

  const auto c = canonical(spec);
  if (c.family == Family::psl2) {
    const u64 q = c.parameter;
    if (q % 2 == 0) return DegreeSet({1, q - 1, q, q + 1});
    // (q + eps)/2 with eps = (-1)^((q-1)/2).
    const u64 half = ((q - 1) / 2) % 2 == 0 ? (q + 1) / 2 : (q - 1) / 2;
    return DegreeSet({1, q - 1, q, q + 1, half});
  }
  if (c.family == Family::alternating || c.family == Family::sporadic) {
    throw Error(Errc::invalid_argument, "no bundled degree table for " + c.to_string());
  }
  throw Error(Errc::unsupported_family,
              "character degrees of " + spec.to_string() + " are not available");
}

PrimeSet prime_set_of_group(const GroupSpec& spec, const GroupCatalog& catalog) {
  if (spec.family == Family::alternating || spec.family == Family::sporadic) {
    return prime_set(group_order(spec, catalog));
  }
  return lie_prime_set(spec);
}

FourPrimeCase classify_four_prime_psl2(const GroupSpec& spec) {
  if (spec.family != Family::psl2) {
    throw Error(Errc::precondition, "classify_four_prime_psl2 needs a PSL2 spec, got " +
                                        spec.to_string());
  }
  const auto pi = lie_prime_set(spec);
  if (pi.size() != 4) {
    throw Error(Errc::precondition, spec.to_string() + " has |pi(S)| = " +
                                        std::to_string(pi.size()) + ", expected 4");
  }
  const u64 q = spec.parameter;
  const u64 largest = pi.primes().back();
  const auto [p, f] = *as_prime_power(q);

  if (f == 1 && q == largest) return FourPrimeCase::case_r;
  if (p == 2 && f >= 2 && is_mersenne_prime_exponent(f) && (q - 1) == largest) {
    return FourPrimeCase::case_mersenne;
  }
  if (p == 3 && f >= 5 && is_prime(f) && pi.contains(2) && pi.contains(3)) {
    return FourPrimeCase::case_3t;
  }
  return FourPrimeCase::none;
}

}  // namespace degraph
