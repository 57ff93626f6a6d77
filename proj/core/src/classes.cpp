#include "ggp/classes.hpp"

#include <cstdlib>
#include <string>

#include "ggp/error.hpp"
#include "ggp/finite_field.hpp"

namespace ggp {

unsigned ClassType::total() const {
  unsigned k = 0;
  for (const auto& [d, mults] : assignment) k += d * mults.size();
  return k;
}

std::string ClassType::to_string() const {
  if (assignment.empty()) return "-";
  std::string out;
  for (const auto& [d, mults] : assignment) {
    if (!out.empty()) out += ';';
    out += "d=" + std::to_string(d) + ":" + mults.to_string();
  }
  return out;
}

bool operator<(const ClassType& a, const ClassType& b) {
  auto ia = a.assignment.begin();
  auto ib = b.assignment.begin();
  for (; ia != a.assignment.end() && ib != b.assignment.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    // More weight on the smaller orbit size first.
    if (ia->second.size() != ib->second.size()) return ia->second.size() > ib->second.size();
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.assignment.end() && ib != b.assignment.end();
}

namespace {

int mobius(unsigned n) {
  int sign = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

ExactInt falling_factorial(const ExactInt& n, unsigned k) {
  ExactInt out = 1;
  for (unsigned i = 0; i < k; ++i) out *= n - i;
  return out;
}

ExactInt factorial(unsigned k) {
  ExactInt out = 1;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

/// Ways to hand the multiplicities in `mults` to distinct orbits drawn from a
/// pool of `pool` orbits: pool!/((pool - parts)! prod_v (#v)!).
ExactInt placements(const ExactInt& pool, const Partition& mults) {
  if (pool < mults.length()) return 0;
  ExactInt ways = falling_factorial(pool, static_cast<unsigned>(mults.length()));
  const auto parts = mults.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    ways /= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return ways;
}

void collect_types(unsigned d, unsigned remaining, ClassType& current, std::vector<ClassType>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (d > remaining) return;
  for (unsigned mass = remaining / d; mass >= 1; --mass) {
    for (Partition& mults : partitions_of(mass)) {
      current.assignment[d] = std::move(mults);
      collect_types(d + 1, remaining - d * mass, current, out);
    }
    current.assignment.erase(d);
  }
  collect_types(d + 1, remaining, current, out);
}

}  // namespace

ExactInt orbit_count(unsigned d, std::uint64_t q) {
  if (d == 0) throw DomainError("orbit size must be positive");
  ExactInt fixed_sum = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(d / e);
    if (mu == 0) continue;
    fixed_sum += mu * (ipow(q, e) - sign_power(e));
  }
  return exact_divide(fixed_sum, d, "orbit count is not an integer");
}

std::vector<ClassFamily> enumerate_class_types(unsigned k, std::uint64_t q, bool exclude_one) {
  if (q < 2) throw DomainError("q must be at least 2");
  std::vector<ClassType> types;
  ClassType scratch;
  collect_types(1, k, scratch, types);

  std::vector<ClassFamily> families;
  for (ClassType& type : types) {
    ExactInt count = 1;
    for (const auto& [d, mults] : type.assignment) {
      ExactInt pool = orbit_count(d, q);
      if (d == 1 && exclude_one) pool -= 1;
      count *= placements(pool, mults);
      if (count == 0) break;
    }
    if (count > 0) families.push_back({std::move(type), std::move(count)});
  }
  return families;
}

FactoredOrder centralizer_order(const ClassType& type, std::uint64_t q) {
  FactoredOrder order = trivial_order(q);
  for (const auto& [d, mults] : type.assignment) {
    for (unsigned m : mults.parts()) {
      order = order * (d % 2 == 1 ? unitary_group_order(m, q, d) : general_linear_order(m, q, d));
    }
  }
  return order;
}

std::uint64_t oracle_limit() {
  if (const char* env = std::getenv("GGP_ORACLE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultOracleLimit;
}

std::map<unsigned, ExactInt> brute_force_orbit_census(unsigned d_max, std::uint64_t q,
                                                      std::optional<std::uint64_t> limit) {
  if (d_max == 0) throw DomainError("d_max must be positive");
  const auto p = characteristic(q);
  if (!p) throw DomainError("q must be a prime power");
  unsigned f = 0;
  for (std::uint64_t r = q; r > 1; r /= *p) ++f;

  const std::uint64_t cap = limit.value_or(oracle_limit());
  if (ipow(q, 2 * std::uint64_t{d_max}) > cap) throw DomainError("oracle range");

  std::map<unsigned, ExactInt> census;
  for (unsigned d = 1; d <= d_max; ++d) {
    // Every orbit of exact size d lies in F_{q^{2d}}.
    const FiniteField field(static_cast<std::uint32_t>(*p), 2 * d * f);
    const std::uint64_t units = field.size() - 1;

    // Walk the powers of the generator; log[y] = i with y = g^i.
    std::vector<std::uint32_t> log(field.size(), 0);
    std::vector<std::uint32_t> power_of(units);
    std::uint32_t y = 1;
    for (std::uint64_t i = 0; i < units; ++i) {
      power_of[i] = y;
      log[y] = static_cast<std::uint32_t>(i);
      y = field.mul(y, field.generator());
    }
    if (y != 1) throw InternalError("generator order mismatch in census field");

    auto sigma = [&](std::uint32_t x) {
      const std::uint32_t xq = field.pow(x, q);
      return power_of[(units - log[xq]) % units];
    };

    std::vector<bool> seen(field.size(), false);
    ExactInt orbits = 0;
    for (std::uint64_t i = 0; i < units; ++i) {
      const std::uint32_t start = power_of[i];
      if (seen[start]) continue;
      unsigned length = 0;
      std::uint32_t x = start;
      do {
        seen[x] = true;
        x = sigma(x);
        ++length;
      } while (x != start);
      if (length == d) ++orbits;
    }
    census[d] = orbits;
  }
  return census;
}

}  // namespace ggp
