#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ggp/exact.hpp"
#include "ggp/group_order.hpp"
#include "ggp/partition.hpp"

namespace ggp {

/// Type of a semisimple class of U_k(q): for each orbit size d of the map
/// x -> x^{-q}, the multiset (as a partition) of multiplicities carried by
/// the distinct orbits of that size.
struct ClassType {
  std::map<unsigned, Partition> assignment;

  unsigned total() const;
  bool empty() const { return assignment.empty(); }
  /// "d=1:2,1;d=2:1", or "-" for the empty type.
  std::string to_string() const;

  friend bool operator==(const ClassType&, const ClassType&) = default;
  friend bool operator<(const ClassType& a, const ClassType& b);
};

struct ClassFamily {
  ClassType class_type;
  ExactInt count;
};

/// Number of orbits of size exactly d of x -> x^{-q} on the multiplicative
/// group of the algebraic closure, by Möbius inversion of q^e - (-1)^e.
ExactInt orbit_count(unsigned d, std::uint64_t q);

/// All class types of total k with their class counts. With exclude_one the
/// orbit {1} is removed from the size-1 pool. k = 0 gives one empty family.
std::vector<ClassFamily> enumerate_class_types(unsigned k, std::uint64_t q, bool exclude_one);

/// Odd orbit size d with multiplicity m contributes U_m(q^d); even d
/// contributes GL_m(q^d).
FactoredOrder centralizer_order(const ClassType& type, std::uint64_t q);

/// Default cap on the number of field elements the census oracle may walk.
inline constexpr std::uint64_t kDefaultOracleLimit = 10'000'000;

/// kDefaultOracleLimit, or GGP_ORACLE_LIMIT from the environment when set.
std::uint64_t oracle_limit();

/// Orbit counts by size d = 1..d_max, obtained by walking F_{q^{2d}}^x as
/// powers of a primitive element and following x -> x^{-q} on field elements.
/// Throws DomainError("oracle range") when q^{2 d_max} exceeds the limit.
std::map<unsigned, ExactInt> brute_force_orbit_census(unsigned d_max, std::uint64_t q,
                                                      std::optional<std::uint64_t> limit = {});

}  // namespace ggp
