#pragma once

#include <cstdint>
#include <optional>

#include "ggp/exact.hpp"

namespace ggp {

/// A group order split as base^p_exponent * p_prime_part, where base is the
/// field size q of the ambient unitary group.
struct FactoredOrder {
  std::uint64_t base = 2;
  std::uint64_t p_exponent = 0;
  ExactInt p_prime_part = 1;

  ExactInt p_part() const { return ipow(base, p_exponent); }
  ExactInt total() const { return p_part() * p_prime_part; }

  /// True when p does not divide the p'-part.
  bool prime_part_coprime_to(std::uint64_t p) const { return p_prime_part % p != 0; }

  friend bool operator==(const FactoredOrder&, const FactoredOrder&) = default;
};

/// Product of orders over the same base.
FactoredOrder operator*(const FactoredOrder& a, const FactoredOrder& b);

/// The trivial group, order 1.
inline FactoredOrder trivial_order(std::uint64_t q) { return {q, 0, 1}; }

/// |U_n(q^d)| = Q^{n(n-1)/2} prod_{i=1..n} (Q^i - (-1)^i) with Q = q^d. The
/// p-exponent is counted in base q.
FactoredOrder unitary_group_order(unsigned n, std::uint64_t q, unsigned extension_degree = 1);

/// |GL_m(q^d)| = Q^{m(m-1)/2} prod_{i=1..m} (Q^i - 1) with Q = q^d, again in base q.
FactoredOrder general_linear_order(unsigned m, std::uint64_t q, unsigned extension_degree = 1);

/// The prime p with q = p^f, or nullopt when q is not a prime power.
std::optional<std::uint64_t> characteristic(std::uint64_t q);

/// Throws DomainError unless q is an odd prime power.
void require_odd_prime_power(std::uint64_t q);

}  // namespace ggp
