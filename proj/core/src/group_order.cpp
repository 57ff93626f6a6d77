#include "ggp/group_order.hpp"

#include <string>

#include "ggp/error.hpp"

namespace ggp {

ExactInt exact_divide(const ExactInt& numerator, const ExactInt& denominator, const char* context) {
  if (denominator == 0) throw InternalError(std::string(context) + " (division by zero)");
  ExactInt quotient;
  ExactInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) throw InternalError(context);
  return quotient;
}

FactoredOrder operator*(const FactoredOrder& a, const FactoredOrder& b) {
  if (a.base != b.base) throw InternalError("orders over different base fields");
  return {a.base, a.p_exponent + b.p_exponent, a.p_prime_part * b.p_prime_part};
}

FactoredOrder unitary_group_order(unsigned n, std::uint64_t q, unsigned extension_degree) {
  const ExactInt big_q = ipow(q, extension_degree);
  FactoredOrder order{q, std::uint64_t{extension_degree} * n * (n - (n > 0 ? 1 : 0)) / 2, 1};
  ExactInt power = 1;
  for (unsigned i = 1; i <= n; ++i) {
    power *= big_q;
    order.p_prime_part *= power - sign_power(i);
  }
  return order;
}

FactoredOrder general_linear_order(unsigned m, std::uint64_t q, unsigned extension_degree) {
  const ExactInt big_q = ipow(q, extension_degree);
  FactoredOrder order{q, std::uint64_t{extension_degree} * m * (m - (m > 0 ? 1 : 0)) / 2, 1};
  ExactInt power = 1;
  for (unsigned i = 1; i <= m; ++i) {
    power *= big_q;
    order.p_prime_part *= power - 1;
  }
  return order;
}

std::optional<std::uint64_t> characteristic(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return q;
  while (q % p == 0) q /= p;
  if (q != 1) return std::nullopt;
  return p;
}

void require_odd_prime_power(std::uint64_t q) {
  const auto p = characteristic(q);
  if (!p) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  if (*p == 2) throw DomainError("characteristic must be odd");
}

}  // namespace ggp
