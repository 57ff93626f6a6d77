#include "ggp/finite_field.hpp"

#include <string>

#include "ggp/error.hpp"

namespace ggp {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned degree) : p_(p), degree_(degree), size_(1) {
  if (p < 2 || prime_factors(p).size() != 1 || prime_factors(p).front() != p)
    throw DomainError("field characteristic must be prime");
  if (degree == 0) throw DomainError("field degree must be positive");
  for (unsigned i = 0; i < degree; ++i) {
    size_ *= p;
    if (size_ > 0xFFFFFFFFULL) throw DomainError("field too large for the element encoding");
  }
  // Scan monic candidates; the first whose root class has order p^n - 1 is
  // primitive, hence irreducible.
  for (std::uint64_t code = 1; code < size_; ++code) {
    modulus_ = decode(static_cast<std::uint32_t>(code));
    if (modulus_[0] == 0) continue;
    generator_ = reduce({0, 1});
    if (has_full_order(generator_)) return;
  }
  throw InternalError("no primitive polynomial of degree " + std::to_string(degree));
}

std::vector<std::uint32_t> FiniteField::decode(std::uint32_t a) const {
  std::vector<std::uint32_t> c(degree_, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint32_t FiniteField::reduce(std::vector<std::uint32_t> c) const {
  // x^n = -(f_0 + f_1 x + ... + f_{n-1} x^{n-1})
  for (std::size_t top = c.size(); top-- > degree_;) {
    const std::uint32_t lead = c[top] % p_;
    c[top] = 0;
    if (lead == 0) continue;
    const std::size_t shift = top - degree_;
    for (unsigned i = 0; i < degree_; ++i)
      c[shift + i] = static_cast<std::uint32_t>(
          (c[shift + i] + std::uint64_t{p_ - lead} * modulus_[i]) % p_);
  }
  std::uint32_t out = 0;
  for (std::size_t i = std::min<std::size_t>(c.size(), degree_); i-- > 0;) out = out * p_ + c[i] % p_;
  return out;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  const auto x = decode(a);
  const auto y = decode(b);
  std::vector<std::uint32_t> s(degree_);
  for (unsigned i = 0; i < degree_; ++i) s[i] = (x[i] + y[i]) % p_;
  return reduce(std::move(s));
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  const auto x = decode(a);
  const auto y = decode(b);
  std::vector<std::uint32_t> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
  }
  return reduce(std::move(prod));
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    e >>= 1U;
    if (e != 0) a = mul(a, a);
  }
  return result;
}

bool FiniteField::has_full_order(std::uint32_t a) const {
  const std::uint64_t order = size_ - 1;
  if (a == 0 || pow(a, order) != 1) return false;
  for (std::uint64_t r : prime_factors(order))
    if (pow(a, order / r) == 1) return false;
  return true;
}

}  // namespace ggp
