#pragma once

#include <cstdint>
#include <vector>

namespace ggp {

/// GF(p^n) as F_p[x]/(f), f the first monic primitive polynomial of degree n
/// when monic candidates are ordered by their low coefficients read as a
/// base-p number (constant term least significant). Elements are encoded the
/// same way, so 0 is zero, 1 is one and p is the class of x.
class FiniteField {
 public:
  FiniteField(std::uint32_t p, unsigned degree);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  std::uint64_t size() const { return size_; }
  /// Coefficients of f from the constant term up, leading 1 omitted.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Class of x, primitive by construction.
  std::uint32_t generator() const { return generator_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

 private:
  std::vector<std::uint32_t> decode(std::uint32_t a) const;
  std::uint32_t reduce(std::vector<std::uint32_t> c) const;
  bool has_full_order(std::uint32_t a) const;

  std::uint32_t p_;
  unsigned degree_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 0;
};

}  // namespace ggp
