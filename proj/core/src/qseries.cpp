#include "ggp/qseries.hpp"

#include "ggp/error.hpp"

namespace ggp {

ExactInt unipotent_degree(const Partition& lambda, std::uint64_t q) {
  const ExactInt t = -ExactInt(q);
  const Partition columns = transpose(lambda);
  const auto rows = lambda.parts();

  std::uint64_t weighted = 0;  // n(λ) = sum (i-1) λ_i
  for (std::size_t i = 0; i < rows.size(); ++i) weighted += i * rows[i];

  ExactInt numerator = ipow(t, weighted);
  for (unsigned i = 1; i <= lambda.size(); ++i) numerator *= ipow(t, i) - 1;

  ExactInt denominator = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (unsigned j = 0; j < rows[i]; ++j) {
      const unsigned arm = rows[i] - j - 1;
      const unsigned leg = columns.part_at(j + 1) - static_cast<unsigned>(i) - 1;
      denominator *= ipow(t, arm + leg + 1) - 1;
    }
  }
  const ExactInt degree = exact_divide(numerator, denominator, "hook formula divisibility violated");
  return abs(degree);
}

ExactInt regular_character_degree(const ClassType& type, unsigned k, std::uint64_t q) {
  if (type.total() != k)
    throw DomainError("class type of size " + std::to_string(type.total()) +
                      " does not belong to U_" + std::to_string(k));
  const FactoredOrder centralizer = centralizer_order(type, q);
  const ExactInt index = exact_divide(unitary_group_order(k, q).p_prime_part,
                                      centralizer.p_prime_part,
                                      "centralizer order does not divide the group order");
  return index * centralizer.p_part();
}

ExactInt lusztig_induction_degree(const FactoredOrder& ambient,
                                  std::span<const FactoredOrder> levi_factors,
                                  std::span<const ExactInt> inner_degrees) {
  ExactInt levi = 1;
  for (const FactoredOrder& factor : levi_factors) levi *= factor.p_prime_part;
  ExactInt index;
  ExactInt remainder;
  boost::multiprecision::divide_qr(ambient.p_prime_part, levi, index, remainder);
  if (remainder != 0) throw DomainError("Levi is not a rational Levi of the ambient group");
  for (const ExactInt& d : inner_degrees) index *= d;
  return index;
}

}  // namespace ggp
