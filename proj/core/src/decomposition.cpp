#include "ggp/decomposition.hpp"

#include <array>

#include "ggp/error.hpp"
#include "ggp/group_order.hpp"
#include "ggp/qseries.hpp"

namespace ggp {

const char* to_string(DecompositionKind kind) {
  return kind == DecompositionKind::Restriction ? "restriction" : "weil";
}

ExactInt Decomposition::expected_degree() const {
  const ExactInt base = unipotent_degree(source, q);
  return kind == DecompositionKind::Restriction ? base : weil_dimension(source.size(), q) * base;
}

namespace {

// Terms over λ' ⊢ m for m in [0, max_m], with the regular factor on
// U_{ambient_rank - m} and the induction taken inside U_{ambient_rank}.
Decomposition decompose(const Partition& lambda, std::uint64_t q, DecompositionKind kind,
                        unsigned ambient_rank, unsigned max_m) {
  require_odd_prime_power(q);
  Decomposition out{lambda, q, kind, {}, 0};
  const FactoredOrder ambient = unitary_group_order(ambient_rank, q);
  for (unsigned m = 0; m <= max_m; ++m) {
    const unsigned s_rank = ambient_rank - m;
    const std::array<FactoredOrder, 2> levi{unitary_group_order(s_rank, q),
                                            unitary_group_order(m, q)};
    const std::vector<ClassFamily> families = enumerate_class_types(s_rank, q, true);
    for (const Partition& target : partitions_of(m)) {
      if (!two_transverse(lambda, target)) continue;
      const ExactInt target_degree = unipotent_degree(target, q);
      for (const ClassFamily& family : families) {
        const std::array<ExactInt, 2> inner{
            regular_character_degree(family.class_type, s_rank, q), target_degree};
        DecompositionTerm term{target, s_rank, family,
                               lusztig_induction_degree(ambient, levi, inner)};
        out.total_degree += term.contribution();
        out.terms.push_back(std::move(term));
      }
    }
  }
  return out;
}

}  // namespace

Decomposition restriction_decomposition(const Partition& lambda, std::uint64_t q) {
  require_odd_prime_power(q);
  if (lambda.empty()) throw DomainError("restriction needs |λ| >= 1");
  const unsigned n = lambda.size();
  return decompose(lambda, q, DecompositionKind::Restriction, n - 1, n - 1);
}

Decomposition weil_decomposition(const Partition& lambda, std::uint64_t q) {
  const unsigned n = lambda.size();
  return decompose(lambda, q, DecompositionKind::WeilTensor, n, n);
}

DimensionReport verify_dimension_identity(const Decomposition& d) {
  DimensionReport report;
  report.expected = d.expected_degree();
  for (const DecompositionTerm& term : d.terms) {
    report.total += term.contribution();
    report.lines.push_back("lambda'=" + term.target_partition.to_string() +
                           " s_rank=" + std::to_string(term.rank_of_s) +
                           " type=" + term.family.class_type.to_string() +
                           " count=" + to_decimal(term.family.count) +
                           " degree=" + to_decimal(term.per_class_degree) +
                           " contribution=" + to_decimal(term.contribution()));
  }
  report.holds = report.total == report.expected && report.total == d.total_degree;
  report.lines.push_back(std::string("total=") + to_decimal(report.total) +
                         " expected=" + to_decimal(report.expected) +
                         (report.holds ? " OK" : " MISMATCH"));
  return report;
}

}  // namespace ggp
