#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ggp/classes.hpp"
#include "ggp/exact.hpp"
#include "ggp/partition.hpp"

namespace ggp {

enum class DecompositionKind { Restriction, WeilTensor };

const char* to_string(DecompositionKind kind);  // "restriction" | "weil"

/// One family of summands R(π_s^reg ⊗ π_λ') sharing λ' and the type of s.
/// The family contributes family.count summands, each of per_class_degree.
struct DecompositionTerm {
  Partition target_partition;  // λ' ⊢ m
  unsigned rank_of_s = 0;      // s lives in U_{rank_of_s}
  ClassFamily family;
  ExactInt per_class_degree;

  ExactInt contribution() const { return family.count * per_class_degree; }
};

struct Decomposition {
  Partition source;
  std::uint64_t q = 0;
  DecompositionKind kind = DecompositionKind::Restriction;
  std::vector<DecompositionTerm> terms;
  ExactInt total_degree;

  /// unipotent_degree(source) for a restriction, q^n times that for a Weil tensor.
  ExactInt expected_degree() const;
};

/// π_λ restricted to U_{n-1}(q). Requires |λ| >= 1 and q an odd prime power.
Decomposition restriction_decomposition(const Partition& lambda, std::uint64_t q);

/// π_λ ⊗ ω_n. Requires q an odd prime power.
Decomposition weil_decomposition(const Partition& lambda, std::uint64_t q);

struct DimensionReport {
  bool holds = false;
  ExactInt total;
  ExactInt expected;
  std::vector<std::string> lines;  // one per term, then a summary line
};

DimensionReport verify_dimension_identity(const Decomposition& d);

}  // namespace ggp
