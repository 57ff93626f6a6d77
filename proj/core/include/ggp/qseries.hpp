#pragma once

#include <cstdint>
#include <span>

#include "ggp/classes.hpp"
#include "ggp/exact.hpp"
#include "ggp/group_order.hpp"
#include "ggp/partition.hpp"

namespace ggp {

/// Degree of the unipotent representation π_λ of U_{|λ|}(q): the GL hook
/// formula evaluated at -q, taken in absolute value.
///   |(-q)^{n(λ)} prod_{i<=n} ((-q)^i - 1) / prod_{cells} ((-q)^{h(c)} - 1)|
/// Throws InternalError if the division is inexact.
ExactInt unipotent_degree(const Partition& lambda, std::uint64_t q);

/// Degree of the regular character in E(U_k(q), s) for s of the given type:
/// [U_k : C(s)]_{p'} * |C(s)|_p.
ExactInt regular_character_degree(const ClassType& type, unsigned k, std::uint64_t q);

/// Absolute degree of R^G_L(π_1 ⊗ ... ⊗ π_r): the p'-index of L in G times the
/// product of the inner degrees.
ExactInt lusztig_induction_degree(const FactoredOrder& ambient,
                                  std::span<const FactoredOrder> levi_factors,
                                  std::span<const ExactInt> inner_degrees);

/// dim ω_n = q^n.
inline ExactInt weil_dimension(unsigned n, std::uint64_t q) { return ipow(q, n); }

}  // namespace ggp
