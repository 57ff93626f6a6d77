#pragma once

#include <cstdint>
#include <vector>

#include "ggp/partition.hpp"

namespace ggp {

enum class GgpModel { Bessel, FourierJacobi };

const char* to_string(GgpModel model);  // "bessel" | "fourier-jacobi"

/// Bessel when n - m is odd, Fourier–Jacobi when even. Requires n >= m.
GgpModel ggp_model(unsigned n, unsigned m);

/// m(π_λ, π_μ) for unipotent π_λ, π_μ. Symmetric in its arguments.
int unipotent_multiplicity(const Partition& lambda, const Partition& mu);

/// All μ ⊢ m with m(π_λ, π_μ) = 1, canonical order.
std::vector<Partition> ggp_partners(const Partition& lambda, unsigned m);

/// Compares the branching partners of λ with the transpose image of the
/// theta lift of the transpose of λ.
bool duality_diagram_check(const Partition& lambda, unsigned m);

/// m(π_λ, R(π ⊗ π_μ)) with π in a Lusztig series E(U_ℓ, s), 1 ∉ s. Only ℓ and
/// whether π is the regular character of its series enter the answer.
int extended_multiplicity(const Partition& lambda, const Partition& mu, unsigned ell,
                          bool pi_is_regular);

/// The branching results are proved under a large-q hypothesis; values are
/// reported for every odd q but callers flag q < 5.
inline bool small_field_warning(std::uint64_t q) { return q < 5; }

}  // namespace ggp
