#pragma once

#include <vector>

#include "ggp/partition.hpp"

namespace ggp {

/// Θ_{n,n'}(π_λ) restricted to unipotent labels: all μ ⊢ n' whose transpose
/// is 2-transverse to the transpose of λ. Members are distinct and listed in
/// canonical partition order.
struct ThetaSet {
  Partition source;
  unsigned target_size = 0;
  std::vector<Partition> members;

  bool contains(const Partition& mu) const;
  bool empty() const { return members.empty(); }
};

ThetaSet theta_set(const Partition& lambda, unsigned target_size);

/// m_{λ,μ} ∈ {0,1}: multiplicity of π_λ ⊗ π_μ in the Weil representation.
int theta_multiplicity(const Partition& lambda, const Partition& mu);

/// Label of the Alvis–Curtis dual of π_λ (sign dropped).
inline Partition alvis_curtis_dual(const Partition& lambda) { return transpose(lambda); }

}  // namespace ggp
