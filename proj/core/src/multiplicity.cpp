#include "ggp/multiplicity.hpp"

#include <algorithm>

#include "ggp/error.hpp"
#include "ggp/theta.hpp"

namespace ggp {

const char* to_string(GgpModel model) {
  return model == GgpModel::Bessel ? "bessel" : "fourier-jacobi";
}

GgpModel ggp_model(unsigned n, unsigned m) {
  if (n < m) throw DomainError("first group must be the larger");
  return (n - m) % 2 == 1 ? GgpModel::Bessel : GgpModel::FourierJacobi;
}

int unipotent_multiplicity(const Partition& lambda, const Partition& mu) {
  const bool ordered = lambda.size() >= mu.size();
  const Partition& big = ordered ? lambda : mu;
  const Partition& small = ordered ? mu : lambda;
  return two_transverse(big, small) ? 1 : 0;
}

std::vector<Partition> ggp_partners(const Partition& lambda, unsigned m) {
  if (m > lambda.size()) throw DomainError("partner rank exceeds the rank of the larger group");
  std::vector<Partition> out;
  for (Partition& mu : partitions_of(m))
    if (unipotent_multiplicity(lambda, mu) == 1) out.push_back(std::move(mu));
  return out;
}

bool duality_diagram_check(const Partition& lambda, unsigned m) {
  const std::vector<Partition> branching = ggp_partners(lambda, m);
  std::vector<Partition> lifted;
  for (const Partition& mu : theta_set(alvis_curtis_dual(lambda), m).members)
    lifted.push_back(alvis_curtis_dual(mu));
  std::sort(lifted.begin(), lifted.end());
  return branching == lifted;
}

int extended_multiplicity(const Partition& lambda, const Partition& mu, unsigned ell,
                          bool pi_is_regular) {
  if (mu.size() > lambda.size()) throw DomainError("first group must be the larger");
  if (ell + mu.size() > lambda.size() + 1) throw DomainError("parameter range requires ell + m <= n + 1");
  // The empty factor on U_0 is its own regular character.
  const bool regular = ell == 0 || pi_is_regular;
  return (regular && two_transverse(lambda, mu)) ? 1 : 0;
}

}  // namespace ggp
