#include "ggp/theta.hpp"

#include <algorithm>

namespace ggp {

bool ThetaSet::contains(const Partition& mu) const {
  return std::binary_search(members.begin(), members.end(), mu);
}

ThetaSet theta_set(const Partition& lambda, unsigned target_size) {
  ThetaSet result{lambda, target_size, {}};
  const Partition dual = transpose(lambda);
  for (Partition& mu : partitions_of(target_size)) {
    if (two_transverse(dual, transpose(mu))) result.members.push_back(std::move(mu));
  }
  return result;
}

int theta_multiplicity(const Partition& lambda, const Partition& mu) {
  return theta_set(lambda, mu.size()).contains(mu) ? 1 : 0;
}

}  // namespace ggp
