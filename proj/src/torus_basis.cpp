#include "tvcable/torus_basis.hpp"

namespace tvcable {

ReducedBasisIndex reduce_index(const TQFTParameter& param, std::int64_t l) {
  const std::int64_t r = param.r();
  std::int64_t residue = floor_mod(l, 2 * r);
  int sign = 1;
  if (residue >= r) {
    residue -= r;
    sign = -1;
  }
  if (residue == 0) return {};
  if (residue > param.m()) residue = r - residue;
  return {sign, static_cast<int>(residue)};
}

std::vector<int> odd_basis_permutation(const TQFTParameter& param) {
  std::vector<int> perm(param.m());
  for (int j = 1; j <= param.m(); ++j) perm[j - 1] = reduce_index(param, 2 * j - 1).index;
  return perm;
}

}  // namespace tvcable
