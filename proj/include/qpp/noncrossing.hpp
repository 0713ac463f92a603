#ifndef QPP_NONCROSSING_HPP_
#define QPP_NONCROSSING_HPP_

#include <vector>

namespace qpp {

/// A set partition of {1..k}; blocks are sorted internally and ordered by
/// their smallest element.
using NCPartition = std::vector<std::vector<unsigned>>;

/// Every non-crossing partition of {1..k}, Catalan(k) of them.
/// Requires 1 <= k <= 12 (TooLarge otherwise, InvalidSequence for k = 0).
std::vector<NCPartition> nc_enumerate(unsigned k);

/// True when blocks are disjoint, cover {1..k}, and no a < b < c < d has
/// a, c in one block and b, d in another.
bool is_noncrossing_partition(const NCPartition& p, unsigned k);

}  // namespace qpp

#endif  // QPP_NONCROSSING_HPP_
