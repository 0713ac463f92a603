#include "qpp/noncrossing.hpp"

#include <algorithm>

#include "qpp/errors.hpp"

namespace qpp {
namespace {

// Non-crossing partitions of the integer interval [lo, hi]; empty interval
// gives the single empty partition.
std::vector<NCPartition> enumerate_interval(unsigned lo, unsigned hi) {
  if (lo > hi) return {NCPartition{}};
  std::vector<NCPartition> out;
  // The block containing lo is {lo = b_1 < ... < b_m}; the gaps between
  // consecutive members, and the stretch after b_m, are filled
  // independently.
  struct Frame {
    std::vector<unsigned> block;
    std::vector<NCPartition> partial;
  };
  std::vector<Frame> stack{{{lo}, {NCPartition{}}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const unsigned last = f.block.back();

    // Close the block: fill (last, hi] freely.
    for (const auto& tail : enumerate_interval(last + 1, hi)) {
      for (const auto& p : f.partial) {
        NCPartition full = p;
        full.push_back(f.block);
        full.insert(full.end(), tail.begin(), tail.end());
        out.push_back(std::move(full));
      }
    }
    // Or extend the block with a next member j, filling (last, j) first.
    for (unsigned j = last + 1; j <= hi; ++j) {
      Frame g;
      g.block = f.block;
      g.block.push_back(j);
      for (const auto& gap : enumerate_interval(last + 1, j - 1)) {
        for (const auto& p : f.partial) {
          NCPartition merged = p;
          merged.insert(merged.end(), gap.begin(), gap.end());
          g.partial.push_back(std::move(merged));
        }
      }
      stack.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

std::vector<NCPartition> nc_enumerate(unsigned k) {
  if (k == 0) throw InvalidSequence("nc_enumerate needs k >= 1");
  if (k > 12) throw TooLarge("nc_enumerate is limited to k <= 12");
  auto parts = enumerate_interval(1, k);
  for (auto& p : parts) {
    std::sort(p.begin(), p.end());
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

bool is_noncrossing_partition(const NCPartition& p, unsigned k) {
  std::vector<int> owner(k + 1, -1);
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (p[b].empty()) return false;
    for (unsigned e : p[b]) {
      if (e < 1 || e > k || owner[e] != -1) return false;
      owner[e] = static_cast<int>(b);
    }
  }
  for (unsigned e = 1; e <= k; ++e) {
    if (owner[e] == -1) return false;
  }
  for (unsigned a = 1; a <= k; ++a)
    for (unsigned b = a + 1; b <= k; ++b)
      for (unsigned c = b + 1; c <= k; ++c)
        for (unsigned d = c + 1; d <= k; ++d)
          if (owner[a] == owner[c] && owner[b] == owner[d] &&
              owner[a] != owner[b])
            return false;
  return true;
}

}  // namespace qpp
