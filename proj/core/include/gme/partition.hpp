#pragma once

#include <string>
#include <vector>

#include "gme/state.hpp"

namespace gme {

//- A k-partition of the party set {0, ..., m-1} in canonical form:
//- parties sorted within blocks, blocks sorted by smallest member.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int k() const { return static_cast<int>(blocks.size()); }
  int num_parties() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
  }
};

//- Canonicalizes and validates: blocks nonempty, pairwise disjoint,
//- union exactly {0, ..., m-1}. Throws PartitionError otherwise.
Partition make_partition(std::vector<std::vector<int>> blocks);

//- All set-partitions of m parties into exactly k blocks; count is the
//- Stirling number S(m, k). The orders for (3,2), (4,2) and (4,3) are
//- pinned to the edge-vector index conventions used throughout:
//-   (3,2): A|BC, B|AC, AB|C
//-   (4,2): AB|CD, A|BCD, AC|BD, ABC|D, AD|BC, B|ACD, C|ABD
//-   (4,3): A|B|CD, A|BC|D, AC|B|D, AB|C|D, AD|B|C, A|BD|C
//- Other shapes enumerate in restricted-growth-string order.
std::vector<Partition> enumerate_partitions(int m, int k);

//- Deterministic text form, e.g. "AC|B|D", using letters A.. for parties
//- (or the provided per-party labels).
std::string canonical_label(const Partition& p);
std::string canonical_label(const Partition& p, const std::vector<std::string>& labels);

//- Parses the "|"-separated grammar in any block/party order and
//- canonicalizes. num_parties fixes the expected party set.
Partition parse_partition(const std::string& text, int num_parties);

//- Merges each block into a single party (dimension = product of the
//- members), permuting amplitudes into canonical block order. Labels of
//- merged parties are concatenations of the member labels.
PureState coarse_grain(const PureState& state, const Partition& p);
DensityMatrix coarse_grain(const DensityMatrix& rho, const Partition& p);

}  // namespace gme
