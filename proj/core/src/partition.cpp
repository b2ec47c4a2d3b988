#include "gme/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gme {

namespace {

std::vector<long> strides_of(const std::vector<int>& dims) {
  std::vector<long> s(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
    s[k] = s[k + 1] * dims[k + 1];
  }
  return s;
}

//- Flat-index permutation sending the original convention to the one
//- where parties appear in the order listed by the partition's blocks.
std::vector<long> reindex_map(const std::vector<int>& dims, const Partition& p) {
  std::vector<int> perm;
  for (const auto& block : p.blocks) {
    perm.insert(perm.end(), block.begin(), block.end());
  }
  std::vector<int> new_dims;
  for (int party : perm) new_dims.push_back(dims[party]);

  auto old_strides = strides_of(dims);
  auto new_strides = strides_of(new_dims);
  long total = 1;
  for (int d : dims) total *= d;

  std::vector<long> map(total);
  for (long i = 0; i < total; ++i) {
    long j = 0;
    for (size_t pos = 0; pos < perm.size(); ++pos) {
      long digit = (i / old_strides[perm[pos]]) % dims[perm[pos]];
      j += digit * new_strides[pos];
    }
    map[i] = j;
  }
  return map;
}

std::vector<int> merged_dims(const std::vector<int>& dims, const Partition& p) {
  std::vector<int> out;
  for (const auto& block : p.blocks) {
    int d = 1;
    for (int party : block) d *= dims[party];
    out.push_back(d);
  }
  return out;
}

std::vector<std::string> merged_labels(const std::vector<std::string>& labels,
                                       const Partition& p) {
  std::vector<std::string> out;
  for (const auto& block : p.blocks) {
    std::string s;
    for (int party : block) s += labels[party];
    out.push_back(s);
  }
  return out;
}

void check_matches(int state_parties, const Partition& p) {
  if (p.num_parties() != state_parties) {
    throw PartitionError("partition party count does not match the state");
  }
}

}  // namespace

Partition make_partition(std::vector<std::vector<int>> blocks) {
  if (blocks.empty()) throw PartitionError("partition needs at least one block");
  std::vector<int> all;
  for (auto& block : blocks) {
    if (block.empty()) throw PartitionError("partition blocks must be nonempty");
    std::sort(block.begin(), block.end());
    all.insert(all.end(), block.begin(), block.end());
  }
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i)) {
      throw PartitionError("partition blocks must be disjoint and cover parties 0..m-1");
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition{std::move(blocks)};
}

std::vector<Partition> enumerate_partitions(int m, int k) {
  if (k < 2 || k > m) throw PartitionError("block count must satisfy 2 <= k <= m");

  auto fixed = [](std::initializer_list<std::vector<std::vector<int>>> list) {
    std::vector<Partition> out;
    for (const auto& blocks : list) out.push_back(make_partition(blocks));
    return out;
  };
  if (m == 3 && k == 2) {
    return fixed({{{0}, {1, 2}}, {{1}, {0, 2}}, {{0, 1}, {2}}});
  }
  if (m == 4 && k == 2) {
    return fixed({{{0, 1}, {2, 3}},
                  {{0}, {1, 2, 3}},
                  {{0, 2}, {1, 3}},
                  {{0, 1, 2}, {3}},
                  {{0, 3}, {1, 2}},
                  {{1}, {0, 2, 3}},
                  {{2}, {0, 1, 3}}});
  }
  if (m == 4 && k == 3) {
    return fixed({{{0}, {1}, {2, 3}},
                  {{0}, {1, 2}, {3}},
                  {{0, 2}, {1}, {3}},
                  {{0, 1}, {2}, {3}},
                  {{0, 3}, {1}, {2}},
                  {{0}, {1, 3}, {2}}});
  }

  //- Generic shapes: restricted growth strings with exactly k values.
  std::vector<Partition> out;
  std::vector<int> assign(m, 0);
  auto emit = [&]() {
    int blocks_used = 1 + *std::max_element(assign.begin(), assign.end());
    if (blocks_used != k) return;
    std::vector<std::vector<int>> blocks(blocks_used);
    for (int party = 0; party < m; ++party) blocks[assign[party]].push_back(party);
    out.push_back(make_partition(std::move(blocks)));
  };
  //- Depth-first enumeration in lexicographic RGS order.
  auto recurse = [&](auto&& self, int party, int max_used) -> void {
    if (party == m) {
      emit();
      return;
    }
    for (int b = 0; b <= std::min(max_used + 1, k - 1); ++b) {
      assign[party] = b;
      self(self, party + 1, std::max(max_used, b));
    }
  };
  recurse(recurse, 1, 0);
  return out;
}

std::string canonical_label(const Partition& p, const std::vector<std::string>& labels) {
  std::string out;
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) out += '|';
    for (int party : p.blocks[b]) out += labels[party];
  }
  return out;
}

std::string canonical_label(const Partition& p) {
  return canonical_label(p, default_labels(p.num_parties()));
}

Partition parse_partition(const std::string& text, int num_parties) {
  std::vector<std::vector<int>> blocks(1);
  for (char c : text) {
    if (c == '|') {
      blocks.emplace_back();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    int party = std::toupper(static_cast<unsigned char>(c)) - 'A';
    if (party < 0 || party >= num_parties) {
      throw PartitionError(std::string("unknown party name '") + c + "' in partition text");
    }
    blocks.back().push_back(party);
  }
  Partition p = make_partition(std::move(blocks));
  if (p.num_parties() != num_parties) {
    throw PartitionError("partition text covers " + std::to_string(p.num_parties()) +
                         " parties, expected " + std::to_string(num_parties));
  }
  return p;
}

PureState coarse_grain(const PureState& state, const Partition& p) {
  check_matches(state.num_parties(), p);
  auto map = reindex_map(state.dims, p);
  Vector out(state.total_dim());
  for (long i = 0; i < state.total_dim(); ++i) out[map[i]] = state.amplitudes[i];
  return PureState{std::move(out), merged_dims(state.dims, p),
                   merged_labels(state.party_labels, p)};
}

DensityMatrix coarse_grain(const DensityMatrix& rho, const Partition& p) {
  check_matches(rho.num_parties(), p);
  auto map = reindex_map(rho.dims, p);
  const long d = rho.total_dim();
  Matrix out(d, d);
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) out(map[i], map[j]) = rho.matrix(i, j);
  }
  return DensityMatrix{std::move(out), merged_dims(rho.dims, p),
                       merged_labels(rho.party_labels, p)};
}

}  // namespace gme
