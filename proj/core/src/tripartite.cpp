#include "gme/tripartite.hpp"

#include <algorithm>

namespace gme {

namespace {

void check_three_blocks(int num_parties) {
  if (num_parties != 3) {
    throw PartitionError("this operation requires a state over exactly 3 blocks");
  }
}

//- The fixed (x, y, z) cut assignment.
Partition cut_x() { return make_partition({{0}, {1, 2}}); }
Partition cut_y() { return make_partition({{0, 1}, {2}}); }
Partition cut_z() { return make_partition({{1}, {0, 2}}); }

}  // namespace

double tau3(const PureState& state) {
  check_three_blocks(state.num_parties());
  DensityMatrix rho = density_of(state);
  double total = 3.0;
  for (int party = 0; party < 3; ++party) {
    total -= purity(partial_trace(rho, {party}));
  }
  return std::max(0.0, total);
}

double ef3(const PureState& state) {
  check_three_blocks(state.num_parties());
  DensityMatrix rho = density_of(state);
  double total = 0.0;
  for (int party = 0; party < 3; ++party) {
    total += von_neumann_entropy(partial_trace(rho, {party}));
  }
  return 0.5 * total;
}

EdgeVector3 edge_vector_3(const PureState& state, const MeasureDescriptor& d) {
  check_three_blocks(state.num_parties());
  return EdgeVector3{pure_measure(state, cut_x(), d), pure_measure(state, cut_y(), d),
                     pure_measure(state, cut_z(), d), d};
}

EdgeVector3 edge_vector_3(const DensityMatrix& rho, const MeasureDescriptor& d,
                          const RoofConfig& cfg) {
  check_three_blocks(rho.num_parties());
  return EdgeVector3{mixed_measure(rho, cut_x(), d, cfg),
                     mixed_measure(rho, cut_y(), d, cfg),
                     mixed_measure(rho, cut_z(), d, cfg), d};
}

double f123(const EdgeVector3& e, CompositeVariant variant) {
  double product = e.x * e.y * e.z;
  if (variant == CompositeVariant::PRODUCT) return product;
  double sum = e.x + e.y + e.z;
  if (sum <= 0.0) return 0.0;
  return product / sum;
}

double e123(const EdgeVector3& e) { return e.x + e.y + e.z; }

double eg123(const EdgeVector3& e) {
  double min_edge = std::min({e.x, e.y, e.z});
  if (min_edge <= kZeroEdgeTol) return 0.0;
  return e.x + e.y + e.z;
}

int delta_pure_genuine(const PureState& state, const MeasureDescriptor& d, double tol) {
  EdgeVector3 e = edge_vector_3(state, d);
  return std::min({e.x, e.y, e.z}) > tol ? 1 : 0;
}

double roofed_composite(const DensityMatrix& rho, TriComposite which,
                        const MeasureDescriptor& d, const RoofConfig& cfg) {
  check_three_blocks(rho.num_parties());
  PureFunctional functional = [which, &d](const PureState& psi) {
    EdgeVector3 e = edge_vector_3(psi, d);
    return which == TriComposite::EG123 ? eg123(e) : e123(e);
  };
  return roof_minimize(rho, functional, cfg).value;
}

}  // namespace gme
