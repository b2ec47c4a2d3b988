#pragma once

#include "gme/bipartite.hpp"
#include "gme/convex_roof.hpp"
#include "gme/partition.hpp"
#include "gme/state.hpp"

namespace gme {

//- An edge below this absolute threshold counts as zero in the genuine-
//- entanglement indicators (all measures here are O(1) at desk scale).
inline constexpr double kZeroEdgeTol = 1e-9;

//- Bipartite values across the three cuts of a 3-block state, in the
//- fixed assignment x = E(A|BC), y = E(AB|C), z = E(B|AC).
struct EdgeVector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  MeasureDescriptor measure;
};

enum class CompositeVariant { RATIO, PRODUCT };
enum class TriComposite { EG123, E123 };

//- Unified tripartite tangle 3 - sum of the three single-block purities.
//- Throws PartitionError unless the state has exactly 3 parties.
double tau3(const PureState& state);

//- Unified tripartite entanglement of formation: half the sum of the
//- three single-block entropies.
double ef3(const PureState& state);

//- The three bipartite evaluations. The mixed overload uses
//- mixed_measure (direct or roof per the descriptor).
EdgeVector3 edge_vector_3(const PureState& state, const MeasureDescriptor& d);
EdgeVector3 edge_vector_3(const DensityMatrix& rho, const MeasureDescriptor& d,
                          const RoofConfig& cfg = {});

//- RATIO = xyz/(x+y+z) with 0 on the all-zero edge vector; PRODUCT = xyz.
double f123(const EdgeVector3& e, CompositeVariant variant);

//- Plain sum of edges.
double e123(const EdgeVector3& e);

//- delta(xyz) * (x+y+z) where delta vanishes iff some edge is zero
//- (below kZeroEdgeTol), killing biseparable pure states.
double eg123(const EdgeVector3& e);

//- 1 iff every bipartition value of the pure state exceeds tol.
int delta_pure_genuine(const PureState& state, const MeasureDescriptor& d,
                       double tol = kZeroEdgeTol);

//- Convex roof of the chosen pure-state composite. This is the
//- genuine-measure path for EG123; E123 is offered for comparison.
double roofed_composite(const DensityMatrix& rho, TriComposite which,
                        const MeasureDescriptor& d, const RoofConfig& cfg = {});

}  // namespace gme
