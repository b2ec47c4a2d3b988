#pragma once

#include <string>

#include "gme/convex_roof.hpp"
#include "gme/partition.hpp"
#include "gme/state.hpp"

namespace gme {

//- EoF = entanglement of formation ("EOF" itself is taken by the C macro).
enum class MeasureKind { TANGLE, CONCURRENCE, EoF, NEGATIVITY };
enum class MixedStrategy { DIRECT, CONVEX_ROOF };

//- Which bipartite measure to evaluate and how to extend it to mixed
//- states. Negativity admits DIRECT; the spectrum-based kinds require
//- CONVEX_ROOF on non-pure inputs.
struct MeasureDescriptor {
  MeasureKind kind = MeasureKind::TANGLE;
  MixedStrategy mixed_strategy = MixedStrategy::CONVEX_ROOF;
};

//- Case-insensitive names: "tangle", "concurrence", "eof", "negativity".
MeasureKind parse_measure_kind(const std::string& name);
std::string measure_name(MeasureKind kind);

//- Pure-state value across a bipartition of the state's parties:
//- TANGLE = 2(1 - Tr rho_X^2), CONCURRENCE = sqrt(TANGLE),
//- EOF = S(rho_X), NEGATIVITY = the direct formula on |psi><psi|.
//- Side-independent. Throws PartitionError unless cut has k = 2 blocks.
double pure_measure(const PureState& state, const Partition& cut,
                    const MeasureDescriptor& d);

//- (||rho^{T_X}||_1 - 1) / 2, partial transpose on the cut's first block.
double negativity(const DensityMatrix& rho, const Partition& cut);

//- Two-qubit closed form: max(0, l1 - l2 - l3 - l4) over the square roots
//- of the spin-flipped spectrum. Throws DimensionError unless dims=[2,2].
double wootters_concurrence(const DensityMatrix& rho);

//- Mixed-state value. Rank-1 inputs reduce to the pure formula for every
//- kind and strategy. Otherwise DIRECT computes negativity (StrategyError
//- for the roof-only kinds) and CONVEX_ROOF runs roof_minimize with the
//- pure measure as functional.
double mixed_measure(const DensityMatrix& rho, const Partition& cut,
                     const MeasureDescriptor& d, const RoofConfig& cfg = {});

}  // namespace gme
