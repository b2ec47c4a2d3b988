#pragma once

#include <array>
#include <vector>

#include "gme/bipartite.hpp"
#include "gme/tripartite.hpp"

namespace gme {

//- Bipartite values over the seven 2-partitions of a 4-party system, in
//- the fixed order AB|CD, A|BCD, AC|BD, ABC|D, AD|BC, B|ACD, C|ABD.
struct EdgeVector4Bip {
  std::array<double, 7> values{};
  MeasureDescriptor measure;

  static const std::array<const char*, 7>& labels();
};

//- Which tripartite measure fills the six-entry edge vector. The
//- composite kinds (EG123, E123, F123) additionally need a bipartite
//- MeasureDescriptor for their internal edges; TAU3/EF3 ignore it.
enum class TriKind { TAU3, EF3, EG123, E123, F123 };

//- Tripartite values over the six 3-partitions of a 4-party system, in
//- the fixed order A|B|CD, A|BC|D, AC|B|D, AB|C|D, AD|B|C, A|BD|C.
struct EdgeVector4Tri {
  std::array<double, 6> values{};
  TriKind kind = TriKind::TAU3;

  static const std::array<const char*, 6>& labels();
};

enum class CombinerKind { SUM, PRODUCT, RATIO, GATED_SUM };

EdgeVector4Bip edge_vector_4_bip(const PureState& state, const MeasureDescriptor& d);
EdgeVector4Bip edge_vector_4_bip(const DensityMatrix& rho, const MeasureDescriptor& d,
                                 const RoofConfig& cfg = {});

//- Six evaluations of the chosen tripartite measure on the coarse-grained
//- tripartitions of a pure 4-party state. F123 uses the RATIO variant.
EdgeVector4Tri edge_vector_4_tri(const PureState& state, TriKind kind,
                                 const MeasureDescriptor& d = {});

//- 0 iff some bipartition value of the pure state is <= tol (the state is
//- product across that cut), else 1.
int delta_bisep(const PureState& state, const MeasureDescriptor& d,
                double tol = kZeroEdgeTol);

//- Combiners over the seven bipartite entries: ratio or product of all
//- entries, plain sum, and the delta-gated sum that vanishes whenever a
//- cut value is zero.
double f1234_2(const EdgeVector4Bip& e, CompositeVariant variant);
double e1234_2(const EdgeVector4Bip& e);
double eg1234_2(const EdgeVector4Bip& e);

//- Combiners over the six tripartite entries. The tilde form multiplies
//- every entry by the biseparability indicator delta before combining;
//- eg1234_3 gates the sum by delta.
double f1234_3(const EdgeVector4Tri& e, CompositeVariant variant);
double tilde_f1234_3(const EdgeVector4Tri& e, int delta, CompositeVariant variant);
double e1234_3(const EdgeVector4Tri& e);
double eg1234_3(const EdgeVector4Tri& e, int delta);

//- The named monotone combiners for any-length nonnegative vectors
//- (the m-partite generalization). RATIO returns 0 on an all-zero sum;
//- GATED_SUM returns 0 whenever some entry is <= kZeroEdgeTol.
double generic_combiner(const std::vector<double>& values, CombinerKind kind);

}  // namespace gme
