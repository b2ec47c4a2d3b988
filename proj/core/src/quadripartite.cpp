#include "gme/quadripartite.hpp"

#include <algorithm>
#include <limits>

namespace gme {

namespace {

void check_four_parties(int num_parties) {
  if (num_parties != 4) {
    throw PartitionError("this operation requires a state over exactly 4 parties");
  }
}

double combine(const double* begin, const double* end, CombinerKind kind) {
  double sum = 0.0;
  double product = 1.0;
  double min_value = std::numeric_limits<double>::infinity();
  for (const double* it = begin; it != end; ++it) {
    if (*it < 0.0) throw InputError("combiner entries must be nonnegative");
    sum += *it;
    product *= *it;
    min_value = std::min(min_value, *it);
  }
  switch (kind) {
    case CombinerKind::SUM:
      return sum;
    case CombinerKind::PRODUCT:
      return product;
    case CombinerKind::RATIO:
      return sum <= 0.0 ? 0.0 : product / sum;
    case CombinerKind::GATED_SUM:
      return (begin == end || min_value <= kZeroEdgeTol) ? 0.0 : sum;
  }
  throw InputError("unhandled combiner kind");
}

}  // namespace

const std::array<const char*, 7>& EdgeVector4Bip::labels() {
  static const std::array<const char*, 7> kLabels{
      "AB|CD", "A|BCD", "AC|BD", "ABC|D", "AD|BC", "B|ACD", "C|ABD"};
  return kLabels;
}

const std::array<const char*, 6>& EdgeVector4Tri::labels() {
  static const std::array<const char*, 6> kLabels{
      "A|B|CD", "A|BC|D", "AC|B|D", "AB|C|D", "AD|B|C", "A|BD|C"};
  return kLabels;
}

EdgeVector4Bip edge_vector_4_bip(const PureState& state, const MeasureDescriptor& d) {
  check_four_parties(state.num_parties());
  EdgeVector4Bip out;
  out.measure = d;
  auto cuts = enumerate_partitions(4, 2);
  for (size_t i = 0; i < cuts.size(); ++i) {
    out.values[i] = pure_measure(state, cuts[i], d);
  }
  return out;
}

EdgeVector4Bip edge_vector_4_bip(const DensityMatrix& rho, const MeasureDescriptor& d,
                                 const RoofConfig& cfg) {
  check_four_parties(rho.num_parties());
  EdgeVector4Bip out;
  out.measure = d;
  auto cuts = enumerate_partitions(4, 2);
  for (size_t i = 0; i < cuts.size(); ++i) {
    out.values[i] = mixed_measure(rho, cuts[i], d, cfg);
  }
  return out;
}

EdgeVector4Tri edge_vector_4_tri(const PureState& state, TriKind kind,
                                 const MeasureDescriptor& d) {
  check_four_parties(state.num_parties());
  EdgeVector4Tri out;
  out.kind = kind;
  auto tripartitions = enumerate_partitions(4, 3);
  for (size_t i = 0; i < tripartitions.size(); ++i) {
    PureState merged = coarse_grain(state, tripartitions[i]);
    switch (kind) {
      case TriKind::TAU3:
        out.values[i] = tau3(merged);
        break;
      case TriKind::EF3:
        out.values[i] = ef3(merged);
        break;
      case TriKind::EG123:
        out.values[i] = eg123(edge_vector_3(merged, d));
        break;
      case TriKind::E123:
        out.values[i] = e123(edge_vector_3(merged, d));
        break;
      case TriKind::F123:
        out.values[i] = f123(edge_vector_3(merged, d), CompositeVariant::RATIO);
        break;
    }
  }
  return out;
}

int delta_bisep(const PureState& state, const MeasureDescriptor& d, double tol) {
  EdgeVector4Bip e = edge_vector_4_bip(state, d);
  return *std::min_element(e.values.begin(), e.values.end()) > tol ? 1 : 0;
}

double f1234_2(const EdgeVector4Bip& e, CompositeVariant variant) {
  return combine(e.values.data(), e.values.data() + e.values.size(),
                 variant == CompositeVariant::RATIO ? CombinerKind::RATIO
                                                    : CombinerKind::PRODUCT);
}

double e1234_2(const EdgeVector4Bip& e) {
  return combine(e.values.data(), e.values.data() + e.values.size(), CombinerKind::SUM);
}

double eg1234_2(const EdgeVector4Bip& e) {
  return combine(e.values.data(), e.values.data() + e.values.size(),
                 CombinerKind::GATED_SUM);
}

double f1234_3(const EdgeVector4Tri& e, CompositeVariant variant) {
  return combine(e.values.data(), e.values.data() + e.values.size(),
                 variant == CompositeVariant::RATIO ? CombinerKind::RATIO
                                                    : CombinerKind::PRODUCT);
}

double tilde_f1234_3(const EdgeVector4Tri& e, int delta, CompositeVariant variant) {
  EdgeVector4Tri gated = e;
  for (double& value : gated.values) value *= delta;
  return f1234_3(gated, variant);
}

double e1234_3(const EdgeVector4Tri& e) {
  return combine(e.values.data(), e.values.data() + e.values.size(), CombinerKind::SUM);
}

double eg1234_3(const EdgeVector4Tri& e, int delta) {
  return delta == 0 ? 0.0 : e1234_3(e);
}

double generic_combiner(const std::vector<double>& values, CombinerKind kind) {
  if (values.empty()) throw InputError("combiner needs at least one entry");
  return combine(values.data(), values.data() + values.size(), kind);
}

}  // namespace gme
