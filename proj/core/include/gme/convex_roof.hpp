#pragma once

#include <cstdint>
#include <functional>

#include "gme/state.hpp"

namespace gme {

//- Budget and reproducibility knobs for the roof optimizer.
//- ensemble_size = 0 means "use spectral rank squared", the standard
//- cardinality bound under which an optimal decomposition exists.
struct RoofConfig {
  int ensemble_size = 0;
  int restarts = 20;
  int max_iterations = 500;
  double tolerance = 1e-7;
  std::uint64_t seed = 12345;
};

//- Outcome of a roof minimization. The reported value is an upper bound
//- on the true roof: local search cannot certify global optimality
//- (except for rank-1 inputs, where the value is exact).
struct RoofResult {
  double value = 0.0;
  Ensemble argmin;
  double eigen_average = 0.0;
  bool upper_bound = true;
  int restarts_used = 0;
  long evaluations = 0;
};

using PureFunctional = std::function<double(const PureState&)>;

//- Mixes the eigen-ensemble by a left isometry V (n x r, V^dag V = I):
//- member j is proportional to sum_k V_jk sqrt(lambda_k) |e_k>, with its
//- squared norm as weight. Members below weight 1e-12 are dropped.
//- Throws IsometryError if V fails the isometry test at 1e-10.
Ensemble ensemble_from_isometry(const Ensemble& eigens, const Matrix& isometry);

//- Minimizes the ensemble average of `functional` over decompositions of
//- rho: derivative-free descent over the isometry manifold using two-row
//- rotations with a shrinking angle step, so every iterate satisfies the
//- decomposition constraint exactly and each probe re-evaluates only the
//- two members it touches. Restart 0 starts at the identity isometry
//- (the eigen-ensemble), so the result never exceeds the eigen-average.
//- Deterministic for a fixed config seed; restarts are independent and
//- run sequentially. `evaluations` counts single-member functional calls.
RoofResult roof_minimize(const DensityMatrix& rho, const PureFunctional& functional,
                         const RoofConfig& cfg = {});

}  // namespace gme
