#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gme/errors.hpp"

namespace gme {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

//- Eigenvalues below this threshold are treated as numerical zeros when
//- repairing spectra and building ensembles.
inline constexpr double kEigenvalueClip = 1e-12;

//- Labels "A", "B", ... for m parties.
std::vector<std::string> default_labels(int num_parties);

//- Normalized multi-party state vector. Basis index convention is
//- row-major with the last party varying fastest:
//-   i = sum_k i_k * prod_{j>k} d_j.
struct PureState {
  Vector amplitudes;
  std::vector<int> dims;
  std::vector<std::string> party_labels;

  int num_parties() const { return static_cast<int>(dims.size()); }
  long total_dim() const { return amplitudes.size(); }
};

//- Hermitian, unit-trace, positive-semidefinite operator sharing the
//- index convention of PureState.
struct DensityMatrix {
  Matrix matrix;
  std::vector<int> dims;
  std::vector<std::string> party_labels;

  int num_parties() const { return static_cast<int>(dims.size()); }
  long total_dim() const { return matrix.rows(); }
};

//- Weighted pure-state decomposition of a density matrix.
struct Ensemble {
  std::vector<double> weights;
  std::vector<PureState> members;
};

enum class NamedState { GHZ, W, GHZ4, W4, PRODUCT_ZERO };

//- Normalizes the given amplitudes and attaches the tensor structure.
//- Throws DimensionError if the length does not match prod(dims),
//- DegenerateInputError on an (almost) zero vector.
PureState make_pure_state(const Vector& amplitudes, const std::vector<int>& dims);
PureState make_pure_state(const std::vector<Complex>& amplitudes,
                          const std::vector<int>& dims);

//- Validates Hermiticity (1e-10), unit trace (1e-10) and spectrum
//- >= -1e-10, then attaches the tensor structure.
DensityMatrix make_density_matrix(const Matrix& matrix, const std::vector<int>& dims);

//- Standard reference states. GHZ/W are 3-qubit, GHZ4/W4 are 4-qubit,
//- PRODUCT_ZERO is |0...0> of the requested dims (default [2,2,2,2]).
//- Passing dims inconsistent with the qubit definitions throws
//- DimensionError; an unknown CLI name throws UnknownStateError.
PureState named_state(NamedState name, const std::vector<int>& dims = {});
NamedState parse_named_state(const std::string& name);

//- Rank-1 projector |psi><psi|.
DensityMatrix density_of(const PureState& state);

//- Reduced state over the kept parties (ascending party order preserved).
//- Throws PartitionError if keep is empty or out of range.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

//- Tr(rho^2). Assumes Hermitian input (all DensityMatrix values are).
double purity(const DensityMatrix& rho);

//- -sum lambda log2 lambda over the spectrum, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

//- Eigenvalues of rho, ascending, clipped into [0, 1].
std::vector<double> spectrum(const DensityMatrix& rho);

//- State drawn from the unitarily invariant measure: i.i.d. standard
//- complex Gaussian amplitudes, normalized. The Gaussian variates are
//- produced by an explicit Box-Muller transform over the raw mt19937_64
//- stream so results are identical across platforms for a fixed seed.
PureState haar_random_pure(const std::vector<int>& dims, std::uint64_t seed);
PureState haar_random_pure(const std::vector<int>& dims, std::mt19937_64& rng);

//- Applies U on one tensor factor. Throws UnitaryError if U is not
//- unitary within 1e-10, DimensionError on size mismatch.
PureState apply_local_unitary(const PureState& state, int party, const Matrix& unitary);

//- Spectral decomposition as an Ensemble; eigenvalues < 1e-12 dropped.
Ensemble eigen_ensemble(const DensityMatrix& rho);

//- Number of eigenvalues above the clipping threshold.
int spectral_rank(const DensityMatrix& rho);

//- Kronecker product of two states; left factor's parties come first
//- (and vary slower, matching the index convention).
PureState tensor_product(const PureState& left, const PureState& right);

//- Resums an ensemble into the density matrix it decomposes.
DensityMatrix resum(const Ensemble& ensemble);

}  // namespace gme
