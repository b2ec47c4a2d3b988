#include "gme/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gme {

namespace {

long product_of(const std::vector<int>& dims) {
  long p = 1;
  for (int d : dims) p *= d;
  return p;
}

void check_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw DimensionError("state needs at least one party");
  for (int d : dims) {
    if (d < 2) throw DimensionError("every local dimension must be >= 2");
  }
}

//- Strides of the row-major, last-party-fastest index convention.
std::vector<long> strides_of(const std::vector<int>& dims) {
  std::vector<long> s(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
    s[k] = s[k + 1] * dims[k + 1];
  }
  return s;
}

//- Flat offsets contributed by every multi-index over the given parties.
//- Offsets of disjoint party sets add up to full flat indices.
std::vector<long> offsets_of(const std::vector<int>& parties,
                             const std::vector<int>& dims,
                             const std::vector<long>& strides) {
  long count = 1;
  for (int p : parties) count *= dims[p];
  std::vector<long> offsets(count, 0);
  long repeat = count;
  for (int p : parties) {
    repeat /= dims[p];
    for (long i = 0; i < count; ++i) {
      offsets[i] += ((i / repeat) % dims[p]) * strides[p];
    }
  }
  return offsets;
}

}  // namespace

std::vector<std::string> default_labels(int num_parties) {
  std::vector<std::string> labels;
  labels.reserve(num_parties);
  for (int i = 0; i < num_parties; ++i) {
    labels.push_back(std::string(1, static_cast<char>('A' + i)));
  }
  return labels;
}

PureState make_pure_state(const Vector& amplitudes, const std::vector<int>& dims) {
  check_dims(dims);
  if (amplitudes.size() != product_of(dims)) {
    throw DimensionError("amplitude count does not match the product of dims");
  }
  double norm = amplitudes.norm();
  if (norm < 1e-12) throw DegenerateInputError("cannot normalize a zero vector");
  return PureState{amplitudes / norm, dims, default_labels(static_cast<int>(dims.size()))};
}

PureState make_pure_state(const std::vector<Complex>& amplitudes,
                          const std::vector<int>& dims) {
  Vector v(static_cast<long>(amplitudes.size()));
  for (size_t i = 0; i < amplitudes.size(); ++i) v[static_cast<long>(i)] = amplitudes[i];
  return make_pure_state(v, dims);
}

DensityMatrix make_density_matrix(const Matrix& matrix, const std::vector<int>& dims) {
  check_dims(dims);
  long d = product_of(dims);
  if (matrix.rows() != d || matrix.cols() != d) {
    throw DimensionError("matrix side does not match the product of dims");
  }
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw DegenerateInputError("density matrix is not Hermitian within 1e-10");
  }
  if (std::abs(matrix.trace().real() - 1.0) > 1e-10 || std::abs(matrix.trace().imag()) > 1e-10) {
    throw DegenerateInputError("density matrix trace differs from 1 beyond 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw DegenerateInputError("density matrix has an eigenvalue below -1e-10");
  }
  return DensityMatrix{matrix, dims, default_labels(static_cast<int>(dims.size()))};
}

PureState named_state(NamedState name, const std::vector<int>& dims) {
  auto require_dims = [&dims](const std::vector<int>& expected) {
    if (!dims.empty() && dims != expected) {
      throw DimensionError("dims inconsistent with the requested named state");
    }
    return expected;
  };
  switch (name) {
    case NamedState::GHZ: {
      auto d = require_dims({2, 2, 2});
      Vector v = Vector::Zero(8);
      v[0] = v[7] = Complex(1.0 / std::sqrt(2.0), 0.0);
      return PureState{v, d, default_labels(3)};
    }
    case NamedState::W: {
      auto d = require_dims({2, 2, 2});
      Vector v = Vector::Zero(8);
      v[4] = v[2] = v[1] = Complex(1.0 / std::sqrt(3.0), 0.0);
      return PureState{v, d, default_labels(3)};
    }
    case NamedState::GHZ4: {
      auto d = require_dims({2, 2, 2, 2});
      Vector v = Vector::Zero(16);
      v[0] = v[15] = Complex(1.0 / std::sqrt(2.0), 0.0);
      return PureState{v, d, default_labels(4)};
    }
    case NamedState::W4: {
      auto d = require_dims({2, 2, 2, 2});
      Vector v = Vector::Zero(16);
      v[8] = v[4] = v[2] = v[1] = Complex(0.5, 0.0);
      return PureState{v, d, default_labels(4)};
    }
    case NamedState::PRODUCT_ZERO: {
      std::vector<int> d = dims.empty() ? std::vector<int>{2, 2, 2, 2} : dims;
      check_dims(d);
      Vector v = Vector::Zero(product_of(d));
      v[0] = Complex(1.0, 0.0);
      return PureState{v, d, default_labels(static_cast<int>(d.size()))};
    }
  }
  throw UnknownStateError("unhandled named state");
}

NamedState parse_named_state(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "ghz") return NamedState::GHZ;
  if (lower == "w") return NamedState::W;
  if (lower == "ghz4") return NamedState::GHZ4;
  if (lower == "w4") return NamedState::W4;
  if (lower == "product" || lower == "product_zero") return NamedState::PRODUCT_ZERO;
  throw UnknownStateError("unknown named state: " + name);
}

DensityMatrix density_of(const PureState& state) {
  return DensityMatrix{state.amplitudes * state.amplitudes.adjoint(), state.dims,
                       state.party_labels};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  if (keep.empty()) throw PartitionError("partial_trace requires a nonempty keep set");
  const int m = rho.num_parties();
  std::vector<int> kept(keep);
  std::sort(kept.begin(), kept.end());
  if (std::unique(kept.begin(), kept.end()) != kept.end()) {
    throw PartitionError("partial_trace keep set contains duplicates");
  }
  if (kept.front() < 0 || kept.back() >= m) {
    throw PartitionError("partial_trace keep set references an unknown party");
  }
  std::vector<int> rest;
  for (int p = 0; p < m; ++p) {
    if (!std::binary_search(kept.begin(), kept.end(), p)) rest.push_back(p);
  }
  auto strides = strides_of(rho.dims);
  auto keep_off = offsets_of(kept, rho.dims, strides);
  auto rest_off = offsets_of(rest, rho.dims, strides);

  const long dk = static_cast<long>(keep_off.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (long i = 0; i < dk; ++i) {
    for (long j = 0; j < dk; ++j) {
      Complex sum(0.0, 0.0);
      for (long r : rest_off) {
        sum += rho.matrix(keep_off[i] + r, keep_off[j] + r);
      }
      out(i, j) = sum;
    }
  }
  std::vector<int> out_dims;
  std::vector<std::string> out_labels;
  for (int p : kept) {
    out_dims.push_back(rho.dims[p]);
    out_labels.push_back(rho.party_labels[p]);
  }
  return DensityMatrix{std::move(out), std::move(out_dims), std::move(out_labels)};
}

double purity(const DensityMatrix& rho) {
  //- For Hermitian rho, Tr(rho^2) = Tr(rho^dagger rho) = Frobenius norm squared.
  return rho.matrix.squaredNorm();
}

std::vector<double> spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  for (double& v : values) v = std::clamp(v, 0.0, 1.0);
  return values;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : spectrum(rho)) {
    if (lambda > kEigenvalueClip) s -= lambda * std::log2(lambda);
  }
  return s;
}

namespace {

//- Deterministic standard normal pairs from the raw 64-bit stream
//- (Box-Muller); avoids implementation-defined std::distributions.
double uniform01(std::mt19937_64& rng) {
  //- 53 uniform bits in (0, 1]; never returns 0 so log() is safe.
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

PureState haar_random_pure(const std::vector<int>& dims, std::mt19937_64& rng) {
  check_dims(dims);
  long d = product_of(dims);
  Vector v(d);
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  for (long i = 0; i < d; ++i) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    double radius = std::sqrt(-2.0 * std::log(u1));
    v[i] = Complex(radius * std::cos(kTwoPi * u2), radius * std::sin(kTwoPi * u2));
  }
  return make_pure_state(v, dims);
}

PureState haar_random_pure(const std::vector<int>& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_random_pure(dims, rng);
}

PureState apply_local_unitary(const PureState& state, int party, const Matrix& unitary) {
  const int m = state.num_parties();
  if (party < 0 || party >= m) throw DimensionError("party index out of range");
  const int d = state.dims[party];
  if (unitary.rows() != d || unitary.cols() != d) {
    throw DimensionError("unitary side does not match the party dimension");
  }
  if ((unitary.adjoint() * unitary - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
    throw UnitaryError("matrix is not unitary within 1e-10");
  }
  auto strides = strides_of(state.dims);
  const long stride = strides[party];
  const long total = state.total_dim();
  Vector out = Vector::Zero(total);
  //- For each basis index with the party digit set to zero, transform the
  //- d-dimensional fiber along that digit.
  for (long base = 0; base < total; ++base) {
    if ((base / stride) % d != 0) continue;
    for (int a = 0; a < d; ++a) {
      Complex sum(0.0, 0.0);
      for (int b = 0; b < d; ++b) {
        sum += unitary(a, b) * state.amplitudes[base + b * stride];
      }
      out[base + a * stride] = sum;
    }
  }
  return PureState{std::move(out), state.dims, state.party_labels};
}

Ensemble eigen_ensemble(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix);
  Ensemble ensemble;
  for (long k = 0; k < solver.eigenvalues().size(); ++k) {
    double lambda = solver.eigenvalues()[k];
    if (lambda < kEigenvalueClip) continue;
    ensemble.weights.push_back(lambda);
    ensemble.members.push_back(
        PureState{solver.eigenvectors().col(k), rho.dims, rho.party_labels});
  }
  return ensemble;
}

int spectral_rank(const DensityMatrix& rho) {
  int rank = 0;
  for (double lambda : spectrum(rho)) {
    if (lambda >= kEigenvalueClip) ++rank;
  }
  return rank;
}

PureState tensor_product(const PureState& left, const PureState& right) {
  const long dl = left.total_dim();
  const long dr = right.total_dim();
  Vector v(dl * dr);
  for (long i = 0; i < dl; ++i) {
    for (long j = 0; j < dr; ++j) {
      v[i * dr + j] = left.amplitudes[i] * right.amplitudes[j];
    }
  }
  std::vector<int> dims(left.dims);
  dims.insert(dims.end(), right.dims.begin(), right.dims.end());
  return PureState{std::move(v), std::move(dims),
                   default_labels(static_cast<int>(left.dims.size() + right.dims.size()))};
}

DensityMatrix resum(const Ensemble& ensemble) {
  if (ensemble.members.empty()) {
    throw DegenerateInputError("cannot resum an empty ensemble");
  }
  const auto& first = ensemble.members.front();
  Matrix acc = Matrix::Zero(first.total_dim(), first.total_dim());
  for (size_t i = 0; i < ensemble.members.size(); ++i) {
    const auto& member = ensemble.members[i];
    acc += ensemble.weights[i] * (member.amplitudes * member.amplitudes.adjoint());
  }
  return DensityMatrix{std::move(acc), first.dims, first.party_labels};
}

}  // namespace gme
