#include "gme/convex_roof.hpp"

#include <cmath>
#include <random>

namespace gme {

namespace {

//- Deterministic standard normal from the raw 64-bit stream (matches the
//- convention used for Haar sampling).
double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& rng) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

//- Thin QR with column phases fixed so the R diagonal is real positive.
//- Maps any full-column-rank n x r matrix to an isometry; the identity
//- block maps to itself, which anchors restart 0 at the eigen-ensemble.
Matrix phase_fixed_isometry(const Matrix& m) {
  const long n = m.rows();
  const long r = m.cols();
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(n, r);
  Matrix rfac = qr.matrixQR().topRows(r).template triangularView<Eigen::Upper>();
  for (long k = 0; k < r; ++k) {
    Complex diag = rfac(k, k);
    double mag = std::abs(diag);
    if (mag > 1e-300) q.col(k) *= diag / mag;
  }
  return q;
}

}  // namespace

Ensemble ensemble_from_isometry(const Ensemble& eigens, const Matrix& isometry) {
  const long r = static_cast<long>(eigens.members.size());
  const long n = isometry.rows();
  if (isometry.cols() != r || n < r) {
    throw IsometryError("isometry must have shape n x r with n >= r = ensemble size");
  }
  if ((isometry.adjoint() * isometry - Matrix::Identity(r, r)).cwiseAbs().maxCoeff() >
      1e-10) {
    throw IsometryError("matrix columns are not orthonormal within 1e-10");
  }
  const auto& first = eigens.members.front();
  const long d = first.total_dim();

  Ensemble out;
  for (long j = 0; j < n; ++j) {
    Vector member = Vector::Zero(d);
    for (long k = 0; k < r; ++k) {
      member += isometry(j, k) * std::sqrt(eigens.weights[k]) *
                eigens.members[k].amplitudes;
    }
    double weight = member.squaredNorm();
    if (weight < 1e-12) continue;
    out.weights.push_back(weight);
    out.members.push_back(
        PureState{member / std::sqrt(weight), first.dims, first.party_labels});
  }
  return out;
}

//- Minimization strategy: decompositions of rho are rows of V * S where S
//- stacks the subnormalized eigenvectors and V is any isometry, so the
//- search space is the isometry manifold. Moves are two-row rotations
//-   row_i <- cos(t) row_i + e^{i phi} sin(t) row_j
//-   row_j <- -e^{-i phi} sin(t) row_i + cos(t) row_j
//- (left multiplication by a two-level unitary), which preserves the
//- constraint exactly and lets each probe re-evaluate only the two touched
//- members. The angle step halves after any sweep with no accepted move;
//- restart 0 starts from the identity, so the result never exceeds the
//- eigen-ensemble average.
RoofResult roof_minimize(const DensityMatrix& rho, const PureFunctional& functional,
                         const RoofConfig& cfg) {
  if (cfg.restarts < 1) throw InputError("roof config requires restarts >= 1");
  if (cfg.tolerance <= 0) throw InputError("roof config requires tolerance > 0");

  Ensemble eigens = eigen_ensemble(rho);
  const long r = static_cast<long>(eigens.members.size());
  RoofResult result;

  if (r == 1) {
    result.value = functional(eigens.members.front());
    result.argmin = eigens;
    result.eigen_average = result.value;
    result.restarts_used = 0;
    result.evaluations = 1;
    return result;
  }

  const long n = cfg.ensemble_size == 0 ? r * r : cfg.ensemble_size;
  if (n < r) throw InputError("roof config ensemble_size must be >= the spectral rank");

  //- Subnormalized eigenvector rows: row k = sqrt(lambda_k) e_k^T, so an
  //- isometry V yields the decomposition members as rows of V * S.
  Matrix sqvecs(r, rho.total_dim());
  for (long k = 0; k < r; ++k) {
    sqvecs.row(k) =
        std::sqrt(eigens.weights[k]) * eigens.members[k].amplitudes.transpose();
  }

  long evaluations = 0;
  auto member_term = [&](const Eigen::RowVectorXcd& row) {
    double weight = row.squaredNorm();
    if (weight < 1e-14) return 0.0;
    ++evaluations;
    PureState member{row.transpose() / std::sqrt(weight), rho.dims,
                     rho.party_labels};
    return weight * functional(member);
  };

  //- Trial phases for the complex mixing coefficient.
  const Complex phases[4] = {Complex(1, 0), Complex(0, 1), Complex(-1, 0),
                             Complex(0, -1)};

  std::mt19937_64 rng(cfg.seed);
  double best_value = 0.0;
  Matrix best_isometry;
  double eigen_average = 0.0;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    Matrix v;
    if (restart == 0) {
      v = Matrix::Zero(n, r);
      v.topRows(r) = Matrix::Identity(r, r);
    } else {
      Matrix g(n, r);
      for (long i = 0; i < n; ++i)
        for (long k = 0; k < r; ++k)
          g(i, k) = Complex(standard_normal(rng), standard_normal(rng));
      v = phase_fixed_isometry(g);
    }

    Matrix members = v * sqvecs;
    std::vector<double> contrib(n);
    double current = 0.0;
    for (long j = 0; j < n; ++j) {
      contrib[j] = member_term(members.row(j));
      current += contrib[j];
    }
    if (restart == 0) eigen_average = current;

    double step = 0.5;
    for (int iteration = 0;
         iteration < cfg.max_iterations && step > cfg.tolerance; ++iteration) {
      bool improved = false;
      for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
          bool accepted = false;
          for (double theta : {step, -step}) {
            double c = std::cos(theta);
            double s = std::sin(theta);
            for (const Complex& phase : phases) {
              Eigen::RowVectorXcd row_i =
                  c * members.row(i) + phase * s * members.row(j);
              Eigen::RowVectorXcd row_j =
                  -std::conj(phase) * s * members.row(i) + c * members.row(j);
              double term_i = member_term(row_i);
              double term_j = member_term(row_j);
              if (term_i + term_j < contrib[i] + contrib[j] - 1e-15) {
                Eigen::RowVectorXcd vrow_i = c * v.row(i) + phase * s * v.row(j);
                Eigen::RowVectorXcd vrow_j =
                    -std::conj(phase) * s * v.row(i) + c * v.row(j);
                v.row(i) = vrow_i;
                v.row(j) = vrow_j;
                members.row(i) = row_i;
                members.row(j) = row_j;
                current += term_i + term_j - contrib[i] - contrib[j];
                contrib[i] = term_i;
                contrib[j] = term_j;
                improved = true;
                accepted = true;
                break;
              }
            }
            if (accepted) break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }

    //- Guard against rounding drift after many rotations.
    current = 0.0;
    for (long j = 0; j < n; ++j) current += member_term(members.row(j));

    if (restart == 0 || current < best_value) {
      best_value = current;
      best_isometry = phase_fixed_isometry(v);
    }
  }

  result.value = best_value;
  result.argmin = ensemble_from_isometry(eigens, best_isometry);
  result.eigen_average = eigen_average;
  result.restarts_used = cfg.restarts;
  result.evaluations = evaluations;
  return result;
}

}  // namespace gme
