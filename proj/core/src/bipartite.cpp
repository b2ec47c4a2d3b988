#include "gme/bipartite.hpp"

#include <algorithm>
#include <cmath>

namespace gme {

namespace {

void check_cut(const Partition& cut, int num_parties) {
  if (cut.k() != 2) throw PartitionError("bipartite measures require a 2-block cut");
  if (cut.num_parties() != num_parties) {
    throw PartitionError("cut party count does not match the state");
  }
}

//- Marginal of the cut's first block, obtained without coarse-graining:
//- the reduced state's spectrum is all any measure here needs.
DensityMatrix first_block_marginal(const PureState& state, const Partition& cut) {
  return partial_trace(density_of(state), cut.blocks.front());
}

}  // namespace

MeasureKind parse_measure_kind(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "tangle") return MeasureKind::TANGLE;
  if (lower == "concurrence") return MeasureKind::CONCURRENCE;
  if (lower == "eof") return MeasureKind::EoF;
  if (lower == "negativity") return MeasureKind::NEGATIVITY;
  throw InputError("unknown measure name: " + name);
}

std::string measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::TANGLE: return "tangle";
    case MeasureKind::CONCURRENCE: return "concurrence";
    case MeasureKind::EoF: return "eof";
    case MeasureKind::NEGATIVITY: return "negativity";
  }
  return "unknown";
}

double pure_measure(const PureState& state, const Partition& cut,
                    const MeasureDescriptor& d) {
  check_cut(cut, state.num_parties());
  switch (d.kind) {
    case MeasureKind::TANGLE: {
      double tangle = 2.0 * (1.0 - purity(first_block_marginal(state, cut)));
      return std::max(0.0, tangle);
    }
    case MeasureKind::CONCURRENCE: {
      double tangle = 2.0 * (1.0 - purity(first_block_marginal(state, cut)));
      return std::sqrt(std::max(0.0, tangle));
    }
    case MeasureKind::EoF:
      return von_neumann_entropy(first_block_marginal(state, cut));
    case MeasureKind::NEGATIVITY:
      return negativity(density_of(state), cut);
  }
  throw InputError("unhandled measure kind");
}

double negativity(const DensityMatrix& rho, const Partition& cut) {
  check_cut(cut, rho.num_parties());
  DensityMatrix merged = coarse_grain(rho, cut);
  const long da = merged.dims[0];
  const long db = merged.dims[1];

  //- Partial transpose on the first factor; Hermiticity is preserved.
  Matrix pt(da * db, da * db);
  for (long ia = 0; ia < da; ++ia) {
    for (long ib = 0; ib < db; ++ib) {
      for (long ja = 0; ja < da; ++ja) {
        for (long jb = 0; jb < db; ++jb) {
          pt(ia * db + ib, ja * db + jb) = merged.matrix(ja * db + ib, ia * db + jb);
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
  double trace_norm = solver.eigenvalues().cwiseAbs().sum();
  return std::max(0.0, (trace_norm - 1.0) / 2.0);
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dims != std::vector<int>{2, 2}) {
    throw DimensionError("the two-qubit concurrence formula requires dims [2,2]");
  }
  Matrix yy = Matrix::Zero(4, 4);
  //- sigma_y (x) sigma_y in the computational basis.
  yy(0, 3) = Complex(-1, 0);
  yy(1, 2) = Complex(1, 0);
  yy(2, 1) = Complex(1, 0);
  yy(3, 0) = Complex(-1, 0);

  Matrix flipped = yy * rho.matrix.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix> solver(rho.matrix * flipped);
  std::vector<double> roots;
  for (long i = 0; i < 4; ++i) {
    roots.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()[i].real())));
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double mixed_measure(const DensityMatrix& rho, const Partition& cut,
                     const MeasureDescriptor& d, const RoofConfig& cfg) {
  check_cut(cut, rho.num_parties());
  if (spectral_rank(rho) == 1) {
    Ensemble eigens = eigen_ensemble(rho);
    return pure_measure(eigens.members.front(), cut, d);
  }
  if (d.mixed_strategy == MixedStrategy::DIRECT) {
    if (d.kind != MeasureKind::NEGATIVITY) {
      throw StrategyError("only negativity supports the direct mixed-state path; "
                          "use the convex roof for " + measure_name(d.kind));
    }
    return negativity(rho, cut);
  }
  PureFunctional functional = [&cut, &d](const PureState& psi) {
    return pure_measure(psi, cut, d);
  };
  return roof_minimize(rho, functional, cfg).value;
}

}  // namespace gme
