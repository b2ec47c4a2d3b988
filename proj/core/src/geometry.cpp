#include "gme/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>

namespace gme {

namespace {


double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& rng) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

//- Kahan's numerically stable Heron form; edges must arrive sorted
//- descending. Clamps tiny negative products caused by roundoff.
double stable_heron_area(double a, double b, double c) {
  double term = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return 0.25 * std::sqrt(std::max(0.0, term));
}

double face_area(double a, double b, double c) {
  std::array<double, 3> e{a, b, c};
  std::sort(e.begin(), e.end(), std::greater<double>());
  return stable_heron_area(e[0], e[1], e[2]);
}

}  // namespace

std::string tetra_case_name(TetraCase c) {
  switch (c) {
    case TetraCase::A: return "A";
    case TetraCase::B1: return "B1";
    case TetraCase::B2: return "B2";
    case TetraCase::B3: return "B3";
    case TetraCase::C: return "C";
  }
  return "?";
}

bool triangle_check(double x, double y, double z, double gamma) {
  std::array<double, 3> e{x, y, z};
  std::sort(e.begin(), e.end(), std::greater<double>());
  return std::pow(e[0], gamma) <=
         std::pow(e[1], gamma) + std::pow(e[2], gamma) + 1e-12;
}

double gamma_star(double x, double y, double z) {
  double big = std::max(y, z);
  double small = std::min(y, z);
  if (!(x > big)) {
    throw NotApplicableError(
        "saturation exponent undefined: the largest edge is not strict, so the "
        "relation holds for every exponent");
  }
  if (small <= 0.0) {
    throw InfeasibleError(
        "saturation exponent does not exist: a zero edge with a strictly larger "
        "opposite edge violates the relation at every exponent");
  }
  const double p = big / x;
  const double q = small / x;
  auto shortfall = [p, q](double g) { return std::pow(p, g) + std::pow(q, g) - 1.0; };

  double lo = 0.0;
  double hi = 1.0;
  while (shortfall(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi >= kGammaCap) return kGammaCap;
  }
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    if (shortfall(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> try_gamma_star(double x, double y, double z) {
  std::array<double, 3> e{x, y, z};
  std::sort(e.begin(), e.end(), std::greater<double>());
  //- No finite positive saturation exponent exists when the largest edge
  //- is tied (every exponent works) or when an edge is exactly zero under
  //- a positive maximum (no exponent works).
  if (!(e[0] > e[1])) return std::nullopt;
  if (e[2] <= 0.0) return std::nullopt;
  return gamma_star(e[0], e[1], e[2]);
}

AlphaEstimate alpha_estimate(const std::vector<int>& dims, const MeasureDescriptor& d,
                             long samples, std::uint64_t seed,
                             const RefineConfig& refine) {
  if (samples < 1) throw InputError("alpha_estimate requires at least one sample");

  AlphaEstimate best;
  bool found = false;
  for (long i = 0; i < samples; ++i) {
    std::uint64_t sample_seed = seed + static_cast<std::uint64_t>(i);
    PureState psi = haar_random_pure(dims, sample_seed);
    EdgeVector3 e = edge_vector_3(psi, d);
    if (!triangle_check(e.x, e.y, e.z, 1.0)) ++best.violations;
    auto g = try_gamma_star(e.x, e.y, e.z);
    if (!g) {
      ++best.skipped;
      continue;
    }
    ++best.samples_used;
    if (!found || *g < best.alpha_hat) {
      best.alpha_hat = *g;
      best.witness = psi;
      best.witness_seed = sample_seed;
      found = true;
    }
  }
  if (!found) {
    throw NotApplicableError(
        "no sample admits a saturation exponent; the relation is unconstrained on "
        "this batch");
  }

  //- Perturb the best sample to tighten the upper bound; the step shrinks
  //- on failure and grows mildly on success.
  std::mt19937_64 rng(best.witness_seed ^ 0x9e3779b97f4a7c15ULL);
  double step = refine.initial_step;
  const long dim = best.witness.total_dim();
  for (int it = 0; it < refine.iterations && step > 1e-12; ++it) {
    Vector perturbed = best.witness.amplitudes;
    for (long k = 0; k < dim; ++k) {
      perturbed[k] += Complex(step * standard_normal(rng), step * standard_normal(rng));
    }
    double norm = perturbed.norm();
    if (norm < 1e-12) continue;
    PureState candidate{perturbed / norm, best.witness.dims, best.witness.party_labels};
    EdgeVector3 e = edge_vector_3(candidate, d);
    auto g = try_gamma_star(e.x, e.y, e.z);
    if (g && *g < best.alpha_hat) {
      best.alpha_hat = *g;
      best.witness = candidate;
      step = std::min(step * 1.2, refine.initial_step);
    } else {
      step *= 0.8;
    }
  }
  return best;
}

TriangleGeom triangle_geom(double a, double b, double c) {
  if (a < 0 || b < 0 || c < 0) throw InputError("edge lengths must be nonnegative");
  if (!triangle_check(a, b, c, 1.0)) {
    throw NotATriangle("edges (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                       std::to_string(c) + ") violate the triangle relation");
  }
  TriangleGeom g;
  g.a = a;
  g.b = b;
  g.c = c;
  g.area = face_area(a, b, c);
  g.degenerate = g.area <= 1e-14;
  if (!g.degenerate) {
    g.circumradius = a * b * c / (4.0 * g.area);
    g.inradius = 2.0 * g.area / (a + b + c);
  }
  return g;
}

namespace {

//- Face edge indices into the kTetraEdgePairs order (AB,AD,BD,CD,BC,AC),
//- listed for the faces BCD, ACD, ABD, ABC (opposite A, B, C, D).
constexpr int kFaceEdges[4][3] = {
    {4, 2, 3},  //- BCD: BC, BD, CD
    {5, 1, 3},  //- ACD: AC, AD, CD
    {0, 1, 2},  //- ABD: AB, AD, BD
    {0, 5, 4},  //- ABC: AB, AC, BC
};

}  // namespace

TetraGeom tetra_from_tripartitions(const EdgeVector4Tri& e, double exponent) {
  if (exponent <= 0) throw InputError("the exponent must be positive");
  TetraGeom geom;
  geom.tri_values = e.values;
  geom.exponent = exponent;
  for (int i = 0; i < 6; ++i) {
    if (e.values[i] < 0) throw InputError("tripartition values must be nonnegative");
    geom.edges[i] = std::pow(e.values[i], exponent);
  }

  //- Zero-edge reduction precedes the area trichotomy.
  double max_value = *std::max_element(e.values.begin(), e.values.end());
  double min_value = *std::min_element(e.values.begin(), e.values.end());
  if (max_value <= kZeroEdgeTol) {
    geom.case_label = TetraCase::B3;
    geom.volume = 0.0;
    return geom;
  }
  if (min_value <= kZeroEdgeTol) {
    //- A vanishing tripartition value collapses the skeleton onto the
    //- regular triangle whose side is the (equal) remaining values.
    geom.case_label = TetraCase::B2;
    double side = 0.0;
    for (int i = 0; i < 6; ++i) {
      if (e.values[i] > kZeroEdgeTol) side = std::max(side, geom.edges[i]);
    }
    geom.reduced_edge = side;
    for (int f = 0; f < 4; ++f) {
      geom.face_areas[f] = face_area(geom.edges[kFaceEdges[f][0]],
                                     geom.edges[kFaceEdges[f][1]],
                                     geom.edges[kFaceEdges[f][2]]);
    }
    //- Two vertices coincide, so the three-volume vanishes identically;
    //- skip the determinant to keep the collapse noise-free.
    geom.volume = 0.0;
    return geom;
  }

  for (int f = 0; f < 4; ++f) {
    double ea = geom.edges[kFaceEdges[f][0]];
    double eb = geom.edges[kFaceEdges[f][1]];
    double ec = geom.edges[kFaceEdges[f][2]];
    double longest = std::max({ea, eb, ec});
    if (longest > ea + eb + ec - longest + 1e-9) {
      throw FaceInequalityViolation(
          std::string("face ") + kTetraFaces[f] +
          " violates its triangle relation beyond 1e-9 at the given exponent");
    }
    geom.face_areas[f] = face_area(ea, eb, ec);
  }

  double max_area = *std::max_element(geom.face_areas.begin(), geom.face_areas.end());
  double tol = 1e-9 * std::max(1.0, max_area);
  bool equality = false;
  bool reversal = false;
  for (int v = 0; v < 4; ++v) {
    //- Faces containing vertex v are the three whose index differs from v.
    double sum = 0.0;
    for (int f = 0; f < 4; ++f) {
      if (f != v) sum += geom.face_areas[f];
    }
    double diff = sum - geom.face_areas[v];
    if (diff < -tol) reversal = true;
    else if (diff <= tol) equality = true;
  }
  geom.case_label = reversal ? TetraCase::C : (equality ? TetraCase::B1 : TetraCase::A);
  geom.volume = cayley_menger_volume(TetraEdges{geom.edges[0], geom.edges[5],
                                                geom.edges[1], geom.edges[4],
                                                geom.edges[2], geom.edges[3]});
  return geom;
}

TetraGeom tetra_analysis(const PureState& state, TriKind kind,
                         const MeasureDescriptor& d, double exponent) {
  EdgeVector4Tri e = edge_vector_4_tri(state, kind, d);
  TetraGeom geom = tetra_from_tripartitions(e, exponent);
  if (geom.case_label == TetraCase::B2 || geom.case_label == TetraCase::B3) {
    return geom;
  }

  //- Pair-pair factorization: a balanced cut of value zero splits the
  //- state into two pairs; an entangled pair then plays the role of the
  //- surviving regular triangle even though no tripartition value is
  //- zero (the zero-edge reduction above cannot see this case).
  const std::array<std::array<int, 2>, 3> pair_cuts{{{0, 1}, {0, 2}, {0, 3}}};
  DensityMatrix rho = density_of(state);
  for (const auto& pair : pair_cuts) {
    std::vector<int> first(pair.begin(), pair.end());
    std::vector<int> second;
    for (int p = 0; p < 4; ++p) {
      if (std::find(first.begin(), first.end(), p) == first.end()) second.push_back(p);
    }
    Partition cut = make_partition({first, second});
    if (pure_measure(state, cut, d) > kZeroEdgeTol) continue;

    //- The cut is product, so each pair's reduced state is pure.
    double best_pair = 0.0;
    for (const auto& block : {first, second}) {
      DensityMatrix reduced = partial_trace(rho, block);
      Ensemble eigens = eigen_ensemble(reduced);
      size_t dominant = std::distance(
          eigens.weights.begin(),
          std::max_element(eigens.weights.begin(), eigens.weights.end()));
      double value =
          pure_measure(eigens.members[dominant], make_partition({{0}, {1}}), d);
      best_pair = std::max(best_pair, value);
    }
    if (best_pair > kZeroEdgeTol) {
      geom.case_label = TetraCase::B2;
      geom.reduced_edge = std::pow(best_pair, exponent);
      geom.volume = 0.0;
      return geom;
    }
  }
  return geom;
}

std::optional<double> cayley_menger_volume(const TetraEdges& edges) {
  auto sq = [](double v) { return v * v; };
  Eigen::Matrix<double, 5, 5> m;
  m << 0, 1, 1, 1, 1,
       1, 0, sq(edges.ab), sq(edges.ac), sq(edges.ad),
       1, sq(edges.ab), 0, sq(edges.bc), sq(edges.bd),
       1, sq(edges.ac), sq(edges.bc), 0, sq(edges.cd),
       1, sq(edges.ad), sq(edges.bd), sq(edges.cd), 0;
  double cm = m.determinant();
  if (cm < -1e-12) return std::nullopt;
  return std::sqrt(std::max(0.0, cm) / 288.0);
}

BipTriangle4 bip_triangle_4(const PureState& state, const MeasureDescriptor& d,
                            double exponent) {
  if (state.num_parties() != 4) {
    throw PartitionError("the balanced-cut triangle requires exactly 4 parties");
  }
  if (d.kind == MeasureKind::NEGATIVITY) {
    throw StrategyError(
        "the balanced-cut triangle requires a measure determined by the reduced-state "
        "spectrum (tangle, concurrence or eof)");
  }
  if (exponent <= 0) throw InputError("the exponent must be positive");

  BipTriangle4 out;
  const std::array<Partition, 3> cuts{make_partition({{0, 1}, {2, 3}}),
                                      make_partition({{0, 2}, {1, 3}}),
                                      make_partition({{0, 3}, {1, 2}})};
  std::array<double, 3> lengths{};
  for (int i = 0; i < 3; ++i) {
    out.cut_values[i] = pure_measure(state, cuts[i], d);
    lengths[i] = std::pow(out.cut_values[i], exponent);
  }
  out.triangle = triangle_geom(lengths[0], lengths[1], lengths[2]);

  //- Four congruent copies of the triangle assemble into the skeleton
  //- with opposite edges equal; realizability is a Cayley-Menger test.
  auto volume = cayley_menger_volume(TetraEdges{lengths[0], lengths[1], lengths[2],
                                                lengths[2], lengths[1], lengths[0]});
  out.iso_realizable = volume.has_value();
  out.iso_volume = volume;
  return out;
}

}  // namespace gme
