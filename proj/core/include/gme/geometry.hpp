#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "gme/bipartite.hpp"
#include "gme/quadripartite.hpp"
#include "gme/state.hpp"

namespace gme {

//- Heron geometry of three nonnegative edge lengths. circumradius and
//- inradius are only meaningful when degenerate is false.
struct TriangleGeom {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double area = 0.0;
  double circumradius = 0.0;
  double inradius = 0.0;
  bool degenerate = true;
};

//- Saturation exponents beyond this value are reported as exactly this
//- value: the relation is numerically indistinguishable from holding at
//- every exponent.
inline constexpr double kGammaCap = 1e6;

//- Tetrahedron structure classes: A = proper tetrahedron (every face-area
//- sum strictly dominates the opposite face), B1 = some equality with all
//- faces positive, B2 = reduced to a regular triangle (a vanishing edge
//- with the paired two-party entanglement positive), B3 = reduced to a
//- point (fully separable), C = some strict area reversal.
enum class TetraCase { A, B1, B2, B3, C };

std::string tetra_case_name(TetraCase c);

//- Skeleton edge lengths keyed by the pair of singleton parties of each
//- tripartition, in the order matching EdgeVector4Tri:
//-   A|B|CD -> AB, A|BC|D -> AD, AC|B|D -> BD,
//-   AB|C|D -> CD, AD|B|C -> BC, A|BD|C -> AC.
inline constexpr std::array<const char*, 6> kTetraEdgePairs{"AB", "AD", "BD",
                                                            "CD", "BC", "AC"};
//- Face opposite each vertex, in vertex order A, B, C, D.
inline constexpr std::array<const char*, 4> kTetraFaces{"BCD", "ACD", "ABD", "ABC"};

struct TetraGeom {
  std::array<double, 6> tri_values{};  //- raw tripartition values, fixed order
  double exponent = 1.0;
  std::array<double, 6> edges{};       //- tri_values^exponent, kTetraEdgePairs order
  std::array<double, 4> face_areas{};  //- kTetraFaces order
  TetraCase case_label = TetraCase::B3;
  std::optional<double> volume;        //- absent when not realizable in 3-space
  std::optional<double> reduced_edge;  //- side of the surviving triangle (case B2)
};

//- True iff max(x,y,z)^gamma <= sum of the other two gamma-th powers,
//- with 1e-12 slack.
bool triangle_check(double x, double y, double z, double gamma);

//- The unique exponent solving (y/x)^g + (z/x)^g = 1 by bisection to
//- absolute width 1e-10. Requires x strictly largest: throws
//- NotApplicableError when x <= max(y,z) (the relation then holds for
//- every exponent) and InfeasibleError when min(y,z) = 0 with x positive
//- (no exponent works). Saturates at 1e6 for near-ties of x and max(y,z).
double gamma_star(double x, double y, double z);

//- Reorders its arguments and returns the saturation exponent, or nullopt
//- where the relation is unconstrained. Still throws InfeasibleError on
//- the zero-edge branch.
std::optional<double> try_gamma_star(double x, double y, double z);

//- Perturbative local search applied around the best sample.
struct RefineConfig {
  int iterations = 200;
  double initial_step = 0.05;
};

struct AlphaEstimate {
  double alpha_hat = 0.0;
  PureState witness;
  std::uint64_t witness_seed = 0;
  long samples_used = 0;  //- samples with a well-defined saturation exponent
  long skipped = 0;       //- samples where the relation is unconstrained
  long violations = 0;    //- samples violating the triangle relation at gamma=1
};

//- Sample-minimum of gamma_star over Haar-random pure states of the given
//- dims (sample i uses seed + i), refined by a shrinking-step local
//- search. The result is an upper bound on the true infimum, never a
//- certificate. Throws NotApplicableError if no sample qualifies,
//- InputError if samples < 1.
AlphaEstimate alpha_estimate(const std::vector<int>& dims, const MeasureDescriptor& d,
                             long samples, std::uint64_t seed,
                             const RefineConfig& refine = {});

//- Heron area with the numerically stable ordering, circumradius
//- abc/(4 area), inradius 2 area/(a+b+c); degenerate when area <= 1e-14.
//- Throws NotATriangle when the edges violate the triangle relation.
TriangleGeom triangle_geom(double a, double b, double c);

//- Builds the tetrahedron skeleton from six tripartition values at the
//- given exponent and classifies it. Zero-edge reduction is decided
//- before the area trichotomy, matching the case analysis: a vanishing
//- tripartition value forces the five others to agree with the paired
//- two-party entanglement, collapsing the skeleton to a regular triangle
//- (B2) or a point (B3). Faces violating their triangle relation beyond
//- 1e-9 raise FaceInequalityViolation.
TetraGeom tetra_from_tripartitions(const EdgeVector4Tri& e, double exponent);

//- State-aware classification: evaluates the six tripartition values,
//- then additionally detects pair-pair factorization (a balanced
//- bipartition value of zero with an internally entangled pair), which
//- reduces the structure to that pair's regular triangle even though no
//- tripartition value vanishes. Needed because biseparable-but-not-
//- product states (two entangled pairs) are invisible to the edge-only
//- reduction.
TetraGeom tetra_analysis(const PureState& state, TriKind kind,
                         const MeasureDescriptor& d, double exponent);

//- Six lengths keyed by vertex pairs.
struct TetraEdges {
  double ab = 0.0, ac = 0.0, ad = 0.0, bc = 0.0, bd = 0.0, cd = 0.0;
};

//- sqrt(CM/288) from the Cayley-Menger determinant; nullopt when
//- CM < -1e-12 (the lengths do not embed in 3-space).
std::optional<double> cayley_menger_volume(const TetraEdges& edges);

//- Balanced-cut triangle of a 4-party pure state (Proposition-2 layer)
//- plus the realizability of the opposite-edges-equal tetrahedron built
//- from four copies of it.
struct BipTriangle4 {
  std::array<double, 3> cut_values{};  //- AB|CD, AC|BD, AD|BC
  TriangleGeom triangle;
  bool iso_realizable = false;
  std::optional<double> iso_volume;
};

//- Requires a spectrum-determined measure kind (TANGLE, CONCURRENCE or
//- EoF; the hypothesis behind the balanced-cut triangle relation), else
//- StrategyError. Throws NotATriangle if the relation fails at the given
//- exponent — that would be a counterexample worth investigating.
BipTriangle4 bip_triangle_4(const PureState& state, const MeasureDescriptor& d,
                            double exponent);

}  // namespace gme
