//- Triangle/tetrahedron layer: relation checks, critical exponents,
//- geometry, case classification, volume.
#include <cmath>

#include <doctest.h>

#include "gme/bipartite.hpp"
#include "gme/errors.hpp"
#include "gme/geometry.hpp"
#include "gme/quadripartite.hpp"
#include "gme/state.hpp"
#include "test_helpers.hpp"

using namespace gme;

namespace {
const MeasureDescriptor kTangle{MeasureKind::TANGLE, MixedStrategy::CONVEX_ROOF};

PureState bell_bell() {
  PureState bell = gme::test::two_qubit_schmidt(M_PI / 4.0);
  return tensor_product(bell, bell);
}

PureState zero_times_ghz() {
  Vector z = Vector::Zero(2);
  z(0) = 1.0;
  return tensor_product(make_pure_state(z, {2}), named_state(NamedState::GHZ));
}

PureState bell_zero_zero() {
  Vector z = Vector::Zero(2);
  z(0) = 1.0;
  PureState zero = make_pure_state(z, {2});
  return tensor_product(tensor_product(gme::test::two_qubit_schmidt(M_PI / 4.0), zero),
                        zero);
}
}  // namespace

TEST_CASE("triangle_check") {
  CHECK(triangle_check(1.0, 1.0, 1.0, 1.0));
  CHECK(triangle_check(1.0, 1.0, 1.0, 50.0));
  CHECK(triangle_check(1.0, 0.5, 0.5, 1.0));   // degenerate counts as satisfied
  CHECK_FALSE(triangle_check(1.0, 0.5, 0.5, 2.0));
  CHECK(triangle_check(0.0, 0.0, 0.0, 1.0));
}

TEST_CASE("gamma_star frozen values") {
  CHECK(gamma_star(1.0, 0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gamma_star(1.0, 0.75, 0.75) ==
        doctest::Approx(2.4094208396532095).epsilon(1e-8));
  CHECK(gamma_star(1.0, 0.75, 0.5) ==
        doctest::Approx(1.5071265916386531).epsilon(1e-8));

  CHECK_THROWS_AS(gamma_star(1.0, 1.0, 0.5), NotApplicableError);
  CHECK_THROWS_AS(gamma_star(0.5, 1.0, 0.75), NotApplicableError);
  CHECK_THROWS_AS(gamma_star(1.0, 0.5, 0.0), InfeasibleError);

  //- try_gamma_star sorts its arguments and declines ties.
  auto sorted = try_gamma_star(0.75, 1.0, 0.5);
  REQUIRE(sorted.has_value());
  CHECK(*sorted == doctest::Approx(1.5071265916386531).epsilon(1e-8));
  CHECK_FALSE(try_gamma_star(1.0, 1.0, 1.0).has_value());
  CHECK_FALSE(try_gamma_star(1.0, 0.5, 0.0).has_value());

  //- Bracket doubling: the root here lies in (8, 13), beyond the initial
  //- bracket [0, 1] (0.9999^8 + 0.5^8 > 1 > 0.9999^13 + 0.5^13).
  double grown = gamma_star(1.0, 0.9999, 0.5);
  CHECK(grown > 8.0);
  CHECK(grown < 13.0);

  //- One-ulp-below edges: the exponent is astronomically large, so the
  //- search saturates at the cap instead of looping forever.
  double ulp = std::nextafter(1.0, 0.0);
  double huge = gamma_star(1.0, ulp, ulp);
  CHECK(huge >= 1e5);
}

TEST_CASE("triangle_geom identities") {
  TriangleGeom eq = triangle_geom(1.0, 1.0, 1.0);
  CHECK(eq.area == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
  CHECK(eq.circumradius == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(eq.inradius == doctest::Approx(0.5 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(eq.circumradius * eq.inradius == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK_FALSE(eq.degenerate);

  //- The W edge triangle: 2Rr equals the ratio composite.
  double s = 8.0 / 9.0;
  TriangleGeom w = triangle_geom(s, s, s);
  CHECK(2.0 * w.circumradius * w.inradius ==
        doctest::Approx(s * s * s / (3.0 * s)).epsilon(1e-12));

  TriangleGeom flat = triangle_geom(1.0, 0.5, 0.5);
  CHECK(flat.degenerate);
  CHECK(flat.area == doctest::Approx(0.0).epsilon(1e-14));

  CHECK_THROWS_AS(triangle_geom(1.0, 0.4, 0.4), NotATriangle);
  CHECK_THROWS_AS(triangle_geom(-1.0, 1.0, 1.0), InputError);
}

TEST_CASE("cayley_menger_volume") {
  //- Regular tetrahedron, edge 1: V = 1/(6 sqrt 2).
  TetraEdges unit{1, 1, 1, 1, 1, 1};
  auto v = cayley_menger_volume(unit);
  REQUIRE(v.has_value());
  CHECK(*v == doctest::Approx(0.1178511301977579).epsilon(1e-12));

  TetraEdges scaled{1.5, 1.5, 1.5, 1.5, 1.5, 1.5};
  CHECK(*cayley_menger_volume(scaled) ==
        doctest::Approx(0.3977475644174329).epsilon(1e-12));

  //- Flat square with diagonals: embeddable but three-volume zero.
  double d = std::sqrt(2.0);
  TetraEdges flat{1, d, 1, 1, d, 1};
  auto fv = cayley_menger_volume(flat);
  REQUIRE(fv.has_value());
  CHECK(*fv == doctest::Approx(0.0).epsilon(1e-10));

  //- One absurdly long edge cannot close a tetrahedron.
  TetraEdges broken{10, 1, 1, 1, 1, 1};
  CHECK_FALSE(cayley_menger_volume(broken).has_value());
}

TEST_CASE("tetra_from_tripartitions case cascade") {
  //- GHZ4: all six entries 3/2, regular tetrahedron, case A.
  EdgeVector4Tri ghz4 = edge_vector_4_tri(named_state(NamedState::GHZ4), TriKind::TAU3);
  TetraGeom a = tetra_from_tripartitions(ghz4, 1.0);
  CHECK(a.case_label == TetraCase::A);
  REQUIRE(a.volume.has_value());
  CHECK(*a.volume == doctest::Approx(0.3977475644174329).epsilon(1e-9));
  for (double f : a.face_areas) {
    CHECK(f == doctest::Approx(std::sqrt(3.0) / 4.0 * 2.25).epsilon(1e-9));
  }

  //- Bell x |0> x |0>: one entry vanishes, reduced description, case B2.
  EdgeVector4Tri bz = edge_vector_4_tri(bell_zero_zero(), TriKind::TAU3);
  TetraGeom b2 = tetra_from_tripartitions(bz, 1.0);
  CHECK(b2.case_label == TetraCase::B2);
  REQUIRE(b2.reduced_edge.has_value());
  CHECK(*b2.reduced_edge == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(b2.volume.has_value());
  CHECK(*b2.volume == 0.0);

  //- Fully product state: everything zero, case B3.
  Vector v = Vector::Zero(16);
  v(0) = 1.0;
  EdgeVector4Tri zero =
      edge_vector_4_tri(make_pure_state(v, {2, 2, 2, 2}), TriKind::TAU3);
  TetraGeom b3 = tetra_from_tripartitions(zero, 1.0);
  CHECK(b3.case_label == TetraCase::B3);
  REQUIRE(b3.volume.has_value());
  CHECK(*b3.volume == doctest::Approx(0.0).epsilon(1e-12));

  //- A face with one entry above the sum of the other two is rejected.
  EdgeVector4Tri bad{{3.0, 1.0, 1.0, 3.0, 1.0, 1.0}, TriKind::TAU3};
  CHECK_THROWS_AS(tetra_from_tripartitions(bad, 1.0), FaceInequalityViolation);
}

TEST_CASE("tetra_analysis refines pair-pair products") {
  //- Bell x Bell: no tripartition entry vanishes (crossed entries 7/4), but
  //- the AB|CD cut does, with an entangled AB pair; the state-aware layer
  //- reports the reduced description with the pair tangle as edge.
  TetraGeom bb = tetra_analysis(bell_bell(), TriKind::TAU3, kTangle, 1.0);
  CHECK(bb.case_label == TetraCase::B2);
  REQUIRE(bb.reduced_edge.has_value());
  CHECK(*bb.reduced_edge == doctest::Approx(1.0).epsilon(1e-9));

  //- |0> x GHZ stays a genuine tetrahedron under the refinement: no
  //- balanced cut vanishes (AB|CD tangle is 1).
  TetraGeom zg = tetra_analysis(zero_times_ghz(), TriKind::TAU3, kTangle, 1.0);
  CHECK(zg.case_label == TetraCase::A);
  REQUIRE(zg.volume.has_value());
  //- Apex at distance 1 over an equilateral base of side 3/2.
  CHECK(*zg.volume == doctest::Approx(0.16237976320958225).epsilon(1e-9));

  TetraGeom g4 = tetra_analysis(named_state(NamedState::GHZ4), TriKind::TAU3,
                                kTangle, 1.0);
  CHECK(g4.case_label == TetraCase::A);
}

TEST_CASE("bip_triangle_4 balanced-cut triangle") {
  BipTriangle4 ghz4 = bip_triangle_4(named_state(NamedState::GHZ4), kTangle, 1.0);
  CHECK(ghz4.cut_values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ghz4.cut_values[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ghz4.cut_values[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ghz4.triangle.area == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
  CHECK(ghz4.iso_realizable);
  REQUIRE(ghz4.iso_volume.has_value());
  CHECK(*ghz4.iso_volume == doctest::Approx(0.1178511301977579).epsilon(1e-12));

  //- Bell x Bell: the pair cut carries no tangle, the crossed cuts carry
  //- two bells each; the triangle degenerates.
  BipTriangle4 bb = bip_triangle_4(bell_bell(), kTangle, 1.0);
  CHECK(bb.cut_values[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(bb.cut_values[1] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(bb.cut_values[2] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(bb.triangle.degenerate);
  CHECK(bb.iso_realizable);
  REQUIRE(bb.iso_volume.has_value());
  CHECK(*bb.iso_volume == doctest::Approx(0.0).epsilon(1e-10));

  MeasureDescriptor neg{MeasureKind::NEGATIVITY, MixedStrategy::DIRECT};
  CHECK_THROWS_AS(bip_triangle_4(named_state(NamedState::GHZ4), neg, 1.0),
                  StrategyError);
}

TEST_CASE("alpha_estimate") {
  MeasureDescriptor d = kTangle;
  AlphaEstimate est = alpha_estimate({2, 2, 2}, d, 200, 7, RefineConfig{50, 0.05});
  CHECK(est.alpha_hat >= 1.0 - 1e-9);
  CHECK(est.samples_used + est.skipped == 200);
  CHECK(est.violations == 0);
  CHECK(est.witness.num_parties() == 3);

  AlphaEstimate again = alpha_estimate({2, 2, 2}, d, 200, 7, RefineConfig{50, 0.05});
  CHECK(est.alpha_hat == again.alpha_hat);
  CHECK(est.witness_seed == again.witness_seed);

  CHECK_THROWS_AS(alpha_estimate({2, 2, 2}, d, 0, 7, RefineConfig{}), InputError);
}

TEST_CASE("tetra case names") {
  CHECK(std::string(tetra_case_name(TetraCase::A)) == "A");
  CHECK(std::string(tetra_case_name(TetraCase::B1)) == "B1");
  CHECK(std::string(tetra_case_name(TetraCase::B2)) == "B2");
  CHECK(std::string(tetra_case_name(TetraCase::B3)) == "B3");
  CHECK(std::string(tetra_case_name(TetraCase::C)) == "C");
}
