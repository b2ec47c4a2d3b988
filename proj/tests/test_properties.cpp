//- Cross-module invariants on random inputs.
#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "gme/bipartite.hpp"
#include "gme/convex_roof.hpp"
#include "gme/errors.hpp"
#include "gme/geometry.hpp"
#include "gme/partition.hpp"
#include "gme/quadripartite.hpp"
#include "gme/state.hpp"
#include "gme/tripartite.hpp"
#include "test_helpers.hpp"

using namespace gme;
using gme::test::permute_parties;
using gme::test::random_unitary;
using gme::test::uniform01;

namespace {
const MeasureDescriptor kTangle{MeasureKind::TANGLE, MixedStrategy::CONVEX_ROOF};
}

TEST_CASE("Schmidt symmetry of complementary marginals") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 50; ++rep) {
    PureState psi = haar_random_pure({2, 3, 2}, rng);
    DensityMatrix rho = density_of(psi);
    auto left = spectrum(partial_trace(rho, {0}));
    auto right = spectrum(partial_trace(rho, {1, 2}));
    //- Compare nonzero tails: the larger side pads with zeros.
    std::vector<double> lnz, rnz;
    for (double v : left)
      if (v > 1e-9) lnz.push_back(v);
    for (double v : right)
      if (v > 1e-9) rnz.push_back(v);
    REQUIRE(lnz.size() == rnz.size());
    for (size_t i = 0; i < lnz.size(); ++i) {
      CHECK(lnz[i] == doctest::Approx(rnz[i]).epsilon(1e-9));
    }
    CHECK(purity(partial_trace(rho, {0})) ==
          doctest::Approx(purity(partial_trace(rho, {1, 2}))).epsilon(1e-9));
  }
}

TEST_CASE("purity subadditivity across a 3-qubit split") {
  //- 1 + Tr(rho_AB^2) >= Tr(rho_A^2) + Tr(rho_B^2) on pure 3-qubit states.
  std::mt19937_64 rng(103);
  int violations = 0;
  for (int rep = 0; rep < 2000; ++rep) {
    DensityMatrix rho = density_of(haar_random_pure({2, 2, 2}, rng));
    double ab = purity(partial_trace(rho, {0, 1}));
    double a = purity(partial_trace(rho, {0}));
    double b = purity(partial_trace(rho, {1}));
    if (1.0 + ab < a + b - 1e-10) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("local unitaries preserve every composite") {
  std::mt19937_64 rng(107);
  for (int rep = 0; rep < 25; ++rep) {
    PureState psi = haar_random_pure({2, 2, 2}, rng);
    PureState rotated = psi;
    for (int p = 0; p < 3; ++p) {
      rotated = apply_local_unitary(rotated, p, random_unitary(2, rng));
    }
    EdgeVector3 e1 = edge_vector_3(psi, kTangle);
    EdgeVector3 e2 = edge_vector_3(rotated, kTangle);
    CHECK(e1.x == doctest::Approx(e2.x).epsilon(1e-9));
    CHECK(e1.y == doctest::Approx(e2.y).epsilon(1e-9));
    CHECK(e1.z == doctest::Approx(e2.z).epsilon(1e-9));
    CHECK(f123(e1, CompositeVariant::RATIO) ==
          doctest::Approx(f123(e2, CompositeVariant::RATIO)).epsilon(1e-9));
    CHECK(tau3(psi) == doctest::Approx(tau3(rotated)).epsilon(1e-9));
    CHECK(ef3(psi) == doctest::Approx(ef3(rotated)).epsilon(1e-9));
  }
}

TEST_CASE("party permutations permute edges and fix composites") {
  std::mt19937_64 rng(109);
  const std::vector<std::vector<int>> perms3 = {{1, 0, 2}, {2, 1, 0}, {1, 2, 0}};
  for (int rep = 0; rep < 10; ++rep) {
    PureState psi = haar_random_pure({2, 2, 2}, rng);
    EdgeVector3 e = edge_vector_3(psi, kTangle);
    for (const auto& perm : perms3) {
      PureState sigma = permute_parties(psi, perm);
      EdgeVector3 ep = edge_vector_3(sigma, kTangle);
      //- Same multiset of edges...
      std::vector<double> a{e.x, e.y, e.z}, b{ep.x, ep.y, ep.z};
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      for (int i = 0; i < 3; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
      //- ...and identical symmetric combiners.
      CHECK(f123(e, CompositeVariant::PRODUCT) ==
            doctest::Approx(f123(ep, CompositeVariant::PRODUCT)).epsilon(1e-9));
      CHECK(e123(e) == doctest::Approx(e123(ep)).epsilon(1e-9));
      CHECK(eg123(e) == doctest::Approx(eg123(ep)).epsilon(1e-9));
    }
  }

  const std::vector<std::vector<int>> perms4 = {{1, 0, 2, 3}, {3, 2, 1, 0},
                                                {1, 2, 3, 0}};
  for (int rep = 0; rep < 5; ++rep) {
    PureState psi = haar_random_pure({2, 2, 2, 2}, rng);
    EdgeVector4Bip eb = edge_vector_4_bip(psi, kTangle);
    EdgeVector4Tri et = edge_vector_4_tri(psi, TriKind::TAU3);
    for (const auto& perm : perms4) {
      PureState sigma = permute_parties(psi, perm);
      EdgeVector4Bip pb = edge_vector_4_bip(sigma, kTangle);
      EdgeVector4Tri pt = edge_vector_4_tri(sigma, TriKind::TAU3);
      CHECK(f1234_2(eb, CompositeVariant::RATIO) ==
            doctest::Approx(f1234_2(pb, CompositeVariant::RATIO)).epsilon(1e-9));
      CHECK(e1234_2(eb) == doctest::Approx(e1234_2(pb)).epsilon(1e-9));
      CHECK(f1234_3(et, CompositeVariant::PRODUCT) ==
            doctest::Approx(f1234_3(pt, CompositeVariant::PRODUCT)).epsilon(1e-9));
      CHECK(e1234_3(et) == doctest::Approx(e1234_3(pt)).epsilon(1e-9));
    }
  }
}

TEST_CASE("combiners are monotone under edgewise decrease") {
  std::mt19937_64 rng(113);
  for (int rep = 0; rep < 1000; ++rep) {
    EdgeVector3 e{uniform01(rng) * 2, uniform01(rng) * 2, uniform01(rng) * 2,
                  MeasureKind::TANGLE};
    EdgeVector3 smaller{e.x * uniform01(rng), e.y * uniform01(rng),
                        e.z * uniform01(rng), MeasureKind::TANGLE};
    CHECK(f123(smaller, CompositeVariant::RATIO) <=
          f123(e, CompositeVariant::RATIO) + 1e-12);
    CHECK(f123(smaller, CompositeVariant::PRODUCT) <=
          f123(e, CompositeVariant::PRODUCT) + 1e-12);
    CHECK(e123(smaller) <= e123(e) + 1e-12);
  }
}

TEST_CASE("f123 ratio bounds") {
  //- xyz/(x+y+z) <= (mid * max) / 3 since x+y+z >= 3*min, and the product
  //- form vanishes exactly when an edge does.
  std::mt19937_64 rng(127);
  for (int rep = 0; rep < 1000; ++rep) {
    PureState psi = haar_random_pure({2, 2, 2}, rng);
    EdgeVector3 e = edge_vector_3(psi, kTangle);
    std::vector<double> s{e.x, e.y, e.z};
    std::sort(s.begin(), s.end());
    CHECK(f123(e, CompositeVariant::RATIO) <= s[1] * s[2] / 3.0 + 1e-12);
  }
  EdgeVector3 with_zero{0.0, 0.7, 0.9, MeasureKind::TANGLE};
  CHECK(f123(with_zero, CompositeVariant::PRODUCT) == 0.0);
  EdgeVector3 positive{0.2, 0.7, 0.9, MeasureKind::TANGLE};
  CHECK(f123(positive, CompositeVariant::PRODUCT) > 0.0);
}

TEST_CASE("genuine indicator matches the gated composite") {
  std::mt19937_64 rng(131);
  for (int rep = 0; rep < 100; ++rep) {
    PureState psi = haar_random_pure({2, 2, 2}, rng);
    EdgeVector3 e = edge_vector_3(psi, kTangle);
    bool gated_positive = eg123(e) > 0.0;
    CHECK(gated_positive == (delta_pure_genuine(psi, kTangle) == 1));
  }
  for (int rep = 0; rep < 100; ++rep) {
    PureState psi = haar_random_pure({2, 2, 2, 2}, rng);
    EdgeVector4Bip e = edge_vector_4_bip(psi, kTangle);
    bool gated_positive = eg1234_2(e) > 0.0;
    CHECK(gated_positive == (delta_bisep(psi, kTangle) == 1));
  }
}

TEST_CASE("roof is convex across mixtures") {
  std::mt19937_64 rng(137);
  RoofConfig cfg;
  cfg.restarts = 5;
  cfg.max_iterations = 200;
  cfg.tolerance = 1e-4;
  Partition ab = make_partition({{0}, {1}});
  PureFunctional f = [&ab](const PureState& psi) {
    return pure_measure(psi, ab, kTangle);
  };
  for (int rep = 0; rep < 50; ++rep) {
    DensityMatrix r1 = gme::test::random_mixed({2, 2}, 2, rng);
    DensityMatrix r2 = gme::test::random_mixed({2, 2}, 2, rng);
    double p = uniform01(rng);
    DensityMatrix mix =
        make_density_matrix(p * r1.matrix + (1.0 - p) * r2.matrix, {2, 2});
    double roof_mix = roof_minimize(mix, f, cfg).value;
    double mix_roofs =
        p * roof_minimize(r1, f, cfg).value + (1.0 - p) * roof_minimize(r2, f, cfg).value;
    CHECK(roof_mix <= mix_roofs + 2.0 * cfg.tolerance);
  }
}

TEST_CASE("gamma_star is consistent with triangle_check") {
  //- Keep the largest edge above 1 so the powered edges stay O(1) and a
  //- genuine crossing is never masked by the absolute relation slack.
  std::mt19937_64 rng(139);
  for (int rep = 0; rep < 1000; ++rep) {
    double x = 1.0 + uniform01(rng);
    double y = x * (0.3 + 0.69 * uniform01(rng));
    double z = x * (0.3 + 0.69 * uniform01(rng));
    if (x <= std::max(y, z)) continue;
    if (!triangle_check(x, y, z, 1.0)) continue;  // relation must hold at 1
    double g = gamma_star(x, y, z);
    if (g >= kGammaCap) continue;
    CHECK(triangle_check(x, y, z, std::min(1.0, g)));
    CHECK(triangle_check(x, y, z, g * 0.999999));
    CHECK_FALSE(triangle_check(x, y, z, g * (1.0 + 1e-6) + 1e-6));
  }
}

TEST_CASE("triangle relation holds on Haar edge vectors") {
  std::mt19937_64 rng(149);
  for (int rep = 0; rep < 500; ++rep) {
    PureState psi = haar_random_pure({2, 2, 2}, rng);
    EdgeVector3 e = edge_vector_3(psi, kTangle);
    CHECK(triangle_check(e.x, e.y, e.z, 1.0));
  }
}

TEST_CASE("pair-product reduction identity") {
  //- |psi>^{AD} x |phi>^B x |chi>^C: the A|B|CD and A|BD|C entries both
  //- collapse to the AD pair tangle.
  std::mt19937_64 rng(151);
  for (int rep = 0; rep < 10; ++rep) {
    double theta = uniform01(rng) * M_PI / 2.0;
    Vector amp = Vector::Zero(16);
    //- Party order (A,B,C,D), last fastest: index = 8a + 4b + 2c + d.
    amp(0) = std::cos(theta);   // a=0,d=0
    amp(9) = std::sin(theta);   // a=1,d=1
    PureState psi = make_pure_state(amp, {2, 2, 2, 2});
    double pair_tangle =
        2.0 * (1.0 - purity(partial_trace(density_of(psi), {0})));
    EdgeVector4Tri e = edge_vector_4_tri(psi, TriKind::TAU3);
    CHECK(e.values[0] == doctest::Approx(pair_tangle).epsilon(1e-9));  // A|B|CD
    CHECK(e.values[5] == doctest::Approx(pair_tangle).epsilon(1e-9));  // A|BD|C
  }
}

TEST_CASE("tetra case classification is total") {
  std::mt19937_64 rng(157);
  for (int rep = 0; rep < 100; ++rep) {
    PureState psi = haar_random_pure({2, 2, 2, 2}, rng);
    EdgeVector4Tri e = edge_vector_4_tri(psi, TriKind::TAU3);
    TetraGeom geom = tetra_from_tripartitions(e, 1.0);
    bool labeled = geom.case_label == TetraCase::A || geom.case_label == TetraCase::B1 ||
                   geom.case_label == TetraCase::B2 ||
                   geom.case_label == TetraCase::B3 || geom.case_label == TetraCase::C;
    CHECK(labeled);
  }
}
