#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gitcomb/census.hpp"
#include "gitcomb/serialization.hpp"

#include <stdexcept>

using namespace gitcomb;

namespace {

Linearization lin(int n, int d, std::vector<Rational> w) { return Linearization(n, d, std::move(w)); }

}  // namespace

TEST_CASE("divisor_enumerate counts") {
  CHECK(divisor_enumerate(0, 3).size() == 3);    // d2 in {1,2,3}
  CHECK(divisor_enumerate(3, 2).size() == 20);   // 2^3*3 - 4
  CHECK(divisor_enumerate(4, 0).size() == 11);   // C(4,2)+C(4,3)+C(4,4)
  for (int n = 0; n <= 5; ++n)
    for (int d = 0; d <= 5; ++d)
      CHECK(static_cast<long long>(divisor_enumerate(n, d).size()) ==
            (1LL << n) * (d + 1) - n - 1);
}

TEST_CASE("divisor_git_status spec examples") {
  Linearization k03 = lin(0, 3, {1});
  CHECK(divisor_git_status(DivisorLabel{0, 1, 0, 3}, k03) == Stability::Stable);
  CHECK(divisor_git_status(DivisorLabel{0, 2, 0, 3}, k03) == Stability::Unstable);
  Linearization k32 = lin(3, 2, {1, 1, 1, 1});
  CHECK(divisor_git_status(DivisorLabel{0b011, 0, 3, 2}, k32) == Stability::Stable);
}

TEST_CASE("codim_image and phi-exceptional spec examples") {
  CHECK(codim_image(DivisorLabel{0b011, 0, 3, 2}, 0) == 1);
  CHECK(codim_image(DivisorLabel{0b011, 0, 3, 2}, 5) == 1);
  CHECK(codim_image(DivisorLabel{0, 1, 3, 2}, 1) == 1);
  CHECK(codim_image(DivisorLabel{0, 1, 3, 2}, 2) == 2);
  CHECK(codim_image(DivisorLabel{0b111, 1, 3, 2}, 2) == 5);
  CHECK_FALSE(is_phi_exceptional(DivisorLabel{0b011, 0, 3, 2}, 2));
  CHECK_FALSE(is_phi_exceptional(DivisorLabel{0, 1, 3, 2}, 1));
  CHECK(is_phi_exceptional(DivisorLabel{0b111, 1, 3, 2}, 2));
}

TEST_CASE("census spec example: n=0 d=3 r=2") {
  CensusReport rep = census(0, 3, 2, lin(0, 3, {1}));
  CHECK(rep.total == 3);
  CHECK(rep.unstable == 2);
  CHECK(rep.stable == 1);
  CHECK(rep.strictly_semistable == 0);
  REQUIRE(rep.rho_Qprime.has_value());
  CHECK(*rep.e_U == 1);
  CHECK(*rep.rho_Q == 1);
  CHECK(*rep.rho_Qprime == 2);
}

TEST_CASE("census spec example: n=3 d=2 r=2 all ones") {
  CensusReport rep = census(3, 2, 2, lin(3, 2, {1, 1, 1, 1}));
  CHECK(rep.total == 20);
  CHECK(rep.unstable == 12);
  CHECK(rep.stable == 8);
  CHECK(rep.phi_exceptional_stable == 5);  // 8 stable minus 3 mark-pair labels
  REQUIRE(rep.rho_Qprime.has_value());
  CHECK(*rep.e_U == 5);
  CHECK(*rep.rho_Q == 4);
  CHECK(*rep.rho_Qprime == 9);
}

TEST_CASE("census spec example: n=3 d=2 r=1") {
  CensusReport rep = census(3, 2, 1, lin(3, 2, {1, 1, 1, 1}));
  REQUIRE(rep.rho_Qprime.has_value());
  CHECK(*rep.e_U == 4);  // D(N, empty, 1, 1) loses exceptionality at r=1
  CHECK(*rep.rho_Qprime == 8);
}

TEST_CASE("census spec example: n=4 d=0 r=0") {
  CensusReport rep = census(4, 0, 0, lin(4, 0, {1, 2, 2, 2, 1}));
  CHECK(rep.stable == 3);
  REQUIRE(rep.rho_Qprime.has_value());
  CHECK(*rep.e_U == 0);
  CHECK(*rep.rho_Q == 1);
  CHECK(*rep.rho_Qprime == 1);
}

TEST_CASE("census withholds rho data on a wall") {
  CensusReport rep = census(0, 2, 2, lin(0, 2, {1}));
  CHECK(rep.strictly_semistable > 0);
  CHECK_FALSE(rep.rho_Qprime.has_value());
}

TEST_CASE("case_linearization parity classes") {
  CHECK(case_linearization(3, 2) == lin(3, 2, {1, 1, 1, 1}));
  CHECK(case_linearization(3, 3) == lin(3, 3, {1, 1, 1, 2}));
  CHECK(case_linearization(4, 2) == lin(4, 2, {1, 2, 2, 2, 1}));
  // Never on a wall for n >= 1 or odd d
  for (int n = 0; n <= 5; ++n)
    for (int d = 0; d <= 5; ++d) {
      if (n == 0 && d % 2 == 0) continue;  // no off-wall linearization exists there
      CHECK_FALSE(on_any_wall(case_linearization(n, d)).has_value());
    }
}

TEST_CASE("picard_expected values") {
  CHECK(picard_expected(3, 2, 2) == 9);
  CHECK(picard_expected(3, 2, 1) == 8);
  CHECK(picard_expected(4, 0, 0) == 1);
  CHECK(picard_expected(0, 1, 2) == 1);
  CHECK(picard_expected(0, 1, 1) == 0);
  // Hu-Keel values 2^{n-1} - C(n,2) - 1 for n = 4..7
  CHECK(picard_expected(4, 0, 0) == 1);
  CHECK(picard_expected(5, 0, 0) == 5);
  CHECK(picard_expected(6, 0, 0) == 16);
  CHECK(picard_expected(7, 0, 0) == 42);
  // r = 0 with d > 0: empty moduli
  CHECK_THROWS_AS(picard_expected(2, 1, 0), std::domain_error);
}

TEST_CASE("label_string formatting") {
  CHECK(label_string(DivisorLabel{0b011, 0, 3, 2}) == "D({3},{1,2},2,0)");
  CHECK(label_string(DivisorLabel{0, 2, 0, 3}) == "D({},{},1,2)");
}

TEST_CASE("wall_crossing_diff: contraction of a mark-pair divisor") {
  // n=3, d=2, wall I={1,2}, d_I=0
  Wall w = Wall::canonical(0b011, 0, 3, 2);
  auto pair = adjacent_pair_across(3, 2, w, 5);
  REQUIRE(pair.has_value());
  WallCrossingReport rep = wall_crossing_diff(3, 2, 2, w, pair->first, pair->second);
  CHECK(rep.kind == CrossingKind::ContractionPair);
  CHECK(rep.rho_qprime_equal);
  REQUIRE(rep.census_below.rho_Q.has_value());
  REQUIRE(rep.census_above.rho_Q.has_value());
  // rho(Q) and e(U) change by one in opposite directions across the wall
  CHECK(*rep.census_below.rho_Q + *rep.census_below.e_U ==
        *rep.census_above.rho_Q + *rep.census_above.e_U);
  CHECK(*rep.census_below.rho_Q != *rep.census_above.rho_Q);
}

TEST_CASE("wall_crossing_diff: small modification") {
  // n=3, d=2, wall I={1}, d_I=1: flipped label has |N2|+3d2-1 >= 2 on both sides
  Wall w = Wall::canonical(0b001, 1, 3, 2);
  auto pair = adjacent_pair_across(3, 2, w, 5);
  REQUIRE(pair.has_value());
  WallCrossingReport rep = wall_crossing_diff(3, 2, 2, w, pair->first, pair->second);
  CHECK(rep.kind == CrossingKind::SmallModification);
  CHECK(rep.rho_qprime_equal);
  CHECK(*rep.census_below.rho_Q == *rep.census_above.rho_Q);
}

TEST_CASE("wall_crossing_diff: r=1 common-root contraction") {
  // n=3, d=1, wall (empty, 1), realized at k_{n+1} = k_1+k_2+k_3: the label
  // (empty, d2=1) has codim (r+1)-1, so codim 1 exactly at r=1
  Wall w = Wall::canonical(0, 1, 3, 1);
  auto pair = adjacent_pair_across(3, 1, w, 7);
  REQUIRE(pair.has_value());
  WallCrossingReport rep = wall_crossing_diff(3, 1, 1, w, pair->first, pair->second);
  CHECK(rep.kind == CrossingKind::ContractionCommonRoot);
  CHECK(rep.rho_qprime_equal);
  // Same wall at r=2 is a small modification
  WallCrossingReport rep2 = wall_crossing_diff(3, 1, 2, w, pair->first, pair->second);
  CHECK(rep2.kind == CrossingKind::SmallModification);
}

TEST_CASE("wall_crossing_diff rejects non-adjacent inputs") {
  Wall w = Wall::canonical(0b011, 0, 3, 2);
  Linearization k = lin(3, 2, {1, 1, 1, 1});
  CHECK_THROWS_AS(wall_crossing_diff(3, 2, 2, w, k, k), std::invalid_argument);
}

TEST_CASE("n=2 caveat: diagonal divisor is unstable yet the identity holds") {
  for (int d : {1, 2}) {
    Linearization k = case_linearization(2, d);
    DivisorLabel diag{0b11, 0, 2, d};
    CHECK(divisor_git_status(diag, k) == Stability::Unstable);
    CensusReport rep = census(2, d, 2, k);
    REQUIRE(rep.rho_Q.has_value());
    CHECK(*rep.rho_Q == 2);
    CHECK(*rep.rho_Qprime == picard_expected(2, d, 2));
  }
}

TEST_CASE("generic_locus_nonempty") {
  CHECK(generic_locus_nonempty(lin(3, 2, {1, 1, 1, 1})));
  CHECK_FALSE(generic_locus_nonempty(lin(2, 0, {1, 1, 1})));  // k_i = half
  CHECK_FALSE(generic_locus_nonempty(lin(1, 0, {1, 1})));
}
