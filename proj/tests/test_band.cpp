#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lensband/band.hpp"

using namespace lensband;

TEST_CASE("torus link basics") {
  CHECK(TorusLink{3}.components() == 1);
  CHECK(TorusLink{-6}.components() == 2);
  CHECK(TorusLink{-6}.determinant() == 6);
  CHECK(TorusLink{7}.determinant() == 7);
}

TEST_CASE("banding_possible pinned verdicts") {
  BandVerdict v7 = banding_possible(7, /*coherent=*/false);
  CHECK(v7.possible);
  CHECK(v7.reason == BandReason::Realized);
  REQUIRE(v7.witness.has_value());
  CHECK(v7.witness->find("T(2,7)") != std::string::npos);

  BandVerdict v4 = banding_possible(4, /*coherent=*/true);
  CHECK(v4.possible);
  REQUIRE(v4.witness.has_value());
  CHECK(v4.witness->find("T(2,4)") != std::string::npos);

  BandVerdict v5 = banding_possible(5, /*coherent=*/false);
  CHECK_FALSE(v5.possible);
  CHECK(v5.reason == BandReason::SurgeryObstruction);

  BandVerdict v7c = banding_possible(7, /*coherent=*/true);
  CHECK_FALSE(v7c.possible);
  CHECK(v7c.reason == BandReason::ParityMismatch);

  BandVerdict v2nc = banding_possible(2, /*coherent=*/false);
  CHECK_FALSE(v2nc.possible);
  CHECK(v2nc.reason == BandReason::ParityMismatch);

  CHECK_THROWS_AS(banding_possible(0, true), std::invalid_argument);
}

TEST_CASE("corollary partition over |n| <= 120") {
  std::vector<std::int64_t> noncoherent;
  std::vector<std::int64_t> coherent;
  for (std::int64_t n = -120; n <= 120; ++n) {
    if (n == 0) continue;
    if (banding_possible(n, false).possible) noncoherent.push_back(n);
    if (banding_possible(n, true).possible) coherent.push_back(n);
  }
  CHECK(noncoherent == std::vector<std::int64_t>{-1, 1, 3, 7});
  CHECK(coherent == std::vector<std::int64_t>{-6, -2, 2, 4});
}

TEST_CASE("every possible banding carries a catalog witness") {
  for (std::int64_t n = -60; n <= 60; ++n) {
    if (n == 0) continue;
    for (bool coherent : {false, true}) {
      BandVerdict v = banding_possible(n, coherent);
      if (v.possible) {
        REQUIRE(v.witness.has_value());
        CHECK_FALSE(v.witness->empty());
        CHECK(find_witness(n, coherent) != nullptr);
      }
    }
  }
}

TEST_CASE("witness catalog contents") {
  CHECK(witness_catalog().size() == 8);
  std::vector<std::int64_t> covered;
  for (const WitnessEntry& e : witness_catalog()) {
    covered.push_back(e.n);
    // coherence matches the component-count parity
    CHECK(e.coherent == (e.n % 2 == 0));
    CHECK_FALSE(e.description.empty());
  }
  std::sort(covered.begin(), covered.end());
  CHECK(covered == std::vector<std::int64_t>{-6, -2, -1, 1, 2, 3, 4, 7});

  CHECK(find_witness(-6, true) != nullptr);
  CHECK(find_witness(5) == nullptr);
  CHECK(find_witness(7, true) == nullptr);
}

TEST_CASE("kanenobu determinant obstruction") {
  CHECK(kanenobu_check(3, 0));
  CHECK(kanenobu_check(3, 1));
  CHECK(kanenobu_check(3, 12345));
  CHECK_FALSE(kanenobu_check(5, 1));  // squares mod 5 are {0,1,4}; 2 and 3 are not
  CHECK(kanenobu_check(7, 1));        // 2 = 3^2 (mod 7)
  CHECK(kanenobu_check(5, 0));        // 0 is always a square
  CHECK(kanenobu_check(1, 17));       // trivial determinant
  CHECK_THROWS_AS(kanenobu_check(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(kanenobu_check(-3, 1), std::invalid_argument);
  CHECK_THROWS_AS(kanenobu_check(3, -1), std::invalid_argument);

  for (std::int64_t d = 0; d <= 500; ++d) CHECK(kanenobu_check(3, d));
}
