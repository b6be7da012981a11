#include <doctest.h>

#include "properties.hpp"

using namespace akg;

TEST_CASE("trace identities") { CHECK(props::trace_identities(500, 1).ok()); }
TEST_CASE("conjugation map agrees with matrices") { CHECK(props::conjugation_map(200, 2).ok()); }
TEST_CASE("conjugate axis distance two ways") { CHECK(props::conj_distance_consistency(200, 3).ok()); }
TEST_CASE("resultant is multiplicative") { CHECK(props::resultant_multiplicative(200, 4).ok()); }
TEST_CASE("sturm count matches isolation") { CHECK(props::sturm_vs_isolation(100, 5).ok()); }
TEST_CASE("axial distance is orbit invariant") { CHECK(props::orbit_invariance(200, 6).ok()); }
TEST_CASE("cube map at beta = -1") { CHECK(props::cube_map_to_zero(50, 7).ok()); }
