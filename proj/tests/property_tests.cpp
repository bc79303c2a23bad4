#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "property_cases.hpp"

using namespace strata::tests;

// Each suite runs >= 1000 randomized cases with a fixed seed. On failure the
// report carries the first failing case so it can be replayed directly.

TEST_CASE("pairing is S7-equivariant") {
    const PropertyReport r = prop_pair_equivariance(1000, 0xA11CE5u);
    INFO(r.first_failure);
    CHECK(r.cases >= 1000);
    CHECK(r.failures == 0);
}

TEST_CASE("surface classes are projective and relabeling invariants") {
    const PropertyReport r = prop_surface_projective_invariance(1000, 0xB0B5EEDu);
    INFO(r.first_failure);
    CHECK(r.cases >= 1000);
    CHECK(r.failures == 0);
}

TEST_CASE("certificates round-trip and verify") {
    const PropertyReport r = prop_certificate_roundtrip(1000, 0xC0FFEEu);
    INFO(r.first_failure);
    CHECK(r.cases >= 1000);
    CHECK(r.failures == 0);
}

TEST_CASE("canonical forms are idempotent") {
    const PropertyReport r = prop_canonicalization_idempotence(1000, 0xD1CE5u);
    INFO(r.first_failure);
    CHECK(r.cases >= 1000);
    CHECK(r.failures == 0);
}
