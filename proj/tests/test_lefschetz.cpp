#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include "eqcell/lefschetz.hpp"

#include <doctest.h>

using namespace eqcell;

TEST_CASE("end swap on the zigzag complex") {
  const auto doc = eqtest::fixture("j_end_swap.json");
  REQUIRE(doc.map);
  auto ring = eqtest::ring_of(doc.orbits);
  const LefschetzReport r = invariant_orbit_report(*doc.map, ring);
  CHECK(r.lambda == eqtest::ud({0, 1}));
  CHECK(r.invariant_simplices[0].empty());
  CHECK(r.invariant_simplices[1] == std::vector<std::string>{"e"});
  CHECK(r.disjoint_image[0]);
  CHECK_FALSE(r.disjoint_image[1]);
  CHECK(r.closed_disjoint[0]);
  CHECK_FALSE(r.closed_disjoint[1]);
  CHECK(ordinary_lefschetz(*doc.map) == 1);
  CHECK(eqtest::classical_lefschetz(*doc.map) == 1);
  CHECK(theorem_check(*doc.map, ring).passed);
}

TEST_CASE("rotation of a pentagon") {
  const auto doc = eqtest::fixture("circle_rotation.json");
  REQUIRE(doc.map);
  auto ring = eqtest::ring_of(doc.orbits);
  const LefschetzReport r = invariant_orbit_report(*doc.map, ring);
  CHECK(r.lambda == eqtest::ud({0}));
  CHECK(r.disjoint_image[0]);
  CHECK_FALSE(r.closed_disjoint[0]);
  CHECK(ordinary_lefschetz(*doc.map) == 0);
}

TEST_CASE("an invariant orbit whose component factors through a smaller orbit") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  const OrbitCategory& oc = *doc.orbits;
  auto point = std::make_shared<const LabeledComplex>(doc.orbits, std::vector<std::string>{"v"},
                                                      std::vector<Simplex>{{"v", {0}, 1, {}}});
  // Idempotent of T3 folding c onto b; its image is a copy of T2.
  const MorId fold = *oc.find(1, 1, {{0, 1, 1}, {0}});
  const EquivariantSelfMap f{point, {0}, {{fold}}};
  REQUIRE(validate_map(f).ok);
  auto ring = eqtest::ring_of(doc.orbits);
  const TheoremCheck check = theorem_check(f, ring);
  CHECK(check.passed);
  CHECK(check.report.lambda == eqtest::ud({1, 0}));
  CHECK(check.report.invariant_simplices[0] == std::vector<std::string>{"v"});
  CHECK(check.report.disjoint_image[1]);
  CHECK(invariant_type(f, {0, 0}, *ring) == 0);

  const EquivariantSelfMap id = identity_map(point);
  CHECK(lefschetz_number(id, ring) == eqtest::ud({0, 1}));
}

TEST_CASE("the identity map has Lefschetz number equal to the Euler class") {
  eqtest::Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = eqtest::random_instance(rng, {5, 2, 18});
    auto ring = eqtest::ring_of(inst.orbits);
    const auto f = identity_map(inst.space);
    CHECK(lefschetz_number(f, ring) == euler_class(*inst.space));
    CHECK(ordinary_lefschetz(f) == eqtest::classical_lefschetz(f));
  }
}

TEST_CASE("Lefschetz numbers of random maps agree with the invariant-simplex count") {
  eqtest::Rng rng(62);
  int nonzero = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = eqtest::random_instance(rng, {5, 2, 18});
    auto ring = eqtest::ring_of(inst.orbits);
    const auto f = eqtest::random_self_map(inst.space, rng);
    const TheoremCheck check = theorem_check(f, ring);
    CHECK(check.passed);
    CHECK(check.report.lambda.entries() == eqtest::oracle_lambda(f));
    const Integer ordinary = ordinary_lefschetz(f);
    CHECK(ordinary == eqtest::classical_lefschetz(f));
    Integer sum = 0;
    for (const auto& x : check.report.lambda.entries()) sum += x;
    CHECK(sum == ordinary);
    for (std::size_t m = 0; m < check.report.lambda.size(); ++m) {
      if (check.report.lambda[m] != 0) {
        ++nonzero;
        CHECK_FALSE(check.report.invariant_simplices[m].empty());
      }
    }
  }
  CHECK(nonzero > 0);
}

TEST_CASE("subdivision leaves the Lefschetz number unchanged") {
  eqtest::Rng rng(63);
  for (int trial = 0; trial < 25; ++trial) {
    const auto inst = eqtest::random_instance(rng, {4, 2, 12});
    auto ring = eqtest::ring_of(inst.orbits);
    const auto f = eqtest::random_self_map(inst.space, rng);
    auto sd = std::make_shared<const LabeledComplex>(subdivide(*inst.space));
    const auto g = subdivide_map(f, sd);
    CHECK(lefschetz_number(g, ring) == lefschetz_number(f, ring));
    CHECK(ordinary_lefschetz(g) == ordinary_lefschetz(f));
  }
}

TEST_CASE("inputs are validated") {
  const auto doc = eqtest::fixture("j_end_swap.json");
  const auto other = eqtest::fixture("j_zigzag.json");
  CHECK_THROWS_AS(lefschetz_number(*doc.map, eqtest::ring_of(other.orbits)), ValidationError);
  EquivariantSelfMap broken = *doc.map;
  broken.components[1][0] = doc.orbits->identity(1);
  CHECK_THROWS_AS(lefschetz_number(broken, eqtest::ring_of(doc.orbits)), ValidationError);
  CHECK_THROWS_AS(invariant_type(*doc.map, {0, 0}, *eqtest::ring_of(doc.orbits)), ValidationError);
}
