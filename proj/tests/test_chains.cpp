#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace eqcell;

namespace {

std::vector<std::size_t> bettis(const std::vector<DegreeHomology>& h) {
  std::vector<std::size_t> out;
  for (const auto& d : h) out.push_back(d.betti);
  return out;
}

std::vector<std::size_t> chain_ranks(const ChainComplex& c) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= c.top_degree(); ++n) out.push_back(c.rank(n));
  return out;
}

// T ↦ Z[T(d)], f ↦ the matrix of f_d.
std::shared_ptr<const CoefficientSystem> evaluation_system(const std::shared_ptr<const OrbitCategory>& oc, int d) {
  std::vector<std::size_t> ranks;
  for (std::size_t t = 0; t < oc->orbit_count(); ++t) ranks.push_back(oc->orbit(static_cast<int>(t)).functor->size(d));
  std::vector<SparseMatrix> maps;
  for (MorId m = 0; m < static_cast<MorId>(oc->morphism_count()); ++m) {
    SparseMatrix a(ranks[static_cast<std::size_t>(oc->cod(m))], ranks[static_cast<std::size_t>(oc->dom(m))]);
    const auto& component = oc->transformation(m).components[static_cast<std::size_t>(d)];
    for (std::size_t x = 0; x < component.size(); ++x) a.add(static_cast<std::size_t>(component[x]), x, 1);
    maps.push_back(std::move(a));
  }
  return std::make_shared<const CoefficientSystem>(CoefficientSystem::custom(oc, ranks, maps));
}

}  // namespace

TEST_CASE("constant coefficients on the zigzag complex") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  const ChainComplex c = build_chain_complex(doc.space, eqtest::constant_system(doc.orbits));
  CHECK(chain_ranks(c) == std::vector<std::size_t>{2, 1});
  const HomologyResult h = homology(c);
  REQUIRE(h.degrees.size() == 2);
  CHECK(h.degrees[0].betti == 1);
  CHECK(h.degrees[0].torsion.empty());
  CHECK(h.degrees[1].betti == 0);
  CHECK(h.degrees[1].torsion.empty());
  CHECK_FALSE(h.graded_by_domain);
}

TEST_CASE("isotropy coefficients on the zigzag complex") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  auto ring = eqtest::ring_of(doc.orbits);
  const ChainComplex c = build_chain_complex(doc.space, eqtest::isotropy_system(ring));
  CHECK(chain_ranks(c) == std::vector<std::size_t>{24, 36});
  CHECK_FALSE(c.boundary[1].is_zero());
  CHECK_FALSE(c.boundary_over_i[1].is_zero());
  CHECK(boundary_squares_vanish(c));
  CHECK(chain_chi_hs(c) == eqtest::ud({2, -1}));

  const HomologyResult h = homology(c);
  CHECK(h.graded_by_domain);
  CHECK(bettis(h.degrees) == eqtest::rational_betti(chain_ranks(c), c.boundary));
  for (int s = 0; s < 2; ++s) {
    const auto expected = eqtest::rational_betti(orbit_point(*doc.space, s));
    for (std::size_t n = 0; n < 2; ++n) CHECK(h.degrees[n].betti_by_domain[static_cast<std::size_t>(s)] == expected[n]);
  }
}

TEST_CASE("chain_chi_hs requires isotropy coefficients") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  const ChainComplex c = build_chain_complex(doc.space, eqtest::constant_system(doc.orbits));
  CHECK_THROWS_AS(chain_chi_hs(c), ValidationError);
}

TEST_CASE("evaluation coefficients reproduce total-space homology") {
  eqtest::Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = eqtest::random_instance(rng, {5, 2, 20});
    const FinCategory& cat = inst.orbits->base();
    for (std::size_t d = 0; d < cat.object_count(); ++d) {
      auto m = evaluation_system(inst.orbits, static_cast<int>(d));
      const ChainComplex c = build_chain_complex(inst.space, m);
      const auto h = homology(c);
      const auto total = delta_homology(total_space(*inst.space, cat.object_name(static_cast<int>(d))));
      REQUIRE(h.degrees.size() == total.size());
      for (std::size_t n = 0; n < total.size(); ++n) {
        CHECK(h.degrees[n].betti == total[n].betti);
        CHECK(h.degrees[n].torsion == total[n].torsion);
      }
    }
  }
}

TEST_CASE("non-functorial custom systems are rejected") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  std::vector<SparseMatrix> maps;
  for (MorId m = 0; m < static_cast<MorId>(doc.orbits->morphism_count()); ++m) {
    SparseMatrix a(1, 1);
    a.add(0, 0, doc.orbits->is_endomorphism(m) && m != doc.orbits->identity(doc.orbits->dom(m)) ? -1 : 1);
    maps.push_back(std::move(a));
  }
  CHECK_THROWS_AS(CoefficientSystem::custom(doc.orbits, {1, 1}, maps), ValidationError);
  CHECK_THROWS_AS(CoefficientSystem::custom(doc.orbits, {1}, maps), ValidationError);
}

TEST_CASE("isotropy coefficient system is a functor") {
  eqtest::Rng rng(52);
  for (int trial = 0; trial < 15; ++trial) {
    auto oc = eqtest::random_orbit_category(eqtest::pool_category(static_cast<std::size_t>(trial % 3)), rng);
    const CoefficientSystem m = CoefficientSystem::isotropy(eqtest::ring_of(oc));
    const auto n = static_cast<MorId>(oc->morphism_count());
    for (MorId f = 0; f < n; ++f) {
      for (MorId g = 0; g < n; ++g) {
        if (oc->dom(f) == oc->cod(g)) CHECK(m.map(oc->compose(f, g)) == m.map(f) * m.map(g));
      }
    }
    for (std::size_t t = 0; t < oc->orbit_count(); ++t) {
      CHECK(m.rank(static_cast<int>(t)) == oc->morphisms_into(static_cast<int>(t)).size());
    }
  }
}

TEST_CASE("homology from explicit boundaries") {
  SparseMatrix twice(1, 1);
  twice.add(0, 0, 2);
  const auto h = homology_from_boundaries({1, 1}, {SparseMatrix(0, 1), twice});
  CHECK(h[0].betti == 0);
  CHECK(h[0].torsion == std::vector<Integer>{2});
  CHECK(h[1].betti == 0);

  DeltaComplex circle;
  circle.cells = {{"a", "b"}, {"x", "y"}};
  circle.faces = {{{}, {}}, {{1, 0}, {0, 1}}};
  const auto hc = delta_homology(circle);
  CHECK(hc[0].betti == 1);
  CHECK(hc[1].betti == 1);
}

TEST_CASE("boundaries square to zero and ranks agree with rational elimination") {
  eqtest::Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = eqtest::random_instance(rng, {5, 2, 18});
    auto ring = eqtest::ring_of(inst.orbits);
    for (const auto& m : {eqtest::constant_system(inst.orbits), eqtest::isotropy_system(ring)}) {
      const ChainComplex c = build_chain_complex(inst.space, m);
      CHECK(boundary_squares_vanish(c));
      CHECK(bettis(homology(c).degrees) == eqtest::rational_betti(chain_ranks(c), c.boundary));
    }
  }
}

TEST_CASE("chain maps of the identity are identities") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  auto ring = eqtest::ring_of(doc.orbits);
  const ChainComplex c = build_chain_complex(doc.space, eqtest::isotropy_system(ring));
  const ChainMap id = induced_chain_map(identity_map(doc.space), c);
  for (int n = 0; n <= c.top_degree(); ++n) {
    SparseMatrix expected(c.rank(n), c.rank(n));
    for (std::size_t k = 0; k < c.rank(n); ++k) expected.add(k, k, 1);
    CHECK(id.degree[static_cast<std::size_t>(n)] == expected);
  }
  const auto other = eqtest::fixture("j_end_swap.json");
  CHECK_THROWS(induced_chain_map(*other.map, c));
}
