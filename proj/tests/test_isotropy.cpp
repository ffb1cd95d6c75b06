#include "generators.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace eqcell;

namespace {

IsotropyElement random_element(const OrbitCategory& oc, eqtest::Rng& rng, int terms = 4) {
  IsotropyElement e;
  std::uniform_int_distribution<int> mor(0, static_cast<int>(oc.morphism_count()) - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int k = 0; k < terms; ++k) e.add_term(mor(rng), coeff(rng));
  return e;
}

// Number of classes of endomorphisms under u·v ~ v·u, by union-find.
std::size_t trace_class_count(const OrbitCategory& oc) {
  const auto n = static_cast<MorId>(oc.morphism_count());
  UnionFind uf(oc.morphism_count());
  for (MorId f = 0; f < n; ++f) {
    for (MorId g = 0; g < n; ++g) {
      if (oc.dom(f) == oc.cod(g) && oc.dom(g) == oc.cod(f)) {
        uf.unite(static_cast<std::size_t>(oc.compose(f, g)), static_cast<std::size_t>(oc.compose(g, f)));
      }
    }
  }
  std::set<std::size_t> roots;
  for (MorId m = 0; m < n; ++m) {
    if (oc.is_endomorphism(m)) roots.insert(uf.find(static_cast<std::size_t>(m)));
  }
  return roots.size();
}

}  // namespace

TEST_CASE("product is composition when composable and zero otherwise") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  IsotropyRing ring(doc.orbits);
  const OrbitCategory& oc = *doc.orbits;
  const auto n = static_cast<MorId>(oc.morphism_count());
  for (MorId f = 0; f < n; ++f) {
    for (MorId g = 0; g < n; ++g) {
      const auto product = ring.multiply(IsotropyElement::generator(f), IsotropyElement::generator(g));
      if (oc.dom(f) == oc.cod(g)) {
        CHECK(product == IsotropyElement::generator(oc.compose(f, g)));
      } else {
        CHECK(product.is_zero());
      }
    }
  }
}

TEST_CASE("idempotents are orthogonal and sum to the unit") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  IsotropyRing ring(doc.orbits);
  IsotropyElement sum;
  for (int s = 0; s < 2; ++s) {
    sum += ring.idempotent(s);
    for (int t = 0; t < 2; ++t) {
      const auto p = ring.multiply(ring.idempotent(s), ring.idempotent(t));
      CHECK(p == (s == t ? ring.idempotent(s) : IsotropyElement{}));
    }
  }
  CHECK(sum == ring.unit());
  CHECK(ring.zeta_component(0).size() == 12);
  CHECK(ring.zeta_component(1).size() == 36);
}

TEST_CASE("ring axioms on random elements") {
  eqtest::Rng rng(17);
  int triples = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto oc = eqtest::random_orbit_category(eqtest::pool_category(static_cast<std::size_t>(trial % 3)), rng);
    IsotropyRing ring(oc);
    for (int k = 0; k < 20; ++k, ++triples) {
      const auto a = random_element(*oc, rng);
      const auto b = random_element(*oc, rng);
      const auto c = random_element(*oc, rng);
      CHECK(ring.multiply(ring.multiply(a, b), c) == ring.multiply(a, ring.multiply(b, c)));
      CHECK(ring.multiply(a, b + c) == ring.multiply(a, b) + ring.multiply(a, c));
      CHECK(ring.multiply(a + b, c) == ring.multiply(a, c) + ring.multiply(b, c));
      CHECK(ring.multiply(ring.unit(), a) == a);
      CHECK(ring.multiply(a, ring.unit()) == a);
    }
  }
  CHECK(triples == 600);
}

TEST_CASE("element arithmetic keeps no zero terms") {
  auto e = IsotropyElement::generator(3, 2);
  e.add_term(3, -2);
  CHECK(e.is_zero());
  auto f = IsotropyElement::generator(1, 5) - IsotropyElement::generator(2);
  CHECK(f.coefficient(1) == 5);
  CHECK(f.coefficient(2) == -1);
  CHECK(f.coefficient(7) == 0);
  CHECK((f - f).is_zero());
  CHECK((0 * f).is_zero());
  CHECK(-(-f) == f);
}

TEST_CASE("augmentation reads endomorphism coefficients per class") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  IsotropyRing ring(doc.orbits);
  const OrbitCategory& oc = *doc.orbits;
  IsotropyElement e;
  const auto end_t3 = oc.hom(1, 1);
  const auto cross = oc.hom(0, 1);
  e.add_term(end_t3.first, 4);
  e.add_term(end_t3.first + 5, -1);
  e.add_term(cross.first, 7);
  e.add_term(oc.identity(0), 2);
  CHECK(ring.augmentation(e) == eqtest::ud({2, 3}));
}

TEST_CASE("the raw augmentation differs on fg and gf across non-isomorphic retracts") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  IsotropyRing ring(doc.orbits);
  const OrbitCategory& oc = *doc.orbits;
  // g: T2 -> T3 includes {a, b}; f: T3 -> T2 retracts c onto b.
  const MorId g = *oc.find(0, 1, {{0, 1}, {0}});
  const MorId f = *oc.find(1, 0, {{0, 1, 1}, {0}});
  const auto fg = IsotropyElement::generator(oc.compose(f, g));
  const auto gf = IsotropyElement::generator(oc.compose(g, f));
  CHECK(oc.compose(f, g) == oc.identity(0));
  CHECK(ring.augmentation(fg) == eqtest::ud({1, 0}));
  CHECK(ring.augmentation(gf) == eqtest::ud({0, 1}));
  CHECK(ring.reduce(fg) == ring.reduce(gf));
  CHECK(ring.ab_augmentation(ring.reduce(fg)) == eqtest::ud({1, 0}));
  CHECK(ring.ab_augmentation(ring.reduce(gf)) == eqtest::ud({1, 0}));
}

TEST_CASE("Ab(I) is free on trace classes of endomorphisms") {
  eqtest::Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    auto oc = eqtest::random_orbit_category(eqtest::pool_category(static_cast<std::size_t>(trial % 3)), rng);
    IsotropyRing ring(oc);
    CHECK(ring.ab_torsion().empty());
    CHECK(ring.ab_basis().size() == trace_class_count(*oc));
    for (MorId m : ring.ab_basis()) CHECK(oc->is_endomorphism(m));
  }
}

TEST_CASE("commutators vanish in Ab(I) and Ab(φ) is symmetric") {
  eqtest::Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto oc = eqtest::random_orbit_category(eqtest::pool_category(static_cast<std::size_t>(trial % 3)), rng);
    IsotropyRing ring(oc);
    const auto n = static_cast<MorId>(oc->morphism_count());
    for (MorId f = 0; f < n; ++f) {
      for (MorId g = 0; g < n; ++g) {
        const auto a = IsotropyElement::generator(f);
        const auto b = IsotropyElement::generator(g);
        const auto ab = ring.multiply(a, b);
        const auto ba = ring.multiply(b, a);
        CHECK(ring.reduce(ab - ba).is_zero());
        CHECK(ring.ab_augmentation(ring.reduce(ab)) == ring.ab_augmentation(ring.reduce(ba)));
      }
    }
    for (int k = 0; k < 20; ++k) {
      const auto x = random_element(*oc, rng, 6);
      const AbIClass c = ring.reduce(x);
      CHECK(ring.reduce(c.representative) == c);
      const auto y = random_element(*oc, rng, 6);
      CHECK(ring.add(c, ring.reduce(y)) == ring.reduce(x + y));
      CHECK(ring.scale(3, c) == ring.reduce(3 * x));
    }
  }
}

TEST_CASE("Hattori-Stallings rank counts free summands per class") {
  eqtest::Rng rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    auto oc = eqtest::random_orbit_category(eqtest::pool_category(static_cast<std::size_t>(trial % 3)), rng);
    IsotropyRing ring(oc);
    std::vector<std::pair<int, Integer>> module;
    UDVector expected = oc->zero_vector();
    for (std::size_t t = 0; t < oc->orbit_count(); ++t) {
      const int mult = std::uniform_int_distribution<int>(0, 4)(rng);
      module.emplace_back(static_cast<int>(t), mult);
      expected[static_cast<std::size_t>(oc->class_of(static_cast<int>(t)))] += mult;
    }
    CHECK(ring.ab_augmentation(ring.hs_rank(module)) == expected);
  }
}

TEST_CASE("Hattori-Stallings trace") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  IsotropyRing ring(doc.orbits);
  const OrbitCategory& oc = *doc.orbits;
  MatrixOverI m;
  m.rows = {{"x", 0}, {"y", 1}};
  m.cols = m.rows;
  m.add(0, 0, IsotropyElement::generator(oc.identity(0), 2));
  m.add(1, 1, IsotropyElement::generator(*oc.find(1, 1, {{1, 0, 2}, {0}}), -1));
  m.add(0, 1, IsotropyElement::generator(oc.hom(1, 0).first));
  CHECK(ring.supported(m));
  CHECK(ring.ab_augmentation(ring.hs_trace(m)) == eqtest::ud({2, -1}));
  MatrixOverI bad = m;
  bad.add(1, 0, IsotropyElement::generator(oc.hom(1, 0).first));
  CHECK_FALSE(ring.supported(bad));
  MatrixOverI rect{{{"x", 0}}, {{"x", 0}, {"y", 1}}, {}};
  CHECK_THROWS_AS(ring.hs_trace(rect), ValidationError);

  // tr(AB) = tr(BA) in Ab(I).
  MatrixOverI a{{{"x", 0}, {"y", 1}}, {{"z", 1}}, {}};
  MatrixOverI b{{{"z", 1}}, {{"x", 0}, {"y", 1}}, {}};
  a.add(0, 0, IsotropyElement::generator(oc.hom(1, 0).first + 2));
  a.add(1, 0, IsotropyElement::generator(oc.hom(1, 1).first + 7));
  b.add(0, 0, IsotropyElement::generator(oc.hom(0, 1).first + 4));
  b.add(0, 1, IsotropyElement::generator(oc.hom(1, 1).first + 11));
  CHECK(ring.hs_trace(ring.multiply(a, b)) == ring.hs_trace(ring.multiply(b, a)));
}

TEST_CASE("formatting") {
  const auto doc = eqtest::fixture("j_zigzag.json");
  IsotropyRing ring(doc.orbits);
  const OrbitCategory& oc = *doc.orbits;
  IsotropyElement e = IsotropyElement::generator(oc.identity(0), 3);
  e.add_term(oc.identity(1), -1);
  CHECK(ring.format(e) == "3·id_T2 - 1·id_T3");
  CHECK(ring.format({}) == "0");
}
