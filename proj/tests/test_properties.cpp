#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace eqcell;

namespace {

long long alternating_sum(const std::vector<std::size_t>& v) {
  long long total = 0;
  for (std::size_t n = 0; n < v.size(); ++n) total += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(v[n]);
  return total;
}

std::vector<std::size_t> ranks_of(const ChainComplex& c) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= c.top_degree(); ++n) out.push_back(c.rank(n));
  return out;
}

std::vector<std::size_t> bettis(const HomologyResult& h) {
  std::vector<std::size_t> out;
  for (const auto& d : h.degrees) out.push_back(d.betti);
  return out;
}

}  // namespace

TEST_CASE("isomorphism of orbits is an equivalence relation witnessed by inverse pairs") {
  eqtest::Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    auto oc = eqtest::random_orbit_category(eqtest::pool_category(static_cast<std::size_t>(trial % 3)), rng, 4);
    for (std::size_t s = 0; s < oc->orbit_count(); ++s) {
      for (std::size_t t = 0; t < oc->orbit_count(); ++t) {
        const int si = static_cast<int>(s);
        const int ti = static_cast<int>(t);
        bool inverse_pair = false;
        const auto there = oc->hom(si, ti);
        const auto back = oc->hom(ti, si);
        for (MorId f = there.first; f < there.last && !inverse_pair; ++f) {
          for (MorId g = back.first; g < back.last; ++g) {
            if (oc->compose(g, f) == oc->identity(si) && oc->compose(f, g) == oc->identity(ti)) {
              inverse_pair = true;
              break;
            }
          }
        }
        CHECK((oc->class_of(si) == oc->class_of(ti)) == inverse_pair);
      }
    }
  }
}

TEST_CASE("free orbits always validate") {
  for (std::size_t i = 0; i < eqtest::category_pool().size(); ++i) {
    auto cat = eqtest::pool_category(i);
    for (std::size_t d = 0; d < cat->object_count(); ++d) {
      CHECK(validate_orbit(free_orbit(cat, cat->object_name(static_cast<int>(d)))).ok);
    }
  }
}

TEST_CASE("the augmentation is onto U(D)") {
  eqtest::Rng rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    auto oc = eqtest::random_orbit_category(eqtest::pool_category(static_cast<std::size_t>(trial % 3)), rng);
    IsotropyRing ring(oc);
    for (std::size_t t = 0; t < oc->orbit_count(); ++t) {
      const auto v = ring.ab_augmentation(ring.reduce(ring.idempotent(static_cast<int>(t))));
      CHECK(v == euler_unit(*oc, oc->orbit_name(static_cast<int>(t))));
    }
  }
}

TEST_CASE("orbit points at free orbits reproduce total spaces") {
  eqtest::Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = eqtest::random_instance(rng, {5, 2, 20});
    const FinCategory& cat = inst.orbits->base();
    for (std::size_t d = 0; d < cat.object_count(); ++d) {
      CHECK(eqtest::yoneda_matches(*inst.space, cat.object_name(static_cast<int>(d))));
    }
  }
}

TEST_CASE("isotropy homology splits by domain orbit") {
  eqtest::Rng rng(74);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = eqtest::random_instance(rng, {5, 2, 20});
    const ChainComplex c = build_chain_complex(inst.space, eqtest::isotropy_system(eqtest::ring_of(inst.orbits)));
    const HomologyResult h = homology(c);
    REQUIRE(h.graded_by_domain);
    for (std::size_t s = 0; s < inst.orbits->orbit_count(); ++s) {
      const auto expected = eqtest::rational_betti(orbit_point(*inst.space, static_cast<int>(s)));
      for (std::size_t n = 0; n < h.degrees.size(); ++n) {
        CHECK(h.degrees[n].betti_by_domain[s] == expected[n]);
      }
    }
  }
}

TEST_CASE("Euler characteristics agree at chain and homology level") {
  eqtest::Rng rng(75);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = eqtest::random_instance(rng, {5, 2, 20});
    auto ring = eqtest::ring_of(inst.orbits);
    const ChainComplex c = build_chain_complex(inst.space, eqtest::isotropy_system(ring));
    CHECK(chain_chi_hs(c) == euler_class(*inst.space));
    CHECK(alternating_sum(bettis(homology(c))) == alternating_sum(ranks_of(c)));
  }
}

TEST_CASE("homology is unchanged by subdivision") {
  eqtest::Rng rng(76);
  for (int trial = 0; trial < 15; ++trial) {
    const auto inst = eqtest::random_instance(rng, {4, 2, 12});
    auto once = std::make_shared<const LabeledComplex>(subdivide(*inst.space));
    auto ring = eqtest::ring_of(inst.orbits);
    const auto before_i = homology(build_chain_complex(inst.space, eqtest::isotropy_system(ring)));
    const auto after_i = homology(build_chain_complex(once, eqtest::isotropy_system(ring)));
    CHECK(bettis(before_i) == bettis(after_i));
    const auto before_z = homology(build_chain_complex(inst.space, eqtest::constant_system(inst.orbits)));
    const auto after_z = homology(build_chain_complex(once, eqtest::constant_system(inst.orbits)));
    CHECK(bettis(before_z) == bettis(after_z));
  }
}

TEST_CASE("induced chain maps commute with boundaries") {
  eqtest::Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = eqtest::random_instance(rng, {5, 2, 18});
    const auto f = eqtest::random_self_map(inst.space, rng);
    for (const auto& m : {eqtest::constant_system(inst.orbits), eqtest::isotropy_system(eqtest::ring_of(inst.orbits))}) {
      const ChainComplex c = build_chain_complex(inst.space, m);
      const ChainMap map = induced_chain_map(f, c);
      for (int n = 1; n <= c.top_degree(); ++n) {
        const auto k = static_cast<std::size_t>(n);
        CHECK(c.boundary[k] * map.degree[k] == map.degree[k - 1] * c.boundary[k]);
      }
    }
  }
}

TEST_CASE("generated documents serialize deterministically") {
  eqtest::Rng rng(78);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = eqtest::random_instance(rng, {5, 2, 18});
    Document d;
    d.category = inst.orbits->base_ptr();
    d.orbits = inst.orbits;
    d.space = inst.space;
    d.map = eqtest::random_self_map(inst.space, rng);
    const std::string text = write_document(d);
    const Document back = parse_document(text);
    CHECK(write_document(back) == text);
    CHECK(euler_class(*back.space) == euler_class(*d.space));
    const auto sd = parse_document(write_document(subdivide_document(back, 1)));
    CHECK(validate_space(*sd.space).ok);
    CHECK(euler_class(*sd.space) == euler_class(*d.space));
  }
}
