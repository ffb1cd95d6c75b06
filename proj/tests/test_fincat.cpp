#include "generators.hpp"
#include "oracles.hpp"

#include "eqcell/fincat.hpp"

#include <doctest.h>

using namespace eqcell;

namespace {

CategorySpec zigzag() { return eqtest::category_pool()[0].spec; }
CategorySpec z2() { return eqtest::category_pool()[1].spec; }

std::shared_ptr<const FinFunctor> functor(const std::shared_ptr<const FinCategory>& cat, FunctorSpec spec) {
  return FinFunctor::from_spec(cat, spec);
}

}  // namespace

TEST_CASE("identities are inserted and compose neutrally") {
  auto cat = FinCategory::from_spec(zigzag());
  CHECK(cat->object_count() == 2);
  CHECK(cat->morphism_count() == 3);
  const int f = *cat->find_morphism("f");
  const int id0 = *cat->find_morphism("id_d0");
  const int id1 = *cat->find_morphism("id_d1");
  CHECK(cat->is_identity(id0));
  CHECK_FALSE(cat->is_identity(f));
  CHECK(cat->compose(f, id0) == f);
  CHECK(cat->compose(id1, f) == f);
  CHECK(cat->hom(0, 1) == std::vector<int>{f});
  CHECK(cat->hom(1, 0).empty());
  CHECK_THROWS_AS(cat->compose(f, f), ValidationError);
}

TEST_CASE("the involution squares to the identity") {
  auto cat = FinCategory::from_spec(z2());
  const int s = *cat->find_morphism("s");
  CHECK(cat->compose(s, s) == cat->identity(0));
}

TEST_CASE("category validation reports the first violation") {
  SUBCASE("gap in the composition table") {
    CategorySpec spec = z2();
    spec.composition.clear();
    auto r = validate_category(spec);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("composition table gap") != std::string::npos);
  }
  SUBCASE("non-composable entry") {
    CategorySpec spec = zigzag();
    spec.composition.push_back({"f", "f", "f"});
    auto r = validate_category(spec);
    CHECK(r.message.find("non-composable pair") != std::string::npos);
  }
  SUBCASE("conflicting entries") {
    CategorySpec spec = z2();
    spec.composition.push_back({"s", "s", "s"});
    CHECK(validate_category(spec).message.find("conflicting") != std::string::npos);
  }
  SUBCASE("unknown codomain") {
    CategorySpec spec = zigzag();
    spec.morphisms.push_back({"g", "d0", "nowhere"});
    CHECK(validate_category(spec).message.find("unknown codomain") != std::string::npos);
  }
  SUBCASE("non-associative table") {
    CategorySpec spec{{"o"},
                      {{"a", "o", "o"}, {"b", "o", "o"}},
                      {{"a", "a", "a"}, {"b", "a", "a"}, {"a", "b", "b"}, {"b", "b", "a"}}};
    auto r = validate_category(spec);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("associativity") != std::string::npos);
    CHECK_THROWS_AS(FinCategory::from_spec(spec), ValidationError);
  }
  SUBCASE("identity law") {
    CategorySpec spec{{"o"}, {{"e", "o", "o"}}, {{"e", "e", "e"}, {"id_o", "e", "id_o"}}};
    CHECK_FALSE(validate_category(spec).ok);
  }
}

TEST_CASE("pool categories agree with the brute-force associativity oracle") {
  for (std::size_t k = 0; k < eqtest::category_pool().size(); ++k) {
    auto cat = eqtest::pool_category(k);
    CHECK(eqtest::brute_force_associative(*cat));
  }
}

TEST_CASE("to_spec round-trips") {
  for (const auto& named : eqtest::category_pool()) {
    auto cat = FinCategory::from_spec(named.spec);
    auto again = FinCategory::from_spec(cat->to_spec());
    CHECK(again->morphism_count() == cat->morphism_count());
    for (std::size_t f = 0; f < cat->morphism_count(); ++f) {
      for (std::size_t g = 0; g < cat->morphism_count(); ++g) {
        const int fi = static_cast<int>(f);
        const int gi = static_cast<int>(g);
        if (cat->cod(fi) != cat->dom(gi)) continue;
        CHECK(again->morphism_name(again->compose(gi, fi)) == cat->morphism_name(cat->compose(gi, fi)));
      }
    }
  }
}

TEST_CASE("functor validation") {
  auto cat = FinCategory::from_spec(z2());
  SUBCASE("involution") {
    auto f = functor(cat, {{{"o", {"x", "y"}}}, {{"s", {{"x", "y"}, {"y", "x"}}}}});
    CHECK(validate_functor(*f).ok);
    CHECK(f->act(*cat->find_morphism("s"), 0) == 1);
  }
  SUBCASE("not an involution") {
    CHECK_THROWS_AS(functor(cat, {{{"o", {"x", "y"}}}, {{"s", {{"x", "y"}, {"y", "y"}}}}}), ValidationError);
  }
  SUBCASE("undefined element") {
    CHECK_THROWS_AS(functor(cat, {{{"o", {"x", "y"}}}, {{"s", {{"x", "y"}}}}}), ValidationError);
  }
  SUBCASE("unknown object") {
    CHECK_THROWS_AS(functor(cat, {{{"q", {"x"}}}, {}}), ValidationError);
  }
}

TEST_CASE("colimits count connected components") {
  auto cat = FinCategory::from_spec(zigzag());
  auto one = functor(cat, {{{"d0", {"a", "b"}}, {"d1", {"p"}}}, {{"f", {{"a", "p"}, {"b", "p"}}}}});
  auto two = functor(cat, {{{"d0", {"a", "b"}}, {"d1", {"p", "q"}}}, {{"f", {{"a", "p"}, {"b", "q"}}}}});
  CHECK(colimit(*one).class_count == 1);
  const Colimit c = colimit(*two);
  CHECK(c.class_count == 2);
  CHECK(c.projection[0][0] == 0);
  CHECK(c.projection[0][1] == 1);
  CHECK(c.projection[1][1] == 1);
}

TEST_CASE("colimit agrees with the graph-component oracle on random functors") {
  eqtest::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto cat = eqtest::pool_category(static_cast<std::size_t>(trial % 3));
    std::vector<std::vector<std::string>> sets(cat->object_count());
    std::vector<std::vector<int>> action(cat->morphism_count());
    for (std::size_t d = 0; d < sets.size(); ++d) {
      const int n = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int k = 0; k < n; ++k) sets[d].push_back("e" + std::to_string(k));
    }
    for (std::size_t m = 0; m < action.size(); ++m) {
      const int mi = static_cast<int>(m);
      for (std::size_t x = 0; x < sets[static_cast<std::size_t>(cat->dom(mi))].size(); ++x) {
        const int size = static_cast<int>(sets[static_cast<std::size_t>(cat->cod(mi))].size());
        action[m].push_back(cat->is_identity(mi) ? static_cast<int>(x)
                                                 : std::uniform_int_distribution<int>(0, size - 1)(rng));
      }
    }
    FinFunctor f(cat, sets, action);
    if (!validate_functor(f)) continue;
    CHECK(colimit(f).class_count == eqtest::brute_force_colimit_size(f));
  }
}

TEST_CASE("natural transformation enumeration matches brute force, in order") {
  eqtest::Rng rng(5);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto cat = eqtest::pool_category(static_cast<std::size_t>(trial % 3));
    auto a = eqtest::random_orbit(cat, rng, "A");
    auto b = eqtest::random_orbit(cat, rng, "B");
    if (!a || !b) continue;
    const auto listed = enumerate_nat_trans(a->functor, b->functor);
    const auto oracle = eqtest::brute_force_nat_trans(*a->functor, *b->functor);
    REQUIRE(listed.size() == oracle.size());
    for (std::size_t k = 0; k < listed.size(); ++k) {
      CHECK(listed[k].components == oracle[k]);
      CHECK(is_natural(listed[k]));
    }
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("composition and isomorphisms of natural transformations") {
  auto cat = FinCategory::from_spec(z2());
  auto f = functor(cat, {{{"o", {"x", "y"}}}, {{"s", {{"x", "y"}, {"y", "x"}}}}});
  auto point = functor(cat, {{{"o", {"*"}}}, {{"s", {{"*", "*"}}}}});
  const auto autos = enumerate_nat_trans(f, f);
  CHECK(autos.size() == 2);
  for (const auto& t : autos) CHECK(is_iso(t));
  CHECK(compose_nat(autos[1], autos[1]) == identity_nat(f));
  const auto to_point = enumerate_nat_trans(f, point);
  REQUIRE(to_point.size() == 1);
  CHECK_FALSE(is_iso(to_point[0]));
  CHECK(enumerate_nat_trans(point, f).empty());
  CHECK_THROWS_AS(compose_nat(to_point[0], to_point[0]), ValidationError);
  auto other = FinCategory::from_spec(zigzag());
  auto g = functor(other, {{{"d0", {"a"}}, {"d1", {"p"}}}, {{"f", {{"a", "p"}}}}});
  CHECK_THROWS_AS(enumerate_nat_trans(f, g), ValidationError);
}
