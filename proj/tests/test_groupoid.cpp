#include "idlat/catalog.hpp"
#include "idlat/errors.hpp"
#include "idlat/groupoid.hpp"

#include <doctest.h>

#include <random>

using namespace idlat;

namespace {

FiniteGroupoid make(const GroupoidTable& t) { return FiniteGroupoid::from_table(t); }

} // namespace

TEST_CASE("catalog groupoids validate and satisfy the axioms") {
    auto all = catalog::principal_catalog();
    const auto extra = catalog::non_principal_catalog();
    all.insert(all.end(), extra.begin(), extra.end());
    for (const auto& [name, table] : all) {
        CAPTURE(name);
        REQUIRE(validate(table).ok());
        const FiniteGroupoid g = make(table);
        const int n = static_cast<int>(g.morphism_count());
        for (int a = 0; a < n; ++a) {
            CHECK(g.compose(a, g.inv(a)) == g.unit_morphism(g.rng(a)));
            CHECK(g.compose(g.inv(a), a) == g.unit_morphism(g.src(a)));
            CHECK(g.compose(g.unit_morphism(g.rng(a)), a) == a);
            for (int b = 0; b < n; ++b) {
                CHECK((g.compose(a, b) >= 0) == (g.src(a) == g.rng(b)));
                for (int c = 0; c < n; ++c) {
                    if (g.compose(a, b) >= 0 && g.compose(b, c) >= 0) {
                        CHECK(g.compose(g.compose(a, b), c) == g.compose(a, g.compose(b, c)));
                    }
                }
            }
        }
        CHECK(make(g.to_table()) == g);
    }
}

TEST_CASE("orbits and invariant sets") {
    const FiniteGroupoid pair = make(catalog::disjoint_union({catalog::pair_groupoid({"1", "2"}), catalog::pair_groupoid({"3"})}));
    CHECK(orbits(pair) == std::vector<std::vector<int>>{{0, 1}, {2}});
    const auto opens = invariant_open_sets(pair);
    CHECK(opens.size() == 4);
    const UnitSet one = UnitSet::from_names(pair, {"1"});
    CHECK_FALSE(is_invariant(pair, one));
    CHECK(invariant_closure(pair, one) == UnitSet::from_names(pair, {"1", "2"}));
    CHECK(is_invariant(pair, UnitSet::from_names(pair, {"3"})));
    for (const auto& u : opens) {
        CHECK(is_invariant(pair, u));
        CHECK(is_invariant(pair, u.complement()));
    }
}

TEST_CASE("isotropy, effectiveness and strong effectiveness") {
    for (const auto& [name, table] : catalog::principal_catalog()) {
        CAPTURE(name);
        const FiniteGroupoid g = make(table);
        CHECK(isotropy(g).size() == g.unit_count());
        CHECK(is_effective(g));
        CHECK(is_strongly_effective(g));
    }
    for (const auto& [name, table] : catalog::non_principal_catalog()) {
        CAPTURE(name);
        const FiniteGroupoid g = make(table);
        CHECK_FALSE(is_effective(g));
        CHECK_FALSE(is_strongly_effective(g));
    }
    const FiniteGroupoid z2 = make(catalog::cyclic_group(2));
    CHECK(isotropy(z2).size() == 2);
}

TEST_CASE("restriction keeps exactly the morphisms inside an invariant set") {
    const FiniteGroupoid g = make(catalog::non_principal_catalog()[3].table);
    const UnitSet p = UnitSet::from_names(g, {"p"});
    const FiniteGroupoid gp = restrict(g, p);
    CHECK(gp.morphism_count() == 1);
    CHECK(is_strongly_effective(gp));
    const FiniteGroupoid ge = restrict(g, p.complement());
    CHECK(ge.morphism_count() == 2);
    const FiniteGroupoid pair = make(catalog::pair_groupoid({"1", "2"}));
    CHECK_THROWS_AS(restrict(pair, UnitSet::from_names(pair, {"1"})), ValidationError);
}

TEST_CASE("validation reports broken tables") {
    GroupoidTable t = catalog::cyclic_group(2);
    t.compose.back().result = "g1";
    CHECK_FALSE(validate(t).ok());
    CHECK_THROWS_AS(make(t), ValidationError);

    GroupoidTable missing = catalog::cyclic_group(3);
    missing.compose.pop_back();
    CHECK_FALSE(validate(missing).ok());

    GroupoidTable bad_inv = catalog::pair_groupoid({"1", "2"});
    bad_inv.morphisms[1].inv = bad_inv.morphisms[1].name;
    CHECK_FALSE(validate(bad_inv).ok());

    GroupoidTable dangling = catalog::cyclic_group(2);
    dangling.morphisms.back().src = "nowhere";
    CHECK_FALSE(validate(dangling).ok());
}

TEST_CASE("non-associative tables are rejected") {
    // Z/3 with one product flipped so that the table is still a Latin square
    // but not a group.
    GroupoidTable t = catalog::cyclic_group(3);
    for (auto& c : t.compose) {
        if (c.first == "g1" && c.second == "g1") {
            c.result = "e";
        } else if (c.first == "g1" && c.second == "g2") {
            c.result = "g2";
        }
    }
    CHECK_FALSE(validate(t).ok());
}

TEST_CASE("units default to identity compositions") {
    GroupoidTable t;
    t.units = {"a", "b"};
    const FiniteGroupoid g = make(t);
    CHECK(g.morphism_count() == 2);
    CHECK(orbits(g).size() == 2);
}

TEST_CASE("too many orbits are refused") {
    std::vector<std::string> units;
    for (int i = 0; i < 21; ++i) {
        units.push_back("u" + std::to_string(i));
    }
    const FiniteGroupoid g = make(catalog::isolated_units(units));
    CHECK_THROWS_AS(invariant_open_sets(g), BudgetError);
}
