#include "support/oracles.hpp"

#include "idlat/errors.hpp"
#include "idlat/ring_ideals.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace idlat;

namespace {

RIdeal g(std::int64_t gen) { return RIdeal{gen, {}}; }

} // namespace

TEST_CASE("integer ideals use gcd for sums and lcm for intersections") {
    const RingSpec z = RingSpec::integers();
    CHECK(ideal_sum(z, g(2), g(3)) == g(1));
    CHECK(ideal_intersect(z, g(2), g(3)) == g(6));
    CHECK(ideal_intersect(z, g(6), g(15)) == g(30));
    CHECK(ideal_sum(z, g(6), g(15)) == g(3));
    CHECK(ideal_sum(z, g(0), g(4)) == g(4));
    CHECK(ideal_intersect(z, g(0), g(4)) == g(0));
    CHECK(ideal_contains(z, g(2), g(6)));
    CHECK_FALSE(ideal_contains(z, g(6), g(2)));
    CHECK(ideal_contains(z, g(5), g(0)));
    CHECK(to_string(z, g(1)) == "Z");
    CHECK(to_string(z, g(6)) == "6Z");
    CHECK(to_string(z, g(0)) == "0");
    CHECK(principal_ideal(z, RingElement::scalar(-4)) == g(4));
}

TEST_CASE("ideals of Z/n agree with subsets closed under addition and multiplication") {
    for (std::int64_t n : {2, 3, 4, 6, 8, 9, 12}) {
        CAPTURE(n);
        const RingSpec r = RingSpec::modular(n);
        const auto lib = enumerate_ideals(r);
        const auto brute = oracle::ideals_of_zmod(n);
        REQUIRE(lib.size() == brute.size());
        for (const auto& i : lib) {
            CHECK(brute.contains(oracle::ideal_elements_zmod(n, i.gen)));
        }
        for (const auto& a : lib) {
            const auto ea = oracle::ideal_elements_zmod(n, a.gen);
            for (std::int64_t x = 0; x < n; ++x) {
                CHECK(ideal_member(r, a, RingElement::scalar(x)) == ea.contains(x));
            }
            for (const auto& b : lib) {
                const auto eb = oracle::ideal_elements_zmod(n, b.gen);
                std::set<std::int64_t> meet, join;
                std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::inserter(meet, meet.end()));
                for (auto x : ea) {
                    for (auto y : eb) {
                        join.insert((x + y) % n);
                    }
                }
                CHECK(oracle::ideal_elements_zmod(n, ideal_intersect(r, a, b).gen) == meet);
                CHECK(oracle::ideal_elements_zmod(n, ideal_sum(r, a, b).gen) == join);
                CHECK(ideal_contains(r, a, b) == std::includes(ea.begin(), ea.end(), eb.begin(), eb.end()));
            }
        }
    }
}

TEST_CASE("ideal counts of small rings") {
    CHECK(enumerate_ideals(RingSpec::modular(2)).size() == 2);
    CHECK(enumerate_ideals(RingSpec::modular(4)).size() == 3);
    CHECK(enumerate_ideals(RingSpec::modular(8)).size() == 4);
    CHECK(enumerate_ideals(RingSpec::modular(12)).size() == 6);
    const RingSpec p = RingSpec::product({RingSpec::modular(2), RingSpec::modular(4)});
    CHECK(enumerate_ideals(p).size() == 6);
    CHECK(ring_order(p) == 8);
    CHECK_THROWS_AS(enumerate_ideals(RingSpec::integers()), NotEnumerableError);
}

TEST_CASE("lattice laws hold on product rings") {
    const RingSpec p = RingSpec::product({RingSpec::modular(4), RingSpec::modular(6)});
    const auto ideals = enumerate_ideals(p);
    CHECK(ideals.size() == 12);
    for (const auto& a : ideals) {
        CHECK(ideal_sum(p, a, a) == a);
        CHECK(ideal_intersect(p, a, whole_ideal(p)) == a);
        CHECK(ideal_sum(p, a, zero_ideal(p)) == a);
        for (const auto& b : ideals) {
            CHECK(ideal_sum(p, a, b) == ideal_sum(p, b, a));
            CHECK(ideal_intersect(p, a, ideal_sum(p, a, b)) == a);
            CHECK(ideal_contains(p, ideal_sum(p, a, b), a));
            CHECK(ideal_contains(p, a, ideal_intersect(p, a, b)));
            CHECK(unflatten_ideal(p, flatten(p, a)) == a);
        }
    }
}

TEST_CASE("random integer ideals satisfy absorption and distributivity") {
    std::mt19937_64 rng(20261015);
    const RingSpec z = RingSpec::integers();
    std::uniform_int_distribution<std::int64_t> dist(0, 60);
    for (int i = 0; i < 2000; ++i) {
        const RIdeal a = g(dist(rng)), b = g(dist(rng)), c = g(dist(rng));
        CHECK(ideal_intersect(z, a, ideal_sum(z, a, b)) == a);
        CHECK(ideal_sum(z, a, ideal_intersect(z, a, b)) == a);
        CHECK(ideal_intersect(z, a, ideal_sum(z, b, c)) ==
              ideal_sum(z, ideal_intersect(z, a, b), ideal_intersect(z, a, c)));
        CHECK(ideal_contains(z, a, b) == (a.gen == 0 ? b.gen == 0 : b.gen % a.gen == 0));
    }
}

TEST_CASE("basic open sets contain exactly the ideals containing F") {
    const RingSpec r = RingSpec::modular(12);
    const std::vector<RingElement> f{RingElement::scalar(4), RingElement::scalar(6)};
    std::size_t count = 0;
    for (const auto& i : enumerate_ideals(r)) {
        const bool expected = i.gen == 1 || i.gen == 2;
        CHECK(in_basic_open(r, i, f) == expected);
        count += in_basic_open(r, i, f) ? 1 : 0;
    }
    CHECK(count == 2);
    CHECK(in_basic_open(r, zero_ideal(r), {}));
}

TEST_CASE("malformed ring specifications are rejected") {
    CHECK_THROWS_AS(validate_ring(RingSpec::modular(0)), ValidationError);
    CHECK_THROWS_AS(validate_ring(RingSpec::modular(kMaxModulus + 1)), ValidationError);
    CHECK_THROWS_AS(validate_ring(RingSpec::product({})), ValidationError);
    CHECK_THROWS_AS(check_ideal(RingSpec::modular(12), g(5)), ValidationError);
    CHECK_THROWS_AS(check_ideal(RingSpec::integers(), g(-3)), ValidationError);
}

TEST_CASE("lcm overflow is reported instead of wrapping") {
    CHECK_THROWS_AS(arith::checked_lcm(std::int64_t{1} << 40, (std::int64_t{1} << 40) - 1), Error);
}
