// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "support/oracles.hpp"

#include "idlat/catalog.hpp"
#include "idlat/errors.hpp"
#include "idlat/io.hpp"
#include "idlat/lpa_ideals.hpp"
#include "idlat/steinberg.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace idlat;

namespace {

constexpr std::uint64_t kSeed = 20261015;
constexpr double kCriterion2Seconds = 60.0;
constexpr double kCriterion8Seconds = 30.0;
constexpr int kRandomGraphs = 500;
constexpr int kJoinTriples = 200;
constexpr int kDominatingSamples = 1000;

// Collects the first failure of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && failure_.empty()) {
            failure_ = what;
        }
    }
    bool ok() const { return failure_.empty(); }
    const std::string& failure() const { return failure_; }
    std::string note;

private:
    std::string failure_;
};

RIdeal gen(std::int64_t g) { return RIdeal{g, {}}; }

const std::vector<RingSpec>& catalog_rings() {
    static const std::vector<RingSpec> rings{RingSpec::modular(2), RingSpec::modular(3), RingSpec::modular(4),
                                             RingSpec::modular(8)};
    return rings;
}

AlgebraPtr algebra(const GroupoidTable& t, const RingSpec& r) {
    return SteinbergAlgebra::make(FiniteGroupoid::from_table(t), r);
}

std::string label(const std::string& groupoid, const RingSpec& r) { return groupoid + " over " + to_string(r); }

// Element with coordinates `row` in component k and zero elsewhere.
AlgebraElement component_element(const AlgebraPtr& alg, std::size_t k, const Vec& row) {
    AlgebraElement f = AlgebraElement::zero(alg);
    f.coeffs[k] = row;
    return f;
}

PiFunction two_point(const CarrierPtr& c, std::int64_t x, std::int64_t y, std::int64_t xy) {
    PiFunction p = PiFunction::constant(c, RingSpec::integers(), gen(1));
    p.values[c->index_of(c->parse({"x"}))] = gen(x);
    p.values[c->index_of(c->parse({"y"}))] = gen(y);
    p.values[c->index_of(c->parse({"x", "y"}))] = gen(xy);
    return p;
}

// ------------------------------------------------------------- criteria

void two_point_example(Check& c) {
    const RingSpec z = RingSpec::integers();
    const FiniteGroupoid g = FiniteGroupoid::from_table(
        io::groupoid_from_json(io::read_file(std::string(IDLAT_FIXTURES) + "/two_units.json")));
    const Graph gr = Graph::from_doc(io::graph_from_json(io::read_file(std::string(IDLAT_FIXTURES) + "/two_double_loops.json")));
    for (const CarrierPtr& carrier : {Carrier::for_groupoid(g), Carrier::for_graph(gr)}) {
        const std::string mode = carrier->mode() == Carrier::Mode::Groupoid ? "groupoid" : "graph";
        const PiFunction p1 = two_point(carrier, 2, 3, 6);
        const PiFunction p2 = two_point(carrier, 3, 5, 15);
        c.expect(validate_pi(p1).ok() && validate_pi(p2).ok(), mode + ": the two functions must be valid");
        const PiFunction j = pi_join(p1, p2);
        for (const auto& v : j.values) {
            c.expect(v == gen(1), mode + ": join is not Z everywhere");
        }
        const PiFunction sum = pointwise_sum(p1, p2);
        c.expect(sum.at(carrier->top()) == gen(3), mode + ": pointwise sum at {x,y} is not 3Z");
        c.expect(sum.at(carrier->parse({"x"})) == gen(1) && sum.at(carrier->parse({"y"})) == gen(1),
                 mode + ": pointwise sum at singletons is not Z");
        c.expect(!validate_pi(sum).ok(), mode + ": pointwise sum was not rejected");
    }
    const CarrierPtr gc = Carrier::for_groupoid(g);
    const auto x = static_cast<std::size_t>(*g.find_morphism("x"));
    const auto y = static_cast<std::size_t>(*g.find_morphism("y"));
    const auto g1 = gamma_coefficients(g, two_point(gc, 2, 3, 6));
    const auto g2 = gamma_coefficients(g, two_point(gc, 3, 5, 15));
    c.expect(g1[x] == gen(2) && g1[y] == gen(3), "Gamma(pi1) is not 2Z + 3Z");
    c.expect(g2[x] == gen(3) && g2[y] == gen(5), "Gamma(pi2) is not 3Z + 5Z");
    c.note = "Gamma(pi1) = " + to_string(z, g1[x]) + " + " + to_string(z, g1[y]) + ", Gamma(pi2) = " +
             to_string(z, g2[x]) + " + " + to_string(z, g2[y]) + ", join = Z, pointwise sum rejected";
}

void gamma_bijection(Check& c) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t instances = 0;
    for (const auto& [name, table] : catalog::principal_catalog()) {
        for (const RingSpec& r : catalog_rings()) {
            const AlgebraPtr alg = algebra(table, r);
            const auto ideals = enumerate_all_ideals(alg);
            const auto pis = enumerate_pi_functions(alg->carrier(), r);
            std::set<AlgebraIdeal> images;
            for (const auto& p : pis) {
                images.insert(realize_gamma(alg, p));
            }
            std::uint64_t expected = 1;
            for (std::size_t o = 0; o < orbits(alg->groupoid()).size(); ++o) {
                expected *= enumerate_ideals(r).size();
            }
            const std::string at = label(name, r);
            c.expect(images == std::set<AlgebraIdeal>(ideals.begin(), ideals.end()), at + ": Gamma image differs");
            c.expect(images.size() == pis.size(), at + ": Gamma is not injective");
            c.expect(ideals.size() == expected, at + ": ideal count is not the product over orbits");
            if (name == "two isolated units" && r.modulus == 4) {
                c.expect(ideals.size() == 9, "two isolated units over Z/4 does not have 9 ideals");
            }
            if (alg->dim() <= 4 && r.modulus <= 4) {
                const oracle::BruteAlgebra brute(alg->groupoid(), r);
                std::set<oracle::ElementSet> lib;
                for (const auto& i : ideals) {
                    lib.insert(brute.from_library(i));
                }
                c.expect(lib == brute.all_ideals(), at + ": enumeration differs from brute-force ideals");
            }
            ++instances;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < kCriterion2Seconds, "runtime over 60 s");
    std::ostringstream s;
    s << instances << " groupoid/ring instances, " << secs << " s";
    c.note = s.str();
}

void basic_lattice(Check& c) {
    std::size_t instances = 0;
    for (const auto& [name, table] : catalog::principal_catalog()) {
        for (const RingSpec& r : catalog_rings()) {
            const AlgebraPtr alg = algebra(table, r);
            const std::string at = label(name, r);
            const auto opens = invariant_open_sets(alg->groupoid());
            std::vector<AlgebraIdeal> iu;
            for (const auto& u : opens) {
                iu.push_back(ideal_from_open(alg, u));
            }
            std::set<AlgebraIdeal> basic;
            for (const auto& i : enumerate_all_ideals(alg)) {
                const bool b = is_basic_ideal(i);
                c.expect(b == oracle::literal_is_basic(i), at + ": basic test disagrees with the definition");
                if (b) {
                    basic.insert(i);
                }
            }
            c.expect(basic == std::set<AlgebraIdeal>(iu.begin(), iu.end()), at + ": basic ideals are not the I_U");
            c.expect(basic.size() == (std::size_t{1} << orbits(alg->groupoid()).size()), at + ": count is not 2^orbits");
            for (std::size_t a = 0; a < opens.size(); ++a) {
                for (std::size_t b = 0; b < opens.size(); ++b) {
                    c.expect(ideal_from_open(alg, opens[a] & opens[b]) == iu[a].intersect(iu[b]), at + ": meet not preserved");
                    c.expect(ideal_from_open(alg, opens[a] | opens[b]) == iu[a] + iu[b], at + ": join not preserved");
                    c.expect(opens[a].subset_of(opens[b]) == iu[b].contains(iu[a]), at + ": order not preserved");
                }
            }
            ++instances;
        }
    }
    c.note = std::to_string(instances) + " instances";
}

void non_effective(Check& c) {
    const AlgebraPtr alg = algebra(catalog::cyclic_group(2), RingSpec::modular(2));
    const AlgebraIdeal k = unit_rep_kernel(alg);
    c.expect(!k.is_zero(), "kernel is zero");
    c.expect(is_basic_ideal(k) && oracle::literal_is_basic(k), "kernel is not basic");
    c.expect(!meets_unit_space(k), "kernel meets the unit-space algebra");
    for (const auto& u : invariant_open_sets(alg->groupoid())) {
        c.expect(!(ideal_from_open(alg, u) == k), "kernel equals some I_U");
    }
    c.note = "kernel has " + std::to_string(k.order()) + " elements";
}

void spanning_and_restriction(Check& c) {
    std::size_t ideals_checked = 0;
    for (const auto& [name, table] : catalog::principal_catalog()) {
        for (const RingSpec& r : catalog_rings()) {
            const AlgebraPtr alg = algebra(table, r);
            const auto& g = alg->groupoid();
            const std::string at = label(name, r);
            const auto bis = oracle::bisections(g);
            const auto elems = ring_elements(r);
            const std::int64_t n = alg->moduli().front();
            for (const auto& i : enumerate_all_ideals(alg)) {
                std::vector<Vec> gens;
                for (const auto& b : bis) {
                    std::vector<int> sources;
                    for (int m : b) {
                        sources.push_back(g.unit_morphism(g.src(m)));
                    }
                    const auto one_sb = indicator(alg, sources);
                    const auto one_b = indicator(alg, b);
                    for (const auto& x : elems) {
                        if (i.contains(one_sb.scaled(x))) {
                            gens.push_back(one_b.scaled(x).coeffs.front());
                        }
                    }
                }
                c.expect(Submodule::span(n, alg->dim(), gens) == i.components().front(), at + ": ideal is not spanned by bisections");
                // Restriction is linear, so checking the module generators suffices.
                for (const auto& row : i.components().front().rows()) {
                    c.expect(i.contains(component_element(alg, 0, row).restrict_to_units()), at + ": restriction leaves the ideal");
                }
                ++ideals_checked;
            }
        }
    }
    c.note = std::to_string(ideals_checked) + " ideals";
}

void exact_sequences(Check& c) {
    auto all = catalog::principal_catalog();
    const auto extra = catalog::non_principal_catalog();
    all.insert(all.end(), extra.begin(), extra.end());
    std::size_t count = 0;
    for (const auto& [name, table] : all) {
        for (const RingSpec& r : catalog_rings()) {
            const AlgebraPtr alg = algebra(table, r);
            for (const auto& u : invariant_open_sets(alg->groupoid())) {
                const auto rep = check_exact_sequence(alg, u);
                c.expect(rep.exact(), label(name, r) + ": " + (rep.failures.empty() ? "" : rep.failures.front()));
                ++count;
            }
        }
    }
    c.note = std::to_string(count) + " sequences";
}

void field_coefficients(Check& c) {
    auto all = catalog::principal_catalog();
    const auto extra = catalog::non_principal_catalog();
    all.insert(all.end(), extra.begin(), extra.end());
    std::size_t count = 0;
    for (const auto& [name, table] : all) {
        for (const RingSpec& r : {RingSpec::modular(2), RingSpec::modular(3)}) {
            for (const auto& i : enumerate_all_ideals(algebra(table, r))) {
                c.expect(is_basic_ideal(i) && oracle::literal_is_basic(i), label(name, r) + ": non-basic ideal");
                ++count;
            }
        }
    }
    c.note = std::to_string(count) + " ideals";
}

void condition_k(Check& c) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(kSeed);
    int with_k = 0;
    for (int i = 0; i < kRandomGraphs; ++i) {
        const Graph g = Graph::from_doc(oracle::random_graph(rng, 8, 16));
        const bool k = check_condition_K(g);
        c.expect(k == check_condition_K_via_quotients(g), "direct and quotient tests disagree on random graph " + std::to_string(i));
        c.expect(k == oracle::condition_K_by_search(g), "direct test disagrees with path search on random graph " + std::to_string(i));
        with_k += k ? 1 : 0;
    }
    auto fixture = [&](const GraphDoc& d, bool expected, const std::string& name) {
        const Graph g = Graph::from_doc(d);
        c.expect(check_condition_K(g) == expected, name + ": wrong direct answer");
        c.expect(check_condition_K_via_quotients(g) == expected, name + ": wrong quotient answer");
    };
    fixture(catalog::single_loop(), false, "single loop");
    for (int m = 1; m <= 4; ++m) {
        fixture(catalog::loop_chain(m), true, "loop chain " + std::to_string(m));
    }
    fixture(catalog::loop_augmented_tree(), true, "loop-augmented tree");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < kCriterion8Seconds, "runtime over 30 s");
    std::ostringstream s;
    s << kRandomGraphs << " random graphs (" << with_k << " with (K)), seed " << kSeed << ", " << secs << " s";
    c.note = s.str();
}

void join_soundness(Check& c) {
    std::mt19937_64 rng(kSeed + 9);
    int triples = 0, samples = 0;
    while (triples < kJoinTriples) {
        const Graph g = Graph::from_doc(oracle::random_graph(rng, 6, 10));
        if (!check_condition_K(g)) {
            continue;
        }
        const CarrierPtr carrier = Carrier::for_graph(g);
        const RingSpec r = triples % 2 == 0 ? RingSpec::integers() : RingSpec::modular(12);
        const PiFunction p1 = oracle::random_pi(rng, carrier, r), p2 = oracle::random_pi(rng, carrier, r);
        const PiFunction j = pi_join(p1, p2);
        const std::string at = "triple " + std::to_string(triples);
        c.expect(validate_pi(j).ok(), at + ": join is not valid");
        c.expect(pi_leq(p1, j) && pi_leq(p2, j), at + ": join does not dominate");
        for (int s = 0; s < kDominatingSamples; ++s) {
            const PiFunction psi = oracle::random_dominating(rng, {p1, p2});
            c.expect(validate_pi(psi).ok(), at + ": sampler produced an invalid function");
            c.expect(pi_leq(j, psi), at + ": join is not below a dominating function");
            ++samples;
        }
        ++triples;
    }
    for (int m = 1; m <= 4; ++m) {
        const CarrierPtr carrier = Carrier::for_graph(Graph::from_doc(catalog::loop_chain(m)));
        for (int t = 0; t < 50; ++t) {
            const RingSpec r = t % 2 == 0 ? RingSpec::integers() : RingSpec::modular(12);
            const PiFunction p1 = oracle::random_pi(rng, carrier, r), p2 = oracle::random_pi(rng, carrier, r);
            c.expect(pi_join(p1, p2) == pointwise_sum(p1, p2), "chain of length " + std::to_string(m) + ": join is not pointwise");
        }
    }
    std::size_t groupoid_pairs = 0;
    for (const auto& [name, table] : catalog::principal_catalog()) {
        for (const RingSpec& r : {RingSpec::modular(4), RingSpec::modular(12)}) {
            const AlgebraPtr alg = algebra(table, r);
            for (int t = 0; t < 20; ++t) {
                const PiFunction p1 = oracle::random_pi(rng, alg->carrier(), r);
                const PiFunction p2 = oracle::random_pi(rng, alg->carrier(), r);
                c.expect(realize_gamma(alg, pi_join(p1, p2)) == realize_gamma(alg, p1) + realize_gamma(alg, p2),
                         label(name, r) + ": join does not realize the ideal sum");
                ++groupoid_pairs;
            }
        }
    }
    std::ostringstream s;
    s << triples << " graph triples, " << samples << " dominating samples, " << groupoid_pairs << " groupoid pairs";
    c.note = s.str();
}

void pi_rho_round_trip(Check& c) {
    std::mt19937_64 rng(kSeed + 10);
    std::size_t count = 0;
    for (const auto& [name, doc] : catalog::graph_fixtures()) {
        const Graph g = Graph::from_doc(doc);
        c.expect(g.vertex_count() <= 8, name + " has more than 8 vertices");
        const CarrierPtr carrier = Carrier::for_graph(g);
        for (const RingSpec& r : {RingSpec::integers(), RingSpec::modular(12)}) {
            std::vector<PiFunction> pis;
            for (int t = 0; t < 50; ++t) {
                pis.push_back(oracle::random_pi(rng, carrier, r));
            }
            if (r.kind == RingSpec::Kind::Modular && carrier->size() <= 4) {
                const auto all = enumerate_pi_functions(carrier, r);
                pis.insert(pis.end(), all.begin(), all.end());
            }
            for (const auto& p : pis) {
                c.expect(reconstruct_from_rho(p) == p, name + ": reconstruction differs");
                ++count;
            }
        }
    }
    c.note = std::to_string(count) + " functions on " + std::to_string(catalog::graph_fixtures().size()) + " graphs";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"two-point example over Z", two_point_example},
        {"Gamma bijection against enumeration", gamma_bijection},
        {"basic ideals form the invariant-set lattice", basic_lattice},
        {"non-effective counterexample for Z/2 over F_2", non_effective},
        {"spanning by bisections and restriction", spanning_and_restriction},
        {"exact sequences", exact_sequences},
        {"field coefficients give only basic ideals", field_coefficients},
        {"Condition (K) cross-check", condition_k},
        {"join soundness", join_soundness},
        {"pi to rho round trip", pi_rho_round_trip},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << (i + 1) << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first;
        if (!c.ok()) {
            std::cout << "  [" << c.failure() << "]";
        } else if (!c.note.empty()) {
            std::cout << "  (" << c.note << ")";
        }
        std::cout << "\n";
        failed += c.ok() ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
