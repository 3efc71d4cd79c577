#include "idlat/lpa_ideals.hpp"

#include "idlat/errors.hpp"

#include <algorithm>

namespace idlat {

namespace {

void require_same_carrier(const PiFunction& p1, const PiFunction& p2) {
    if (!p1.carrier->same_as(*p2.carrier)) {
        throw ValidationError("pi-functions live on different carriers");
    }
    if (!(p1.ring == p2.ring)) {
        throw ValidationError("pi-functions use different rings: " + to_string(p1.ring) + " and " +
                              to_string(p2.ring));
    }
}

void require_complete(const PiFunction& p) {
    if (!p.carrier) {
        throw ValidationError("pi-function has no carrier");
    }
    if (p.values.size() != p.carrier->size()) {
        throw ValidationError("pi-function assigns " + std::to_string(p.values.size()) + " values but the lattice has " +
                              std::to_string(p.carrier->size()) + " nonempty members");
    }
    for (const auto& v : p.values) {
        check_ideal(p.ring, v);
    }
}

} // namespace

ValidationReport validate_pi(const PiFunction& p) {
    require_complete(p);
    ValidationReport report;
    const auto& c = *p.carrier;
    const auto& members = c.members();
    const RingSpec& ring = p.ring;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
            const AtomSet a = members[i], b = members[j];
            const RIdeal& pa = p.values[i];
            const RIdeal& pb = p.values[j];
            const AtomSet ab = c.join(a, b);
            const RIdeal expected = ideal_intersect(ring, pa, pb);
            if (!(p.at(ab) == expected)) {
                report.issues.push_back("join law fails: pi(" + c.format(a) + " v " + c.format(b) + ") = pi(" +
                                        c.format(ab) + ") = " + to_string(ring, p.at(ab)) + " but pi(" + c.format(a) +
                                        ") ∩ pi(" + c.format(b) + ") = " + to_string(ring, expected));
            }
            if (atoms_subset(a, b) && !ideal_contains(ring, pa, pb)) {
                report.issues.push_back("order reversal fails: " + c.format(a) + " ⊆ " + c.format(b) + " but pi(" +
                                        c.format(b) + ") = " + to_string(ring, pb) + " is not inside pi(" +
                                        c.format(a) + ") = " + to_string(ring, pa));
            }
        }
    }
    return report;
}

void require_valid(const PiFunction& p) {
    const ValidationReport r = validate_pi(p);
    if (!r.ok()) {
        throw ValidationError("invalid pi-function: " + r.issues.front());
    }
}

bool pi_leq(const PiFunction& p1, const PiFunction& p2) {
    require_same_carrier(p1, p2);
    require_complete(p1);
    require_complete(p2);
    for (std::size_t i = 0; i < p1.values.size(); ++i) {
        if (!ideal_contains(p1.ring, p2.values[i], p1.values[i])) {
            return false;
        }
    }
    return true;
}

PiFunction pi_meet(const PiFunction& p1, const PiFunction& p2) {
    require_same_carrier(p1, p2);
    require_valid(p1);
    require_valid(p2);
    PiFunction out{p1.carrier, p1.ring, {}};
    for (std::size_t i = 0; i < p1.values.size(); ++i) {
        out.values.push_back(ideal_intersect(p1.ring, p1.values[i], p2.values[i]));
    }
    const ValidationReport r = validate_pi(out);
    if (!r.ok()) {
        throw Error("meet produced an invalid pi-function: " + r.issues.front());
    }
    return out;
}

PiFunction pointwise_sum(const PiFunction& p1, const PiFunction& p2) {
    require_same_carrier(p1, p2);
    require_complete(p1);
    require_complete(p2);
    PiFunction out{p1.carrier, p1.ring, {}};
    for (std::size_t i = 0; i < p1.values.size(); ++i) {
        out.values.push_back(ideal_sum(p1.ring, p1.values[i], p2.values[i]));
    }
    return out;
}

PiFunction pi_join(const PiFunction& p1, const PiFunction& p2) {
    require_same_carrier(p1, p2);
    require_valid(p1);
    require_valid(p2);
    const Carrier& c = *p1.carrier;
    const RingSpec& ring = p1.ring;

    // Evaluation points inside each member: the sets whose pointwise sum
    // enters the intersection.
    std::vector<AtomSet> points;  // indexed by atom
    if (c.mode() == Carrier::Mode::Graph) {
        const Graph& g = c.graph();
        if (!check_condition_K(g)) {
            throw HypothesisError("graph does not satisfy Condition (K); the join formula does not apply");
        }
        for (const auto& t : tail_analysis(g)) {
            points.push_back(t.tail_stable ? t.closure : 0);
        }
    } else {
        if (!is_strongly_effective(c.groupoid())) {
            throw HypothesisError("groupoid is not strongly effective; the join formula does not apply");
        }
        for (std::size_t o = 0; o < std::size_t(atom_count(c.top())); ++o) {
            points.push_back(atom_bit(o));
        }
    }

    PiFunction out{p1.carrier, ring, {}};
    for (AtomSet h : c.members()) {
        RIdeal acc = whole_ideal(ring);
        for (std::size_t a : atoms_of(h)) {
            const AtomSet t = points[a];
            if (t == 0) {
                continue;
            }
            acc = ideal_intersect(ring, acc, ideal_sum(ring, p1.at(t), p2.at(t)));
        }
        out.values.push_back(acc);
    }

    const ValidationReport r = validate_pi(out);
    if (!r.ok()) {
        throw Error("join produced an invalid pi-function: " + r.issues.front());
    }
    if (!pi_leq(p1, out) || !pi_leq(p2, out)) {
        throw Error("join does not dominate its arguments");
    }
    return out;
}

RIdeal rho_eval(const PiFunction& p, const LassoPath& x) {
    require_valid(p);
    const Graph& g = p.carrier->graph();
    return p.at(lasso_sh_limit(g, x));
}

int monomial_source(const Graph& g, const Monomial& m) {
    auto check_path = [&g](const std::vector<int>& path, const char* label) {
        for (int e : path) {
            if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) {
                throw ValidationError(std::string("monomial path ") + label + " uses an unknown edge");
            }
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (g.edge(path[i]).src != g.edge(path[i + 1]).rng) {
                throw ValidationError(std::string("monomial path ") + label + " is not a path at edge '" +
                                      g.edge(path[i]).name + "'");
            }
        }
    };
    check_path(m.mu, "mu");
    check_path(m.nu, "nu");
    std::optional<int> src = m.vertex;
    auto meet = [&](const std::vector<int>& path, const char* label) {
        if (path.empty()) {
            return;
        }
        const int s = g.edge(path.back()).src;
        if (src && *src != s) {
            throw ValidationError(std::string("monomial path ") + label + " ends at " + g.vertex_name(s) +
                                  " but the common source is " + g.vertex_name(*src));
        }
        src = s;
    };
    meet(m.mu, "mu");
    meet(m.nu, "nu");
    if (!src) {
        throw ValidationError("monomial with two empty paths needs a vertex");
    }
    if (*src < 0 || static_cast<std::size_t>(*src) >= g.vertex_count()) {
        throw ValidationError("monomial vertex is unknown");
    }
    return *src;
}

bool monomial_in_ideal(const PiFunction& p, const Monomial& m) {
    require_valid(p);
    const Graph& g = p.carrier->graph();
    const int v = monomial_source(g, m);
    const RingElement coeff = normalize(p.ring, m.coeff);
    if (is_zero(p.ring, coeff)) {
        return true;
    }
    return ideal_member(p.ring, p.at(sh_closure(g, atom_bit(static_cast<std::size_t>(v)))), coeff);
}

PiFunction basic_pi(const CarrierPtr& carrier, const RingSpec& ring, AtomSet h) {
    if (h != 0 && !carrier->contains(h)) {
        throw ValidationError(carrier->format(h) + " is not a member of the lattice");
    }
    PiFunction out{carrier, ring, {}};
    for (AtomSet k : carrier->members()) {
        out.values.push_back(atoms_subset(k, h) ? whole_ideal(ring) : zero_ideal(ring));
    }
    require_valid(out);
    return out;
}

std::vector<PiFunction> enumerate_pi_functions(const CarrierPtr& carrier, const RingSpec& ring, std::size_t limit) {
    const auto ideals = enumerate_ideals(ring);
    const auto& members = carrier->members();
    const auto m = members.size();
    // checks[k]: pairs (i, j) whose law is decided once member k is assigned.
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>> checks(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const std::size_t ij = carrier->index_of(carrier->join(members[i], members[j]));
            checks[std::max({i, j, ij})].emplace_back(i, j, ij);
        }
    }
    std::vector<PiFunction> out;
    std::vector<RIdeal> values(m);
    auto assign = [&](std::size_t k, auto& self) -> void {
        if (k == m) {
            out.push_back(PiFunction{carrier, ring, values});
            if (out.size() > limit) {
                throw BudgetError("more than " + std::to_string(limit) + " pi-functions");
            }
            return;
        }
        for (const auto& ideal : ideals) {
            values[k] = ideal;
            bool ok = true;
            for (const auto& [i, j, ij] : checks[k]) {
                if (!(values[ij] == ideal_intersect(ring, values[i], values[j]))) {
                    ok = false;
                    break;
                }
                if (atoms_subset(members[i], members[j]) && !ideal_contains(ring, values[i], values[j])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                self(k + 1, self);
            }
        }
    };
    assign(0, assign);
    return out;
}

PiFunction reconstruct_from_rho(const PiFunction& p) {
    require_valid(p);
    const Graph& g = p.carrier->graph();
    const auto cycles = simple_cycles(g);
    PiFunction out{p.carrier, p.ring, {}};
    for (AtomSet h : p.carrier->members()) {
        RIdeal acc = whole_ideal(p.ring);
        for (const auto& c : cycles) {
            const LassoPath x{{}, c};
            if (lasso_in_UH(g, x, h)) {
                acc = ideal_intersect(p.ring, acc, rho_eval(p, x));
            }
        }
        out.values.push_back(acc);
    }
    return out;
}

} // namespace idlat
