#include "idlat/pi_function.hpp"

#include "idlat/errors.hpp"

#include <algorithm>

namespace idlat {

CarrierPtr Carrier::for_graph(const Graph& g) {
    auto c = std::make_shared<Carrier>();
    c->mode_ = Mode::Graph;
    c->graph_ = g;
    const SHLattice lat = enumerate_sh(g);
    for (AtomSet h : lat.members()) {
        if (h != 0) {
            c->members_.push_back(h);
        }
    }
    c->top_ = g.all_vertices();
    for (std::size_t i = 0; i < c->members_.size(); ++i) {
        c->index_.emplace(c->members_[i], i);
    }
    return c;
}

CarrierPtr Carrier::for_groupoid(const FiniteGroupoid& g) {
    auto c = std::make_shared<Carrier>();
    c->mode_ = Mode::Groupoid;
    c->groupoid_ = g;
    c->orbit_of_unit_ = orbit_index(g);
    const auto k = orbits(g).size();
    if (k > kMaxOrbits) {
        throw BudgetError("groupoid has " + std::to_string(k) + " orbits; too large to enumerate (limit " +
                          std::to_string(kMaxOrbits) + ")");
    }
    for (AtomSet m = 1; m < atom_bit(k); ++m) {
        c->members_.push_back(m);
    }
    std::sort(c->members_.begin(), c->members_.end(), atoms_less);
    c->top_ = atom_bit(k) - 1;
    for (std::size_t i = 0; i < c->members_.size(); ++i) {
        c->index_.emplace(c->members_[i], i);
    }
    return c;
}

std::size_t Carrier::index_of(AtomSet h) const {
    auto it = index_.find(h);
    if (it == index_.end()) {
        throw ValidationError(format(h) + " is not a nonempty member of the lattice");
    }
    return it->second;
}

AtomSet Carrier::join(AtomSet a, AtomSet b) const {
    return mode_ == Mode::Graph ? sh_closure(*graph_, a | b) : (a | b);
}

std::vector<std::string> Carrier::names(AtomSet h) const {
    if (mode_ == Mode::Graph) {
        return graph_->vertex_names(h);
    }
    std::vector<std::string> out;
    for (std::size_t u = 0; u < orbit_of_unit_.size(); ++u) {
        if (atom_in(h, static_cast<std::size_t>(orbit_of_unit_[u]))) {
            out.push_back(groupoid_->unit_name(static_cast<int>(u)));
        }
    }
    return out;
}

std::string Carrier::format(AtomSet h) const {
    std::string out = "{";
    bool first = true;
    for (const auto& n : names(h)) {
        out += (first ? "" : ", ") + n;
        first = false;
    }
    return out + "}";
}

AtomSet Carrier::parse(const std::vector<std::string>& names) const {
    if (mode_ == Mode::Graph) {
        const AtomSet h = graph_->vertex_set(names);
        if (h != 0 && !contains(h)) {
            throw ValidationError(graph_->format_set(h) + " is not saturated hereditary");
        }
        return h;
    }
    const UnitSet v = UnitSet::from_names(*groupoid_, names);
    if (!is_invariant(*groupoid_, v)) {
        const UnitSet closure = invariant_closure(*groupoid_, v);
        const auto extra = (closure & v.complement()).members();
        throw ValidationError("unit set is not invariant: its orbit closure adds '" +
                              groupoid_->unit_name(extra.front()) + "'");
    }
    return orbit_mask(*groupoid_, v);
}

const Graph& Carrier::graph() const {
    if (!graph_) {
        throw ValidationError("carrier is not in graph mode");
    }
    return *graph_;
}

const FiniteGroupoid& Carrier::groupoid() const {
    if (!groupoid_) {
        throw ValidationError("carrier is not in groupoid mode");
    }
    return *groupoid_;
}

bool Carrier::same_as(const Carrier& other) const {
    return this == &other ||
           (mode_ == other.mode_ && members_ == other.members_ && graph_ == other.graph_ && groupoid_ == other.groupoid_);
}

RIdeal PiFunction::value_or_whole(AtomSet h) const { return h == 0 ? whole_ideal(ring) : at(h); }

PiFunction PiFunction::constant(CarrierPtr carrier, RingSpec ring, RIdeal ideal) {
    check_ideal(ring, ideal);
    PiFunction p{std::move(carrier), std::move(ring), {}};
    p.values.assign(p.carrier->size(), ideal);
    return p;
}

bool PiFunction::operator==(const PiFunction& other) const {
    return carrier->same_as(*other.carrier) && ring == other.ring && values == other.values;
}

} // namespace idlat
