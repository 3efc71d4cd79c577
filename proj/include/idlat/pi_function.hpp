#pragma once

/**
 * @file pi_function.hpp
 * @brief Lattice carriers and pi-functions on them.
 *
 * A carrier is the lattice on which a pi-function lives:
 *
 *   - graph mode: the saturated hereditary vertex sets of a graph, atoms are
 *     vertices and the join is sh_closure of the union;
 *   - groupoid mode: the invariant subsets of the unit space of a finite
 *     groupoid, atoms are orbits and the join is the union.
 *
 * Only nonempty members carry a value; the empty set is implicitly sent to
 * the whole ring wherever a formula needs it.
 */

#include "idlat/atom_set.hpp"
#include "idlat/graph.hpp"
#include "idlat/groupoid.hpp"
#include "idlat/ring_ideals.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace idlat {

class Carrier {
public:
    enum class Mode { Graph, Groupoid };

    static std::shared_ptr<const Carrier> for_graph(const Graph& g);
    static std::shared_ptr<const Carrier> for_groupoid(const FiniteGroupoid& g);

    Mode mode() const { return mode_; }
    // Nonempty members sorted by size, then bit pattern.
    const std::vector<AtomSet>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(AtomSet h) const { return index_.contains(h); }
    // Throws ValidationError if h is not a nonempty member.
    std::size_t index_of(AtomSet h) const;
    AtomSet join(AtomSet a, AtomSet b) const;
    AtomSet top() const { return top_; }

    // Vertex names (graph mode) or unit names (groupoid mode) of a member.
    std::vector<std::string> names(AtomSet h) const;
    std::string format(AtomSet h) const;
    // Inverse of names(); also accepts the empty set. Throws ValidationError
    // if the names do not form a lattice member.
    AtomSet parse(const std::vector<std::string>& names) const;

    const Graph& graph() const;
    const FiniteGroupoid& groupoid() const;

    bool same_as(const Carrier& other) const;

private:
    Mode mode_ = Mode::Graph;
    std::optional<Graph> graph_;
    std::optional<FiniteGroupoid> groupoid_;
    std::vector<int> orbit_of_unit_;
    std::vector<AtomSet> members_;
    std::map<AtomSet, std::size_t> index_;
    AtomSet top_ = 0;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

struct PiFunction {
    CarrierPtr carrier;
    RingSpec ring;
    std::vector<RIdeal> values;  // parallel to carrier->members()

    const RIdeal& at(AtomSet h) const { return values.at(carrier->index_of(h)); }
    // Value with pi(empty) = R.
    RIdeal value_or_whole(AtomSet h) const;

    static PiFunction constant(CarrierPtr carrier, RingSpec ring, RIdeal ideal);

    bool operator==(const PiFunction& other) const;
};

} // namespace idlat
