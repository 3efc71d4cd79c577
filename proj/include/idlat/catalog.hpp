#pragma once

/**
 * @file catalog.hpp
 * @brief Named groupoids and graphs used by tests, fixtures and the CLI.
 */

#include "idlat/graph.hpp"
#include "idlat/groupoid.hpp"

#include <string>
#include <vector>

namespace idlat::catalog {

// Full equivalence relation on the given units. The morphism from y to x
// is named "(x,y)"; unit x is named x.
GroupoidTable pair_groupoid(const std::vector<std::string>& units);
// Cyclic group of order m on a single unit `unit`; g^k is named prefix+k.
GroupoidTable cyclic_group(int m, const std::string& unit = "e", const std::string& prefix = "g");
// Pair groupoid times Z/m; (x, y; k) is named "(x,y;k)", units stay x.
GroupoidTable pair_times_cyclic(const std::vector<std::string>& units, int m);
// Names must be disjoint.
GroupoidTable disjoint_union(const std::vector<GroupoidTable>& parts);
GroupoidTable isolated_units(const std::vector<std::string>& units);

struct NamedGroupoid {
    std::string name;
    GroupoidTable table;
};

// Principal groupoids with 1-4 units and 1-3 orbits.
std::vector<NamedGroupoid> principal_catalog();
// Groupoids with nontrivial isotropy.
std::vector<NamedGroupoid> non_principal_catalog();

// One vertex v with a single loop e.
GraphDoc single_loop();
// Vertices v0..v{m-1}, two loops a_i, b_i at each v_i and an edge e_i with
// s(e_i) = v_{i+1}, r(e_i) = v_i.
GraphDoc loop_chain(int m);
// Vertices x and y with two loops each and no edge between them.
GraphDoc two_isolated_double_loops();
// Binary tree of depth 2, children pointing to parents (s = child,
// r = parent), with two loops at each leaf.
GraphDoc loop_augmented_tree();

struct NamedGraph {
    std::string name;
    GraphDoc doc;
};
std::vector<NamedGraph> graph_fixtures();

} // namespace idlat::catalog
