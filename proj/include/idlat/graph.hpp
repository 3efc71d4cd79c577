#pragma once

/**
 * @file graph.hpp
 * @brief Finite directed graphs, saturated hereditary sets, Conditions (L)
 *        and (K), quotients, tail analysis and lasso paths.
 *
 * Edge direction follows the Leavitt path algebra convention used
 * throughout: a path x1 x2 ... has s(x_i) = r(x_{i+1}) and starts at
 * x(0) = r(x1), so infinite paths are followed from a vertex v through an
 * edge e with r(e) = v on to s(e).
 *
 *   hereditary: r(e) in H  implies  s(e) in H
 *   saturated:  every e with r(e) = v has s(e) in H  implies  v in H
 */

#include "idlat/atom_set.hpp"
#include "idlat/groupoid.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace idlat {

struct EdgeSpec {
    std::string name;
    std::string src;
    std::string rng;
};

struct GraphDoc {
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
};

// Reports duplicate names, unknown endpoints, more than 64 vertices and
// (unless allow_sources) vertices v with no edge e such that r(e) = v.
ValidationReport validate(const GraphDoc& doc, bool allow_sources = false);

class Graph {
public:
    struct Edge {
        std::string name;
        int src;
        int rng;

        bool operator==(const Edge&) const = default;
    };

    // Throws ValidationError with the report on failure.
    static Graph from_doc(const GraphDoc& doc, bool allow_sources = false);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::string& vertex_name(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
    // vE^1: edges with range v.
    const std::vector<int>& edges_into(int v) const { return into_.at(static_cast<std::size_t>(v)); }
    std::optional<int> find_vertex(const std::string& name) const;
    std::optional<int> find_edge(const std::string& name) const;
    AtomSet all_vertices() const;

    // Throws ValidationError on an unknown name.
    AtomSet vertex_set(const std::vector<std::string>& names) const;
    std::vector<std::string> vertex_names(AtomSet s) const;
    // "{v0, v1}"
    std::string format_set(AtomSet s) const;

    GraphDoc to_doc() const;
    bool operator==(const Graph&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> into_;
};

bool is_hereditary(const Graph& g, AtomSet h);
bool is_saturated(const Graph& g, AtomSet h);
inline bool is_saturated_hereditary(const Graph& g, AtomSet h) { return is_hereditary(g, h) && is_saturated(g, h); }

AtomSet sh_closure(const Graph& g, AtomSet seed);

inline constexpr std::size_t kMaxLatticeVertices = 20;

class SHLattice {
public:
    const std::vector<AtomSet>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(AtomSet h) const { return index_.contains(h); }
    std::size_t index_of(AtomSet h) const;
    AtomSet join(AtomSet a, AtomSet b) const;
    static AtomSet meet(AtomSet a, AtomSet b) { return a & b; }
    // Pairs (lower, upper) of indices where upper covers lower.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;
    const Graph& graph() const { return graph_; }

private:
    friend SHLattice enumerate_sh(const Graph& g);
    Graph graph_;
    std::vector<AtomSet> members_;  // sorted by atoms_less
    std::map<AtomSet, std::size_t> index_;
};

// Join-closure of {SH(v)} together with the empty set. BudgetError above
// kMaxLatticeVertices vertices.
SHLattice enumerate_sh(const Graph& g);

bool check_condition_L(const Graph& g);
// Every vertex has no return path or at least two.
bool check_condition_K(const Graph& g);
// Every quotient E \ H with H saturated hereditary and H != E^0 satisfies (L).
bool check_condition_K_via_quotients(const Graph& g);
// Number of return paths at v, capped at `cap`.
int count_return_paths(const Graph& g, int v, int cap = 2);

struct Quotient {
    Graph graph;
    // Vertices of the quotient that receive no edge.
    std::vector<std::string> sources;
};

// E \ H: vertices outside h and the edges whose source lies outside h.
Quotient quotient_graph(const Graph& g, AtomSet h);

struct TailInfo {
    AtomSet closure = 0;
    bool tail_stable = false;
};
std::vector<TailInfo> tail_analysis(const Graph& g);

struct LassoPath {
    std::vector<int> stem;
    std::vector<int> cycle;

    bool operator==(const LassoPath&) const = default;
};

// Throws ValidationError describing the first broken junction.
void validate_lasso(const Graph& g, const LassoPath& x);
// x(0), x(1), ...: range of each edge of stem followed by one pass of the cycle.
std::vector<int> lasso_vertices(const Graph& g, const LassoPath& x);
bool lasso_in_UH(const Graph& g, const LassoPath& x, AtomSet h);
AtomSet lasso_sh_limit(const Graph& g, const LassoPath& x);
bool lasso_tail_equivalent(const Graph& g, const LassoPath& x, const LassoPath& y);
// sigma(x): drops the first edge.
LassoPath lasso_shift(const LassoPath& x);

// Simple cycles (no repeated vertex) as edge lists starting at their
// smallest edge index; BudgetError past `limit`.
std::vector<std::vector<int>> simple_cycles(const Graph& g, std::size_t limit = 100000);

} // namespace idlat
