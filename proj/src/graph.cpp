#include "idlat/graph.hpp"

#include "idlat/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace idlat {

ValidationReport validate(const GraphDoc& doc, bool allow_sources) {
    ValidationReport report;
    if (doc.vertices.size() > kMaxAtoms) {
        report.issues.push_back("graph has " + std::to_string(doc.vertices.size()) + " vertices, above the limit " +
                                std::to_string(kMaxAtoms));
        return report;
    }
    std::set<std::string> vertices;
    for (const auto& v : doc.vertices) {
        if (!vertices.insert(v).second) {
            report.issues.push_back("duplicate vertex '" + v + "'");
        }
    }
    std::set<std::string> edges;
    std::set<std::string> receiving;
    for (const auto& e : doc.edges) {
        if (!edges.insert(e.name).second) {
            report.issues.push_back("duplicate edge '" + e.name + "'");
        }
        if (!vertices.contains(e.src)) {
            report.issues.push_back("edge '" + e.name + "' has unknown source '" + e.src + "'");
        }
        if (!vertices.contains(e.rng)) {
            report.issues.push_back("edge '" + e.name + "' has unknown range '" + e.rng + "'");
        }
        receiving.insert(e.rng);
    }
    if (!allow_sources) {
        for (const auto& v : doc.vertices) {
            if (!receiving.contains(v)) {
                report.issues.push_back("vertex '" + v + "' is a source: no edge has range '" + v + "'");
            }
        }
    }
    return report;
}

Graph Graph::from_doc(const GraphDoc& doc, bool allow_sources) {
    const ValidationReport report = validate(doc, allow_sources);
    if (!report.ok()) {
        throw ValidationError("invalid graph: " + report.summary());
    }
    Graph g;
    g.vertices_ = doc.vertices;
    g.into_.assign(doc.vertices.size(), {});
    for (const auto& e : doc.edges) {
        const int s = *g.find_vertex(e.src);
        const int r = *g.find_vertex(e.rng);
        g.into_[static_cast<std::size_t>(r)].push_back(static_cast<int>(g.edges_.size()));
        g.edges_.push_back({e.name, s, r});
    }
    return g;
}

std::optional<int> Graph::find_vertex(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) {
        return std::nullopt;
    }
    return static_cast<int>(it - vertices_.begin());
}

std::optional<int> Graph::find_edge(const std::string& name) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].name == name) {
            return static_cast<int>(i);
        }
    }
    return std::nullopt;
}

AtomSet Graph::all_vertices() const {
    return vertices_.size() == 64 ? ~AtomSet{0} : atom_bit(vertices_.size()) - 1;
}

AtomSet Graph::vertex_set(const std::vector<std::string>& names) const {
    AtomSet out = 0;
    for (const auto& n : names) {
        auto v = find_vertex(n);
        if (!v) {
            throw ValidationError("unknown vertex '" + n + "'");
        }
        out |= atom_bit(static_cast<std::size_t>(*v));
    }
    return out;
}

std::vector<std::string> Graph::vertex_names(AtomSet s) const {
    std::vector<std::string> out;
    for (auto v : atoms_of(s)) {
        out.push_back(vertices_.at(v));
    }
    return out;
}

std::string Graph::format_set(AtomSet s) const {
    std::string out = "{";
    bool first = true;
    for (const auto& n : vertex_names(s)) {
        out += (first ? "" : ", ") + n;
        first = false;
    }
    return out + "}";
}

GraphDoc Graph::to_doc() const {
    GraphDoc d;
    d.vertices = vertices_;
    for (const auto& e : edges_) {
        d.edges.push_back({e.name, vertices_[static_cast<std::size_t>(e.src)], vertices_[static_cast<std::size_t>(e.rng)]});
    }
    return d;
}

// ------------------------------------------------------ hereditary closure

bool is_hereditary(const Graph& g, AtomSet h) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(static_cast<int>(e));
        if (atom_in(h, static_cast<std::size_t>(ed.rng)) && !atom_in(h, static_cast<std::size_t>(ed.src))) {
            return false;
        }
    }
    return true;
}

namespace {

bool saturates(const Graph& g, AtomSet h, int v) {
    const auto& in = g.edges_into(v);
    if (in.empty()) {
        return false;
    }
    return std::all_of(in.begin(), in.end(),
                       [&](int e) { return atom_in(h, static_cast<std::size_t>(g.edge(e).src)); });
}

} // namespace

bool is_saturated(const Graph& g, AtomSet h) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!atom_in(h, v) && saturates(g, h, static_cast<int>(v))) {
            return false;
        }
    }
    return true;
}

AtomSet sh_closure(const Graph& g, AtomSet seed) {
    if ((seed & ~g.all_vertices()) != 0) {
        throw ValidationError("seed contains an unknown vertex");
    }
    AtomSet h = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto& ed = g.edge(static_cast<int>(e));
            if (atom_in(h, static_cast<std::size_t>(ed.rng)) && !atom_in(h, static_cast<std::size_t>(ed.src))) {
                h |= atom_bit(static_cast<std::size_t>(ed.src));
                changed = true;
            }
        }
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (!atom_in(h, v) && saturates(g, h, static_cast<int>(v))) {
                h |= atom_bit(v);
                changed = true;
            }
        }
    }
    return h;
}

// ---------------------------------------------------------------- lattice

std::size_t SHLattice::index_of(AtomSet h) const {
    auto it = index_.find(h);
    if (it == index_.end()) {
        throw ValidationError(graph_.format_set(h) + " is not saturated hereditary");
    }
    return it->second;
}

AtomSet SHLattice::join(AtomSet a, AtomSet b) const { return sh_closure(graph_, a | b); }

std::vector<std::pair<std::size_t, std::size_t>> SHLattice::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (std::size_t j = 0; j < members_.size(); ++j) {
            const AtomSet a = members_[i], b = members_[j];
            if (a == b || !atoms_subset(a, b)) {
                continue;
            }
            bool direct = true;
            for (AtomSet c : members_) {
                if (c != a && c != b && atoms_subset(a, c) && atoms_subset(c, b)) {
                    direct = false;
                    break;
                }
            }
            if (direct) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

SHLattice enumerate_sh(const Graph& g) {
    if (g.vertex_count() > kMaxLatticeVertices) {
        throw BudgetError("graph has " + std::to_string(g.vertex_count()) +
                          " vertices; lattice enumeration is limited to " + std::to_string(kMaxLatticeVertices));
    }
    std::vector<AtomSet> principal;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        principal.push_back(sh_closure(g, atom_bit(v)));
    }
    std::set<AtomSet> found{0};
    std::deque<AtomSet> work{0};
    while (!work.empty()) {
        const AtomSet h = work.front();
        work.pop_front();
        for (AtomSet p : principal) {
            const AtomSet j = sh_closure(g, h | p);
            if (found.insert(j).second) {
                work.push_back(j);
            }
        }
    }
    SHLattice lat;
    lat.graph_ = g;
    lat.members_.assign(found.begin(), found.end());
    std::sort(lat.members_.begin(), lat.members_.end(), atoms_less);
    for (std::size_t i = 0; i < lat.members_.size(); ++i) {
        lat.index_.emplace(lat.members_[i], i);
    }
    return lat;
}

// ------------------------------------------------------------ conditions

bool check_condition_L(const Graph& g) {
    // A cycle without entry runs through vertices that each receive exactly
    // one edge; following those edges is a functional graph whose cycles are
    // exactly the cycles without entry.
    const auto n = g.vertex_count();
    std::vector<int> next(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        const auto& in = g.edges_into(static_cast<int>(v));
        if (in.size() == 1) {
            next[v] = g.edge(in.front()).src;
        }
    }
    std::vector<int> state(n, 0);  // 0 unseen, 1 on current walk, 2 done
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<int> walk;
        int v = static_cast<int>(start);
        while (v >= 0 && state[static_cast<std::size_t>(v)] == 0) {
            state[static_cast<std::size_t>(v)] = 1;
            walk.push_back(v);
            v = next[static_cast<std::size_t>(v)];
        }
        if (v >= 0 && state[static_cast<std::size_t>(v)] == 1) {
            return false;
        }
        for (int w : walk) {
            state[static_cast<std::size_t>(w)] = 2;
        }
    }
    return true;
}

int count_return_paths(const Graph& g, int v, int cap) {
    const auto n = g.vertex_count();
    // Forward: vertices reachable from v without passing through v.
    std::vector<bool> fwd(n, false);
    std::deque<int> q;
    int loops = 0;
    for (int e : g.edges_into(v)) {
        const int s = g.edge(e).src;
        if (s == v) {
            ++loops;
        } else if (!fwd[static_cast<std::size_t>(s)]) {
            fwd[static_cast<std::size_t>(s)] = true;
            q.push_back(s);
        }
    }
    while (!q.empty()) {
        const int w = q.front();
        q.pop_front();
        for (int e : g.edges_into(w)) {
            const int s = g.edge(e).src;
            if (s != v && !fwd[static_cast<std::size_t>(s)]) {
                fwd[static_cast<std::size_t>(s)] = true;
                q.push_back(s);
            }
        }
    }
    // Backward: vertices w != v from which v is reachable avoiding v.
    std::vector<bool> bwd(n, false);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(static_cast<int>(e));
        if (ed.src == v && ed.rng != v && !bwd[static_cast<std::size_t>(ed.rng)]) {
            bwd[static_cast<std::size_t>(ed.rng)] = true;
            q.push_back(ed.rng);
        }
    }
    while (!q.empty()) {
        const int w = q.front();
        q.pop_front();
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto& ed = g.edge(static_cast<int>(e));
            if (ed.src == w && ed.rng != v && !bwd[static_cast<std::size_t>(ed.rng)]) {
                bwd[static_cast<std::size_t>(ed.rng)] = true;
                q.push_back(ed.rng);
            }
        }
    }
    std::vector<bool> live(n, false);
    for (std::size_t w = 0; w < n; ++w) {
        live[w] = fwd[w] && bwd[w];
    }
    // paths[w] = number of paths from w back to v through live vertices,
    // capped; a cycle among live vertices means infinitely many.
    std::vector<int> paths(n, 0);
    std::vector<int> state(n, 0);
    bool cyclic = false;
    auto visit = [&](int w, auto& self) -> int {
        auto& st = state[static_cast<std::size_t>(w)];
        if (st == 2) {
            return paths[static_cast<std::size_t>(w)];
        }
        if (st == 1) {
            cyclic = true;
            return cap;
        }
        st = 1;
        int total = 0;
        for (int e : g.edges_into(w)) {
            const int s = g.edge(e).src;
            if (s == v) {
                total = std::min(cap, total + 1);
            } else if (live[static_cast<std::size_t>(s)]) {
                total = std::min(cap, total + self(s, self));
            }
        }
        st = 2;
        paths[static_cast<std::size_t>(w)] = total;
        return total;
    };
    int total = loops;
    for (int e : g.edges_into(v)) {
        const int s = g.edge(e).src;
        if (s != v && live[static_cast<std::size_t>(s)]) {
            total = std::min(cap, total + visit(s, visit));
        }
    }
    if (cyclic) {
        return cap;
    }
    return std::min(cap, total);
}

bool check_condition_K(const Graph& g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (count_return_paths(g, static_cast<int>(v), 2) == 1) {
            return false;
        }
    }
    return true;
}

bool check_condition_K_via_quotients(const Graph& g) {
    const SHLattice lat = enumerate_sh(g);
    for (AtomSet h : lat.members()) {
        if (h == g.all_vertices()) {
            continue;
        }
        if (!check_condition_L(quotient_graph(g, h).graph)) {
            return false;
        }
    }
    return true;
}

Quotient quotient_graph(const Graph& g, AtomSet h) {
    if (!is_saturated_hereditary(g, h)) {
        throw ValidationError(g.format_set(h) + " is not saturated hereditary");
    }
    if (h == g.all_vertices()) {
        throw ValidationError("quotient by the whole vertex set is empty");
    }
    GraphDoc d;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!atom_in(h, v)) {
            d.vertices.push_back(g.vertex_name(static_cast<int>(v)));
        }
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(static_cast<int>(e));
        if (!atom_in(h, static_cast<std::size_t>(ed.src))) {
            d.edges.push_back({ed.name, g.vertex_name(ed.src), g.vertex_name(ed.rng)});
        }
    }
    Quotient q{Graph::from_doc(d, true), {}};
    for (std::size_t v = 0; v < q.graph.vertex_count(); ++v) {
        if (q.graph.edges_into(static_cast<int>(v)).empty()) {
            q.sources.push_back(q.graph.vertex_name(static_cast<int>(v)));
        }
    }
    return q;
}

std::vector<TailInfo> tail_analysis(const Graph& g) {
    const auto n = g.vertex_count();
    std::vector<TailInfo> out(n);
    for (std::size_t v = 0; v < n; ++v) {
        out[v].closure = sh_closure(g, atom_bit(v));
    }
    // Within each level {u : SH(u) = SH(w)}, repeatedly discard vertices with
    // no onward edge inside the level; the survivors reach a cycle.
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v]) {
                continue;
            }
            bool onward = false;
            for (int e : g.edges_into(static_cast<int>(v))) {
                const auto s = static_cast<std::size_t>(g.edge(e).src);
                if (alive[s] && out[s].closure == out[v].closure) {
                    onward = true;
                    break;
                }
            }
            if (!onward) {
                alive[v] = false;
                changed = true;
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        out[v].tail_stable = alive[v];
    }
    return out;
}

// ----------------------------------------------------------------- lassos

void validate_lasso(const Graph& g, const LassoPath& x) {
    if (x.cycle.empty()) {
        throw ValidationError("lasso cycle must be nonempty");
    }
    auto check_edge = [&g](int e) {
        if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) {
            throw ValidationError("lasso uses an unknown edge index " + std::to_string(e));
        }
    };
    std::vector<int> seq = x.stem;
    seq.insert(seq.end(), x.cycle.begin(), x.cycle.end());
    for (int e : seq) {
        check_edge(e);
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (g.edge(seq[i]).src != g.edge(seq[i + 1]).rng) {
            throw ValidationError("lasso is not a path: s(" + g.edge(seq[i]).name + ") = " +
                                  g.vertex_name(g.edge(seq[i]).src) + " but r(" + g.edge(seq[i + 1]).name +
                                  ") = " + g.vertex_name(g.edge(seq[i + 1]).rng));
        }
    }
    if (g.edge(x.cycle.back()).src != g.edge(x.cycle.front()).rng) {
        throw ValidationError("lasso cycle is not closed: s(" + g.edge(x.cycle.back()).name + ") != r(" +
                              g.edge(x.cycle.front()).name + ")");
    }
}

std::vector<int> lasso_vertices(const Graph& g, const LassoPath& x) {
    validate_lasso(g, x);
    std::vector<int> out;
    for (int e : x.stem) {
        out.push_back(g.edge(e).rng);
    }
    for (int e : x.cycle) {
        out.push_back(g.edge(e).rng);
    }
    return out;
}

bool lasso_in_UH(const Graph& g, const LassoPath& x, AtomSet h) {
    validate_lasso(g, x);
    return std::all_of(x.cycle.begin(), x.cycle.end(),
                       [&](int e) { return atom_in(h, static_cast<std::size_t>(g.edge(e).rng)); });
}

AtomSet lasso_sh_limit(const Graph& g, const LassoPath& x) {
    validate_lasso(g, x);
    return sh_closure(g, atom_bit(static_cast<std::size_t>(g.edge(x.cycle.front()).rng)));
}

namespace {

std::vector<int> primitive_root(const std::vector<int>& c) {
    const std::size_t n = c.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) {
            periodic = c[i] == c[i - p];
        }
        if (periodic) {
            return {c.begin(), c.begin() + static_cast<std::ptrdiff_t>(p)};
        }
    }
    return c;
}

} // namespace

bool lasso_tail_equivalent(const Graph& g, const LassoPath& x, const LassoPath& y) {
    validate_lasso(g, x);
    validate_lasso(g, y);
    const auto px = primitive_root(x.cycle);
    const auto py = primitive_root(y.cycle);
    if (px.size() != py.size()) {
        return false;
    }
    auto rotated = px;
    for (std::size_t r = 0; r < px.size(); ++r) {
        if (rotated == py) {
            return true;
        }
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    }
    return false;
}

LassoPath lasso_shift(const LassoPath& x) {
    if (!x.stem.empty()) {
        return {{x.stem.begin() + 1, x.stem.end()}, x.cycle};
    }
    std::vector<int> rotated(x.cycle.begin() + 1, x.cycle.end());
    rotated.push_back(x.cycle.front());
    return {{}, rotated};
}

std::vector<std::vector<int>> simple_cycles(const Graph& g, std::size_t limit) {
    std::vector<std::vector<int>> out;
    const auto n = g.vertex_count();
    std::vector<int> path;
    std::vector<bool> on_path(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        auto dfs = [&](int v, auto& self) -> void {
            for (int e : g.edges_into(v)) {
                const int s = g.edge(e).src;
                if (s == static_cast<int>(start)) {
                    path.push_back(e);
                    auto cyc = path;
                    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
                    out.push_back(std::move(cyc));
                    path.pop_back();
                    if (out.size() > limit) {
                        throw BudgetError("too many simple cycles");
                    }
                } else if (s > static_cast<int>(start) && !on_path[static_cast<std::size_t>(s)]) {
                    on_path[static_cast<std::size_t>(s)] = true;
                    path.push_back(e);
                    self(s, self);
                    path.pop_back();
                    on_path[static_cast<std::size_t>(s)] = false;
                }
            }
        };
        on_path[start] = true;
        dfs(static_cast<int>(start), dfs);
        on_path[start] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace idlat
