#include "idlat/groupoid.hpp"

#include "idlat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace idlat {

namespace {

constexpr std::size_t kMaxReportedIssues = 32;

struct Indexed {
    std::unordered_map<std::string, int> index;
    std::vector<const MorphismSpec*> specs;
};

Indexed index_morphisms(const GroupoidTable& t) {
    Indexed out;
    for (const auto& m : t.morphisms) {
        if (out.index.emplace(m.name, static_cast<int>(out.specs.size())).second) {
            out.specs.push_back(&m);
        }
    }
    return out;
}

} // namespace

std::string ValidationReport::summary() const {
    std::string out;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        out += (i ? "; " : "") + issues[i];
    }
    return out;
}

GroupoidTable complete_table(GroupoidTable table) {
    std::set<std::string> present;
    for (const auto& m : table.morphisms) {
        present.insert(m.name);
    }
    for (const auto& u : table.units) {
        if (!present.contains(u)) {
            table.morphisms.push_back({u, u, u, u});
            present.insert(u);
        }
    }
    std::set<std::pair<std::string, std::string>> listed;
    for (const auto& c : table.compose) {
        listed.emplace(c.first, c.second);
    }
    const std::set<std::string> unit_names(table.units.begin(), table.units.end());
    std::vector<CompositionEntry> extra;
    for (const auto& m : table.morphisms) {
        if (unit_names.contains(m.rng) && !listed.contains({m.rng, m.name})) {
            extra.push_back({m.rng, m.name, m.name});
            listed.emplace(m.rng, m.name);
        }
        if (unit_names.contains(m.src) && !listed.contains({m.name, m.src})) {
            extra.push_back({m.name, m.src, m.name});
            listed.emplace(m.name, m.src);
        }
    }
    table.compose.insert(table.compose.end(), extra.begin(), extra.end());
    return table;
}

ValidationReport validate(const GroupoidTable& raw) {
    ValidationReport report;
    auto issue = [&report](std::string msg) {
        if (report.issues.size() < kMaxReportedIssues) {
            report.issues.push_back(std::move(msg));
        }
    };

    std::set<std::string> seen_units;
    for (const auto& u : raw.units) {
        if (!seen_units.insert(u).second) {
            issue("duplicate unit '" + u + "'");
        }
    }
    {
        std::set<std::string> seen;
        for (const auto& m : raw.morphisms) {
            if (!seen.insert(m.name).second) {
                issue("duplicate morphism '" + m.name + "'");
            }
        }
    }
    const GroupoidTable t = complete_table(raw);
    const Indexed idx = index_morphisms(t);
    const auto n = idx.specs.size();
    if (n > kMaxMorphisms) {
        issue("groupoid has " + std::to_string(n) + " morphisms, above the limit " + std::to_string(kMaxMorphisms));
        return report;
    }

    auto lookup = [&idx](const std::string& name) -> int {
        auto it = idx.index.find(name);
        return it == idx.index.end() ? -1 : it->second;
    };

    std::vector<int> src(n, -1), rng(n, -1), inv(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& m = *idx.specs[i];
        if (!seen_units.contains(m.src)) {
            issue("morphism '" + m.name + "' has source '" + m.src + "' which is not a unit");
        } else {
            src[i] = lookup(m.src);
        }
        if (!seen_units.contains(m.rng)) {
            issue("morphism '" + m.name + "' has range '" + m.rng + "' which is not a unit");
        } else {
            rng[i] = lookup(m.rng);
        }
        inv[i] = lookup(m.inv);
        if (inv[i] < 0) {
            issue("morphism '" + m.name + "' has unknown inverse '" + m.inv + "'");
        }
        if (seen_units.contains(m.name) && (m.src != m.name || m.rng != m.name || m.inv != m.name)) {
            issue("unit '" + m.name + "' must have src = rng = inv = itself");
        }
    }
    if (!report.ok()) {
        return report;
    }

    std::vector<int> comp(n * n, -1);
    for (const auto& c : t.compose) {
        const int a = lookup(c.first), b = lookup(c.second), ab = lookup(c.result);
        if (a < 0 || b < 0 || ab < 0) {
            issue("composition [" + c.first + ", " + c.second + ", " + c.result + "] names an unknown morphism");
            continue;
        }
        if (src[static_cast<std::size_t>(a)] != rng[static_cast<std::size_t>(b)]) {
            issue("comp(" + c.first + ", " + c.second + ") is defined but src(" + c.first + ") = '" +
                  idx.specs[static_cast<std::size_t>(src[static_cast<std::size_t>(a)])]->name + "' differs from rng(" +
                  c.second + ") = '" + idx.specs[static_cast<std::size_t>(rng[static_cast<std::size_t>(b)])]->name +
                  "'");
            continue;
        }
        int& slot = comp[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
        if (slot >= 0 && slot != ab) {
            issue("comp(" + c.first + ", " + c.second + ") is listed with two results");
            continue;
        }
        slot = ab;
    }
    if (!report.ok()) {
        return report;
    }

    auto name = [&idx](int m) { return idx.specs[static_cast<std::size_t>(m)]->name; };
    auto at = [&comp, n](int a, int b) { return comp[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]; };

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (src[a] != rng[b]) {
                continue;
            }
            const int ab = at(static_cast<int>(a), static_cast<int>(b));
            if (ab < 0) {
                issue("comp(" + name(static_cast<int>(a)) + ", " + name(static_cast<int>(b)) +
                      ") is missing although the pair is composable");
                continue;
            }
            if (src[static_cast<std::size_t>(ab)] != src[b] || rng[static_cast<std::size_t>(ab)] != rng[a]) {
                issue("comp(" + name(static_cast<int>(a)) + ", " + name(static_cast<int>(b)) + ") = " + name(ab) +
                      " has the wrong source or range");
            }
        }
    }
    if (!report.ok()) {
        return report;
    }

    for (std::size_t g = 0; g < n; ++g) {
        const int gi = static_cast<int>(g);
        if (at(rng[g], gi) != gi || at(gi, src[g]) != gi) {
            issue("units do not act as identities on '" + name(gi) + "'");
        }
        const int h = inv[g];
        if (src[static_cast<std::size_t>(h)] != rng[g] || rng[static_cast<std::size_t>(h)] != src[g]) {
            issue("inverse of '" + name(gi) + "' has the wrong source or range");
            continue;
        }
        if (at(gi, h) != rng[g] || at(h, gi) != src[g]) {
            issue("'" + name(h) + "' is not a two-sided inverse of '" + name(gi) + "'");
        }
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (inv[g] == static_cast<int>(g) && src[g] == static_cast<int>(g) && rng[g] == static_cast<int>(g) &&
            !seen_units.contains(name(static_cast<int>(g)))) {
            issue("'" + name(static_cast<int>(g)) + "' behaves like a unit but is not listed as one");
        }
    }
    if (!report.ok()) {
        return report;
    }

    // Associativity on composable triples: a (b c) = (a b) c.
    std::vector<std::vector<int>> by_rng(n);
    for (std::size_t m = 0; m < n; ++m) {
        by_rng[static_cast<std::size_t>(rng[m])].push_back(static_cast<int>(m));
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (int b : by_rng[static_cast<std::size_t>(src[a])]) {
            const int ab = at(static_cast<int>(a), b);
            for (int c : by_rng[static_cast<std::size_t>(src[static_cast<std::size_t>(b)])]) {
                if (at(ab, c) != at(static_cast<int>(a), at(b, c))) {
                    issue("associativity fails on (" + name(static_cast<int>(a)) + ", " + name(b) + ", " + name(c) +
                          ")");
                    if (report.issues.size() >= kMaxReportedIssues) {
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

FiniteGroupoid FiniteGroupoid::from_table(const GroupoidTable& table) {
    if (table.morphisms.size() > kMaxMorphisms) {
        throw BudgetError("groupoid has more than " + std::to_string(kMaxMorphisms) + " morphisms");
    }
    const ValidationReport report = validate(table);
    if (!report.ok()) {
        throw ValidationError("invalid groupoid: " + report.summary());
    }
    const GroupoidTable t = complete_table(table);
    FiniteGroupoid g;
    std::unordered_map<std::string, int> index;
    for (const auto& m : t.morphisms) {
        index.emplace(m.name, static_cast<int>(g.names_.size()));
        g.names_.push_back(m.name);
    }
    const auto n = g.names_.size();
    g.unit_of_.assign(n, -1);
    for (const auto& u : t.units) {
        const int m = index.at(u);
        g.unit_of_[static_cast<std::size_t>(m)] = static_cast<int>(g.units_.size());
        g.units_.push_back(m);
    }
    for (const auto& m : t.morphisms) {
        g.src_.push_back(g.unit_of_[static_cast<std::size_t>(index.at(m.src))]);
        g.rng_.push_back(g.unit_of_[static_cast<std::size_t>(index.at(m.rng))]);
        g.inv_.push_back(index.at(m.inv));
    }
    g.comp_.assign(n * n, -1);
    for (const auto& c : t.compose) {
        g.comp_[static_cast<std::size_t>(index.at(c.first)) * n + static_cast<std::size_t>(index.at(c.second))] =
            index.at(c.result);
    }
    return g;
}

std::optional<int> FiniteGroupoid::find_morphism(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<int>(it - names_.begin());
}

std::optional<int> FiniteGroupoid::find_unit(const std::string& name) const {
    auto m = find_morphism(name);
    if (!m || unit_of_[static_cast<std::size_t>(*m)] < 0) {
        return std::nullopt;
    }
    return unit_of_[static_cast<std::size_t>(*m)];
}

GroupoidTable FiniteGroupoid::to_table() const {
    GroupoidTable t;
    for (int u : units_) {
        t.units.push_back(names_[static_cast<std::size_t>(u)]);
    }
    const auto n = names_.size();
    for (std::size_t m = 0; m < n; ++m) {
        t.morphisms.push_back({names_[m], unit_name(src_[m]), unit_name(rng_[m]), names_[static_cast<std::size_t>(inv_[m])]});
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const int ab = comp_[a * n + b];
            if (ab >= 0) {
                t.compose.push_back({names_[a], names_[b], names_[static_cast<std::size_t>(ab)]});
            }
        }
    }
    return t;
}

// ------------------------------------------------------------------ UnitSet

UnitSet UnitSet::from_names(const FiniteGroupoid& g, const std::vector<std::string>& names) {
    UnitSet s(g.unit_count());
    for (const auto& nm : names) {
        auto u = g.find_unit(nm);
        if (!u) {
            throw ValidationError("'" + nm + "' is not a unit of the groupoid");
        }
        s.insert(*u);
    }
    return s;
}

UnitSet UnitSet::all(std::size_t unit_count) {
    UnitSet s(unit_count);
    s.bits_.assign(unit_count, true);
    return s;
}

std::size_t UnitSet::size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<int> UnitSet::members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

std::vector<std::string> UnitSet::names(const FiniteGroupoid& g) const {
    std::vector<std::string> out;
    for (int u : members()) {
        out.push_back(g.unit_name(u));
    }
    return out;
}

bool UnitSet::subset_of(const UnitSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_.at(i)) {
            return false;
        }
    }
    return true;
}

UnitSet UnitSet::operator|(const UnitSet& other) const {
    UnitSet out(*this);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        out.bits_[i] = bits_[i] || other.bits_.at(i);
    }
    return out;
}

UnitSet UnitSet::operator&(const UnitSet& other) const {
    UnitSet out(*this);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        out.bits_[i] = bits_[i] && other.bits_.at(i);
    }
    return out;
}

UnitSet UnitSet::complement() const {
    UnitSet out(*this);
    out.bits_.flip();
    return out;
}

// ------------------------------------------------------------ combinatorics

std::vector<int> orbit_index(const FiniteGroupoid& g) {
    const auto units = g.unit_count();
    std::vector<int> parent(units);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    for (std::size_t m = 0; m < g.morphism_count(); ++m) {
        const int a = find(g.src(static_cast<int>(m)));
        const int b = find(g.rng(static_cast<int>(m)));
        if (a != b) {
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    // Roots are the smallest members, so numbering roots in increasing order
    // sorts orbits by their smallest unit.
    std::vector<int> label(units, -1);
    std::vector<int> out(units);
    int next = 0;
    for (std::size_t u = 0; u < units; ++u) {
        const int r = find(static_cast<int>(u));
        if (label[static_cast<std::size_t>(r)] < 0) {
            label[static_cast<std::size_t>(r)] = next++;
        }
        out[u] = label[static_cast<std::size_t>(r)];
    }
    return out;
}

std::vector<std::vector<int>> orbits(const FiniteGroupoid& g) {
    const auto idx = orbit_index(g);
    const int count = idx.empty() ? 0 : *std::max_element(idx.begin(), idx.end()) + 1;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
    for (std::size_t u = 0; u < idx.size(); ++u) {
        out[static_cast<std::size_t>(idx[u])].push_back(static_cast<int>(u));
    }
    return out;
}

UnitSet invariant_closure(const FiniteGroupoid& g, const UnitSet& v) {
    if (v.universe() != g.unit_count()) {
        throw ValidationError("unit set does not belong to this groupoid");
    }
    UnitSet out(g.unit_count());
    for (std::size_t m = 0; m < g.morphism_count(); ++m) {
        // [V] = r(s^{-1}(V))
        if (v.contains(g.src(static_cast<int>(m)))) {
            out.insert(g.rng(static_cast<int>(m)));
        }
    }
    return out;
}

bool is_invariant(const FiniteGroupoid& g, const UnitSet& v) { return invariant_closure(g, v) == v; }

UnitSet orbit_union(const FiniteGroupoid& g, std::uint64_t mask) {
    const auto idx = orbit_index(g);
    UnitSet out(g.unit_count());
    for (std::size_t u = 0; u < idx.size(); ++u) {
        if ((mask >> idx[u]) & 1u) {
            out.insert(static_cast<int>(u));
        }
    }
    return out;
}

std::uint64_t orbit_mask(const FiniteGroupoid& g, const UnitSet& v) {
    if (!is_invariant(g, v)) {
        throw ValidationError("unit set is not invariant");
    }
    const auto idx = orbit_index(g);
    std::uint64_t mask = 0;
    for (int u : v.members()) {
        mask |= std::uint64_t{1} << idx[static_cast<std::size_t>(u)];
    }
    return mask;
}

std::vector<UnitSet> invariant_open_sets(const FiniteGroupoid& g) {
    const auto k = orbits(g).size();
    if (k > kMaxOrbits) {
        throw BudgetError("groupoid has " + std::to_string(k) + " orbits; too large to enumerate (limit " +
                          std::to_string(kMaxOrbits) + ")");
    }
    std::vector<UnitSet> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        out.push_back(orbit_union(g, mask));
    }
    return out;
}

std::vector<int> isotropy(const FiniteGroupoid& g) {
    std::vector<int> out;
    for (std::size_t m = 0; m < g.morphism_count(); ++m) {
        if (g.src(static_cast<int>(m)) == g.rng(static_cast<int>(m))) {
            out.push_back(static_cast<int>(m));
        }
    }
    return out;
}

bool is_effective(const FiniteGroupoid& g) { return isotropy(g).size() == g.unit_count(); }

bool is_strongly_effective(const FiniteGroupoid& g) {
    for (const auto& v : invariant_open_sets(g)) {
        if (!v.empty() && !is_effective(restrict(g, v))) {
            return false;
        }
    }
    return true;
}

FiniteGroupoid restrict(const FiniteGroupoid& g, const UnitSet& v) {
    if (v.universe() != g.unit_count()) {
        throw ValidationError("unit set does not belong to this groupoid");
    }
    for (std::size_t m = 0; m < g.morphism_count(); ++m) {
        const bool s_in = v.contains(g.src(static_cast<int>(m)));
        const bool r_in = v.contains(g.rng(static_cast<int>(m)));
        if (s_in != r_in) {
            throw ValidationError("unit set is not invariant: morphism '" + g.name(static_cast<int>(m)) +
                                  "' leaves it");
        }
    }
    const GroupoidTable full = g.to_table();
    GroupoidTable t;
    for (int u : v.members()) {
        t.units.push_back(g.unit_name(u));
    }
    std::set<std::string> kept;
    for (std::size_t m = 0; m < g.morphism_count(); ++m) {
        if (v.contains(g.src(static_cast<int>(m)))) {
            t.morphisms.push_back(full.morphisms[m]);
            kept.insert(full.morphisms[m].name);
        }
    }
    for (const auto& c : full.compose) {
        if (kept.contains(c.first) && kept.contains(c.second)) {
            t.compose.push_back(c);
        }
    }
    return FiniteGroupoid::from_table(t);
}

std::vector<int> source_fibre(const FiniteGroupoid& g, const UnitSet& v) {
    std::vector<int> out;
    for (std::size_t m = 0; m < g.morphism_count(); ++m) {
        if (v.contains(g.src(static_cast<int>(m)))) {
            out.push_back(static_cast<int>(m));
        }
    }
    return out;
}

} // namespace idlat
