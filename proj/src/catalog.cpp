#include "idlat/catalog.hpp"

namespace idlat::catalog {

namespace {

std::string pair_name(const std::string& x, const std::string& y) { return x == y ? x : "(" + x + "," + y + ")"; }

std::string product_name(const std::string& x, const std::string& y, int k) {
    return x == y && k == 0 ? x : "(" + x + "," + y + ";" + std::to_string(k) + ")";
}

} // namespace

GroupoidTable pair_groupoid(const std::vector<std::string>& units) {
    GroupoidTable t;
    t.units = units;
    for (const auto& x : units) {
        for (const auto& y : units) {
            t.morphisms.push_back({pair_name(x, y), y, x, pair_name(y, x)});
        }
    }
    for (const auto& x : units) {
        for (const auto& y : units) {
            for (const auto& z : units) {
                t.compose.push_back({pair_name(x, y), pair_name(y, z), pair_name(x, z)});
            }
        }
    }
    return t;
}

GroupoidTable cyclic_group(int m, const std::string& unit, const std::string& prefix) {
    auto name = [&](int k) { return k == 0 ? unit : prefix + std::to_string(k); };
    GroupoidTable t;
    t.units = {unit};
    for (int k = 0; k < m; ++k) {
        t.morphisms.push_back({name(k), unit, unit, name((m - k) % m)});
    }
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            t.compose.push_back({name(a), name(b), name((a + b) % m)});
        }
    }
    return t;
}

GroupoidTable pair_times_cyclic(const std::vector<std::string>& units, int m) {
    GroupoidTable t;
    t.units = units;
    for (const auto& x : units) {
        for (const auto& y : units) {
            for (int k = 0; k < m; ++k) {
                t.morphisms.push_back({product_name(x, y, k), y, x, product_name(y, x, (m - k) % m)});
            }
        }
    }
    for (const auto& x : units) {
        for (const auto& y : units) {
            for (const auto& z : units) {
                for (int a = 0; a < m; ++a) {
                    for (int b = 0; b < m; ++b) {
                        t.compose.push_back({product_name(x, y, a), product_name(y, z, b), product_name(x, z, (a + b) % m)});
                    }
                }
            }
        }
    }
    return t;
}

GroupoidTable disjoint_union(const std::vector<GroupoidTable>& parts) {
    GroupoidTable t;
    for (const auto& p : parts) {
        t.units.insert(t.units.end(), p.units.begin(), p.units.end());
        t.morphisms.insert(t.morphisms.end(), p.morphisms.begin(), p.morphisms.end());
        t.compose.insert(t.compose.end(), p.compose.begin(), p.compose.end());
    }
    return t;
}

GroupoidTable isolated_units(const std::vector<std::string>& units) {
    std::vector<GroupoidTable> parts;
    for (const auto& u : units) {
        parts.push_back(pair_groupoid({u}));
    }
    return disjoint_union(parts);
}

std::vector<NamedGroupoid> principal_catalog() {
    return {
        {"trivial", isolated_units({"e"})},
        {"two isolated units", isolated_units({"x", "y"})},
        {"pair(2)", pair_groupoid({"1", "2"})},
        {"three isolated units", isolated_units({"a", "b", "c"})},
        {"pair(2) + point", disjoint_union({pair_groupoid({"1", "2"}), pair_groupoid({"3"})})},
        {"pair(3)", pair_groupoid({"1", "2", "3"})},
        {"pair(2) + pair(2)", disjoint_union({pair_groupoid({"1", "2"}), pair_groupoid({"3", "4"})})},
        {"pair(3) + point", disjoint_union({pair_groupoid({"1", "2", "3"}), pair_groupoid({"4"})})},
        {"pair(2) + two points", disjoint_union({pair_groupoid({"1", "2"}), pair_groupoid({"3"}), pair_groupoid({"4"})})},
        {"pair(4)", pair_groupoid({"1", "2", "3", "4"})},
    };
}

std::vector<NamedGroupoid> non_principal_catalog() {
    return {
        {"Z/2", cyclic_group(2)},
        {"Z/3", cyclic_group(3)},
        {"pair(2) x Z/2", pair_times_cyclic({"1", "2"}, 2)},
        {"Z/2 + point", disjoint_union({cyclic_group(2), pair_groupoid({"p"})})},
    };
}

GraphDoc single_loop() { return GraphDoc{{"v"}, {{"e", "v", "v"}}}; }

GraphDoc loop_chain(int m) {
    GraphDoc d;
    for (int i = 0; i < m; ++i) {
        d.vertices.push_back("v" + std::to_string(i));
    }
    for (int i = 0; i < m; ++i) {
        const std::string v = "v" + std::to_string(i);
        d.edges.push_back({"a" + std::to_string(i), v, v});
        d.edges.push_back({"b" + std::to_string(i), v, v});
        if (i + 1 < m) {
            d.edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i + 1), v});
        }
    }
    return d;
}

GraphDoc two_isolated_double_loops() {
    return GraphDoc{{"x", "y"}, {{"ax", "x", "x"}, {"bx", "x", "x"}, {"ay", "y", "y"}, {"by", "y", "y"}}};
}

GraphDoc loop_augmented_tree() {
    GraphDoc d;
    d.vertices = {"root", "0", "1", "00", "01", "10", "11"};
    d.edges = {
        {"t0", "0", "root"},   {"t1", "1", "root"},   {"t00", "00", "0"},    {"t01", "01", "0"},
        {"t10", "10", "1"},    {"t11", "11", "1"},    {"p00", "00", "00"},   {"q00", "00", "00"},
        {"p01", "01", "01"},   {"q01", "01", "01"},   {"p10", "10", "10"},   {"q10", "10", "10"},
        {"p11", "11", "11"},   {"q11", "11", "11"},
    };
    return d;
}

std::vector<NamedGraph> graph_fixtures() {
    std::vector<NamedGraph> out{{"single loop", single_loop()}};
    for (int m = 1; m <= 4; ++m) {
        out.push_back({"loop chain " + std::to_string(m), loop_chain(m)});
    }
    out.push_back({"two isolated double loops", two_isolated_double_loops()});
    out.push_back({"loop-augmented tree", loop_augmented_tree()});
    return out;
}

} // namespace idlat::catalog
