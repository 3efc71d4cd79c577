#include "idlat/io.hpp"

#include "idlat/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace idlat::io {

namespace {

[[noreturn]] void fail(const std::string& at, const std::string& what) {
    throw ParseError((at.empty() ? "/" : at) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& at) {
    if (!j.is_object()) {
        fail(at, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        fail(at, std::string("missing field \"") + key + "\"");
    }
    return *it;
}

void allow_only(const Json& j, std::initializer_list<const char*> keys, const std::string& at) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys) {
            known = known || it.key() == k;
        }
        if (!known) {
            fail(at, "unknown field \"" + it.key() + "\"");
        }
    }
}

std::int64_t as_int(const Json& j, const std::string& at) {
    if (!j.is_number_integer()) {
        fail(at, "expected an integer");
    }
    return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const std::string& at) {
    if (!j.is_string()) {
        fail(at, "expected a string");
    }
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& at) {
    if (!j.is_array()) {
        fail(at, "expected an array");
    }
    return j;
}

std::vector<std::string> string_list(const Json& j, const std::string& at) {
    std::vector<std::string> out;
    const Json& a = as_array(j, at);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.push_back(as_string(a[i], at + "/" + std::to_string(i)));
    }
    return out;
}

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

// Rethrows library validation errors with the document location.
template <class F>
auto located(const std::string& at, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        fail(at, e.what());
    }
}

std::vector<int> edge_list(const Graph& g, const Json& j, const std::string& at) {
    std::vector<int> out;
    const Json& a = as_array(j, at);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string name = as_string(a[i], child(at, i));
        auto e = g.find_edge(name);
        if (!e) {
            fail(child(at, i), "unknown edge \"" + name + "\"");
        }
        out.push_back(*e);
    }
    return out;
}

Json edge_names(const Graph& g, const std::vector<int>& path) {
    Json out = Json::array();
    for (int e : path) {
        out.push_back(g.edge(e).name);
    }
    return out;
}

} // namespace

Json parse_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Report line and column rather than the byte offset.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

Json read_file_or_inline(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        return parse_text(arg, "<inline>");
    }
    return read_file(arg);
}

// ------------------------------------------------------------------- rings

RingSpec ring_from_json(const Json& j, const std::string& at) {
    const std::string kind = as_string(field(j, "kind", at), child(at, "kind"));
    RingSpec spec;
    if (kind == "Z") {
        allow_only(j, {"kind"}, at);
        spec = RingSpec::integers();
    } else if (kind == "Zmod") {
        allow_only(j, {"kind", "n"}, at);
        spec = RingSpec::modular(as_int(field(j, "n", at), child(at, "n")));
    } else if (kind == "product") {
        allow_only(j, {"kind", "factors"}, at);
        const Json& fs = as_array(field(j, "factors", at), child(at, "factors"));
        std::vector<RingSpec> factors;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            factors.push_back(ring_from_json(fs[i], child(child(at, "factors"), i)));
        }
        spec = RingSpec::product(std::move(factors));
    } else {
        fail(child(at, "kind"), "unknown ring kind \"" + kind + "\" (expected Z, Zmod or product)");
    }
    located(at, [&] {
        validate_ring(spec);
        return 0;
    });
    return spec;
}

Json to_json(const RingSpec& spec) {
    switch (spec.kind) {
    case RingSpec::Kind::Integer:
        return Json{{"kind", "Z"}};
    case RingSpec::Kind::Modular:
        return Json{{"kind", "Zmod"}, {"n", spec.modulus}};
    case RingSpec::Kind::Product: {
        Json fs = Json::array();
        for (const auto& f : spec.factors) {
            fs.push_back(to_json(f));
        }
        return Json{{"kind", "product"}, {"factors", fs}};
    }
    }
    return {};
}

RIdeal ideal_from_json(const RingSpec& spec, const Json& j, const std::string& at) {
    RIdeal out;
    if (spec.kind == RingSpec::Kind::Product) {
        allow_only(j, {"factors"}, at);
        const Json& fs = as_array(field(j, "factors", at), child(at, "factors"));
        if (fs.size() != spec.factors.size()) {
            fail(child(at, "factors"), "expected " + std::to_string(spec.factors.size()) + " factor ideals");
        }
        for (std::size_t i = 0; i < fs.size(); ++i) {
            out.factors.push_back(ideal_from_json(spec.factors[i], fs[i], child(child(at, "factors"), i)));
        }
    } else {
        allow_only(j, {"gen"}, at);
        out.gen = as_int(field(j, "gen", at), child(at, "gen"));
    }
    located(at, [&] {
        check_ideal(spec, out);
        return 0;
    });
    return out;
}

Json to_json(const RingSpec& spec, const RIdeal& ideal) {
    if (spec.kind != RingSpec::Kind::Product) {
        return Json{{"gen", ideal.gen}};
    }
    Json fs = Json::array();
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        fs.push_back(to_json(spec.factors[i], ideal.factors[i]));
    }
    return Json{{"factors", fs}};
}

RingElement element_from_json(const RingSpec& spec, const Json& j, const std::string& at) {
    if (spec.kind != RingSpec::Kind::Product) {
        return located(at, [&] { return normalize(spec, RingElement::scalar(as_int(j, at))); });
    }
    const Json& a = as_array(j, at);
    if (a.size() != spec.factors.size()) {
        fail(at, "expected " + std::to_string(spec.factors.size()) + " components");
    }
    std::vector<RingElement> parts;
    for (std::size_t i = 0; i < a.size(); ++i) {
        parts.push_back(element_from_json(spec.factors[i], a[i], child(at, i)));
    }
    return RingElement::tuple(std::move(parts));
}

Json to_json(const RingSpec& spec, const RingElement& e) {
    if (spec.kind != RingSpec::Kind::Product) {
        return e.value;
    }
    Json out = Json::array();
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        out.push_back(to_json(spec.factors[i], e.factors[i]));
    }
    return out;
}

// --------------------------------------------------------------- groupoids

GroupoidTable groupoid_from_json(const Json& j, const std::string& at) {
    allow_only(j, {"units", "morphisms", "compose"}, at);
    GroupoidTable t;
    t.units = string_list(field(j, "units", at), child(at, "units"));
    if (j.contains("morphisms")) {
        const Json& ms = as_array(j["morphisms"], child(at, "morphisms"));
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const std::string p = child(child(at, "morphisms"), i);
            allow_only(ms[i], {"name", "src", "rng", "inv"}, p);
            t.morphisms.push_back({as_string(field(ms[i], "name", p), child(p, "name")),
                                   as_string(field(ms[i], "src", p), child(p, "src")),
                                   as_string(field(ms[i], "rng", p), child(p, "rng")),
                                   as_string(field(ms[i], "inv", p), child(p, "inv"))});
        }
    }
    if (j.contains("compose")) {
        const Json& cs = as_array(j["compose"], child(at, "compose"));
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const auto triple = string_list(cs[i], child(child(at, "compose"), i));
            if (triple.size() != 3) {
                fail(child(child(at, "compose"), i), "expected [first, second, result]");
            }
            t.compose.push_back({triple[0], triple[1], triple[2]});
        }
    }
    return t;
}

Json to_json(const GroupoidTable& t) {
    Json ms = Json::array();
    for (const auto& m : t.morphisms) {
        ms.push_back(Json{{"name", m.name}, {"src", m.src}, {"rng", m.rng}, {"inv", m.inv}});
    }
    Json cs = Json::array();
    for (const auto& c : t.compose) {
        cs.push_back(Json::array({c.first, c.second, c.result}));
    }
    return Json{{"units", t.units}, {"morphisms", ms}, {"compose", cs}};
}

// ------------------------------------------------------------------ graphs

GraphDoc graph_from_json(const Json& j, const std::string& at) {
    allow_only(j, {"vertices", "edges"}, at);
    GraphDoc d;
    d.vertices = string_list(field(j, "vertices", at), child(at, "vertices"));
    const Json& es = as_array(field(j, "edges", at), child(at, "edges"));
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string p = child(child(at, "edges"), i);
        allow_only(es[i], {"name", "src", "rng"}, p);
        d.edges.push_back({as_string(field(es[i], "name", p), child(p, "name")),
                           as_string(field(es[i], "src", p), child(p, "src")),
                           as_string(field(es[i], "rng", p), child(p, "rng"))});
    }
    return d;
}

Json to_json(const GraphDoc& d) {
    Json es = Json::array();
    for (const auto& e : d.edges) {
        es.push_back(Json{{"name", e.name}, {"src", e.src}, {"rng", e.rng}});
    }
    return Json{{"vertices", d.vertices}, {"edges", es}};
}

// ----------------------------------------------------------- pi-functions

PiFunction pi_from_json(const CarrierPtr& carrier, const Json& j, const std::string& at) {
    allow_only(j, {"ring", "entries"}, at);
    const RingSpec ring = ring_from_json(field(j, "ring", at), child(at, "ring"));
    const Json& es = as_array(field(j, "entries", at), child(at, "entries"));
    std::vector<std::optional<RIdeal>> values(carrier->size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string p = child(child(at, "entries"), i);
        allow_only(es[i], {"H", "ideal"}, p);
        const auto names = string_list(field(es[i], "H", p), child(p, "H"));
        const AtomSet h = located(child(p, "H"), [&] { return carrier->parse(names); });
        if (h == 0) {
            fail(child(p, "H"), "the empty set carries no value");
        }
        const std::size_t idx = carrier->index_of(h);
        if (values[idx]) {
            fail(child(p, "H"), carrier->format(h) + " is listed twice");
        }
        values[idx] = ideal_from_json(ring, field(es[i], "ideal", p), child(p, "ideal"));
    }
    PiFunction out{carrier, ring, {}};
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i]) {
            fail(child(at, "entries"), "no value for " + carrier->format(carrier->members()[i]) +
                                           "; every nonempty lattice member must be covered");
        }
        out.values.push_back(*values[i]);
    }
    return out;
}

Json to_json(const PiFunction& p) {
    Json es = Json::array();
    for (std::size_t i = 0; i < p.carrier->size(); ++i) {
        es.push_back(Json{{"H", p.carrier->names(p.carrier->members()[i])}, {"ideal", to_json(p.ring, p.values[i])}});
    }
    return Json{{"ring", to_json(p.ring)}, {"entries", es}};
}

// ------------------------------------------------------ monomials, lassos

Monomial monomial_from_json(const Graph& g, const RingSpec& ring, const Json& j, const std::string& at) {
    allow_only(j, {"coeff", "mu", "nu", "vertex"}, at);
    Monomial m;
    m.coeff = element_from_json(ring, field(j, "coeff", at), child(at, "coeff"));
    m.mu = edge_list(g, field(j, "mu", at), child(at, "mu"));
    m.nu = edge_list(g, field(j, "nu", at), child(at, "nu"));
    if (j.contains("vertex")) {
        const std::string v = as_string(j["vertex"], child(at, "vertex"));
        auto idx = g.find_vertex(v);
        if (!idx) {
            fail(child(at, "vertex"), "unknown vertex \"" + v + "\"");
        }
        m.vertex = *idx;
    }
    located(at, [&] { return monomial_source(g, m); });
    return m;
}

Json to_json(const Graph& g, const RingSpec& ring, const Monomial& m) {
    Json out{{"coeff", to_json(ring, m.coeff)}, {"mu", edge_names(g, m.mu)}, {"nu", edge_names(g, m.nu)}};
    if (m.vertex) {
        out["vertex"] = g.vertex_name(*m.vertex);
    }
    return out;
}

LassoPath lasso_from_json(const Graph& g, const Json& j, const std::string& at) {
    allow_only(j, {"stem", "cycle"}, at);
    LassoPath x;
    if (j.contains("stem")) {
        x.stem = edge_list(g, j["stem"], child(at, "stem"));
    }
    x.cycle = edge_list(g, field(j, "cycle", at), child(at, "cycle"));
    located(at, [&] {
        validate_lasso(g, x);
        return 0;
    });
    return x;
}

Json to_json(const Graph& g, const LassoPath& x) {
    return Json{{"stem", edge_names(g, x.stem)}, {"cycle", edge_names(g, x.cycle)}};
}

// -------------------------------------------------------- algebra values

AlgebraElement algebra_element_from_json(const AlgebraPtr& alg, const Json& j, const std::string& at) {
    allow_only(j, {"coeffs"}, at);
    const Json& cs = field(j, "coeffs", at);
    if (!cs.is_object()) {
        fail(child(at, "coeffs"), "expected an object mapping morphism names to coefficients");
    }
    std::vector<std::pair<int, RingElement>> entries;
    for (auto it = cs.begin(); it != cs.end(); ++it) {
        auto m = alg->groupoid().find_morphism(it.key());
        if (!m) {
            fail(child(at, "coeffs"), "unknown morphism \"" + it.key() + "\"");
        }
        entries.emplace_back(*m, element_from_json(alg->ring(), it.value(), child(child(at, "coeffs"), it.key())));
    }
    return AlgebraElement::from_map(alg, entries);
}

Json to_json(const AlgebraElement& f) {
    Json cs = Json::object();
    for (int m : f.support()) {
        cs[f.alg->groupoid().name(m)] = to_json(f.alg->ring(), f.at(m));
    }
    return Json{{"coeffs", cs}};
}

AlgebraIdeal algebra_ideal_from_json(const AlgebraPtr& alg, const Json& j, const std::string& at) {
    allow_only(j, {"ring", "morphisms", "components"}, at);
    const RingSpec ring = ring_from_json(field(j, "ring", at), child(at, "ring"));
    if (!(ring == alg->ring())) {
        fail(child(at, "ring"), "ideal ring differs from the algebra ring");
    }
    const auto names = string_list(field(j, "morphisms", at), child(at, "morphisms"));
    if (names.size() != alg->dim()) {
        fail(child(at, "morphisms"), "expected " + std::to_string(alg->dim()) + " morphisms");
    }
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto m = alg->groupoid().find_morphism(names[i]);
        if (!m) {
            fail(child(child(at, "morphisms"), i), "unknown morphism \"" + names[i] + "\"");
        }
        perm.push_back(static_cast<std::size_t>(*m));
    }
    const Json& cs = as_array(field(j, "components", at), child(at, "components"));
    if (cs.size() != alg->components()) {
        fail(child(at, "components"), "expected " + std::to_string(alg->components()) + " components");
    }
    std::vector<Submodule> comps;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const std::string p = child(child(at, "components"), k);
        allow_only(cs[k], {"modulus", "basis"}, p);
        const std::int64_t n = as_int(field(cs[k], "modulus", p), child(p, "modulus"));
        if (n != alg->moduli()[k]) {
            fail(child(p, "modulus"), "expected modulus " + std::to_string(alg->moduli()[k]));
        }
        Submodule s(n, alg->dim());
        const Json& rows = as_array(field(cs[k], "basis", p), child(p, "basis"));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string rp = child(child(p, "basis"), r);
            const Json& row = as_array(rows[r], rp);
            if (row.size() != alg->dim()) {
                fail(rp, "expected " + std::to_string(alg->dim()) + " entries");
            }
            Vec v(alg->dim(), 0);
            for (std::size_t i = 0; i < row.size(); ++i) {
                v[perm[i]] = as_int(row[i], child(rp, i));
            }
            s.insert(v);
        }
        comps.push_back(std::move(s));
    }
    return located(at, [&] { return AlgebraIdeal::verified(alg, std::move(comps)); });
}

Json to_json(const AlgebraIdeal& i) {
    const AlgebraPtr& alg = i.algebra();
    Json names = Json::array();
    for (std::size_t m = 0; m < alg->dim(); ++m) {
        names.push_back(alg->groupoid().name(static_cast<int>(m)));
    }
    Json cs = Json::array();
    for (const auto& s : i.components()) {
        Json rows = Json::array();
        for (const auto& r : s.rows()) {
            rows.push_back(r);
        }
        cs.push_back(Json{{"modulus", s.modulus()}, {"basis", rows}});
    }
    return Json{{"ring", to_json(alg->ring())}, {"morphisms", names}, {"components", cs}};
}

} // namespace idlat::io
