#include "cli.hpp"

#include "idlat/errors.hpp"
#include "idlat/graph.hpp"
#include "idlat/groupoid.hpp"
#include "idlat/io.hpp"
#include "idlat/lpa_ideals.hpp"
#include "idlat/steinberg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <set>

namespace idlat::cli {

namespace {

using io::Json;

enum class Format { Text, Json, Dot };

struct Options {
    Format format = Format::Text;
    bool dot = false;
    std::uint64_t seed = 1;
    std::string ring;
    std::string carrier;
    std::vector<std::string> files;
};

// A check that fails (exit code 1) rather than an input error.
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_groupoid_doc(const Json& j) { return j.is_object() && j.contains("units"); }

CarrierPtr load_carrier(const Json& j) {
    if (is_groupoid_doc(j)) {
        return Carrier::for_groupoid(FiniteGroupoid::from_table(io::groupoid_from_json(j)));
    }
    return Carrier::for_graph(Graph::from_doc(io::graph_from_json(j)));
}

void print_pi(const PiFunction& p, Format format, std::ostream& out) {
    if (format == Format::Json) {
        out << io::to_json(p).dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < p.carrier->size(); ++i) {
        out << p.carrier->format(p.carrier->members()[i]) << ": " << to_string(p.ring, p.values[i]) << "\n";
    }
}

// ------------------------------------------------------------ subcommands

int cmd_validate(const Options& o, std::ostream& out) {
    const Json j = io::read_file(o.files.at(0));
    if (!o.carrier.empty()) {
        const PiFunction p = io::pi_from_json(load_carrier(io::read_file(o.carrier)), j);
        const ValidationReport r = validate_pi(p);
        for (const auto& issue : r.issues) {
            out << "violation: " << issue << "\n";
        }
        if (r.ok()) {
            out << "valid pi-function on " << p.carrier->size() << " sets\n";
        }
        return r.ok() ? 0 : 1;
    }
    if (is_groupoid_doc(j)) {
        const GroupoidTable t = io::groupoid_from_json(j);
        const ValidationReport r = validate(t);
        if (!r.ok()) {
            for (const auto& issue : r.issues) {
                out << "violation: " << issue << "\n";
            }
            return 1;
        }
        const FiniteGroupoid g = FiniteGroupoid::from_table(t);
        out << "valid groupoid: " << g.morphism_count() << " morphisms, " << g.unit_count() << " units, "
            << orbits(g).size() << " orbits\n";
        return 0;
    }
    if (j.is_object() && j.contains("vertices")) {
        const GraphDoc d = io::graph_from_json(j);
        const ValidationReport r = validate(d);
        if (!r.ok()) {
            for (const auto& issue : r.issues) {
                out << "violation: " << issue << "\n";
            }
            return 1;
        }
        out << "valid graph: " << d.vertices.size() << " vertices, " << d.edges.size() << " edges\n";
        return 0;
    }
    if (j.is_object() && j.contains("kind")) {
        const RingSpec r = io::ring_from_json(j);
        out << "valid ring: " << to_string(r) << "\n";
        return 0;
    }
    throw ParseError(o.files.at(0) + ": unrecognized document (expected a groupoid, graph or ring)");
}

int cmd_graph_lattice(const Options& o, std::ostream& out) {
    const Graph g = Graph::from_doc(io::graph_from_json(io::read_file(o.files.at(0))));
    const SHLattice lat = enumerate_sh(g);
    const Format format = o.dot ? Format::Dot : o.format;
    if (format == Format::Json) {
        Json members = Json::array();
        for (AtomSet h : lat.members()) {
            members.push_back(g.vertex_names(h));
        }
        Json covers = Json::array();
        for (auto [a, b] : lat.covers()) {
            covers.push_back(Json::array({a, b}));
        }
        out << Json{{"members", members}, {"covers", covers}}.dump(2) << "\n";
        return 0;
    }
    if (format == Format::Dot) {
        std::vector<std::string> nodes;
        for (AtomSet h : lat.members()) {
            nodes.push_back(g.format_set(h));
        }
        std::vector<std::pair<std::string, std::string>> edges;
        for (auto [a, b] : lat.covers()) {
            edges.emplace_back(g.format_set(lat.members()[a]), g.format_set(lat.members()[b]));
        }
        std::sort(nodes.begin(), nodes.end());
        std::sort(edges.begin(), edges.end());
        out << "digraph sh_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
        for (const auto& n : nodes) {
            out << "  \"" << n << "\";\n";
        }
        for (const auto& [a, b] : edges) {
            out << "  \"" << a << "\" -> \"" << b << "\";\n";
        }
        out << "}\n";
        return 0;
    }
    out << lat.size() << " saturated hereditary sets\n";
    for (AtomSet h : lat.members()) {
        out << g.format_set(h) << "\n";
    }
    return 0;
}

int cmd_graph_check_k(const Options& o, std::ostream& out) {
    const Graph g = Graph::from_doc(io::graph_from_json(io::read_file(o.files.at(0))));
    const bool direct = check_condition_K(g);
    const bool via_quotients = check_condition_K_via_quotients(g);
    const bool l = check_condition_L(g);
    if (o.format == Format::Json) {
        out << Json{{"condition_K", direct}, {"condition_K_via_quotients", via_quotients}, {"condition_L", l}}.dump(2)
            << "\n";
    } else {
        out << "Condition (K): " << (direct ? "true" : "false") << "\n";
        out << "Condition (L): " << (l ? "true" : "false") << "\n";
        out << "quotient cross-check: " << (direct == via_quotients ? "agrees" : "DISAGREES") << "\n";
    }
    return direct == via_quotients ? 0 : 1;
}

int cmd_ideal(const std::string& op, const Options& o, std::ostream& out) {
    const CarrierPtr carrier = load_carrier(io::read_file(o.files.at(0)));
    const PiFunction p1 = io::pi_from_json(carrier, io::read_file(o.files.at(1)));
    if (op == "member") {
        const Monomial m = io::monomial_from_json(carrier->graph(), p1.ring, io::read_file(o.files.at(2)));
        const bool in = monomial_in_ideal(p1, m);
        if (o.format == Format::Json) {
            out << Json{{"member", in}}.dump() << "\n";
        } else {
            out << (in ? "true" : "false") << "\n";
        }
        return 0;
    }
    const PiFunction p2 = io::pi_from_json(carrier, io::read_file(o.files.at(2)));
    if (op == "leq") {
        require_valid(p1);
        require_valid(p2);
        const bool leq = pi_leq(p1, p2);
        if (o.format == Format::Json) {
            out << Json{{"leq", leq}}.dump() << "\n";
        } else {
            out << (leq ? "true" : "false") << "\n";
        }
        return 0;
    }
    print_pi(op == "meet" ? pi_meet(p1, p2) : pi_join(p1, p2), o.format, out);
    return 0;
}

int cmd_rho_eval(const Options& o, std::ostream& out) {
    const CarrierPtr carrier = load_carrier(io::read_file(o.files.at(0)));
    const PiFunction p = io::pi_from_json(carrier, io::read_file(o.files.at(1)));
    const LassoPath x = io::lasso_from_json(carrier->graph(), io::read_file(o.files.at(2)));
    const RIdeal value = rho_eval(p, x);
    if (o.format == Format::Json) {
        out << io::to_json(p.ring, value).dump() << "\n";
    } else {
        out << to_string(p.ring, value) << "\n";
    }
    return 0;
}

AlgebraPtr load_algebra(const Options& o) {
    if (o.ring.empty()) {
        throw ValidationError("--ring is required");
    }
    const FiniteGroupoid g = FiniteGroupoid::from_table(io::groupoid_from_json(io::read_file(o.files.at(0))));
    return SteinbergAlgebra::make(g, io::ring_from_json(io::read_file_or_inline(o.ring), "--ring"));
}

bool ring_is_field(const RingSpec& r) {
    if (r.kind != RingSpec::Kind::Modular) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= r.modulus; ++d) {
        if (r.modulus % d == 0) {
            return false;
        }
    }
    return true;
}

class Suite {
public:
    explicit Suite(std::ostream& out) : out_(out) {}
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out_ << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
        failed_ = failed_ || !ok;
    }
    void note(const std::string& line) { out_ << "     " << line << "\n"; }
    bool failed() const { return failed_; }

private:
    std::ostream& out_;
    bool failed_ = false;
};

int cmd_gpd_verify(const Options& o, std::ostream& out) {
    const AlgebraPtr alg = load_algebra(o);
    const FiniteGroupoid& g = alg->groupoid();
    Suite suite(out);
    out << "seed: " << o.seed << "\n";

    const bool strongly = is_strongly_effective(g);
    const bool effective = is_effective(g);
    suite.note("groupoid: " + std::to_string(g.morphism_count()) + " morphisms, " + std::to_string(orbits(g).size()) +
               " orbits, ring " + to_string(alg->ring()));
    suite.note(std::string("strongly effective: ") + (strongly ? "true" : "false"));
    suite.check("strong effectiveness agrees with principality", strongly == effective);

    // Convolution axioms on random elements.
    {
        std::mt19937_64 rng(o.seed);
        const auto elems = ring_elements(alg->ring());
        auto random_element = [&] {
            std::vector<std::pair<int, RingElement>> entries;
            for (std::size_t m = 0; m < alg->dim(); ++m) {
                entries.emplace_back(static_cast<int>(m), elems[rng() % elems.size()]);
            }
            return AlgebraElement::from_map(alg, entries);
        };
        std::vector<int> units;
        for (std::size_t u = 0; u < g.unit_count(); ++u) {
            units.push_back(g.unit_morphism(static_cast<int>(u)));
        }
        const AlgebraElement one = indicator(alg, units);
        bool ok = true;
        for (int i = 0; i < 50 && ok; ++i) {
            const auto a = random_element(), b = random_element(), c = random_element();
            ok = convolve(convolve(a, b), c) == convolve(a, convolve(b, c)) &&
                 convolve(a, b + c) == convolve(a, b) + convolve(a, c) && convolve(one, a) == a &&
                 convolve(a, one) == a;
        }
        suite.check("convolution is associative, distributive and unital (50 random triples)", ok);
    }

    const auto opens = invariant_open_sets(g);
    std::vector<AlgebraIdeal> iu;
    for (const auto& u : opens) {
        iu.push_back(ideal_from_open(alg, u));
    }
    {
        bool ok = true;
        for (std::size_t a = 0; a < opens.size(); ++a) {
            for (std::size_t b = 0; b < opens.size(); ++b) {
                const auto meet = ideal_from_open(alg, opens[a] & opens[b]);
                const auto join = ideal_from_open(alg, opens[a] | opens[b]);
                ok = ok && meet == iu[a].intersect(iu[b]) && join == iu[a] + iu[b];
            }
        }
        suite.check("U -> I_U preserves meets and joins", ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& u : opens) {
            const auto rep = check_exact_sequence(alg, u);
            if (!rep.exact()) {
                ok = false;
                detail = rep.failures.front();
            }
        }
        suite.check("0 -> A(G_U) -> A(G) -> A(G_D) -> 0 is exact for every invariant U", ok, detail);
    }

    const auto ideals = enumerate_all_ideals(alg);
    suite.note(std::to_string(ideals.size()) + " ideals enumerated");
    std::set<AlgebraIdeal> basic;
    for (const auto& i : ideals) {
        if (is_basic_ideal(i)) {
            basic.insert(i);
        }
    }
    const std::set<AlgebraIdeal> from_open(iu.begin(), iu.end());

    if (effective) {
        suite.check("basic ideals are exactly the I_U (" + std::to_string(from_open.size()) + ")", basic == from_open &&
                    from_open.size() == opens.size());
        if (ring_is_field(alg->ring())) {
            suite.check("over a field every ideal is basic", basic.size() == ideals.size());
        }
        bool meets = true;
        for (const auto& i : ideals) {
            meets = meets && (i.is_zero() || meets_unit_space(i));
        }
        suite.check("every nonzero ideal meets A(G^(0))", meets);
    } else {
        const AlgebraIdeal k = unit_rep_kernel(alg);
        const bool nonzero = !k.is_zero();
        const bool misses = !meets_unit_space(k);
        suite.check("unit-space representation kernel is a nonzero basic ideal missing A(G^(0))",
                    nonzero && misses && is_basic_ideal(k));
        suite.check("that kernel is not of the form I_U", !from_open.contains(k));
    }

    if (!strongly) {
        suite.note("groupoid is not strongly effective; Gamma checks skipped");
        out << (suite.failed() ? "verification FAILED" : "verification passed") << "\n";
        return suite.failed() ? 1 : 0;
    }

    const CarrierPtr carrier = alg->carrier();
    const auto pis = enumerate_pi_functions(carrier, alg->ring());
    std::vector<AlgebraIdeal> images;
    for (const auto& p : pis) {
        images.push_back(realize_gamma(alg, p));
    }
    const std::set<AlgebraIdeal> image_set(images.begin(), images.end());
    const std::set<AlgebraIdeal> ideal_set(ideals.begin(), ideals.end());
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < orbits(g).size(); ++i) {
        expected *= enumerate_ideals(alg->ring()).size();
    }
    suite.check("Gamma is a bijection onto all ideals (" + std::to_string(pis.size()) + " pi-functions)",
                image_set == ideal_set && image_set.size() == pis.size() && ideals.size() == expected);
    {
        bool ok = true;
        for (std::size_t i = 0; i < pis.size(); ++i) {
            ok = ok && extract_pi(alg, images[i]) == pis[i];
        }
        suite.check("extract_pi inverts realize_gamma", ok);
    }
    {
        bool leq_ok = true, lattice_ok = true;
        for (std::size_t a = 0; a < pis.size(); ++a) {
            for (std::size_t b = 0; b < pis.size(); ++b) {
                leq_ok = leq_ok && pi_leq(pis[a], pis[b]) == images[b].contains(images[a]);
                lattice_ok = lattice_ok && realize_gamma(alg, pi_join(pis[a], pis[b])) == images[a] + images[b] &&
                             realize_gamma(alg, pi_meet(pis[a], pis[b])) == images[a].intersect(images[b]);
            }
        }
        suite.check("containment of ideals matches pointwise containment of pi", leq_ok);
        suite.check("pi_join / pi_meet realize ideal sum / intersection", lattice_ok);
    }
    out << (suite.failed() ? "verification FAILED" : "verification passed") << "\n";
    return suite.failed() ? 1 : 0;
}

int cmd_oracle_compare(const Options& o, std::ostream& out) {
    const AlgebraPtr alg = load_algebra(o);
    if (!is_strongly_effective(alg->groupoid())) {
        throw HypothesisError("groupoid is not strongly effective; Gamma does not parameterize its ideals");
    }
    const auto ideals = enumerate_all_ideals(alg);
    const auto pis = enumerate_pi_functions(alg->carrier(), alg->ring());
    std::set<AlgebraIdeal> images;
    for (const auto& p : pis) {
        images.insert(realize_gamma(alg, p));
    }
    const std::set<AlgebraIdeal> all(ideals.begin(), ideals.end());
    const bool ok = images == all && images.size() == pis.size();
    if (o.format == Format::Json) {
        out << Json{{"ideals", ideals.size()}, {"pi_functions", pis.size()}, {"bijection", ok}}.dump() << "\n";
    } else if (ok) {
        out << ideals.size() << " ideals, bijection verified\n";
    } else {
        out << ideals.size() << " ideals, " << pis.size() << " pi-functions, " << images.size()
            << " distinct images: bijection FAILED\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ideal lattices of Steinberg and Leavitt path algebras"};
    app.require_subcommand(1);
    Options o;
    std::string format = "text";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--seed", o.seed, "Seed for randomized checks");
    };

    std::string command;
    auto* validate_cmd = app.add_subcommand("validate", "Validate a groupoid, graph or ring document");
    validate_cmd->add_option("file", o.files)->required()->expected(1);
    validate_cmd->add_option("--carrier", o.carrier, "Graph or groupoid on which to validate a pi-function document");
    add_common(validate_cmd);

    auto* graph_cmd = app.add_subcommand("graph", "Graph lattice and condition reports");
    graph_cmd->require_subcommand(1);
    auto* lattice_cmd = graph_cmd->add_subcommand("lattice", "Saturated hereditary lattice");
    lattice_cmd->add_option("graph", o.files)->required()->expected(1);
    lattice_cmd->add_flag("--dot", o.dot, "Emit the Hasse diagram in DOT");
    add_common(lattice_cmd);
    auto* check_k_cmd = graph_cmd->add_subcommand("check-k", "Condition (K)");
    check_k_cmd->add_option("graph", o.files)->required()->expected(1);
    add_common(check_k_cmd);

    auto* ideal_cmd = app.add_subcommand("ideal", "Operations on pi-functions");
    ideal_cmd->require_subcommand(1);
    std::map<std::string, CLI::App*> ideal_ops;
    for (const char* op : {"leq", "meet", "join", "member"}) {
        auto* sub = ideal_cmd->add_subcommand(op, std::string("pi-function ") + op);
        sub->add_option("files", o.files)->required()->expected(3);
        add_common(sub);
        ideal_ops[op] = sub;
    }

    auto* rho_cmd = app.add_subcommand("rho", "rho-function evaluation");
    rho_cmd->require_subcommand(1);
    auto* eval_cmd = rho_cmd->add_subcommand("eval", "Evaluate rho at a lasso path");
    eval_cmd->add_option("files", o.files)->required()->expected(3);
    add_common(eval_cmd);

    auto* gpd_cmd = app.add_subcommand("gpd", "Groupoid algebra verification");
    gpd_cmd->require_subcommand(1);
    auto* verify_cmd = gpd_cmd->add_subcommand("verify", "Run the ideal-lattice verification suite");
    verify_cmd->add_option("groupoid", o.files)->required()->expected(1);
    verify_cmd->add_option("--ring", o.ring, "Ring document or inline JSON")->required();
    add_common(verify_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force comparison");
    oracle_cmd->require_subcommand(1);
    auto* compare_cmd = oracle_cmd->add_subcommand("compare", "Enumerated ideals versus Gamma");
    compare_cmd->add_option("groupoid", o.files)->required()->expected(1);
    compare_cmd->add_option("--ring", o.ring, "Ring document or inline JSON")->required();
    add_common(compare_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    o.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;

    try {
        if (validate_cmd->parsed()) {
            return cmd_validate(o, out);
        }
        if (lattice_cmd->parsed()) {
            return cmd_graph_lattice(o, out);
        }
        if (check_k_cmd->parsed()) {
            return cmd_graph_check_k(o, out);
        }
        for (const auto& [op, sub] : ideal_ops) {
            if (sub->parsed()) {
                return cmd_ideal(op, o, out);
            }
        }
        if (eval_cmd->parsed()) {
            return cmd_rho_eval(o, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_gpd_verify(o, out);
        }
        if (compare_cmd->parsed()) {
            return cmd_oracle_compare(o, out);
        }
    } catch (const HypothesisError& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CheckFailure& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command given\n";
    return 2;
}

} // namespace idlat::cli
