#include "idlat/steinberg.hpp"

#include "idlat/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace idlat {

namespace {

std::int64_t cadd(std::int64_t a, std::int64_t b, std::int64_t n) {
    return n == 0 ? arith::checked_add(a, b) : arith::mod(a + b, n);
}

std::int64_t cmul(std::int64_t a, std::int64_t b, std::int64_t n) {
    return n == 0 ? arith::checked_mul(a, b) : modarith::mul(a, b, n);
}

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.alg != b.alg && !(a.alg->groupoid() == b.alg->groupoid() && a.alg->ring() == b.alg->ring())) {
        throw ValidationError("algebra elements belong to different algebras");
    }
}

void require_finite(const SteinbergAlgebra& alg) {
    if (!alg.finite()) {
        throw NotEnumerableError("ideal computations need a finite coefficient ring, got " + to_string(alg.ring()));
    }
}

Vec unit_vector(std::size_t dim, std::size_t i, std::int64_t value = 1) {
    Vec v(dim, 0);
    v[i] = value;
    return v;
}

// delta_g * v on one component.
Vec left_mul(const FiniteGroupoid& g, int gamma, const Vec& v, std::int64_t n) {
    Vec out(v.size(), 0);
    for (std::size_t eta = 0; eta < v.size(); ++eta) {
        if (v[eta] == 0) {
            continue;
        }
        const int p = g.compose(gamma, static_cast<int>(eta));
        if (p >= 0) {
            out[static_cast<std::size_t>(p)] = cadd(out[static_cast<std::size_t>(p)], v[eta], n);
        }
    }
    return out;
}

// v * delta_g on one component.
Vec right_mul(const FiniteGroupoid& g, int gamma, const Vec& v, std::int64_t n) {
    Vec out(v.size(), 0);
    for (std::size_t eta = 0; eta < v.size(); ++eta) {
        if (v[eta] == 0) {
            continue;
        }
        const int p = g.compose(static_cast<int>(eta), gamma);
        if (p >= 0) {
            out[static_cast<std::size_t>(p)] = cadd(out[static_cast<std::size_t>(p)], v[eta], n);
        }
    }
    return out;
}

bool closed(const FiniteGroupoid& g, const Submodule& s) {
    for (const auto& row : s.rows()) {
        for (std::size_t gamma = 0; gamma < g.morphism_count(); ++gamma) {
            if (!s.contains(left_mul(g, static_cast<int>(gamma), row, s.modulus())) ||
                !s.contains(right_mul(g, static_cast<int>(gamma), row, s.modulus()))) {
                return false;
            }
        }
    }
    return true;
}

Submodule close_component(const FiniteGroupoid& g, Submodule s) {
    std::vector<Vec> work(s.rows().begin(), s.rows().end());
    while (!work.empty()) {
        const Vec v = std::move(work.back());
        work.pop_back();
        for (std::size_t gamma = 0; gamma < g.morphism_count(); ++gamma) {
            for (Vec w : {left_mul(g, static_cast<int>(gamma), v, s.modulus()),
                          right_mul(g, static_cast<int>(gamma), v, s.modulus())}) {
                if (s.insert(w)) {
                    work.push_back(std::move(w));
                }
            }
        }
    }
    return s;
}

// Smallest divisor d of n with d * v in s.
std::int64_t annihilator_generator(const Submodule& s, const Vec& v) {
    const std::int64_t n = s.modulus();
    for (std::int64_t d : arith::divisors(n)) {
        Vec w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            w[i] = modarith::mul(d, v[i], n);
        }
        if (s.contains(w)) {
            return d;
        }
    }
    return n;
}

} // namespace

// ---------------------------------------------------------------- algebra

SteinbergAlgebra::SteinbergAlgebra(FiniteGroupoid g, RingSpec ring)
    : g_(std::move(g)), ring_(std::move(ring)), moduli_(flat_moduli(ring_)) {}

AlgebraPtr SteinbergAlgebra::make(FiniteGroupoid g, RingSpec ring) {
    validate_ring(ring);
    return AlgebraPtr(new SteinbergAlgebra(std::move(g), std::move(ring)));
}

CarrierPtr SteinbergAlgebra::carrier() const {
    if (!carrier_) {
        carrier_ = Carrier::for_groupoid(g_);
    }
    return carrier_;
}

// ---------------------------------------------------------------- elements

AlgebraElement AlgebraElement::zero(const AlgebraPtr& alg) {
    return AlgebraElement{alg, std::vector<Vec>(alg->components(), Vec(alg->dim(), 0))};
}

AlgebraElement AlgebraElement::monomial(const AlgebraPtr& alg, int m, const RingElement& r) {
    return from_map(alg, {{m, r}});
}

AlgebraElement AlgebraElement::from_map(const AlgebraPtr& alg, const std::vector<std::pair<int, RingElement>>& entries) {
    AlgebraElement f = zero(alg);
    for (const auto& [m, r] : entries) {
        if (m < 0 || static_cast<std::size_t>(m) >= alg->dim()) {
            throw ValidationError("morphism index out of range");
        }
        const auto flat = flatten(alg->ring(), normalize(alg->ring(), r));
        for (std::size_t k = 0; k < flat.size(); ++k) {
            auto& slot = f.coeffs[k][static_cast<std::size_t>(m)];
            slot = cadd(slot, flat[k], alg->moduli()[k]);
        }
    }
    return f;
}

RingElement AlgebraElement::at(int m) const {
    std::vector<std::int64_t> flat;
    for (const auto& c : coeffs) {
        flat.push_back(c.at(static_cast<std::size_t>(m)));
    }
    return unflatten_element(alg->ring(), flat);
}

std::vector<int> AlgebraElement::support() const {
    std::vector<int> out;
    for (std::size_t m = 0; m < alg->dim(); ++m) {
        if (std::any_of(coeffs.begin(), coeffs.end(), [m](const Vec& c) { return c[m] != 0; })) {
            out.push_back(static_cast<int>(m));
        }
    }
    return out;
}

bool AlgebraElement::is_zero() const { return support().empty(); }

AlgebraElement AlgebraElement::restrict_to_units() const {
    AlgebraElement out = *this;
    for (auto& c : out.coeffs) {
        for (std::size_t m = 0; m < c.size(); ++m) {
            if (alg->groupoid().as_unit(static_cast<int>(m)) < 0) {
                c[m] = 0;
            }
        }
    }
    return out;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    require_same(*this, o);
    AlgebraElement out = *this;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (std::size_t m = 0; m < coeffs[k].size(); ++m) {
            out.coeffs[k][m] = cadd(coeffs[k][m], o.coeffs[k][m], alg->moduli()[k]);
        }
    }
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    require_same(*this, o);
    AlgebraElement out = *this;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const std::int64_t n = alg->moduli()[k];
        for (std::size_t m = 0; m < coeffs[k].size(); ++m) {
            out.coeffs[k][m] = n == 0 ? arith::checked_add(coeffs[k][m], -o.coeffs[k][m])
                                      : arith::mod(coeffs[k][m] - o.coeffs[k][m], n);
        }
    }
    return out;
}

AlgebraElement AlgebraElement::scaled(const RingElement& r) const {
    const auto flat = flatten(alg->ring(), normalize(alg->ring(), r));
    AlgebraElement out = *this;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (auto& x : out.coeffs[k]) {
            x = cmul(x, flat[k], alg->moduli()[k]);
        }
    }
    return out;
}

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
    require_same(a, b);
    const FiniteGroupoid& g = a.alg->groupoid();
    AlgebraElement out = AlgebraElement::zero(a.alg);
    const auto sa = a.support();
    const auto sb = b.support();
    for (int x : sa) {
        for (int y : sb) {
            const int xy = g.compose(x, y);
            if (xy < 0) {
                continue;
            }
            for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
                const std::int64_t n = a.alg->moduli()[k];
                auto& slot = out.coeffs[k][static_cast<std::size_t>(xy)];
                slot = cadd(slot,
                            cmul(a.coeffs[k][static_cast<std::size_t>(x)], b.coeffs[k][static_cast<std::size_t>(y)], n),
                            n);
            }
        }
    }
    return out;
}

AlgebraElement indicator(const AlgebraPtr& alg, const std::vector<int>& b) {
    const FiniteGroupoid& g = alg->groupoid();
    std::map<int, int> by_src, by_rng;
    for (int m : b) {
        if (m < 0 || static_cast<std::size_t>(m) >= g.morphism_count()) {
            throw ValidationError("morphism index out of range");
        }
        auto [si, s_new] = by_src.emplace(g.src(m), m);
        if (!s_new && si->second != m) {
            throw ValidationError("not a bisection: '" + g.name(si->second) + "' and '" + g.name(m) +
                                  "' share the source '" + g.unit_name(g.src(m)) + "'");
        }
        auto [ri, r_new] = by_rng.emplace(g.rng(m), m);
        if (!r_new && ri->second != m) {
            throw ValidationError("not a bisection: '" + g.name(ri->second) + "' and '" + g.name(m) +
                                  "' share the range '" + g.unit_name(g.rng(m)) + "'");
        }
    }
    std::set<int> distinct(b.begin(), b.end());
    std::vector<std::pair<int, RingElement>> entries;
    for (int m : distinct) {
        entries.emplace_back(m, ring_one(alg->ring()));
    }
    return AlgebraElement::from_map(alg, entries);
}

std::string to_string(const AlgebraElement& f) {
    const auto supp = f.support();
    if (supp.empty()) {
        return "0";
    }
    std::string out;
    for (int m : supp) {
        out += (out.empty() ? "" : " + ") + to_string(f.alg->ring(), f.at(m)) + "*[" + f.alg->groupoid().name(m) + "]";
    }
    return out;
}

// ------------------------------------------------------------------ ideals

AlgebraIdeal AlgebraIdeal::verified(const AlgebraPtr& alg, std::vector<Submodule> comps) {
    require_finite(*alg);
    if (comps.size() != alg->components()) {
        throw ValidationError("ideal has the wrong number of components");
    }
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (comps[k].modulus() != alg->moduli()[k] || comps[k].dim() != alg->dim()) {
            throw ValidationError("ideal component does not match the algebra");
        }
        if (!closed(alg->groupoid(), comps[k])) {
            throw ValidationError("submodule is not closed under multiplication by the algebra");
        }
    }
    AlgebraIdeal out;
    out.alg_ = alg;
    out.comps_ = std::move(comps);
    return out;
}

AlgebraIdeal AlgebraIdeal::zero(const AlgebraPtr& alg) {
    require_finite(*alg);
    std::vector<Submodule> comps;
    for (std::int64_t n : alg->moduli()) {
        comps.push_back(Submodule::zero(n, alg->dim()));
    }
    return verified(alg, std::move(comps));
}

AlgebraIdeal AlgebraIdeal::whole(const AlgebraPtr& alg) {
    require_finite(*alg);
    std::vector<Submodule> comps;
    for (std::int64_t n : alg->moduli()) {
        comps.push_back(Submodule::full(n, alg->dim()));
    }
    return verified(alg, std::move(comps));
}

bool AlgebraIdeal::contains(const AlgebraElement& f) const {
    require_same(AlgebraElement{alg_, {}}, f);
    for (std::size_t k = 0; k < comps_.size(); ++k) {
        if (!comps_[k].contains(f.coeffs[k])) {
            return false;
        }
    }
    return true;
}

bool AlgebraIdeal::contains(const AlgebraIdeal& other) const {
    for (std::size_t k = 0; k < comps_.size(); ++k) {
        if (!comps_[k].contains(other.comps_.at(k))) {
            return false;
        }
    }
    return true;
}

bool AlgebraIdeal::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Submodule& s) { return s.is_zero(); });
}

std::uint64_t AlgebraIdeal::order() const {
    std::uint64_t out = 1;
    for (const auto& s : comps_) {
        if (__builtin_mul_overflow(out, s.order(), &out)) {
            throw BudgetError("ideal order exceeds 64 bits");
        }
    }
    return out;
}

std::vector<AlgebraElement> AlgebraIdeal::elements(std::uint64_t limit) const {
    if (order() > limit) {
        throw BudgetError("ideal has " + std::to_string(order()) + " elements, above the limit " + std::to_string(limit));
    }
    std::vector<std::vector<Vec>> per;
    for (const auto& s : comps_) {
        per.push_back(s.elements(limit));
    }
    std::vector<AlgebraElement> out;
    std::vector<std::size_t> idx(per.size(), 0);
    bool more = true;
    while (more) {
        AlgebraElement f{alg_, {}};
        for (std::size_t k = 0; k < per.size(); ++k) {
            f.coeffs.push_back(per[k][idx[k]]);
        }
        out.push_back(std::move(f));
        more = false;
        for (std::size_t k = per.size(); k-- > 0;) {
            if (++idx[k] < per[k].size()) {
                more = true;
                break;
            }
            idx[k] = 0;
        }
    }
    return out;
}

AlgebraIdeal AlgebraIdeal::operator+(const AlgebraIdeal& o) const {
    std::vector<Submodule> comps;
    for (std::size_t k = 0; k < comps_.size(); ++k) {
        comps.push_back(comps_[k] + o.comps_.at(k));
    }
    return verified(alg_, std::move(comps));
}

AlgebraIdeal AlgebraIdeal::intersect(const AlgebraIdeal& o) const {
    std::vector<Submodule> comps;
    for (std::size_t k = 0; k < comps_.size(); ++k) {
        comps.push_back(comps_[k].intersect(o.comps_.at(k)));
    }
    return verified(alg_, std::move(comps));
}

AlgebraIdeal ideal_from_coordinates(const AlgebraPtr& alg, const std::vector<std::vector<std::int64_t>>& gens) {
    require_finite(*alg);
    std::vector<Submodule> comps;
    for (std::size_t k = 0; k < alg->components(); ++k) {
        const std::int64_t n = alg->moduli()[k];
        Submodule s(n, alg->dim());
        for (std::size_t m = 0; m < alg->dim(); ++m) {
            s.insert(unit_vector(alg->dim(), m, arith::mod(gens.at(k).at(m), n)));
        }
        comps.push_back(std::move(s));
    }
    return AlgebraIdeal::verified(alg, std::move(comps));
}

AlgebraIdeal ideal_generate(const AlgebraPtr& alg, const std::vector<AlgebraElement>& gens) {
    require_finite(*alg);
    std::vector<Submodule> comps;
    for (std::size_t k = 0; k < alg->components(); ++k) {
        Submodule s(alg->moduli()[k], alg->dim());
        for (const auto& f : gens) {
            require_same(AlgebraElement{alg, {}}, f);
            s.insert(f.coeffs[k]);
        }
        comps.push_back(close_component(alg->groupoid(), std::move(s)));
    }
    return AlgebraIdeal::verified(alg, std::move(comps));
}

std::vector<AlgebraIdeal> enumerate_all_ideals(const AlgebraPtr& alg, EnumerationStrategy strategy) {
    require_finite(*alg);
    const FiniteGroupoid& g = alg->groupoid();
    const std::uint64_t ring_size = ring_order(alg->ring());
    if (g.morphism_count() > kMaxEnumerationMorphisms || ring_size > kMaxEnumerationRing) {
        throw BudgetError("enumeration budget exceeded: needs at most " + std::to_string(kMaxEnumerationMorphisms) +
                          " morphisms and a ring of at most " + std::to_string(kMaxEnumerationRing) + " elements");
    }
    constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 20;

    // Morphism sets over which candidate generators range.
    std::vector<std::vector<int>> supports;
    if (strategy == EnumerationStrategy::Exhaustive) {
        std::vector<int> all(g.morphism_count());
        for (std::size_t m = 0; m < all.size(); ++m) {
            all[m] = static_cast<int>(m);
        }
        supports.push_back(all);
    } else {
        for (const auto& orbit : orbits(g)) {
            const int u = orbit.front();
            std::vector<int> iso;
            for (std::size_t m = 0; m < g.morphism_count(); ++m) {
                if (g.src(static_cast<int>(m)) == u && g.rng(static_cast<int>(m)) == u) {
                    iso.push_back(static_cast<int>(m));
                }
            }
            supports.push_back(iso);
        }
    }

    const auto elems = ring_elements(alg->ring());
    std::set<AlgebraIdeal> principal;
    for (const auto& supp : supports) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < supp.size(); ++i) {
            if (__builtin_mul_overflow(count, ring_size, &count) || count > kMaxCandidates) {
                throw BudgetError("too many candidate generators for exhaustive ideal enumeration");
            }
        }
        std::vector<std::size_t> digit(supp.size(), 0);
        for (std::uint64_t c = 0; c < count; ++c) {
            std::vector<std::pair<int, RingElement>> entries;
            for (std::size_t i = 0; i < supp.size(); ++i) {
                entries.emplace_back(supp[i], elems[digit[i]]);
            }
            principal.insert(ideal_generate(alg, {AlgebraElement::from_map(alg, entries)}));
            for (std::size_t i = supp.size(); i-- > 0;) {
                if (++digit[i] < elems.size()) {
                    break;
                }
                digit[i] = 0;
            }
        }
    }

    std::set<AlgebraIdeal> all(principal.begin(), principal.end());
    all.insert(AlgebraIdeal::zero(alg));
    std::vector<AlgebraIdeal> frontier(all.begin(), all.end());
    while (!frontier.empty()) {
        std::vector<AlgebraIdeal> next;
        for (const auto& a : frontier) {
            for (const auto& p : principal) {
                AlgebraIdeal s = a + p;
                if (all.insert(s).second) {
                    next.push_back(std::move(s));
                }
            }
        }
        frontier = std::move(next);
    }
    return {all.begin(), all.end()};
}

bool is_basic_ideal(const AlgebraIdeal& i) {
    const AlgebraPtr& alg = i.algebra();
    const FiniteGroupoid& g = alg->groupoid();
    // r 1_K ∈ I forces r delta_u ∈ I for each u in K, so it suffices that
    // each J_u = {r : r delta_u ∈ I} is either 0 or R.
    for (std::size_t u = 0; u < g.unit_count(); ++u) {
        const auto m = static_cast<std::size_t>(g.unit_morphism(static_cast<int>(u)));
        bool all_zero = true, all_whole = true;
        for (std::size_t k = 0; k < alg->components(); ++k) {
            const std::int64_t d = annihilator_generator(i.components()[k], unit_vector(alg->dim(), m));
            all_zero = all_zero && d == alg->moduli()[k];
            all_whole = all_whole && d == 1;
        }
        if (!all_zero && !all_whole) {
            return false;
        }
    }
    return true;
}

AlgebraIdeal ideal_from_open(const AlgebraPtr& alg, const UnitSet& u) {
    const FiniteGroupoid& g = alg->groupoid();
    if (u.universe() != g.unit_count()) {
        throw ValidationError("unit set does not belong to this groupoid");
    }
    if (!is_invariant(g, u)) {
        throw ValidationError("unit set is not invariant");
    }
    std::vector<std::vector<std::int64_t>> gens;
    for (std::int64_t n : alg->moduli()) {
        std::vector<std::int64_t> row(alg->dim());
        for (std::size_t m = 0; m < alg->dim(); ++m) {
            row[m] = u.contains(g.src(static_cast<int>(m))) ? 1 : n;
        }
        gens.push_back(std::move(row));
    }
    return ideal_from_coordinates(alg, gens);
}

ExactSequenceReport check_exact_sequence(const AlgebraPtr& alg, const UnitSet& u) {
    require_finite(*alg);
    const FiniteGroupoid& g = alg->groupoid();
    const UnitSet d = u.complement();
    const FiniteGroupoid gu = restrict(g, u);
    const FiniteGroupoid gd = restrict(g, d);
    const AlgebraPtr au = SteinbergAlgebra::make(gu, alg->ring());
    const AlgebraPtr ad = SteinbergAlgebra::make(gd, alg->ring());
    const AlgebraIdeal iu = ideal_from_open(alg, u);

    std::vector<int> i_index(gu.morphism_count());
    for (std::size_t m = 0; m < gu.morphism_count(); ++m) {
        i_index[m] = *g.find_morphism(gu.name(static_cast<int>(m)));
    }
    std::vector<int> q_index(g.morphism_count(), -1);
    for (std::size_t m = 0; m < g.morphism_count(); ++m) {
        if (auto t = gd.find_morphism(g.name(static_cast<int>(m)))) {
            q_index[m] = *t;
        }
    }

    ExactSequenceReport rep;
    rep.i_injective = rep.q_surjective = rep.ker_equals_image = rep.image_equals_IU = rep.homomorphisms = true;
    rep.ideal_order = iu.order();
    for (std::size_t k = 0; k < alg->components(); ++k) {
        const std::int64_t n = alg->moduli()[k];
        LinearMap i_map{n, gu.morphism_count(), g.morphism_count(), {}};
        for (std::size_t m = 0; m < gu.morphism_count(); ++m) {
            i_map.images.push_back(unit_vector(g.morphism_count(), static_cast<std::size_t>(i_index[m])));
        }
        LinearMap q_map{n, g.morphism_count(), gd.morphism_count(), {}};
        for (std::size_t m = 0; m < g.morphism_count(); ++m) {
            q_map.images.push_back(q_index[m] < 0 ? Vec(gd.morphism_count(), 0)
                                                  : unit_vector(gd.morphism_count(), static_cast<std::size_t>(q_index[m])));
        }
        const std::string tag = " (component Z/" + std::to_string(n) + ")";
        if (!i_map.kernel().is_zero()) {
            rep.i_injective = false;
            rep.failures.push_back("i_U is not injective" + tag);
        }
        if (!(q_map.image() == Submodule::full(n, gd.morphism_count()))) {
            rep.q_surjective = false;
            rep.failures.push_back("q_U is not surjective" + tag);
        }
        const Submodule im = i_map.image();
        if (!(q_map.kernel() == im)) {
            rep.ker_equals_image = false;
            rep.failures.push_back("ker q_U differs from im i_U" + tag);
        }
        if (!(im == iu.components()[k])) {
            rep.image_equals_IU = false;
            rep.failures.push_back("im i_U differs from I_U" + tag);
        }
    }

    // Multiplicativity on basis pairs.
    const RingElement one = ring_one(alg->ring());
    auto push_i = [&](const AlgebraElement& f) {
        AlgebraElement out = AlgebraElement::zero(alg);
        for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
            for (std::size_t m = 0; m < f.coeffs[k].size(); ++m) {
                out.coeffs[k][static_cast<std::size_t>(i_index[m])] = f.coeffs[k][m];
            }
        }
        return out;
    };
    auto push_q = [&](const AlgebraElement& f) {
        AlgebraElement out = AlgebraElement::zero(ad);
        for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
            for (std::size_t m = 0; m < f.coeffs[k].size(); ++m) {
                if (q_index[m] >= 0) {
                    out.coeffs[k][static_cast<std::size_t>(q_index[m])] = f.coeffs[k][m];
                }
            }
        }
        return out;
    };
    for (std::size_t a = 0; a < gu.morphism_count() && rep.homomorphisms; ++a) {
        for (std::size_t b = 0; b < gu.morphism_count(); ++b) {
            const auto fa = AlgebraElement::monomial(au, static_cast<int>(a), one);
            const auto fb = AlgebraElement::monomial(au, static_cast<int>(b), one);
            if (!(push_i(convolve(fa, fb)) == convolve(push_i(fa), push_i(fb)))) {
                rep.homomorphisms = false;
                rep.failures.push_back("i_U is not multiplicative on (" + gu.name(static_cast<int>(a)) + ", " +
                                       gu.name(static_cast<int>(b)) + ")");
                break;
            }
        }
    }
    for (std::size_t a = 0; a < g.morphism_count() && rep.homomorphisms; ++a) {
        for (std::size_t b = 0; b < g.morphism_count(); ++b) {
            const auto fa = AlgebraElement::monomial(alg, static_cast<int>(a), one);
            const auto fb = AlgebraElement::monomial(alg, static_cast<int>(b), one);
            if (!(push_q(convolve(fa, fb)) == convolve(push_q(fa), push_q(fb)))) {
                rep.homomorphisms = false;
                rep.failures.push_back("q_U is not multiplicative on (" + g.name(static_cast<int>(a)) + ", " +
                                       g.name(static_cast<int>(b)) + ")");
                break;
            }
        }
    }
    return rep;
}

bool meets_unit_space(const AlgebraIdeal& i) {
    const FiniteGroupoid& g = i.algebra()->groupoid();
    for (std::size_t k = 0; k < i.components().size(); ++k) {
        const std::int64_t n = i.algebra()->moduli()[k];
        std::vector<Vec> gens;
        for (std::size_t u = 0; u < g.unit_count(); ++u) {
            gens.push_back(unit_vector(g.morphism_count(), static_cast<std::size_t>(g.unit_morphism(static_cast<int>(u)))));
        }
        const Submodule units = Submodule::span(n, g.morphism_count(), gens);
        if (!i.components()[k].intersect(units).is_zero()) {
            return true;
        }
    }
    return false;
}

AlgebraIdeal unit_rep_kernel(const AlgebraPtr& alg) {
    require_finite(*alg);
    const FiniteGroupoid& g = alg->groupoid();
    const std::size_t units = g.unit_count();
    std::vector<Submodule> comps;
    for (std::int64_t n : alg->moduli()) {
        LinearMap rep{n, g.morphism_count(), units * units, {}};
        for (std::size_t m = 0; m < g.morphism_count(); ++m) {
            const auto row = static_cast<std::size_t>(g.rng(static_cast<int>(m)));
            const auto col = static_cast<std::size_t>(g.src(static_cast<int>(m)));
            rep.images.push_back(unit_vector(units * units, row * units + col));
        }
        comps.push_back(rep.kernel());
    }
    return AlgebraIdeal::verified(alg, std::move(comps));
}

namespace {

void require_groupoid_carrier(const AlgebraPtr& alg, const PiFunction& pi) {
    if (pi.carrier->mode() != Carrier::Mode::Groupoid || !(pi.carrier->groupoid() == alg->groupoid())) {
        throw ValidationError("pi-function is not defined on the invariant sets of this groupoid");
    }
    if (!(pi.ring == alg->ring())) {
        throw ValidationError("pi-function ring " + to_string(pi.ring) + " differs from the algebra ring " +
                              to_string(alg->ring()));
    }
}

} // namespace

AlgebraIdeal realize_gamma(const AlgebraPtr& alg, const PiFunction& pi) {
    require_finite(*alg);
    require_groupoid_carrier(alg, pi);
    const FiniteGroupoid& g = alg->groupoid();
    if (!is_strongly_effective(g)) {
        throw HypothesisError("groupoid is not strongly effective; Gamma is only a bijection for strongly effective "
                              "groupoids");
    }
    require_valid(pi);
    const auto orbit_of = orbit_index(g);
    std::vector<Submodule> comps;
    for (std::size_t k = 0; k < alg->components(); ++k) {
        comps.emplace_back(alg->moduli()[k], alg->dim());
    }
    for (AtomSet h : pi.carrier->members()) {
        const auto gens = flatten(pi.ring, pi.at(h));
        for (std::size_t m = 0; m < alg->dim(); ++m) {
            const int o = orbit_of[static_cast<std::size_t>(g.src(static_cast<int>(m)))];
            if (!atom_in(h, static_cast<std::size_t>(o))) {
                continue;
            }
            for (std::size_t k = 0; k < comps.size(); ++k) {
                comps[k].insert(unit_vector(alg->dim(), m, arith::mod(gens[k], alg->moduli()[k])));
            }
        }
    }
    return AlgebraIdeal::verified(alg, std::move(comps));
}

std::vector<RIdeal> gamma_coefficients(const FiniteGroupoid& g, const PiFunction& pi) {
    if (pi.carrier->mode() != Carrier::Mode::Groupoid || !(pi.carrier->groupoid() == g)) {
        throw ValidationError("pi-function is not defined on the invariant sets of this groupoid");
    }
    if (!is_strongly_effective(g)) {
        throw HypothesisError("groupoid is not strongly effective");
    }
    require_valid(pi);
    // The smallest invariant set containing s(g) is its orbit, and pi
    // reverses order, so the orbit carries the largest admissible ideal.
    const auto orbit_of = orbit_index(g);
    std::vector<RIdeal> out;
    for (std::size_t m = 0; m < g.morphism_count(); ++m) {
        const int o = orbit_of[static_cast<std::size_t>(g.src(static_cast<int>(m)))];
        out.push_back(pi.at(atom_bit(static_cast<std::size_t>(o))));
    }
    return out;
}

PiFunction extract_pi(const AlgebraPtr& alg, const AlgebraIdeal& i) {
    require_finite(*alg);
    const FiniteGroupoid& g = alg->groupoid();
    const CarrierPtr carrier = alg->carrier();
    PiFunction out{carrier, alg->ring(), {}};
    for (AtomSet h : carrier->members()) {
        const UnitSet u = UnitSet::from_names(g, carrier->names(h));
        std::vector<std::int64_t> gens;
        for (std::size_t k = 0; k < alg->components(); ++k) {
            const Submodule& s = i.components()[k];
            // r 1_B ∈ I for all B ⊆ U iff r delta_u ∈ I for every unit u of U.
            std::int64_t d = 1;
            for (int unit : u.members()) {
                const auto m = static_cast<std::size_t>(g.unit_morphism(unit));
                d = arith::checked_lcm(d, annihilator_generator(s, unit_vector(alg->dim(), m)));
            }
            gens.push_back(d);
        }
        out.values.push_back(unflatten_ideal(alg->ring(), gens));
    }
    const ValidationReport r = validate_pi(out);
    if (!r.ok()) {
        throw Error("extracted pi-function is invalid: " + r.issues.front());
    }
    return out;
}

} // namespace idlat
