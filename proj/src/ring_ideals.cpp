#include "idlat/ring_ideals.hpp"

#include "idlat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace idlat {

namespace arith {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw BudgetError("integer overflow in ring arithmetic");
    }
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw BudgetError("integer overflow in ring arithmetic");
    }
    return r;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace arith

RingSpec RingSpec::integers() { return RingSpec{}; }

RingSpec RingSpec::modular(std::int64_t n) {
    RingSpec s;
    s.kind = Kind::Modular;
    s.modulus = n;
    return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
    RingSpec s;
    s.kind = Kind::Product;
    s.factors = std::move(factors);
    return s;
}

namespace {

void validate_ring_at(const RingSpec& spec, int depth) {
    switch (spec.kind) {
    case RingSpec::Kind::Integer:
        return;
    case RingSpec::Kind::Modular:
        if (spec.modulus < 2 || spec.modulus > kMaxModulus) {
            throw ValidationError("ring modulus must lie in [2, 2^31 - 1], got " + std::to_string(spec.modulus));
        }
        return;
    case RingSpec::Kind::Product:
        if (depth >= kMaxProductDepth) {
            throw ValidationError("product ring nesting depth exceeds 4");
        }
        if (spec.factors.empty()) {
            throw ValidationError("product ring needs at least one factor");
        }
        for (const auto& f : spec.factors) {
            validate_ring_at(f, depth + 1);
        }
        return;
    }
}

[[noreturn]] void shape_mismatch(const std::string& what, const RingSpec& spec) {
    throw ValidationError(what + " does not match ring " + to_string(spec));
}

} // namespace

void validate_ring(const RingSpec& spec) { validate_ring_at(spec, 0); }

bool is_finite(const RingSpec& spec) {
    switch (spec.kind) {
    case RingSpec::Kind::Integer:
        return false;
    case RingSpec::Kind::Modular:
        return true;
    case RingSpec::Kind::Product:
        return std::all_of(spec.factors.begin(), spec.factors.end(), [](const RingSpec& f) { return is_finite(f); });
    }
    return false;
}

std::uint64_t ring_order(const RingSpec& spec) {
    if (!is_finite(spec)) {
        throw NotEnumerableError("ring " + to_string(spec) + " is infinite");
    }
    std::int64_t order = 1;
    for (std::int64_t n : flat_moduli(spec)) {
        order = arith::checked_mul(order, n);
    }
    return static_cast<std::uint64_t>(order);
}

std::vector<std::int64_t> flat_moduli(const RingSpec& spec) {
    std::vector<std::int64_t> out;
    auto walk = [&out](const RingSpec& s, auto& self) -> void {
        switch (s.kind) {
        case RingSpec::Kind::Integer:
            out.push_back(0);
            break;
        case RingSpec::Kind::Modular:
            out.push_back(s.modulus);
            break;
        case RingSpec::Kind::Product:
            for (const auto& f : s.factors) {
                self(f, self);
            }
            break;
        }
    };
    walk(spec, walk);
    return out;
}

std::string to_string(const RingSpec& spec) {
    switch (spec.kind) {
    case RingSpec::Kind::Integer:
        return "Z";
    case RingSpec::Kind::Modular:
        return "Z/" + std::to_string(spec.modulus);
    case RingSpec::Kind::Product: {
        std::string out = "(";
        for (std::size_t i = 0; i < spec.factors.size(); ++i) {
            out += (i ? " x " : "") + to_string(spec.factors[i]);
        }
        return out + ")";
    }
    }
    return "?";
}

// ---------------------------------------------------------------- elements

RingElement normalize(const RingSpec& spec, RingElement e) {
    switch (spec.kind) {
    case RingSpec::Kind::Integer:
        if (!e.factors.empty()) {
            shape_mismatch("tuple element", spec);
        }
        return e;
    case RingSpec::Kind::Modular:
        if (!e.factors.empty()) {
            shape_mismatch("tuple element", spec);
        }
        e.value = arith::mod(e.value, spec.modulus);
        return e;
    case RingSpec::Kind::Product:
        if (e.factors.size() != spec.factors.size()) {
            shape_mismatch("element", spec);
        }
        for (std::size_t i = 0; i < e.factors.size(); ++i) {
            e.factors[i] = normalize(spec.factors[i], std::move(e.factors[i]));
        }
        e.value = 0;
        return e;
    }
    return e;
}

RingElement ring_zero(const RingSpec& spec) {
    if (spec.kind != RingSpec::Kind::Product) {
        return RingElement::scalar(0);
    }
    std::vector<RingElement> parts;
    for (const auto& f : spec.factors) {
        parts.push_back(ring_zero(f));
    }
    return RingElement::tuple(std::move(parts));
}

RingElement ring_one(const RingSpec& spec) {
    if (spec.kind != RingSpec::Kind::Product) {
        return RingElement::scalar(1);
    }
    std::vector<RingElement> parts;
    for (const auto& f : spec.factors) {
        parts.push_back(ring_one(f));
    }
    return RingElement::tuple(std::move(parts));
}

bool is_zero(const RingSpec& spec, const RingElement& e) {
    const auto flat = flatten(spec, e);
    return std::all_of(flat.begin(), flat.end(), [](std::int64_t v) { return v == 0; });
}

std::vector<std::int64_t> flatten(const RingSpec& spec, const RingElement& e) {
    std::vector<std::int64_t> out;
    auto walk = [&out](const RingSpec& s, const RingElement& x, auto& self) -> void {
        if (s.kind == RingSpec::Kind::Product) {
            if (x.factors.size() != s.factors.size()) {
                shape_mismatch("element", s);
            }
            for (std::size_t i = 0; i < s.factors.size(); ++i) {
                self(s.factors[i], x.factors[i], self);
            }
            return;
        }
        if (!x.factors.empty()) {
            shape_mismatch("tuple element", s);
        }
        out.push_back(s.kind == RingSpec::Kind::Modular ? arith::mod(x.value, s.modulus) : x.value);
    };
    walk(spec, e, walk);
    return out;
}

RingElement unflatten_element(const RingSpec& spec, std::span<const std::int64_t> flat) {
    std::size_t pos = 0;
    auto build = [&](const RingSpec& s, auto& self) -> RingElement {
        if (s.kind != RingSpec::Kind::Product) {
            if (pos >= flat.size()) {
                throw ValidationError("too few components for ring " + to_string(spec));
            }
            return RingElement::scalar(flat[pos++]);
        }
        std::vector<RingElement> parts;
        for (const auto& f : s.factors) {
            parts.push_back(self(f, self));
        }
        return RingElement::tuple(std::move(parts));
    };
    RingElement out = build(spec, build);
    if (pos != flat.size()) {
        throw ValidationError("too many components for ring " + to_string(spec));
    }
    return out;
}

std::vector<RingElement> ring_elements(const RingSpec& spec) {
    const auto moduli = flat_moduli(spec);
    const std::uint64_t count = ring_order(spec);
    std::vector<RingElement> out;
    out.reserve(count);
    std::vector<std::int64_t> digits(moduli.size(), 0);
    for (std::uint64_t k = 0; k < count; ++k) {
        out.push_back(unflatten_element(spec, digits));
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (++digits[i] < moduli[i]) {
                break;
            }
            digits[i] = 0;
        }
    }
    return out;
}

std::string to_string(const RingSpec& spec, const RingElement& e) {
    if (spec.kind != RingSpec::Kind::Product) {
        return std::to_string(e.value);
    }
    std::string out = "(";
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        out += (i ? ", " : "") + to_string(spec.factors[i], e.factors.at(i));
    }
    return out + ")";
}

// ------------------------------------------------------------------ ideals

std::strong_ordering RIdeal::operator<=>(const RIdeal& other) const {
    if (auto c = gen <=> other.gen; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(factors.begin(), factors.end(), other.factors.begin(),
                                                  other.factors.end());
}

void check_ideal(const RingSpec& spec, const RIdeal& ideal) {
    switch (spec.kind) {
    case RingSpec::Kind::Integer:
        if (!ideal.factors.empty()) {
            shape_mismatch("product ideal", spec);
        }
        if (ideal.gen < 0) {
            throw ValidationError("ideal generator of Z must be nonnegative, got " + std::to_string(ideal.gen));
        }
        return;
    case RingSpec::Kind::Modular:
        if (!ideal.factors.empty()) {
            shape_mismatch("product ideal", spec);
        }
        if (ideal.gen < 1 || ideal.gen > spec.modulus || spec.modulus % ideal.gen != 0) {
            throw ValidationError("ideal generator of " + to_string(spec) + " must be a positive divisor of " +
                                  std::to_string(spec.modulus) + ", got " + std::to_string(ideal.gen));
        }
        return;
    case RingSpec::Kind::Product:
        if (ideal.factors.size() != spec.factors.size()) {
            shape_mismatch("ideal", spec);
        }
        for (std::size_t i = 0; i < spec.factors.size(); ++i) {
            check_ideal(spec.factors[i], ideal.factors[i]);
        }
        return;
    }
}

std::vector<std::int64_t> flatten(const RingSpec& spec, const RIdeal& ideal) {
    check_ideal(spec, ideal);
    std::vector<std::int64_t> out;
    auto walk = [&out](const RingSpec& s, const RIdeal& x, auto& self) -> void {
        if (s.kind == RingSpec::Kind::Product) {
            for (std::size_t i = 0; i < s.factors.size(); ++i) {
                self(s.factors[i], x.factors[i], self);
            }
            return;
        }
        out.push_back(x.gen);
    };
    walk(spec, ideal, walk);
    return out;
}

RIdeal unflatten_ideal(const RingSpec& spec, std::span<const std::int64_t> flat) {
    std::size_t pos = 0;
    auto build = [&](const RingSpec& s, auto& self) -> RIdeal {
        if (s.kind != RingSpec::Kind::Product) {
            if (pos >= flat.size()) {
                throw ValidationError("too few components for ring " + to_string(spec));
            }
            return RIdeal{flat[pos++], {}};
        }
        RIdeal out;
        for (const auto& f : s.factors) {
            out.factors.push_back(self(f, self));
        }
        return out;
    };
    RIdeal out = build(spec, build);
    if (pos != flat.size()) {
        throw ValidationError("too many components for ring " + to_string(spec));
    }
    check_ideal(spec, out);
    return out;
}

namespace {

// Applies `leaf(modulus, a, b)` to matching leaf generators (modulus 0 for Z).
template <class Leaf>
RIdeal combine(const RingSpec& spec, const RIdeal& a, const RIdeal& b, Leaf leaf) {
    const auto fa = flatten(spec, a);
    const auto fb = flatten(spec, b);
    const auto moduli = flat_moduli(spec);
    std::vector<std::int64_t> out(fa.size());
    for (std::size_t i = 0; i < fa.size(); ++i) {
        out[i] = leaf(moduli[i], fa[i], fb[i]);
    }
    return unflatten_ideal(spec, out);
}

} // namespace

RIdeal whole_ideal(const RingSpec& spec) {
    std::vector<std::int64_t> gens(flat_moduli(spec).size(), 1);
    return unflatten_ideal(spec, gens);
}

RIdeal zero_ideal(const RingSpec& spec) {
    // Z/n encodes {0} as n; Z encodes it as 0.
    return unflatten_ideal(spec, flat_moduli(spec));
}

RIdeal principal_ideal(const RingSpec& spec, const RingElement& generator) {
    const auto moduli = flat_moduli(spec);
    auto gens = flatten(spec, generator);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        gens[i] = moduli[i] == 0 ? std::gcd(gens[i], std::int64_t{0}) : std::gcd(gens[i], moduli[i]);
    }
    return unflatten_ideal(spec, gens);
}

RIdeal ideal_sum(const RingSpec& spec, const RIdeal& a, const RIdeal& b) {
    // gcd(g, 0) = g covers both Z and Z/n (where gen = n never occurs as 0).
    return combine(spec, a, b, [](std::int64_t, std::int64_t x, std::int64_t y) { return std::gcd(x, y); });
}

RIdeal ideal_intersect(const RingSpec& spec, const RIdeal& a, const RIdeal& b) {
    return combine(spec, a, b, [](std::int64_t, std::int64_t x, std::int64_t y) { return arith::checked_lcm(x, y); });
}

bool ideal_contains(const RingSpec& spec, const RIdeal& outer, const RIdeal& inner) {
    const auto fo = flatten(spec, outer);
    const auto fi = flatten(spec, inner);
    for (std::size_t i = 0; i < fo.size(); ++i) {
        // every g divides 0; fo[i] = 0 only contains 0
        if (fo[i] == 0 ? fi[i] != 0 : fi[i] % fo[i] != 0) {
            return false;
        }
    }
    return true;
}

bool ideal_member(const RingSpec& spec, const RIdeal& ideal, const RingElement& e) {
    const auto gens = flatten(spec, ideal);
    const auto vals = flatten(spec, e);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] == 0 ? vals[i] != 0 : vals[i] % gens[i] != 0) {
            return false;
        }
    }
    return true;
}

bool in_basic_open(const RingSpec& spec, const RIdeal& ideal, std::span<const RingElement> f_set) {
    return std::all_of(f_set.begin(), f_set.end(),
                       [&](const RingElement& e) { return ideal_member(spec, ideal, e); });
}

std::vector<RIdeal> enumerate_ideals(const RingSpec& spec) {
    if (!is_finite(spec)) {
        throw NotEnumerableError("ring " + to_string(spec) + " has infinitely many ideals; not enumerable");
    }
    const auto moduli = flat_moduli(spec);
    std::vector<std::vector<std::int64_t>> choices;
    for (std::int64_t n : moduli) {
        choices.push_back(arith::divisors(n));
    }
    std::vector<RIdeal> out;
    std::vector<std::size_t> idx(moduli.size(), 0);
    std::vector<std::int64_t> gens(moduli.size());
    bool more = true;
    while (more) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            gens[i] = choices[i][idx[i]];
        }
        out.push_back(unflatten_ideal(spec, gens));
        more = false;
        for (std::size_t i = idx.size(); i-- > 0;) {
            if (++idx[i] < choices[i].size()) {
                more = true;
                break;
            }
            idx[i] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const RingSpec& spec, const RIdeal& ideal) {
    switch (spec.kind) {
    case RingSpec::Kind::Integer:
        if (ideal.gen == 0) {
            return "0";
        }
        return ideal.gen == 1 ? "Z" : std::to_string(ideal.gen) + "Z";
    case RingSpec::Kind::Modular: {
        const std::string ring = "Z/" + std::to_string(spec.modulus);
        if (ideal.gen == spec.modulus) {
            return "0";
        }
        return ideal.gen == 1 ? ring : std::to_string(ideal.gen) + ring;
    }
    case RingSpec::Kind::Product: {
        std::string out = "(";
        for (std::size_t i = 0; i < spec.factors.size(); ++i) {
            out += (i ? ", " : "") + to_string(spec.factors[i], ideal.factors.at(i));
        }
        return out + ")";
    }
    }
    return "?";
}

} // namespace idlat
