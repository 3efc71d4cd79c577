#pragma once

/**
 * @file ring_ideals.hpp
 * @brief Coefficient rings and their ideal lattices.
 *
 * Supported rings are Z, Z/n and finite nestings of direct products of
 * those. Every ring is commutative with identity, so an ideal is determined
 * by a canonical generator per factor:
 *
 *   - Z:    the unique nonnegative generator g; g = 0 is the zero ideal.
 *   - Z/n:  the unique positive divisor d of n; d = n is the zero ideal.
 *
 * With this encoding sum is gcd and intersection is lcm on every factor.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace idlat {

struct RingSpec {
    enum class Kind { Integer, Modular, Product };

    Kind kind = Kind::Integer;
    std::int64_t modulus = 0;       // Modular only
    std::vector<RingSpec> factors;  // Product only

    static RingSpec integers();
    static RingSpec modular(std::int64_t n);
    static RingSpec product(std::vector<RingSpec> factors);

    bool operator==(const RingSpec&) const = default;
};

inline constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;
inline constexpr int kMaxProductDepth = 4;

// Throws ValidationError unless modulus >= 2 (and <= kMaxModulus), every
// product has at least one factor and nesting depth is at most 4.
void validate_ring(const RingSpec& spec);

bool is_finite(const RingSpec& spec);
// Number of elements; NotEnumerableError for infinite rings, BudgetError on
// overflow.
std::uint64_t ring_order(const RingSpec& spec);
// Moduli of the leaf factors in depth-first order; 0 stands for Z.
std::vector<std::int64_t> flat_moduli(const RingSpec& spec);
std::string to_string(const RingSpec& spec);

// An element, shaped like its RingSpec: `value` for Z and Z/n, `factors`
// for products. Modular values are kept in [0, n).
struct RingElement {
    std::int64_t value = 0;
    std::vector<RingElement> factors;

    static RingElement scalar(std::int64_t v) { return RingElement{v, {}}; }
    static RingElement tuple(std::vector<RingElement> parts) { return RingElement{0, std::move(parts)}; }

    bool operator==(const RingElement&) const = default;
};

// Reduces modular values and checks the shape; throws ValidationError.
RingElement normalize(const RingSpec& spec, RingElement e);
RingElement ring_zero(const RingSpec& spec);
RingElement ring_one(const RingSpec& spec);
bool is_zero(const RingSpec& spec, const RingElement& e);
std::vector<std::int64_t> flatten(const RingSpec& spec, const RingElement& e);
RingElement unflatten_element(const RingSpec& spec, std::span<const std::int64_t> flat);
// Every element of a finite ring, in lexicographic order of flat residues.
std::vector<RingElement> ring_elements(const RingSpec& spec);
std::string to_string(const RingSpec& spec, const RingElement& e);

struct RIdeal {
    std::int64_t gen = 0;
    std::vector<RIdeal> factors;

    bool operator==(const RIdeal&) const = default;
    std::strong_ordering operator<=>(const RIdeal& other) const;
};

// Throws ValidationError if `ideal` does not match the shape of `spec` or
// is not in canonical form.
void check_ideal(const RingSpec& spec, const RIdeal& ideal);

RIdeal whole_ideal(const RingSpec& spec);
RIdeal zero_ideal(const RingSpec& spec);
RIdeal principal_ideal(const RingSpec& spec, const RingElement& generator);

RIdeal ideal_sum(const RingSpec& spec, const RIdeal& a, const RIdeal& b);
RIdeal ideal_intersect(const RingSpec& spec, const RIdeal& a, const RIdeal& b);
// inner ⊆ outer
bool ideal_contains(const RingSpec& spec, const RIdeal& outer, const RIdeal& inner);
bool ideal_member(const RingSpec& spec, const RIdeal& ideal, const RingElement& e);
// Membership of `ideal` in the basic open set Z(F) = {I : F ⊆ I}.
bool in_basic_open(const RingSpec& spec, const RIdeal& ideal, std::span<const RingElement> f_set);

// All ideals of a finite ring, sorted, without duplicates.
std::vector<RIdeal> enumerate_ideals(const RingSpec& spec);

std::vector<std::int64_t> flatten(const RingSpec& spec, const RIdeal& ideal);
RIdeal unflatten_ideal(const RingSpec& spec, std::span<const std::int64_t> flat);

// "6Z", "Z", "0" for Z; "2Z/12", "Z/12", "0" for Z/n; "(a, b)" for products.
std::string to_string(const RingSpec& spec, const RIdeal& ideal);

namespace arith {

// Overflow-checked helpers on the nonnegative generators; throw BudgetError.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t mod(std::int64_t a, std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

} // namespace arith

} // namespace idlat
