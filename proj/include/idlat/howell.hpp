#pragma once

/**
 * @file howell.hpp
 * @brief Submodules of (Z/n)^m in Howell normal form.
 *
 * A submodule is stored as its Howell basis: rows in echelon form whose
 * pivots are positive divisors of n, entries above each pivot reduced into
 * [0, pivot), and the Howell property (a vector of the span whose first k
 * coordinates vanish is a combination of the rows with pivot column >= k).
 * Two submodules are equal exactly when their bases are equal, which makes
 * membership and equality purely syntactic.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace idlat {

using Vec = std::vector<std::int64_t>;

class Submodule {
public:
    Submodule() = default;
    Submodule(std::int64_t modulus, std::size_t dim);

    static Submodule zero(std::int64_t modulus, std::size_t dim) { return Submodule(modulus, dim); }
    static Submodule full(std::int64_t modulus, std::size_t dim);
    static Submodule span(std::int64_t modulus, std::size_t dim, std::span<const Vec> generators);

    std::int64_t modulus() const { return n_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& rows() const { return rows_; }
    // Pivot column of each row, parallel to rows().
    std::vector<std::size_t> pivots() const;

    bool is_zero() const { return rows_.empty(); }
    bool contains(std::span<const std::int64_t> v) const;
    bool contains(const Submodule& other) const;
    // Number of elements; BudgetError if it does not fit in 64 bits.
    std::uint64_t order() const;

    // Adds a vector to the span; returns true if the module grew.
    bool insert(std::span<const std::int64_t> v);
    Submodule operator+(const Submodule& other) const;
    Submodule intersect(const Submodule& other) const;
    // Every element, for small modules only (BudgetError above `limit`).
    std::vector<Vec> elements(std::uint64_t limit = 1u << 16) const;

    bool operator==(const Submodule&) const = default;
    std::strong_ordering operator<=>(const Submodule& other) const;

private:
    Vec reduce(Vec v) const;
    void back_reduce();
    std::size_t row_at(std::size_t col) const;

    std::int64_t n_ = 2;
    std::size_t dim_ = 0;
    std::vector<Vec> rows_;
};

// Linear map (Z/n)^k -> (Z/n)^m given by the images of the standard basis.
struct LinearMap {
    std::int64_t modulus = 2;
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::vector<Vec> images;  // images[i] = image of e_i

    Vec apply(std::span<const std::int64_t> v) const;
    Submodule kernel() const;
    Submodule image() const;
};

namespace modarith {

std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t n);
// (g, s, t) with g = gcd(a, b) = s*a + t*b.
struct Xgcd {
    std::int64_t g, s, t;
};
Xgcd xgcd(std::int64_t a, std::int64_t b);
// A unit u mod n with u*a = gcd(a, n) (mod n).
std::int64_t normalizing_unit(std::int64_t a, std::int64_t n);

} // namespace modarith

} // namespace idlat
