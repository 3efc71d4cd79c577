#pragma once

/**
 * @file steinberg.hpp
 * @brief The Steinberg algebra A_R(G) of a finite discrete groupoid.
 *
 * A_R(G) is the free R-module on the morphisms with convolution
 *
 *     (f * g)(a) = sum over b with r(b) = r(a) of f(b) g(b^{-1} a),
 *
 * so that delta_g * delta_h = delta_{gh} when gh is defined and 0 otherwise.
 * Over a product ring the algebra splits into one copy per leaf factor;
 * elements and ideals are stored per factor ("component"), each component
 * being a coordinate vector indexed by morphism.
 */

#include "idlat/groupoid.hpp"
#include "idlat/howell.hpp"
#include "idlat/lpa_ideals.hpp"
#include "idlat/pi_function.hpp"
#include "idlat/ring_ideals.hpp"

#include <memory>
#include <string>
#include <vector>

namespace idlat {

class SteinbergAlgebra;
using AlgebraPtr = std::shared_ptr<const SteinbergAlgebra>;

class SteinbergAlgebra {
public:
    static AlgebraPtr make(FiniteGroupoid g, RingSpec ring);

    const FiniteGroupoid& groupoid() const { return g_; }
    const RingSpec& ring() const { return ring_; }
    // Leaf moduli of the ring; 0 for a Z factor.
    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    std::size_t components() const { return moduli_.size(); }
    std::size_t dim() const { return g_.morphism_count(); }
    bool finite() const { return is_finite(ring_); }
    // The invariant-set lattice of the groupoid, built on first use.
    CarrierPtr carrier() const;

private:
    SteinbergAlgebra(FiniteGroupoid g, RingSpec ring);
    FiniteGroupoid g_;
    RingSpec ring_;
    std::vector<std::int64_t> moduli_;
    mutable CarrierPtr carrier_;
};

struct AlgebraElement {
    AlgebraPtr alg;
    std::vector<Vec> coeffs;  // coeffs[component][morphism]

    static AlgebraElement zero(const AlgebraPtr& alg);
    // r * delta_m
    static AlgebraElement monomial(const AlgebraPtr& alg, int m, const RingElement& r);
    static AlgebraElement from_map(const AlgebraPtr& alg, const std::vector<std::pair<int, RingElement>>& entries);

    RingElement at(int m) const;
    std::vector<int> support() const;
    bool is_zero() const;
    // f restricted to the unit space.
    AlgebraElement restrict_to_units() const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const RingElement& r) const;

    bool operator==(const AlgebraElement& o) const { return coeffs == o.coeffs; }
};

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);

// 1_B; throws ValidationError naming two morphisms of B that share a
// source or a range.
AlgebraElement indicator(const AlgebraPtr& alg, const std::vector<int>& b);

// A two-sided ideal over a finite ring: one Howell-form submodule per
// component, closure under convolution verified on construction.
class AlgebraIdeal {
public:
    // Throws ValidationError if the submodules are not closed under left
    // and right multiplication by every delta_g.
    static AlgebraIdeal verified(const AlgebraPtr& alg, std::vector<Submodule> comps);
    static AlgebraIdeal zero(const AlgebraPtr& alg);
    static AlgebraIdeal whole(const AlgebraPtr& alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Submodule>& components() const { return comps_; }

    bool contains(const AlgebraElement& f) const;
    bool contains(const AlgebraIdeal& other) const;
    bool is_zero() const;
    std::uint64_t order() const;
    // Every element, for small ideals.
    std::vector<AlgebraElement> elements(std::uint64_t limit = 1u << 16) const;

    AlgebraIdeal operator+(const AlgebraIdeal& o) const;
    AlgebraIdeal intersect(const AlgebraIdeal& o) const;

    bool operator==(const AlgebraIdeal& o) const { return comps_ == o.comps_; }
    auto operator<=>(const AlgebraIdeal& o) const { return comps_ <=> o.comps_; }

private:
    AlgebraPtr alg_;
    std::vector<Submodule> comps_;
};

// Ideal spanned by d * e_g for d in the given per-component generator and
// every morphism g in `support`; closure is verified.
AlgebraIdeal ideal_from_coordinates(const AlgebraPtr& alg, const std::vector<std::vector<std::int64_t>>& gens);

AlgebraIdeal ideal_generate(const AlgebraPtr& alg, const std::vector<AlgebraElement>& gens);

inline constexpr std::size_t kMaxEnumerationMorphisms = 64;
inline constexpr std::uint64_t kMaxEnumerationRing = 16;

enum class EnumerationStrategy {
    // Generators drawn from R[G_u^u] at one unit u per orbit; every principal
    // ideal is generated by such an element.
    IsotropyReduced,
    // Generators are literally all elements of the algebra; tiny inputs only.
    Exhaustive,
};

// All two-sided ideals, sorted and duplicate-free: principal ideals of the
// candidate generators, closed under pairwise sums.
std::vector<AlgebraIdeal> enumerate_all_ideals(const AlgebraPtr& alg,
                                               EnumerationStrategy strategy = EnumerationStrategy::IsotropyReduced);

bool is_basic_ideal(const AlgebraIdeal& i);

// I_U: functions supported on the morphisms with source in U.
AlgebraIdeal ideal_from_open(const AlgebraPtr& alg, const UnitSet& u);

struct ExactSequenceReport {
    bool i_injective = false;
    bool q_surjective = false;
    bool ker_equals_image = false;
    bool image_equals_IU = false;
    bool homomorphisms = false;
    std::uint64_t ideal_order = 0;
    std::vector<std::string> failures;

    bool exact() const { return failures.empty(); }
};

// 0 -> A_R(G_U) -i_U-> A_R(G) -q_U-> A_R(G_D) -> 0 with D the complement.
ExactSequenceReport check_exact_sequence(const AlgebraPtr& alg, const UnitSet& u);

// True iff I has a nonzero element supported on the unit space.
bool meets_unit_space(const AlgebraIdeal& i);

// Kernel of delta_g |-> E_{r(g), s(g)} acting on the free module over the units.
AlgebraIdeal unit_rep_kernel(const AlgebraPtr& alg);

// Gamma(pi) = span { r f : r in pi(U), supp f inside s^{-1}(U) }. Refuses
// groupoids that are not strongly effective.
AlgebraIdeal realize_gamma(const AlgebraPtr& alg, const PiFunction& pi);

// Coordinatewise description of Gamma(pi): f lies in Gamma(pi) iff
// f(g) ∈ result[g] for every morphism g. Works over Z as well.
std::vector<RIdeal> gamma_coefficients(const FiniteGroupoid& g, const PiFunction& pi);

// pi(U) = { r : r 1_B ∈ I for every B ⊆ U }.
PiFunction extract_pi(const AlgebraPtr& alg, const AlgebraIdeal& i);

std::string to_string(const AlgebraElement& f);

} // namespace idlat
