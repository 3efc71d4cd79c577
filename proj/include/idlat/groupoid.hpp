#pragma once

/**
 * @file groupoid.hpp
 * @brief Finite discrete groupoids and the combinatorics of their unit space.
 *
 * Conventions: a morphism g goes from src(g) to rng(g), and the composite
 * gh is defined exactly when src(g) = rng(h); then src(gh) = src(h) and
 * rng(gh) = rng(g). Units are morphisms too and are named by their unit.
 *
 * In the discrete topology every subset is compact open, so the invariant
 * open subsets of the unit space are exactly the unions of orbits.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idlat {

struct MorphismSpec {
    std::string name;
    std::string src;
    std::string rng;
    std::string inv;
};

struct CompositionEntry {
    std::string first;   // g
    std::string second;  // h
    std::string result;  // gh
};

// Groupoid as written in a document. Unit morphisms may be left implicit
// (`units` alone suffices) and so may compositions with a unit.
struct GroupoidTable {
    std::vector<std::string> units;
    std::vector<MorphismSpec> morphisms;
    std::vector<CompositionEntry> compose;
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

inline constexpr std::size_t kMaxMorphisms = 4096;
inline constexpr std::size_t kMaxOrbits = 20;

// Adds missing unit morphisms and unit compositions; leaves everything else
// untouched so that validate() can report it.
GroupoidTable complete_table(GroupoidTable table);

// Checks the category and inverse axioms on complete_table(table). Every
// violation is reported with a witness.
ValidationReport validate(const GroupoidTable& table);

class UnitSet;

class FiniteGroupoid {
public:
    // Throws ValidationError carrying the report if validate() fails, and
    // BudgetError above kMaxMorphisms.
    static FiniteGroupoid from_table(const GroupoidTable& table);

    std::size_t morphism_count() const { return names_.size(); }
    std::size_t unit_count() const { return units_.size(); }

    const std::string& name(int m) const { return names_.at(static_cast<std::size_t>(m)); }
    const std::string& unit_name(int u) const { return name(units_.at(static_cast<std::size_t>(u))); }
    int src(int m) const { return src_[static_cast<std::size_t>(m)]; }
    int rng(int m) const { return rng_[static_cast<std::size_t>(m)]; }
    int inv(int m) const { return inv_[static_cast<std::size_t>(m)]; }
    // -1 when src(a) != rng(b).
    int compose(int a, int b) const { return comp_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)]; }
    int unit_morphism(int u) const { return units_.at(static_cast<std::size_t>(u)); }
    // Unit index of a unit morphism, or -1.
    int as_unit(int m) const { return unit_of_[static_cast<std::size_t>(m)]; }

    std::optional<int> find_morphism(const std::string& name) const;
    std::optional<int> find_unit(const std::string& name) const;

    // Full table with every unit morphism and composition listed, morphisms
    // in index order.
    GroupoidTable to_table() const;

    bool operator==(const FiniteGroupoid&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<int> units_;
    std::vector<int> unit_of_;
    std::vector<int> src_, rng_, inv_;
    std::vector<int> comp_;
};

class UnitSet {
public:
    UnitSet() = default;
    explicit UnitSet(std::size_t unit_count) : bits_(unit_count, false) {}
    // Throws ValidationError on a name that is not a unit of g.
    static UnitSet from_names(const FiniteGroupoid& g, const std::vector<std::string>& names);
    static UnitSet all(std::size_t unit_count);

    std::size_t universe() const { return bits_.size(); }
    bool contains(int u) const { return bits_.at(static_cast<std::size_t>(u)); }
    void insert(int u) { bits_.at(static_cast<std::size_t>(u)) = true; }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::vector<int> members() const;
    std::vector<std::string> names(const FiniteGroupoid& g) const;

    bool subset_of(const UnitSet& other) const;
    UnitSet operator|(const UnitSet& other) const;
    UnitSet operator&(const UnitSet& other) const;
    UnitSet complement() const;

    bool operator==(const UnitSet&) const = default;
    auto operator<=>(const UnitSet& other) const { return bits_ <=> other.bits_; }

private:
    std::vector<bool> bits_;
};

// Orbits as sorted unit-index lists, ordered by their smallest unit.
std::vector<std::vector<int>> orbits(const FiniteGroupoid& g);
// orbit_index[u] = position of u's orbit in orbits(g).
std::vector<int> orbit_index(const FiniteGroupoid& g);

UnitSet invariant_closure(const FiniteGroupoid& g, const UnitSet& v);
bool is_invariant(const FiniteGroupoid& g, const UnitSet& v);
// The union of the orbits selected by `mask` (bit i = orbit i).
UnitSet orbit_union(const FiniteGroupoid& g, std::uint64_t mask);
// Bitmask of the orbits contained in an invariant set.
std::uint64_t orbit_mask(const FiniteGroupoid& g, const UnitSet& v);

// All unions of orbits, ordered by orbit bitmask; BudgetError above
// kMaxOrbits orbits.
std::vector<UnitSet> invariant_open_sets(const FiniteGroupoid& g);

std::vector<int> isotropy(const FiniteGroupoid& g);
bool is_effective(const FiniteGroupoid& g);
// Loops over every nonempty invariant V and tests restrict(g, V) for
// effectiveness.
bool is_strongly_effective(const FiniteGroupoid& g);

// G|_V; throws ValidationError naming a morphism leaving V if V is not
// invariant.
FiniteGroupoid restrict(const FiniteGroupoid& g, const UnitSet& v);

// Morphisms with source in v.
std::vector<int> source_fibre(const FiniteGroupoid& g, const UnitSet& v);

} // namespace idlat
