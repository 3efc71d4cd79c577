#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace idlat {

// A subset of a small ground set (graph vertices or groupoid orbits),
// bit i standing for atom i.
using AtomSet = std::uint64_t;

inline constexpr std::size_t kMaxAtoms = 64;

inline bool atom_in(AtomSet s, std::size_t i) { return (s >> i) & 1u; }
inline AtomSet atom_bit(std::size_t i) { return AtomSet{1} << i; }
inline bool atoms_subset(AtomSet a, AtomSet b) { return (a & ~b) == 0; }
inline int atom_count(AtomSet s) { return std::popcount(s); }

inline std::vector<std::size_t> atoms_of(AtomSet s) {
    std::vector<std::size_t> out;
    while (s != 0) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

// Order by size, then by bit pattern.
inline bool atoms_less(AtomSet a, AtomSet b) {
    const int ca = atom_count(a), cb = atom_count(b);
    return ca != cb ? ca < cb : a < b;
}

} // namespace idlat
