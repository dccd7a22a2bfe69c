#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rmdec {

// Coordinate index z = (z_1,...,z_m) in F_2^m, packed with z_1 as the least
// significant bit.
using IndexPoint = std::uint32_t;

// One-dimensional subspace {0, generator} of F_2^m.
struct Subspace1D {
    IndexPoint generator = 0;
    int m = 0;
};

// All 2^m - 1 one-dimensional subspaces, in increasing generator order.
std::vector<Subspace1D> all_subspaces(int m);

// Cosets of a Subspace1D: 2^(m-1) disjoint pairs (z, z^generator) covering
// [0, 2^m), ordered by representative (the smaller member of each pair).
struct CosetTable {
    Subspace1D subspace;
    std::vector<std::pair<IndexPoint, IndexPoint>> cosets;
    std::vector<std::uint32_t> ordinal_of;  // index -> coset ordinal
};

CosetTable coset_table(const Subspace1D& b);

// Ordinal of the coset containing z, in the table ordering, without
// materializing the table.  The representative of z's coset is whichever of
// z, z^g has the generator's top bit clear; deleting that bit position maps
// representatives monotonically onto [0, 2^(m-1)).
inline std::uint32_t coset_of_unchecked(const Subspace1D& b, IndexPoint z) {
    const int h = 31 - __builtin_clz(b.generator);  // highest set bit of g
    IndexPoint rep = (z >> h) & 1u ? z ^ b.generator : z;
    const IndexPoint low = (IndexPoint{1} << h) - 1;
    return ((rep >> 1) & ~low) | (rep & low);
}

std::uint32_t coset_of(const Subspace1D& b, IndexPoint z);

// Inverse of coset_of_unchecked restricted to representatives: the
// representative of coset `ord` under subspace b.
inline IndexPoint coset_rep(const Subspace1D& b, std::uint32_t ord) {
    const int h = 31 - __builtin_clz(b.generator);
    const IndexPoint low = (IndexPoint{1} << h) - 1;
    return ((ord & ~low) << 1) | (ord & low);
}

}  // namespace rmdec
