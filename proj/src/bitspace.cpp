#include "rmdec/bitspace.hpp"

#include <stdexcept>

namespace rmdec {

std::vector<Subspace1D> all_subspaces(int m) {
    if (m < 1) throw std::invalid_argument("all_subspaces: dimension must be >= 1");
    const IndexPoint n = IndexPoint{1} << m;
    std::vector<Subspace1D> out;
    out.reserve(n - 1);
    for (IndexPoint g = 1; g < n; ++g) out.push_back({g, m});
    return out;
}

CosetTable coset_table(const Subspace1D& b) {
    if (b.generator == 0) throw std::invalid_argument("coset_table: zero generator");
    const IndexPoint n = IndexPoint{1} << b.m;
    if (b.generator >= n) throw std::invalid_argument("coset_table: generator out of range");

    CosetTable t;
    t.subspace = b;
    t.cosets.resize(n / 2);
    t.ordinal_of.resize(n);
    for (IndexPoint z = 0; z < n; ++z) {
        const std::uint32_t ord = coset_of_unchecked(b, z);
        t.ordinal_of[z] = ord;
        const IndexPoint partner = z ^ b.generator;
        t.cosets[ord] = {std::min(z, partner), std::max(z, partner)};
    }
    return t;
}

std::uint32_t coset_of(const Subspace1D& b, IndexPoint z) {
    if (z >= (IndexPoint{1} << b.m)) throw std::out_of_range("coset_of: index out of range");
    return coset_of_unchecked(b, z);
}

}  // namespace rmdec
