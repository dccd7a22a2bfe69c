#pragma once

#include <cstdint>

namespace rmdec {

// Operation counts for one decode.  A projection is one coset-wise
// combination pass, an aggregation is one vote folded into the estimate,
// an FHT is one first-order ML decode.
struct BudgetReport {
    std::uint64_t fht_calls = 0;
    std::uint64_t projections = 0;
    std::uint64_t aggregations = 0;

    void merge(const BudgetReport& other) {
        fht_calls += other.fht_calls;
        projections += other.projections;
        aggregations += other.aggregations;
    }
    bool operator==(const BudgetReport&) const = default;
};

}  // namespace rmdec
