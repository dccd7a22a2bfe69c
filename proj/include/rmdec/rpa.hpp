#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "rmdec/bitspace.hpp"
#include "rmdec/budget.hpp"
#include "rmdec/channel.hpp"
#include "rmdec/fht.hpp"
#include "rmdec/rmcode.hpp"

namespace rmdec {

struct RpaConfig {
    double epsilon = 0.05;    // fixed-point tolerance, per-entry absolute
    bool early_stop = true;   // false: always run the full floor(m/2) rounds
    bool parallel = false;    // OpenMP over the per-subspace decodes
};

// LLR-domain XOR of two bits, the box-plus operation
// ln((1 + e^(a+b)) / (e^a + e^b)), in the overflow-safe identity
// sign(a)sign(b)min(|a|,|b|) + log1p(e^-(|a|+|b|)) - log1p(e^-||a|-|b||).
inline double boxplus(double a, double b) {
    const double sgn = ((a < 0.0) != (b < 0.0)) ? -1.0 : 1.0;
    return sgn * std::min(std::abs(a), std::abs(b)) + std::log1p(std::exp(-std::abs(a + b))) -
           std::log1p(std::exp(-std::abs(a - b)));
}

// XOR of the two coset members per coset, coset-ordered; length n/2.
CodewordBits project_hard(const CodewordBits& y, const Subspace1D& b);

// Box-plus of the two coset members per coset; length n/2.
LlrVector project_soft(const LlrVector& llr, const Subspace1D& b);

// Voting step: Lhat(z) = (1/divisor) * sum over votes of
// (1 - 2*yhat_i([z + B_i])) * L(z xor z_i).  Full RPA passes divisor = n
// with n-1 votes; the sparse variant passes divisor = q = votes.size().
LlrVector aggregate(const LlrVector& llr,
                    const std::vector<std::pair<Subspace1D, CodewordBits>>& votes,
                    double divisor);

// Hard decision: bit 1 iff LLR < 0.
CodewordBits hard_decision(const LlrVector& llr);

// Full recursive projection-aggregation decoding of RM(m,r), r >= 1.
// Recurses RM(m,r) -> RM(m-1,r-1) down to the first-order FHT base case,
// iterating each level up to floor(m'/2) times with the epsilon fixed-point
// test (unless cfg.early_stop is off).
CodewordBits rpa_decode(const RmCode& code, const LlrVector& llr, const RpaConfig& cfg,
                        BudgetReport& budget);

// Recursion worker on raw (m, r) parameters; exposed for the sparse decoder.
CodewordBits rpa_decode_raw(int m, int r, LlrVector llr, const RpaConfig& cfg,
                            BudgetReport& budget);

}  // namespace rmdec
