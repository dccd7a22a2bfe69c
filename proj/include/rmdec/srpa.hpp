#pragma once

#include <optional>
#include <random>
#include <vector>

#include "rmdec/budget.hpp"
#include "rmdec/crc3.hpp"
#include "rmdec/rmcode.hpp"
#include "rmdec/rpa.hpp"

namespace rmdec {

// Retained projections for one sparse decoder: t iterations, q distinct
// subspace generators per iteration.
struct SparsePlan {
    int m = 0;
    int t = 0;
    int q = 0;
    std::vector<std::vector<IndexPoint>> iters;  // iters[i], ascending, size q
};

// S_i drawn uniformly without replacement from the 2^m - 1 generators,
// independently per iteration.
SparsePlan sample_plan(int m, int q, int t, std::mt19937_64& rng);

// Convenience: the full-set plan (no sparsification).
SparsePlan full_plan(int m, int t);

// (d_i, t_i, q_i) for the sub-code RM(m-i, r-i).
struct LevelParams {
    int decoders = 1;
    int iters = 1;
    int projections = 1;
};

enum class Selection { MostLikely, CrcThenMostLikely };

struct SrpaConfig {
    int k = 2;                        // top-level decoder count, = levels[0].decoders
    std::vector<LevelParams> levels;  // one entry per recursion level 0..r-2
    Selection selection = Selection::MostLikely;
    bool soft_correlation = false;    // select on <Lhat_i, L> instead of hard candidates
    // When set, decoder i reuses fixed_plans[i] instead of sampling a fresh
    // top-level plan per decode (inner levels always resample).
    std::optional<std::vector<SparsePlan>> fixed_plans;
};

// Default parameters for RM(m,r): t_i = floor((m-i)/2), q_i = 2^(m-i)/8
// (capped into [1, 2^(m-i)-1]), d_0 = k, d_i = 4 below the top level.
std::vector<LevelParams> default_levels(int m, int r, int k);

// One sparse decoder: the RPA loop restricted to plan.iters[i] in iteration
// i, aggregation normalized by 1/q, and exactly t iterations (no fixed-point
// stop).  For r >= 3 each projection is decoded by levels[level+1].decoders
// inner sparse decoders combined by most-likely selection.
CodewordBits srpa_single_decode(const RmCode& code, const LlrVector& llr, const SparsePlan& plan,
                                const SrpaConfig& cfg, BudgetReport& budget,
                                std::mt19937_64& rng);

struct MultiDecodeResult {
    CodewordBits codeword;
    int chosen_index = 0;
};

// k-SRPA: k independent sparse decoders, final candidate chosen by
// correlation with the channel LLRs, optionally screened by CRC-3 first
// (falling back to plain most-likely if no candidate passes).
MultiDecodeResult srpa_multi_decode(const RmCode& code, const LlrVector& llr,
                                    const SrpaConfig& cfg, BudgetReport& budget,
                                    std::mt19937_64& rng);

// Closed-form operation counts.  cfg == nullptr means full RPA without early
// stopping (d_i = 1, q_i = 2^(m-i)-1, t_i = floor((m-i)/2)).  Supports
// r in {2, 3}.
BudgetReport budget_formula(const RmCode& code, const SrpaConfig* cfg);

// Correlation sum_z (1 - 2c(z)) * L(z) of a hard candidate with the LLRs.
double correlation(const CodewordBits& c, const LlrVector& llr);

}  // namespace rmdec
