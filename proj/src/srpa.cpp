#include "rmdec/srpa.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rmdec {

SparsePlan sample_plan(int m, int q, int t, std::mt19937_64& rng) {
    const int total = (1 << m) - 1;
    if (q < 1 || q > total) throw std::invalid_argument("sample_plan: q out of range");
    if (t < 1) throw std::invalid_argument("sample_plan: t must be >= 1");

    SparsePlan plan{m, t, q, {}};
    plan.iters.resize(t);
    std::vector<IndexPoint> generators(total);
    std::iota(generators.begin(), generators.end(), IndexPoint{1});
    for (int i = 0; i < t; ++i) {
        plan.iters[i].reserve(q);
        std::sample(generators.begin(), generators.end(), std::back_inserter(plan.iters[i]),
                    q, rng);
    }
    return plan;
}

SparsePlan full_plan(int m, int t) {
    const int total = (1 << m) - 1;
    SparsePlan plan{m, t, total, {}};
    std::vector<IndexPoint> generators(total);
    std::iota(generators.begin(), generators.end(), IndexPoint{1});
    plan.iters.assign(t, generators);
    return plan;
}

std::vector<LevelParams> default_levels(int m, int r, int k) {
    std::vector<LevelParams> levels;
    for (int i = 0; i + 2 <= r; ++i) {
        const int mi = m - i;
        LevelParams lp;
        lp.decoders = (i == 0) ? k : 4;
        lp.iters = mi / 2;
        lp.projections = std::clamp(1 << (mi - 3), 1, (1 << mi) - 1);
        levels.push_back(lp);
    }
    return levels;
}

double correlation(const CodewordBits& c, const LlrVector& llr) {
    double sum = 0.0;
    for (std::size_t z = 0; z < c.size(); ++z) sum += c[z] ? -llr[z] : llr[z];
    return sum;
}

namespace {

CodewordBits multi_rec(int m, int r, const LlrVector& llr,
                       const std::vector<LevelParams>& levels, std::size_t level,
                       BudgetReport& budget, std::mt19937_64& rng);

// One sparse decoder at (m, r).  Runs exactly plan.t iterations; iteration i
// projects onto plan.iters[i] only and aggregates with 1/q normalization.
CodewordBits single_rec(int m, int r, LlrVector llr, const SparsePlan& plan,
                        const std::vector<LevelParams>& levels, std::size_t level,
                        BudgetReport& budget, std::mt19937_64& rng,
                        LlrVector* final_llr) {
    const std::size_t n = std::size_t{1} << m;
    std::vector<std::pair<Subspace1D, CodewordBits>> votes;
    for (int iter = 0; iter < plan.t; ++iter) {
        votes.clear();
        for (IndexPoint g : plan.iters[iter]) {
            const Subspace1D b{g, m};
            LlrVector proj = project_soft(llr, b);
            ++budget.projections;
            CodewordBits yhat;
            if (r - 1 == 1) {
                ++budget.fht_calls;
                yhat = decode_first_order_raw(m - 1, std::span<const double>(proj));
            } else {
                yhat = multi_rec(m - 1, r - 1, proj, levels, level + 1, budget, rng);
            }
            votes.emplace_back(b, std::move(yhat));
        }
        llr = aggregate(llr, votes, static_cast<double>(plan.q));
        budget.aggregations += votes.size();
    }
    if (final_llr) *final_llr = llr;
    return hard_decision(llr);
}

// Inner multi-decoder: levels[level].decoders fresh sparse decoders, output
// chosen by most-likely selection (CRC is only available at the top level).
CodewordBits multi_rec(int m, int r, const LlrVector& llr,
                       const std::vector<LevelParams>& levels, std::size_t level,
                       BudgetReport& budget, std::mt19937_64& rng) {
    if (level >= levels.size()) throw std::invalid_argument("srpa: missing level parameters");
    const LevelParams& lp = levels[level];
    CodewordBits best;
    double best_corr = 0.0;
    for (int d = 0; d < lp.decoders; ++d) {
        SparsePlan plan = sample_plan(m, lp.projections, lp.iters, rng);
        CodewordBits cand = single_rec(m, r, llr, plan, levels, level, budget, rng, nullptr);
        const double corr = correlation(cand, llr);
        if (d == 0 || corr > best_corr) {
            best_corr = corr;
            best = std::move(cand);
        }
    }
    return best;
}

}  // namespace

CodewordBits srpa_single_decode(const RmCode& code, const LlrVector& llr, const SparsePlan& plan,
                                const SrpaConfig& cfg, BudgetReport& budget,
                                std::mt19937_64& rng) {
    if (code.r < 2) throw std::invalid_argument("srpa: code order must be >= 2");
    if (plan.m != code.m) throw std::invalid_argument("srpa: plan dimension mismatch");
    const auto levels = cfg.levels.empty() ? default_levels(code.m, code.r, cfg.k) : cfg.levels;
    return single_rec(code.m, code.r, llr, plan, levels, 0, budget, rng, nullptr);
}

MultiDecodeResult srpa_multi_decode(const RmCode& code, const LlrVector& llr,
                                    const SrpaConfig& cfg, BudgetReport& budget,
                                    std::mt19937_64& rng) {
    if (cfg.k < 1) throw std::invalid_argument("srpa_multi_decode: k must be >= 1");
    if (code.r < 2) throw std::invalid_argument("srpa_multi_decode: code order must be >= 2");
    const auto levels = cfg.levels.empty() ? default_levels(code.m, code.r, cfg.k) : cfg.levels;
    if (cfg.fixed_plans && static_cast<int>(cfg.fixed_plans->size()) != cfg.k)
        throw std::invalid_argument("srpa_multi_decode: fixed_plans size must equal k");

    struct Candidate {
        CodewordBits bits;
        LlrVector soft;
        bool crc_ok = false;
    };
    std::vector<Candidate> cands(cfg.k);

    for (int i = 0; i < cfg.k; ++i) {
        // Dedicated substream per decoder so plans are independent.
        std::mt19937_64 stream(rng());
        SparsePlan plan = cfg.fixed_plans
                              ? (*cfg.fixed_plans)[i]
                              : sample_plan(code.m, levels[0].projections, levels[0].iters, stream);
        cands[i].bits = single_rec(code.m, code.r, llr, plan, levels, 0, budget, stream,
                                   cfg.soft_correlation ? &cands[i].soft : nullptr);
    }

    if (cfg.selection == Selection::CrcThenMostLikely) {
        for (auto& c : cands) {
            auto msg = try_recover_message(code, c.bits);
            c.crc_ok = msg && crc3::crc_check(*msg);
        }
    }
    const bool any_crc = std::any_of(cands.begin(), cands.end(),
                                     [](const Candidate& c) { return c.crc_ok; });

    auto score = [&](const Candidate& c) {
        if (cfg.soft_correlation) {
            double s = 0.0;
            for (std::size_t z = 0; z < llr.size(); ++z) s += c.soft[z] * llr[z];
            return s;
        }
        return correlation(c.bits, llr);
    };

    int best = -1;
    double best_score = 0.0;
    for (int i = 0; i < cfg.k; ++i) {
        if (any_crc && !cands[i].crc_ok) continue;
        const double s = score(cands[i]);
        if (best < 0 || s > best_score) {
            best = i;
            best_score = s;
        }
    }
    return {std::move(cands[best].bits), best};
}

BudgetReport budget_formula(const RmCode& code, const SrpaConfig* cfg) {
    if (code.r != 2 && code.r != 3)
        throw std::invalid_argument("budget_formula: supported orders are 2 and 3");

    std::uint64_t d0, t0, q0, d1 = 0, t1 = 0, q1 = 0;
    if (cfg == nullptr) {
        // Full RPA without early stopping.
        d0 = 1;
        t0 = static_cast<std::uint64_t>(code.m / 2);
        q0 = (std::uint64_t{1} << code.m) - 1;
        if (code.r == 3) {
            d1 = 1;
            t1 = static_cast<std::uint64_t>((code.m - 1) / 2);
            q1 = (std::uint64_t{1} << (code.m - 1)) - 1;
        }
    } else {
        const auto levels =
            cfg->levels.empty() ? default_levels(code.m, code.r, cfg->k) : cfg->levels;
        if (levels.size() < static_cast<std::size_t>(code.r - 1))
            throw std::invalid_argument("budget_formula: missing level parameters");
        d0 = levels[0].decoders;
        t0 = levels[0].iters;
        q0 = levels[0].projections;
        if (code.r == 3) {
            d1 = levels[1].decoders;
            t1 = levels[1].iters;
            q1 = levels[1].projections;
        }
    }

    BudgetReport out;
    const std::uint64_t top = d0 * t0 * q0;
    if (code.r == 2) {
        out.fht_calls = top;
        out.projections = top;
        out.aggregations = top;
    } else {
        const std::uint64_t inner = top * d1 * t1 * q1;
        out.fht_calls = inner;
        out.projections = top + inner;
        out.aggregations = top + inner;
    }
    return out;
}

}  // namespace rmdec
