#include "rmdec/rpa.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rmdec {

CodewordBits project_hard(const CodewordBits& y, const Subspace1D& b) {
    const std::size_t n = std::size_t{1} << b.m;
    if (y.size() != n) throw std::invalid_argument("project_hard: length mismatch");
    CodewordBits out(n / 2);
    for (std::uint32_t ord = 0; ord < n / 2; ++ord) {
        const IndexPoint z = coset_rep(b, ord);
        out[ord] = y[z] ^ y[z ^ b.generator];
    }
    return out;
}

LlrVector project_soft(const LlrVector& llr, const Subspace1D& b) {
    const std::size_t n = std::size_t{1} << b.m;
    if (llr.size() != n) throw std::invalid_argument("project_soft: length mismatch");
    LlrVector out(n / 2);
    for (std::uint32_t ord = 0; ord < n / 2; ++ord) {
        const IndexPoint z = coset_rep(b, ord);
        out[ord] = boxplus(llr[z], llr[z ^ b.generator]);
    }
    return out;
}

LlrVector aggregate(const LlrVector& llr,
                    const std::vector<std::pair<Subspace1D, CodewordBits>>& votes,
                    double divisor) {
    if (votes.empty()) throw std::invalid_argument("aggregate: no votes");
    const std::size_t n = llr.size();
    LlrVector acc(n, 0.0);
    for (const auto& [b, yhat] : votes) {
        for (IndexPoint z = 0; z < n; ++z) {
            const double sign = yhat[coset_of_unchecked(b, z)] ? -1.0 : 1.0;
            acc[z] += sign * llr[z ^ b.generator];
        }
    }
    for (double& v : acc) v /= divisor;
    return acc;
}

CodewordBits hard_decision(const LlrVector& llr) {
    CodewordBits bits(llr.size());
    for (std::size_t z = 0; z < llr.size(); ++z) bits[z] = llr[z] < 0.0 ? 1 : 0;
    return bits;
}

CodewordBits rpa_decode_raw(int m, int r, LlrVector llr, const RpaConfig& cfg,
                            BudgetReport& budget) {
    if (r < 1) throw std::invalid_argument("rpa_decode: order must be >= 1");
    if (r == 1) {
        ++budget.fht_calls;
        return decode_first_order_raw(m, std::span<const double>(llr));
    }

    const std::size_t n = std::size_t{1} << m;
    const int max_iters = m / 2;
    std::vector<std::pair<Subspace1D, CodewordBits>> votes(n - 1);
    for (IndexPoint g = 1; g < n; ++g) votes[g - 1].first = {g, m};

    for (int iter = 0; iter < max_iters; ++iter) {
#ifdef _OPENMP
        if (cfg.parallel) {
            std::vector<BudgetReport> local(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic)
            for (std::size_t i = 0; i < votes.size(); ++i) {
                BudgetReport& br = local[omp_get_thread_num()];
                LlrVector proj = project_soft(llr, votes[i].first);
                ++br.projections;
                votes[i].second = rpa_decode_raw(m - 1, r - 1, std::move(proj), cfg, br);
            }
            for (const BudgetReport& br : local) budget.merge(br);
        } else
#endif
        {
            for (auto& [b, yhat] : votes) {
                LlrVector proj = project_soft(llr, b);
                ++budget.projections;
                yhat = rpa_decode_raw(m - 1, r - 1, std::move(proj), cfg, budget);
            }
        }

        LlrVector estimate = aggregate(llr, votes, static_cast<double>(n));
        budget.aggregations += votes.size();

        double max_change = 0.0;
        for (std::size_t z = 0; z < n; ++z)
            max_change = std::max(max_change, std::abs(llr[z] - estimate[z]));
        llr = std::move(estimate);
        if (cfg.early_stop && max_change <= cfg.epsilon) break;
    }
    return hard_decision(llr);
}

CodewordBits rpa_decode(const RmCode& code, const LlrVector& llr, const RpaConfig& cfg,
                        BudgetReport& budget) {
    if (static_cast<int>(llr.size()) != code.n)
        throw std::invalid_argument("rpa_decode: LLR length mismatch");
    return rpa_decode_raw(code.m, code.r, llr, cfg, budget);
}

}  // namespace rmdec
