#pragma once

#include <random>
#include <vector>

#include "rmdec/rmcode.hpp"

namespace rmdec {

using LlrVector = std::vector<double>;

// LLRs are clamped to +-40: downstream soft projections exponentiate LLR
// sums, and e^40 already dwarfs any length-2^14 accumulation.
inline constexpr double kLlrClamp = 40.0;

enum class ChannelKind { AwgnBpsk, Bsc };

struct ChannelParams {
    ChannelKind kind = ChannelKind::AwgnBpsk;
    double sigma = 1.0;      // AWGN noise standard deviation
    double p = 0.1;          // BSC crossover probability
    bool noiseless = false;  // sigma -> 0 limit: LLR = +-kLlrClamp
};

// Modulate, add noise, and convert to channel LLRs ln(W(x|0)/W(x|1)).
// AWGN/BPSK: bit b -> s = 1-2b, y = s + sigma*N(0,1), LLR = 2y/sigma^2.
// BSC: bit flipped w.p. p, LLR = (1-2*received)*ln((1-p)/p).
LlrVector transmit(const CodewordBits& cw, const ChannelParams& ch, std::mt19937_64& rng);

// sigma = sqrt(1 / (2 * rate * 10^(ebn0_db/10))), the BPSK convention.
double ebn0_to_sigma(double ebn0_db, double rate);

// Stream seed for (master seed, stream index); splitmix64 finalizer so
// nearby indices give unrelated streams.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

}  // namespace rmdec
