#include "rmdec/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rmdec {

namespace {

double clamp_llr(double v) { return std::clamp(v, -kLlrClamp, kLlrClamp); }

}  // namespace

LlrVector transmit(const CodewordBits& cw, const ChannelParams& ch, std::mt19937_64& rng) {
    LlrVector llr(cw.size());
    if (ch.noiseless) {
        for (std::size_t z = 0; z < cw.size(); ++z)
            llr[z] = cw[z] ? -kLlrClamp : kLlrClamp;
        return llr;
    }
    switch (ch.kind) {
        case ChannelKind::AwgnBpsk: {
            if (ch.sigma <= 0.0) throw std::invalid_argument("transmit: sigma must be positive");
            std::normal_distribution<double> noise(0.0, ch.sigma);
            const double scale = 2.0 / (ch.sigma * ch.sigma);
            for (std::size_t z = 0; z < cw.size(); ++z) {
                const double s = cw[z] ? -1.0 : 1.0;
                llr[z] = clamp_llr(scale * (s + noise(rng)));
            }
            break;
        }
        case ChannelKind::Bsc: {
            if (ch.p <= 0.0 || ch.p >= 0.5)
                throw std::invalid_argument("transmit: BSC crossover must be in (0, 1/2)");
            std::bernoulli_distribution flip(ch.p);
            const double mag = clamp_llr(std::log((1.0 - ch.p) / ch.p));
            for (std::size_t z = 0; z < cw.size(); ++z) {
                const int received = cw[z] ^ (flip(rng) ? 1 : 0);
                llr[z] = received ? -mag : mag;
            }
            break;
        }
    }
    return llr;
}

double ebn0_to_sigma(double ebn0_db, double rate) {
    if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("ebn0_to_sigma: rate must be in (0,1]");
    return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0)));
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t x = master + 0x9e3779b97f4a7c15ull * (index + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

}  // namespace rmdec
