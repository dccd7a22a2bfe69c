#include "rmdec/fht.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace rmdec {

void fht(std::span<double> v) {
    const std::size_t n = v.size();
    if (n == 0 || !std::has_single_bit(n))
        throw std::invalid_argument("fht: length must be a power of two");
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t base = 0; base < n; base += 2 * h) {
            for (std::size_t i = base; i < base + h; ++i) {
                const double a = v[i], b = v[i + h];
                v[i] = a + b;
                v[i + h] = a - b;
            }
        }
    }
}

std::vector<double> fht(const std::vector<double>& v) {
    std::vector<double> out = v;
    fht(std::span<double>(out));
    return out;
}

CodewordBits decode_first_order_raw(int m, std::span<const double> llr) {
    const std::size_t n = std::size_t{1} << m;
    if (llr.size() != n) throw std::invalid_argument("decode_first_order: LLR length mismatch");

    std::vector<double> t(llr.begin(), llr.end());
    fht(std::span<double>(t));

    // Correlation of the codeword b(z) = <w,z> xor s with the LLRs is
    // (1-2s) * t[w]; the ML pair maximizes |t[w]|.  Strict comparison keeps
    // the smallest w on ties; t[w] == 0 selects s = 0.
    std::size_t best_w = 0;
    double best_mag = std::abs(t[0]);
    for (std::size_t w = 1; w < n; ++w) {
        const double mag = std::abs(t[w]);
        if (mag > best_mag) {
            best_mag = mag;
            best_w = w;
        }
    }
    const std::uint8_t complement = t[best_w] < 0.0 ? 1 : 0;

    CodewordBits bits(n);
    for (std::size_t z = 0; z < n; ++z)
        bits[z] = static_cast<std::uint8_t>(std::popcount(best_w & z) & 1) ^ complement;
    return bits;
}

CodewordBits decode_first_order(const RmCode& code, const LlrVector& llr) {
    if (code.r != 1) throw std::invalid_argument("decode_first_order: code order must be 1");
    return decode_first_order_raw(code.m, std::span<const double>(llr));
}

}  // namespace rmdec
