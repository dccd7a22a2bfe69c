// Independent reference implementations used only by tests.  These stay
// deliberately naive (dense matrices, exhaustive enumeration, polynomial
// long division) so they do not share code paths with the library.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rmdec/rmcode.hpp"

namespace oracle {

// All 2^k codewords of a code, by enumerating message vectors.
inline std::vector<rmdec::CodewordBits> all_codewords(const rmdec::RmCode& code) {
    if (code.k > 20) throw std::logic_error("all_codewords: too many codewords");
    std::vector<rmdec::CodewordBits> out;
    out.reserve(std::size_t{1} << code.k);
    for (std::uint32_t u = 0; u < (1u << code.k); ++u) {
        rmdec::MessageBits msg(code.k);
        for (int i = 0; i < code.k; ++i) msg[i] = (u >> i) & 1;
        out.push_back(rmdec::encode(code, msg));
    }
    return out;
}

inline double bipolar_correlation(const rmdec::CodewordBits& c, const std::vector<double>& llr) {
    double s = 0.0;
    for (std::size_t z = 0; z < c.size(); ++z) s += c[z] ? -llr[z] : llr[z];
    return s;
}

// Brute-force ML decode over a precomputed codeword list: maximize
// sum_z (1-2c(z)) L(z).  Returns the index of the maximizer; `unique` is
// false when the maximum is attained more than once (within tol).
inline std::size_t ml_index(const std::vector<rmdec::CodewordBits>& codewords,
                            const std::vector<double>& llr, bool& unique, double tol = 1e-9) {
    std::size_t best = 0;
    double best_corr = bipolar_correlation(codewords[0], llr);
    unique = true;
    for (std::size_t i = 1; i < codewords.size(); ++i) {
        const double corr = bipolar_correlation(codewords[i], llr);
        if (corr > best_corr + tol) {
            best = i;
            best_corr = corr;
            unique = true;
        } else if (std::abs(corr - best_corr) <= tol) {
            unique = false;
        }
    }
    return best;
}

// Dense n x n Hadamard matrix product, H[w][z] = (-1)^popcount(w & z).
inline std::vector<double> hadamard_dense(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t z = 0; z < n; ++z)
            out[w] += (__builtin_popcountll(w & z) & 1 ? -1.0 : 1.0) * v[z];
    return out;
}

// Literal two-term box-plus ln(e^(a+b) + 1) - ln(e^a + e^b); overflows for
// very large inputs, which is exactly why the library uses the stable form.
inline double boxplus_literal(double a, double b) {
    return std::log(std::exp(a + b) + 1.0) - std::log(std::exp(a) + std::exp(b));
}

// Remainder of the bit polynomial (MSB first) modulo x^3 + x + 1 by explicit
// long division over GF(2).
inline std::uint32_t crc3_longdiv(std::vector<std::uint8_t> bits) {
    for (std::size_t i = 0; i + 3 < bits.size(); ++i) {
        if (!bits[i]) continue;
        bits[i] ^= 1;      // x^3 term of the generator, aligned at i
        bits[i + 2] ^= 1;  // x
        bits[i + 3] ^= 1;  // 1
    }
    std::uint32_t rem = 0;
    const std::size_t tail = bits.size() >= 3 ? bits.size() - 3 : 0;
    for (std::size_t i = tail; i < bits.size(); ++i) rem = (rem << 1) | bits[i];
    return rem;
}

}  // namespace oracle
