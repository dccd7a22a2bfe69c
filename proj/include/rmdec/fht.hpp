#pragma once

#include <span>
#include <vector>

#include "rmdec/channel.hpp"
#include "rmdec/rmcode.hpp"

namespace rmdec {

// In-place unnormalized Walsh-Hadamard transform:
// out[w] = sum_z (-1)^<w,z> v[z].  Length must be a power of two.
void fht(std::span<double> v);

std::vector<double> fht(const std::vector<double>& v);

// ML decoding of a first-order RM code from channel LLRs via one FHT:
// pick w* = argmax |t[w]|, output bits <w*,z> xor (t[w*] < 0).
// Ties break to the smallest w, then to the non-complemented codeword.
CodewordBits decode_first_order(const RmCode& code, const LlrVector& llr);

// Recursion-internal variant; llr length must be 2^m.
CodewordBits decode_first_order_raw(int m, std::span<const double> llr);

}  // namespace rmdec
