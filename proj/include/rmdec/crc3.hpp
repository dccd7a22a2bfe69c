#pragma once

#include <cstdint>
#include <vector>

namespace rmdec::crc3 {

// CRC-3-GSM: generator x^3 + x + 1, MSB-first bit-at-a-time division,
// zero initial register, no reflection, no final XOR.  The 3 remainder
// bits are appended MSB-first.
inline constexpr std::uint32_t kPoly = 0b1011;
inline constexpr int kWidth = 3;

std::vector<std::uint8_t> crc_append(const std::vector<std::uint8_t>& payload);

// True iff the frame, read as a polynomial, is divisible by x^3 + x + 1.
bool crc_check(const std::vector<std::uint8_t>& frame);

}  // namespace rmdec::crc3
