#include "rmdec/crc3.hpp"

#include <stdexcept>

namespace rmdec::crc3 {

namespace {

std::uint32_t shift_in(std::uint32_t rem, std::uint8_t bit) {
    rem = (rem << 1) | (bit & 1u);
    if (rem & (1u << kWidth)) rem ^= kPoly;
    return rem;
}

}  // namespace

std::vector<std::uint8_t> crc_append(const std::vector<std::uint8_t>& payload) {
    std::uint32_t rem = 0;
    for (std::uint8_t b : payload) rem = shift_in(rem, b);
    for (int i = 0; i < kWidth; ++i) rem = shift_in(rem, 0);

    std::vector<std::uint8_t> frame = payload;
    for (int i = kWidth - 1; i >= 0; --i) frame.push_back((rem >> i) & 1u);
    return frame;
}

bool crc_check(const std::vector<std::uint8_t>& frame) {
    if (frame.size() < static_cast<std::size_t>(kWidth))
        throw std::invalid_argument("crc_check: frame shorter than CRC width");
    std::uint32_t rem = 0;
    for (std::uint8_t b : frame) rem = shift_in(rem, b);
    return rem == 0;
}

}  // namespace rmdec::crc3
