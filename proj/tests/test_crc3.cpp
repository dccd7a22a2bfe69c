#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracles.hpp"
#include "rmdec/crc3.hpp"

using namespace rmdec::crc3;

namespace {

std::vector<std::uint8_t> bits(std::initializer_list<int> v) {
    std::vector<std::uint8_t> out;
    for (int b : v) out.push_back(static_cast<std::uint8_t>(b));
    return out;
}

}  // namespace

TEST_CASE("crc_append examples") {
    CHECK(crc_append(bits({0, 0, 0})) == bits({0, 0, 0, 0, 0, 0}));
    // the generator itself leaves zero remainder
    CHECK(crc_append(bits({1, 0, 1, 1})) == bits({1, 0, 1, 1, 0, 0, 0}));
    // x^3 mod (x^3 + x + 1) = x + 1  ->  remainder bits 011
    CHECK(crc_append(bits({1})) == bits({1, 0, 1, 1}));
    CHECK(crc_append({}).size() == 3);
}

TEST_CASE("crc matches polynomial long division oracle") {
    std::mt19937_64 rng(5);
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < 1000; ++t) {
        std::vector<std::uint8_t> payload(rng() % 40);
        for (auto& b : payload) b = coin(rng) ? 1 : 0;
        auto frame = crc_append(payload);
        CHECK(frame.size() == payload.size() + 3);
        CHECK(crc_check(frame));

        // shifted payload (payload * x^3) divided long-hand gives the same remainder
        auto shifted = payload;
        shifted.insert(shifted.end(), {0, 0, 0});
        const std::uint32_t rem = oracle::crc3_longdiv(shifted);
        CHECK(frame[payload.size()] == ((rem >> 2) & 1));
        CHECK(frame[payload.size() + 1] == ((rem >> 1) & 1));
        CHECK(frame[payload.size() + 2] == (rem & 1));
    }
}

TEST_CASE("single-bit flips are always detected") {
    std::mt19937_64 rng(9);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t len : {0u, 1u, 5u, 29u, 61u}) {
        std::vector<std::uint8_t> payload(len);
        for (auto& b : payload) b = coin(rng) ? 1 : 0;
        auto frame = crc_append(payload);
        for (std::size_t i = 0; i < frame.size(); ++i) {
            frame[i] ^= 1;
            CHECK(!crc_check(frame));
            frame[i] ^= 1;
        }
    }
}

TEST_CASE("all bursts of length <= 3 are detected, frames up to length 64") {
    std::mt19937_64 rng(13);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t len : {3u, 10u, 33u, 61u}) {  // frame length = len + 3
        std::vector<std::uint8_t> payload(len);
        for (auto& b : payload) b = coin(rng) ? 1 : 0;
        const auto frame = crc_append(payload);
        // every nonzero error pattern confined to a window of width <= 3
        for (std::size_t start = 0; start < frame.size(); ++start) {
            const std::size_t width = std::min<std::size_t>(3, frame.size() - start);
            for (std::uint32_t pat = 1; pat < (1u << width); ++pat) {
                auto corrupted = frame;
                for (std::size_t j = 0; j < width; ++j)
                    corrupted[start + j] ^= (pat >> j) & 1;
                CHECK(!crc_check(corrupted));
            }
        }
    }
}

TEST_CASE("crc_check rejects frames shorter than the CRC") {
    CHECK_THROWS_AS(crc_check(bits({1, 0})), std::invalid_argument);
    CHECK(crc_check(bits({0, 0, 0})));
}
