#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracles.hpp"
#include "rmdec/fht.hpp"

using namespace rmdec;

TEST_CASE("fht basics") {
    CHECK(fht(std::vector<double>{1, 1, 1, 1}) == std::vector<double>{4, 0, 0, 0});
    CHECK(fht(std::vector<double>{1, -1}) == std::vector<double>{0, 2});

    std::vector<double> bad(3, 0.0);
    CHECK_THROWS_AS(fht(std::span<double>(bad)), std::invalid_argument);
    std::vector<double> empty;
    CHECK_THROWS_AS(fht(std::span<double>(empty)), std::invalid_argument);
}

TEST_CASE("fht matches the dense Hadamard matrix product") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> v(8);
        for (auto& x : v) x = dist(rng);
        auto got = fht(v);
        auto want = oracle::hadamard_dense(v);
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]));
    }
}

TEST_CASE("fht is an involution up to scale n") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    std::vector<double> v(64);
    for (auto& x : v) x = dist(rng);
    auto twice = fht(fht(v));
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK(twice[i] == doctest::Approx(64.0 * v[i]));
}

TEST_CASE("decode_first_order on strong evidence") {
    auto code = build_code(2, 1);
    CHECK(decode_first_order(code, {10, 10, 10, 10}) == CodewordBits{0, 0, 0, 0});
    CHECK(decode_first_order(code, {-10, -10, -10, -10}) == CodewordBits{1, 1, 1, 1});

    auto rm22 = build_code(2, 2);
    CHECK_THROWS_AS(decode_first_order(rm22, LlrVector(4, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(decode_first_order(code, LlrVector(8, 1.0)), std::invalid_argument);
}

TEST_CASE("decode_first_order equals brute-force ML when the maximizer is unique") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int m = 2; m <= 5; ++m) {
        auto code = build_code(m, 1);
        auto codewords = oracle::all_codewords(code);
        const int trials = (m == 4) ? 1000 : 200;
        for (int t = 0; t < trials; ++t) {
            LlrVector llr(code.n);
            for (auto& v : llr) v = dist(rng);
            auto decoded = decode_first_order(code, llr);
            // output always lies in the code
            REQUIRE(try_recover_message(code, decoded).has_value());
            bool unique = false;
            const std::size_t best = oracle::ml_index(codewords, llr, unique);
            if (unique) REQUIRE(decoded == codewords[best]);
        }
    }
}

TEST_CASE("tie-breaking is deterministic: smallest index, non-complemented") {
    // all-zero LLRs tie every codeword; the declared rule picks w* = 0, sign +
    auto code = build_code(3, 1);
    CHECK(decode_first_order(code, LlrVector(8, 0.0)) == CodewordBits(8, 0));
}
