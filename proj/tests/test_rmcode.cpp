#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracles.hpp"
#include "rmdec/rmcode.hpp"
#include "rmdec/rpa.hpp"

using namespace rmdec;

namespace {

MessageBits random_message(const RmCode& code, std::mt19937_64& rng) {
    MessageBits msg(code.k);
    std::bernoulli_distribution coin(0.5);
    for (auto& b : msg) b = coin(rng) ? 1 : 0;
    return msg;
}

bool is_codeword(const RmCode& code, const CodewordBits& cw) {
    return try_recover_message(code, cw).has_value();
}

}  // namespace

TEST_CASE("code dimensions") {
    CHECK(build_code(7, 2).k == 29);   // 1 + 7 + 21
    CHECK(build_code(8, 3).k == 93);   // 1 + 8 + 28 + 56
    CHECK(build_code(2, 2).k == 4);    // r = m: full space
    CHECK(build_code(9, 2).k == 46);
    CHECK_THROWS_AS(build_code(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_code(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(build_code(15, 2), std::invalid_argument);
}

TEST_CASE("canonical monomial order: degree, then lexicographic") {
    auto code = build_code(3, 2);
    // {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3} as variable masks
    const std::vector<std::uint32_t> expected = {0b000, 0b001, 0b010, 0b100,
                                                 0b011, 0b101, 0b110};
    CHECK(code.monomials == expected);

    // {1,4} precedes {2,3} even though its mask is numerically larger
    auto code4 = build_code(4, 2);
    std::size_t i14 = 0, i23 = 0;
    for (std::size_t i = 0; i < code4.monomials.size(); ++i) {
        if (code4.monomials[i] == 0b1001) i14 = i;
        if (code4.monomials[i] == 0b0110) i23 = i;
    }
    CHECK(i14 < i23);
}

TEST_CASE("encode examples") {
    auto rm22 = build_code(2, 2);
    CHECK(encode(rm22, {1, 0, 0, 0}) == CodewordBits{1, 1, 1, 1});  // constant monomial

    auto rm21 = build_code(2, 1);
    CHECK(encode(rm21, {0, 1, 0}) == CodewordBits{0, 1, 0, 1});  // z1, LSB-first

    auto rm32 = build_code(3, 2);
    MessageBits msg(rm32.k, 0);
    // monomial {1,2} sits at index 4 in canonical order
    msg[4] = 1;
    CodewordBits expected(8, 0);
    expected[3] = expected[7] = 1;  // z1 = z2 = 1
    CHECK(encode(rm32, msg) == expected);

    CHECK_THROWS_AS(encode(rm22, {1, 0}), std::invalid_argument);
}

TEST_CASE("linearity of encode") {
    auto code = build_code(5, 2);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto u1 = random_message(code, rng), u2 = random_message(code, rng);
        MessageBits u3(code.k);
        for (int i = 0; i < code.k; ++i) u3[i] = u1[i] ^ u2[i];
        auto c1 = encode(code, u1), c2 = encode(code, u2);
        CodewordBits cx(code.n);
        for (int z = 0; z < code.n; ++z) cx[z] = c1[z] ^ c2[z];
        CHECK(encode(code, u3) == cx);
    }
}

TEST_CASE("recover_message round trips") {
    auto code = build_code(5, 2);
    CHECK(recover_message(code, CodewordBits(code.n, 0)) == MessageBits(code.k, 0));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        auto msg = random_message(code, rng);
        CHECK(recover_message(code, encode(code, msg)) == msg);
    }

    // weight-1 vector is below the minimum distance of RM(3,1), so not a codeword
    auto rm31 = build_code(3, 1);
    CodewordBits w1(rm31.n, 0);
    w1[5] = 1;
    CHECK(!try_recover_message(rm31, w1).has_value());
    CHECK_THROWS_AS(recover_message(rm31, w1), std::invalid_argument);
}

TEST_CASE("recover o encode is identity on all messages for small codes") {
    for (int m = 2; m <= 4; ++m) {
        for (int r = 1; r <= std::min(m, 2); ++r) {
            auto code = build_code(m, r);
            for (std::uint32_t u = 0; u < (1u << code.k); ++u) {
                MessageBits msg(code.k);
                for (int i = 0; i < code.k; ++i) msg[i] = (u >> i) & 1;
                REQUIRE(recover_message(code, encode(code, msg)) == msg);
            }
        }
    }
}

TEST_CASE("min_distance matches exhaustive minimum weight") {
    auto check_exhaustive = [](int m, int r) {
        auto code = build_code(m, r);
        int best = code.n + 1;
        for (const auto& cw : oracle::all_codewords(code)) {
            int w = 0;
            for (auto b : cw) w += b;
            if (w > 0) best = std::min(best, w);
        }
        CHECK(min_distance(code) == best);
    };
    check_exhaustive(4, 2);  // 4
    check_exhaustive(3, 2);  // 2
    CHECK(min_distance(build_code(4, 2)) == 4);
    CHECK(min_distance(build_code(3, 2)) == 2);
    CHECK(min_distance(build_code(6, 0)) == 64);  // repetition code
}

TEST_CASE("hard projection of a codeword is a codeword of RM(m-1,r-1)") {
    // exhaustive for small codes, sampled for m = 5
    for (int m = 3; m <= 4; ++m) {
        for (int r = 1; r <= std::min(3, m - 1); ++r) {
            auto code = build_code(m, r);
            auto reduced = build_code(m - 1, r - 1);
            for (const auto& cw : oracle::all_codewords(code))
                for (const auto& b : all_subspaces(m))
                    REQUIRE(is_codeword(reduced, project_hard(cw, b)));
        }
    }
    std::mt19937_64 rng(3);
    for (int r = 1; r <= 3; ++r) {
        auto code = build_code(5, r);
        auto reduced = build_code(4, r - 1);
        for (int t = 0; t < 20; ++t) {
            auto cw = encode(code, random_message(code, rng));
            for (const auto& b : all_subspaces(5))
                REQUIRE(is_codeword(reduced, project_hard(cw, b)));
        }
    }
}
