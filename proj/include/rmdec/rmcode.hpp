#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rmdec/bitspace.hpp"

namespace rmdec {

using CodewordBits = std::vector<std::uint8_t>;  // length 2^m, one bit per byte
using MessageBits = std::vector<std::uint8_t>;   // length k, canonical monomial order

// Reed-Muller code RM(m,r): evaluations of degree-<=r monomials over F_2^m.
// Generator rows are ordered canonically: by monomial degree, then
// lexicographically on the sorted variable set.  info_set / info_inverse give
// exact message recovery from a codeword.
struct RmCode {
    int m = 0;
    int r = 0;
    int n = 0;  // 2^m
    int k = 0;  // sum_{i<=r} C(m,i)
    std::vector<std::uint32_t> monomials;  // variable masks, bit i-1 <-> z_i
    std::vector<CodewordBits> rows;        // generator rows, monomial order
    std::vector<int> info_set;             // k column indices, invertible submatrix
    std::vector<std::vector<std::uint8_t>> info_inverse;  // k x k over GF(2)
};

RmCode build_code(int m, int r);

CodewordBits encode(const RmCode& code, const MessageBits& msg);

// The unique message with encode(msg) == cw, or nullopt if cw is not a
// codeword.
std::optional<MessageBits> try_recover_message(const RmCode& code, const CodewordBits& cw);

// Throwing variant of try_recover_message.
MessageBits recover_message(const RmCode& code, const CodewordBits& cw);

int min_distance(const RmCode& code);

}  // namespace rmdec
