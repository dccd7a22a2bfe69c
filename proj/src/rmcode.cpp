#include "rmdec/rmcode.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rmdec {

namespace {

// Lexicographic order on the ascending variable lists of two equal-weight
// masks: {1,4} < {2,3} even though 0b1001 > 0b0110 as integers.
bool monomial_less(std::uint32_t a, std::uint32_t b) {
    const int wa = std::popcount(a), wb = std::popcount(b);
    if (wa != wb) return wa < wb;
    while (a && b) {
        const std::uint32_t la = a & -a, lb = b & -b;
        if (la != lb) return la < lb;
        a ^= la;
        b ^= lb;
    }
    return false;
}

}  // namespace

RmCode build_code(int m, int r) {
    if (m < 0 || m > 14) throw std::invalid_argument("build_code: m must be in [0,14]");
    if (r < 0 || r > m) throw std::invalid_argument("build_code: need 0 <= r <= m");

    RmCode code;
    code.m = m;
    code.r = r;
    code.n = 1 << m;

    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        if (std::popcount(mask) <= r) code.monomials.push_back(mask);
    std::sort(code.monomials.begin(), code.monomials.end(), monomial_less);
    code.k = static_cast<int>(code.monomials.size());

    // Row for mask A: v(A,z) = prod_{i in A} z_i = 1 iff A's bits all set in z.
    code.rows.reserve(code.k);
    for (std::uint32_t mask : code.monomials) {
        CodewordBits row(code.n);
        for (int z = 0; z < code.n; ++z)
            row[z] = ((static_cast<std::uint32_t>(z) & mask) == mask) ? 1 : 0;
        code.rows.push_back(std::move(row));
    }

    // Gaussian elimination to find k pivot columns and invert the k x k
    // submatrix over those columns.
    std::vector<CodewordBits> work = code.rows;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < code.n && row < code.k; ++col) {
        int sel = -1;
        for (int i = row; i < code.k; ++i)
            if (work[i][col]) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(work[row], work[sel]);
        for (int i = 0; i < code.k; ++i) {
            if (i == row || !work[i][col]) continue;
            for (int j = col; j < code.n; ++j) work[i][j] ^= work[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    if (row != code.k) throw std::logic_error("build_code: generator matrix is rank deficient");
    code.info_set = pivots;

    // Invert A = rows restricted to the pivot columns via [A | I] -> [I | A^-1].
    const int k = code.k;
    std::vector<std::vector<std::uint8_t>> aug(k, std::vector<std::uint8_t>(2 * k, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) aug[i][j] = code.rows[i][pivots[j]];
        aug[i][k + i] = 1;
    }
    for (int col = 0; col < k; ++col) {
        int sel = -1;
        for (int i = col; i < k; ++i)
            if (aug[i][col]) { sel = i; break; }
        if (sel < 0) throw std::logic_error("build_code: information set not invertible");
        std::swap(aug[col], aug[sel]);
        for (int i = 0; i < k; ++i) {
            if (i == col || !aug[i][col]) continue;
            for (int j = 0; j < 2 * k; ++j) aug[i][j] ^= aug[col][j];
        }
    }
    code.info_inverse.assign(k, std::vector<std::uint8_t>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) code.info_inverse[i][j] = aug[i][k + j];

    return code;
}

CodewordBits encode(const RmCode& code, const MessageBits& msg) {
    if (static_cast<int>(msg.size()) != code.k)
        throw std::invalid_argument("encode: message length does not match code dimension");
    CodewordBits cw(code.n, 0);
    for (int i = 0; i < code.k; ++i) {
        if (!msg[i]) continue;
        const CodewordBits& row = code.rows[i];
        for (int z = 0; z < code.n; ++z) cw[z] ^= row[z];
    }
    return cw;
}

std::optional<MessageBits> try_recover_message(const RmCode& code, const CodewordBits& cw) {
    if (static_cast<int>(cw.size()) != code.n)
        throw std::invalid_argument("recover_message: codeword length mismatch");
    const int k = code.k;
    // msg = cw[info_set] * info_inverse over GF(2)
    MessageBits msg(k, 0);
    for (int i = 0; i < k; ++i) {
        if (!cw[code.info_set[i]]) continue;
        for (int j = 0; j < k; ++j) msg[j] ^= code.info_inverse[i][j];
    }
    if (encode(code, msg) != cw) return std::nullopt;
    return msg;
}

MessageBits recover_message(const RmCode& code, const CodewordBits& cw) {
    auto msg = try_recover_message(code, cw);
    if (!msg) throw std::invalid_argument("recover_message: input is not a codeword");
    return *msg;
}

int min_distance(const RmCode& code) { return 1 << (code.m - code.r); }

}  // namespace rmdec
