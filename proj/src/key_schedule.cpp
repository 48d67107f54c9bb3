#include "sudoscram/key_schedule.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

#include "sudoscram/error.hpp"
#include "sudoscram/prng.hpp"

namespace sudoscram {

namespace {

int hex_digit(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
}

int isqrt(int v) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Rank q -> (P, F): odd ranks pair with RC, even with BG, Sudoku pairs in
// the fixed order BD, CD, DB, DC, DR, RD.
constexpr PlanEntry kPairTable[12] = {
    {SudokuPair::BD, FixedPair::RC, true},  {SudokuPair::BD, FixedPair::BG, false},
    {SudokuPair::CD, FixedPair::RC, true},  {SudokuPair::CD, FixedPair::BG, false},
    {SudokuPair::DB, FixedPair::RC, true},  {SudokuPair::DB, FixedPair::BG, false},
    {SudokuPair::DC, FixedPair::RC, true},  {SudokuPair::DC, FixedPair::BG, false},
    {SudokuPair::DR, FixedPair::RC, true},  {SudokuPair::DR, FixedPair::BG, false},
    {SudokuPair::RD, FixedPair::RC, true},  {SudokuPair::RD, FixedPair::BG, false},
};

}  // namespace

std::array<std::uint64_t, 3> ScramblerKey::words() const {
    std::array<std::uint64_t, 3> w{};
    for (int i = 0; i < 3; ++i)
        for (int b = 0; b < 8; ++b)
            w[static_cast<std::size_t>(i)] =
                (w[static_cast<std::size_t>(i)] << 8) | bytes[static_cast<std::size_t>(i * 8 + b)];
    return w;
}

ScramblerKey parse_key(std::string_view hex) {
    if (hex.size() != 48)
        throw FormatError("key must be 48 hex digits, got " + std::to_string(hex.size()) + " characters");
    ScramblerKey key;
    for (std::size_t i = 0; i < 24; ++i) {
        int hi = hex_digit(hex[2 * i]);
        int lo = hex_digit(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw FormatError(std::string("key contains a non-hex character '") + hex[2 * i + (hi < 0 ? 0 : 1)] + "'");
        key.bytes[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return key;
}

RoundPlan parameter_generator(const ScramblerKey& key, int plane) {
    if (plane < 1) throw DomainError("bit-plane index must be >= 1");
    std::array<std::uint8_t, 12> q{};
    for (int j = 1; j <= 12; ++j)
        q[static_cast<std::size_t>(j - 1)] = key.subkey((plane + j - 2) % 24 + 1);

    // Stable ascending argsort; ties fall back to the earlier position so
    // that equal subkeys still give one fixed, reproducible plan.
    std::array<int, 12> order{};
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return q[static_cast<std::size_t>(a)] < q[static_cast<std::size_t>(b)]; });

    RoundPlan plan{};
    for (int u = 0; u < 12; ++u) plan[static_cast<std::size_t>(u)] = kPairTable[order[static_cast<std::size_t>(u)]];
    return plan;
}

std::uint64_t round_seed(const ScramblerKey& key, int u) {
    if (u < 1 || u > 12) throw DomainError("round number must be in 1..12");
    std::uint64_t s = 0;
    for (std::uint64_t w : key.words()) s = SplitMix64(s ^ w).next();
    return SplitMix64(s ^ static_cast<std::uint64_t>(u)).next();
}

BlockSize block_size(int W, int H) {
    const int shorter = std::min(W, H);
    if (shorter < 16)
        throw DomainError("image too small: min(W,H) = " + std::to_string(shorter) + ", need at least 16");
    int m = isqrt(shorter);
    int n = isqrt(m);
    return {n * n, n};
}

SudokuMatrix round_sudoku(const ScramblerKey& key, int u, int W, int H) {
    return generate_sudoku(round_seed(key, u), block_size(W, H).n);
}

}  // namespace sudoscram
