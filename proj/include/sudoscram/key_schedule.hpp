#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "sudoscram/representations.hpp"
#include "sudoscram/sudoku.hpp"

namespace sudoscram {

/// 192-bit scrambler key. Byte order follows the hex string: subkey 1 is the
/// most significant byte, word 0 the first sixteen hex digits.
struct ScramblerKey {
    std::array<std::uint8_t, 24> bytes{};

    std::uint8_t subkey(int j) const { return bytes[static_cast<std::size_t>(j - 1)]; }  // K^(j), j in 1..24
    std::array<std::uint64_t, 3> words() const;

    friend bool operator==(const ScramblerKey& a, const ScramblerKey& b) = default;
};

ScramblerKey parse_key(std::string_view hex);

/// One scrambling step for one bit-plane: which Sudoku pair maps to which
/// fixed pair, and in which direction (param_to_fixed corresponds to m = 1).
struct PlanEntry {
    SudokuPair p;
    FixedPair f;
    bool param_to_fixed;
    friend bool operator==(const PlanEntry& a, const PlanEntry& b) = default;
};

/// Twelve ordered entries covering each (SudokuPair, FixedPair) combination
/// exactly once; entry u-1 drives round u.
using RoundPlan = std::array<PlanEntry, 12>;

/// Plan for bit-plane `plane` (1-based): ranks the twelve cyclic subkeys
/// starting at K^(plane) by stable ascending argsort and maps each rank
/// through the fixed pair table.
RoundPlan parameter_generator(const ScramblerKey& key, int plane);

/// Seed feeding the round-u Sudoku: the key's three words and the round
/// number chained through single SplitMix64 steps.
std::uint64_t round_seed(const ScramblerKey& key, int u);

struct BlockSize {
    int N;  // Sudoku side used for blockwise scrambling
    int n;  // sub-block side, N = n*n
};

/// Largest fourth-power-rooted block that the image supports:
/// n = floor(sqrt(floor(sqrt(min(W,H))))), N = n*n. Requires min(W,H) >= 16.
BlockSize block_size(int W, int H);

SudokuMatrix round_sudoku(const ScramblerKey& key, int u, int W, int H);

}  // namespace sudoscram
