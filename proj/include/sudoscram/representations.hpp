#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sudoscram/sudoku.hpp"

namespace sudoscram {

/// The two parameter-free addressing schemes: row-column and block-grid.
enum class FixedPair : std::uint8_t { RC, BG };

/// The six Sudoku-associated addressing schemes. Each combines a line or
/// block index with the digit the reference Sudoku holds at the cell.
enum class SudokuPair : std::uint8_t { RD, DR, CD, DC, BD, DB };

/// All eight schemes under one tag, for the generic index/locate operations.
enum class Rep : std::uint8_t { RC, BG, RD, DR, CD, DC, BD, DB };

Rep rep_of(FixedPair f);
Rep rep_of(SudokuPair p);
const char* rep_name(Rep r);

enum class MapDirection : std::uint8_t { ParamToFixed, FixedToParam };

/// Explicit bijection on the N x N grid. forward[src] = dst with linear
/// index (r-1)*N + (c-1).
struct PermutationMap {
    int N = 0;
    std::vector<std::uint32_t> forward;

    bool is_permutation() const;
    friend bool operator==(const PermutationMap& a, const PermutationMap& b) = default;
};

// Block-grid <-> row-column conversions, all arguments 1-based in 1..n*n.
std::pair<int, int> bg_to_rc(int b, int g, int n);
std::pair<int, int> rc_to_bg(int r, int c, int n);

/// Index pair (u,v) of the cell (r,c) under representation p.
std::pair<int, int> rep_index(const SudokuMatrix& s, Rep p, int r, int c);

/// Inverse of rep_index: the cell whose representation-p index is (u,v).
std::pair<int, int> rep_locate(const SudokuMatrix& s, Rep p, int u, int v);

/// ParamToFixed: the pixel whose p-index is (u,v) moves to the position
/// whose f-index is (u,v). FixedToParam is the exact inverse map.
PermutationMap build_bijection(const SudokuMatrix& s, SudokuPair p, FixedPair f, MapDirection dir);

PermutationMap identity_map(int N);
PermutationMap compose(const PermutationMap& f, const PermutationMap& g);  // (f o g)(x) = f(g(x))
PermutationMap invert(const PermutationMap& f);

/// Repositions plane cells: out[f(pos)] = in[pos].
template <class T>
std::vector<T> apply_permutation(const std::vector<T>& plane, const PermutationMap& f);

// Text form: "N" line, then N rows of N destination indices (0-based).
std::string to_text(const PermutationMap& f);

extern template std::vector<std::uint8_t> apply_permutation(const std::vector<std::uint8_t>&, const PermutationMap&);
extern template std::vector<std::uint32_t> apply_permutation(const std::vector<std::uint32_t>&, const PermutationMap&);

}  // namespace sudoscram
