#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sudoscram {

/// N x N digit grid with N = n*n, addressed 1-based as (row, column).
/// A valid instance carries each digit 1..N exactly once per row, per
/// column, and per n x n block.
struct SudokuMatrix {
    int n = 0;                         // sub-block side, >= 2
    int N = 0;                         // side length, n*n
    std::vector<std::uint16_t> cells;  // row-major digits

    std::uint16_t at(int r, int c) const { return cells[index(r, c)]; }
    std::uint16_t& at(int r, int c) { return cells[index(r, c)]; }
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(N) + static_cast<std::size_t>(c - 1);
    }

    friend bool operator==(const SudokuMatrix& a, const SudokuMatrix& b) = default;
};

/// Outcome of a validity check. When invalid, identifies the first unit
/// (rows scanned first, then columns, then blocks) missing a digit.
struct ValidationReport {
    enum class Unit { Row, Column, Block };
    bool valid = true;
    Unit unit = Unit::Row;
    int index = 0;  // 1-based unit index
    int digit = 0;  // first digit absent from that unit
    std::string message() const;
};

/// Validity-preserving rearrangement of a Sudoku matrix.
struct SudokuTransform {
    enum class Kind {
        DigitRelabel,    // perm over 1..N, applied to every digit
        BandPermute,     // perm over 1..n, reorders whole row bands
        RowInBand,       // perm over 1..n within band `unit`
        StackPermute,    // perm over 1..n, reorders whole column stacks
        ColumnInStack,   // perm over 1..n within stack `unit`
        Transpose,       // swap rows and columns
    };
    Kind kind = Kind::Transpose;
    std::vector<int> perm;  // unused for Transpose
    int unit = 0;           // 1-based band/stack for the within-unit kinds
};

ValidationReport validate_sudoku(const std::vector<std::vector<int>>& m, int n);
ValidationReport validate_sudoku(const SudokuMatrix& s);

/// Deterministic seed matrix: cell (r,c) holds
/// ((rem(r-1,n)*n + fix(r-1,n) + c-1) mod N) + 1.
SudokuMatrix canonical_sudoku(int n);

SudokuMatrix apply_transform(const SudokuMatrix& s, const SudokuTransform& t);

/// Keyed generation: canonical matrix reshaped by a fixed draw sequence
/// (digit relabel, band permute, per-band row permutes, stack permute,
/// per-stack column permutes, transpose bit) from SplitMix64(seed).
SudokuMatrix generate_sudoku(std::uint64_t seed, int n);

// Text form: "n N" header line, then N rows of N digits.
std::string to_text(const SudokuMatrix& s);
SudokuMatrix sudoku_from_text(const std::string& text);

}  // namespace sudoscram
