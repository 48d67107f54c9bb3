#include "sudoscram/sudoku.hpp"

#include <sstream>

#include "sudoscram/error.hpp"
#include "sudoscram/prng.hpp"

namespace sudoscram {

namespace {

int fix_div(int p, int q) { return p / q; }  // floor for the non-negative args used here
int rem_mod(int p, int q) { return p % q; }

void check_n(int n) {
    if (n < 2) throw DomainError("sudoku sub-block side n must be at least 2, got " + std::to_string(n));
}

void check_perm(const std::vector<int>& perm, int size, const char* what) {
    if (static_cast<int>(perm.size()) != size)
        throw DomainError(std::string(what) + " permutation has wrong length");
    std::vector<char> seen(static_cast<std::size_t>(size), 0);
    for (int v : perm) {
        if (v < 1 || v > size || seen[static_cast<std::size_t>(v - 1)])
            throw DomainError(std::string(what) + " permutation is not a permutation of 1.." + std::to_string(size));
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

// First digit absent from a unit, or 0 if every digit 1..N appears.
// Entries are known to lie in 1..N, so "all present" means "valid unit".
template <class GetDigit>
int first_missing_digit(int N, GetDigit get) {
    std::vector<int> count(static_cast<std::size_t>(N) + 1, 0);
    for (int k = 1; k <= N; ++k) ++count[static_cast<std::size_t>(get(k))];
    for (int d = 1; d <= N; ++d)
        if (count[static_cast<std::size_t>(d)] == 0) return d;
    return 0;
}

}  // namespace

std::string ValidationReport::message() const {
    if (valid) return "valid";
    const char* unit_name = unit == Unit::Row ? "row" : unit == Unit::Column ? "column" : "block";
    std::ostringstream os;
    os << unit_name << " " << index << " missing digit " << digit;
    return os.str();
}

ValidationReport validate_sudoku(const std::vector<std::vector<int>>& m, int n) {
    if (n < 2) throw FormatError("dimension mismatch: n must be at least 2, got " + std::to_string(n));
    const int N = n * n;
    if (static_cast<int>(m.size()) != N)
        throw FormatError("dimension mismatch: expected " + std::to_string(N) + " rows, got " + std::to_string(m.size()));
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != N)
            throw FormatError("dimension mismatch: expected " + std::to_string(N) + " columns");
    for (const auto& row : m)
        for (int v : row)
            if (v < 1 || v > N)
                throw DomainError("entry " + std::to_string(v) + " outside 1.." + std::to_string(N));

    ValidationReport rep;
    for (int r = 1; r <= N; ++r) {
        int d = first_missing_digit(N, [&](int c) { return m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; });
        if (d != 0) return {false, ValidationReport::Unit::Row, r, d};
    }
    for (int c = 1; c <= N; ++c) {
        int d = first_missing_digit(N, [&](int r) { return m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; });
        if (d != 0) return {false, ValidationReport::Unit::Column, c, d};
    }
    for (int b = 1; b <= N; ++b) {
        int d = first_missing_digit(N, [&](int g) {
            int r = fix_div(b - 1, n) * n + fix_div(g - 1, n) + 1;
            int c = rem_mod(b - 1, n) * n + rem_mod(g - 1, n) + 1;
            return m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
        });
        if (d != 0) return {false, ValidationReport::Unit::Block, b, d};
    }
    return rep;
}

ValidationReport validate_sudoku(const SudokuMatrix& s) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(s.N), std::vector<int>(static_cast<std::size_t>(s.N)));
    for (int r = 1; r <= s.N; ++r)
        for (int c = 1; c <= s.N; ++c)
            m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = s.at(r, c);
    return validate_sudoku(m, s.n);
}

SudokuMatrix canonical_sudoku(int n) {
    check_n(n);
    const int N = n * n;
    SudokuMatrix s{n, N, std::vector<std::uint16_t>(static_cast<std::size_t>(N) * static_cast<std::size_t>(N))};
    for (int r = 1; r <= N; ++r) {
        int offset = rem_mod(r - 1, n) * n + fix_div(r - 1, n);
        for (int c = 1; c <= N; ++c)
            s.at(r, c) = static_cast<std::uint16_t>((offset + c - 1) % N + 1);
    }
    return s;
}

SudokuMatrix apply_transform(const SudokuMatrix& s, const SudokuTransform& t) {
    const int n = s.n;
    const int N = s.N;
    SudokuMatrix out = s;
    using Kind = SudokuTransform::Kind;
    switch (t.kind) {
        case Kind::DigitRelabel:
            check_perm(t.perm, N, "digit relabel");
            for (auto& d : out.cells) d = static_cast<std::uint16_t>(t.perm[static_cast<std::size_t>(d - 1)]);
            break;
        case Kind::BandPermute:
            check_perm(t.perm, n, "band");
            for (int i = 0; i < n; ++i)
                for (int tr = 0; tr < n; ++tr)
                    for (int c = 1; c <= N; ++c)
                        out.at(i * n + tr + 1, c) = s.at((t.perm[static_cast<std::size_t>(i)] - 1) * n + tr + 1, c);
            break;
        case Kind::RowInBand: {
            check_perm(t.perm, n, "row-in-band");
            if (t.unit < 1 || t.unit > n) throw DomainError("band index out of range");
            const int base = (t.unit - 1) * n;
            for (int tr = 0; tr < n; ++tr)
                for (int c = 1; c <= N; ++c)
                    out.at(base + tr + 1, c) = s.at(base + t.perm[static_cast<std::size_t>(tr)], c);
            break;
        }
        case Kind::StackPermute:
            check_perm(t.perm, n, "stack");
            for (int j = 0; j < n; ++j)
                for (int tc = 0; tc < n; ++tc)
                    for (int r = 1; r <= N; ++r)
                        out.at(r, j * n + tc + 1) = s.at(r, (t.perm[static_cast<std::size_t>(j)] - 1) * n + tc + 1);
            break;
        case Kind::ColumnInStack: {
            check_perm(t.perm, n, "column-in-stack");
            if (t.unit < 1 || t.unit > n) throw DomainError("stack index out of range");
            const int base = (t.unit - 1) * n;
            for (int tc = 0; tc < n; ++tc)
                for (int r = 1; r <= N; ++r)
                    out.at(r, base + tc + 1) = s.at(r, base + t.perm[static_cast<std::size_t>(tc)]);
            break;
        }
        case Kind::Transpose:
            for (int r = 1; r <= N; ++r)
                for (int c = 1; c <= N; ++c)
                    out.at(r, c) = s.at(c, r);
            break;
    }
    return out;
}

SudokuMatrix generate_sudoku(std::uint64_t seed, int n) {
    check_n(n);
    const int N = n * n;
    SplitMix64 rng(seed);
    SudokuMatrix s = canonical_sudoku(n);

    // Draw order is frozen; reordering would change every keyed matrix.
    s = apply_transform(s, {SudokuTransform::Kind::DigitRelabel, random_permutation_1_to(rng, N), 0});
    s = apply_transform(s, {SudokuTransform::Kind::BandPermute, random_permutation_1_to(rng, n), 0});
    for (int band = 1; band <= n; ++band)
        s = apply_transform(s, {SudokuTransform::Kind::RowInBand, random_permutation_1_to(rng, n), band});
    s = apply_transform(s, {SudokuTransform::Kind::StackPermute, random_permutation_1_to(rng, n), 0});
    for (int stack = 1; stack <= n; ++stack)
        s = apply_transform(s, {SudokuTransform::Kind::ColumnInStack, random_permutation_1_to(rng, n), stack});
    if (rng.next() & 1u)
        s = apply_transform(s, {SudokuTransform::Kind::Transpose, {}, 0});
    return s;
}

std::string to_text(const SudokuMatrix& s) {
    std::ostringstream os;
    os << s.n << " " << s.N << "\n";
    for (int r = 1; r <= s.N; ++r) {
        for (int c = 1; c <= s.N; ++c) {
            if (c > 1) os << " ";
            os << s.at(r, c);
        }
        os << "\n";
    }
    return os.str();
}

SudokuMatrix sudoku_from_text(const std::string& text) {
    std::istringstream is(text);
    long long n = 0, N = 0;
    if (!(is >> n >> N)) throw FormatError("sudoku text: cannot read header \"n N\"");
    if (n < 2 || N != n * n) throw FormatError("sudoku text: header must satisfy N = n*n with n >= 2");
    SudokuMatrix s{static_cast<int>(n), static_cast<int>(N),
                   std::vector<std::uint16_t>(static_cast<std::size_t>(N * N))};
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        long long d = 0;
        if (!(is >> d)) throw FormatError("sudoku text: expected " + std::to_string(N * N) + " digits");
        if (d < 1 || d > N) throw FormatError("sudoku text: digit " + std::to_string(d) + " outside 1.." + std::to_string(N));
        s.cells[i] = static_cast<std::uint16_t>(d);
    }
    long long extra = 0;
    if (is >> extra) throw FormatError("sudoku text: trailing data after the grid");
    return s;
}

}  // namespace sudoscram
