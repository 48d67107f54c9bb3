#include "sudoscram/representations.hpp"

#include <sstream>

#include "sudoscram/error.hpp"

namespace sudoscram {

namespace {

void check_range(int v, int N, const char* what) {
    if (v < 1 || v > N)
        throw DomainError(std::string(what) + " " + std::to_string(v) + " outside 1.." + std::to_string(N));
}

std::size_t lin(int r, int c, int N) {
    return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(N) + static_cast<std::size_t>(c - 1);
}

}  // namespace

Rep rep_of(FixedPair f) { return f == FixedPair::RC ? Rep::RC : Rep::BG; }

Rep rep_of(SudokuPair p) {
    switch (p) {
        case SudokuPair::RD: return Rep::RD;
        case SudokuPair::DR: return Rep::DR;
        case SudokuPair::CD: return Rep::CD;
        case SudokuPair::DC: return Rep::DC;
        case SudokuPair::BD: return Rep::BD;
        case SudokuPair::DB: return Rep::DB;
    }
    return Rep::RD;
}

const char* rep_name(Rep r) {
    switch (r) {
        case Rep::RC: return "rc";
        case Rep::BG: return "bg";
        case Rep::RD: return "rd";
        case Rep::DR: return "dr";
        case Rep::CD: return "cd";
        case Rep::DC: return "dc";
        case Rep::BD: return "bd";
        case Rep::DB: return "db";
    }
    return "?";
}

bool PermutationMap::is_permutation() const {
    const std::size_t size = static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
    if (forward.size() != size) return false;
    std::vector<char> seen(size, 0);
    for (std::uint32_t dst : forward) {
        if (dst >= size || seen[dst]) return false;
        seen[dst] = 1;
    }
    return true;
}

std::pair<int, int> bg_to_rc(int b, int g, int n) {
    const int N = n * n;
    check_range(b, N, "block index");
    check_range(g, N, "grid index");
    int r = ((b - 1) / n) * n + (g - 1) / n + 1;
    int c = ((b - 1) % n) * n + (g - 1) % n + 1;
    return {r, c};
}

std::pair<int, int> rc_to_bg(int r, int c, int n) {
    const int N = n * n;
    check_range(r, N, "row index");
    check_range(c, N, "column index");
    int g = ((r - 1) % n) * n + (c - 1) % n + 1;
    int b = ((r - 1) / n) * n + (c - 1) / n + 1;
    return {b, g};
}

std::pair<int, int> rep_index(const SudokuMatrix& s, Rep p, int r, int c) {
    check_range(r, s.N, "row index");
    check_range(c, s.N, "column index");
    switch (p) {
        case Rep::RC: return {r, c};
        case Rep::BG: return rc_to_bg(r, c, s.n);
        case Rep::RD: return {r, s.at(r, c)};
        case Rep::DR: return {s.at(r, c), r};
        case Rep::CD: return {c, s.at(r, c)};
        case Rep::DC: return {s.at(r, c), c};
        case Rep::BD: return {rc_to_bg(r, c, s.n).first, s.at(r, c)};
        case Rep::DB: return {s.at(r, c), rc_to_bg(r, c, s.n).first};
    }
    throw DomainError("unknown representation");
}

std::pair<int, int> rep_locate(const SudokuMatrix& s, Rep p, int u, int v) {
    check_range(u, s.N, "first index");
    check_range(v, s.N, "second index");
    auto digit_in_row = [&](int row, int d) {
        for (int c = 1; c <= s.N; ++c)
            if (s.at(row, c) == d) return c;
        throw DomainError("digit not present in row (matrix is not a Sudoku)");
    };
    auto digit_in_col = [&](int col, int d) {
        for (int r = 1; r <= s.N; ++r)
            if (s.at(r, col) == d) return r;
        throw DomainError("digit not present in column (matrix is not a Sudoku)");
    };
    auto digit_in_block = [&](int b, int d) -> std::pair<int, int> {
        for (int g = 1; g <= s.N; ++g) {
            auto rc = bg_to_rc(b, g, s.n);
            if (s.at(rc.first, rc.second) == d) return rc;
        }
        throw DomainError("digit not present in block (matrix is not a Sudoku)");
    };
    switch (p) {
        case Rep::RC: return {u, v};
        case Rep::BG: return bg_to_rc(u, v, s.n);
        case Rep::RD: return {u, digit_in_row(u, v)};
        case Rep::DR: return {v, digit_in_row(v, u)};
        case Rep::CD: return {digit_in_col(u, v), u};
        case Rep::DC: return {digit_in_col(v, u), v};
        case Rep::BD: return digit_in_block(u, v);
        case Rep::DB: return digit_in_block(v, u);
    }
    throw DomainError("unknown representation");
}

PermutationMap build_bijection(const SudokuMatrix& s, SudokuPair p, FixedPair f, MapDirection dir) {
    const int N = s.N;
    PermutationMap map{N, std::vector<std::uint32_t>(static_cast<std::size_t>(N) * static_cast<std::size_t>(N))};
    // Locating a fixed-pair index is O(1), so the param-to-fixed pass needs
    // no digit lookup tables.
    for (int r = 1; r <= N; ++r) {
        for (int c = 1; c <= N; ++c) {
            auto [u, v] = rep_index(s, rep_of(p), r, c);
            auto [rr, cc] = f == FixedPair::RC ? std::pair<int, int>{u, v} : bg_to_rc(u, v, s.n);
            map.forward[lin(r, c, N)] = static_cast<std::uint32_t>(lin(rr, cc, N));
        }
    }
    return dir == MapDirection::ParamToFixed ? map : invert(map);
}

PermutationMap identity_map(int N) {
    PermutationMap map{N, std::vector<std::uint32_t>(static_cast<std::size_t>(N) * static_cast<std::size_t>(N))};
    for (std::size_t i = 0; i < map.forward.size(); ++i) map.forward[i] = static_cast<std::uint32_t>(i);
    return map;
}

PermutationMap compose(const PermutationMap& f, const PermutationMap& g) {
    if (f.N != g.N) throw DomainError("compose: size mismatch");
    PermutationMap out{f.N, std::vector<std::uint32_t>(f.forward.size())};
    for (std::size_t i = 0; i < g.forward.size(); ++i) out.forward[i] = f.forward[g.forward[i]];
    return out;
}

PermutationMap invert(const PermutationMap& f) {
    if (!f.is_permutation()) throw DomainError("invert: forward array is not a permutation");
    PermutationMap out{f.N, std::vector<std::uint32_t>(f.forward.size())};
    for (std::size_t i = 0; i < f.forward.size(); ++i) out.forward[f.forward[i]] = static_cast<std::uint32_t>(i);
    return out;
}

template <class T>
std::vector<T> apply_permutation(const std::vector<T>& plane, const PermutationMap& f) {
    if (plane.size() != f.forward.size()) throw DomainError("apply_permutation: size mismatch");
    std::vector<T> out(plane.size());
    for (std::size_t i = 0; i < plane.size(); ++i) out[f.forward[i]] = plane[i];
    return out;
}

template std::vector<std::uint8_t> apply_permutation(const std::vector<std::uint8_t>&, const PermutationMap&);
template std::vector<std::uint32_t> apply_permutation(const std::vector<std::uint32_t>&, const PermutationMap&);

std::string to_text(const PermutationMap& f) {
    std::ostringstream os;
    os << f.N << "\n";
    for (int r = 0; r < f.N; ++r) {
        for (int c = 0; c < f.N; ++c) {
            if (c > 0) os << " ";
            os << f.forward[static_cast<std::size_t>(r) * static_cast<std::size_t>(f.N) + static_cast<std::size_t>(c)];
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace sudoscram
