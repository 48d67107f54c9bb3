#pragma once

#include <vector>

#include "sudoscram/error.hpp"
#include "sudoscram/image.hpp"
#include "sudoscram/key_schedule.hpp"
#include "sudoscram/representations.hpp"

namespace sudoscram {

/// Cyclic rotation bringing row w and column h to the top-left corner
/// (1-based, 1 <= w <= W, 1 <= h <= H). w = h = 1 is the identity.
template <class T>
std::vector<T> shift_grid(const std::vector<T>& cells, int W, int H, int w, int h) {
    if (W < 1 || H < 1 || static_cast<std::size_t>(W) * static_cast<std::size_t>(H) != cells.size())
        throw DomainError("shift_grid: bad dimensions");
    if (w < 1 || w > W || h < 1 || h > H) throw DomainError("shift parameters outside 1..W / 1..H");
    std::vector<T> out(cells.size());
    for (int r = 0; r < W; ++r) {
        const int sr = (r + w - 1) % W;
        for (int c = 0; c < H; ++c) {
            const int sc = (c + h - 1) % H;
            out[static_cast<std::size_t>(r) * H + c] = cells[static_cast<std::size_t>(sr) * H + sc];
        }
    }
    return out;
}

template <class T>
std::vector<T> unshift_grid(const std::vector<T>& cells, int W, int H, int w, int h) {
    if (W < 1 || H < 1 || static_cast<std::size_t>(W) * static_cast<std::size_t>(H) != cells.size())
        throw DomainError("unshift_grid: bad dimensions");
    if (w < 1 || w > W || h < 1 || h > H) throw DomainError("shift parameters outside 1..W / 1..H");
    std::vector<T> out(cells.size());
    for (int r = 0; r < W; ++r) {
        const int dr = (r + w - 1) % W;
        for (int c = 0; c < H; ++c) {
            const int dc = (c + h - 1) % H;
            out[static_cast<std::size_t>(dr) * H + dc] = cells[static_cast<std::size_t>(r) * H + c];
        }
    }
    return out;
}

Image img_shift(const Image& x, int w, int h);
Image img_unshift(const Image& y, int w, int h);

/// One scrambling block, rows r0..r1 and columns c0..c1, 1-based inclusive.
struct BlockRect {
    int r0, r1, c0, c1;
    friend bool operator==(const BlockRect& a, const BlockRect& b) = default;
};

/// Row-major tiling by N x N blocks; the last block of a row or column is
/// pinned to the image edge and may overlap its predecessor.
std::vector<BlockRect> block_tiling(int W, int H, int N);

/// One scrambler round: rotate by (w, h), then permute every tile in order,
/// plane l through plane_maps[l-1]. Tiles are rewritten in place, so an
/// overlapped tile sees its predecessor's output.
Image blockwise_scramble(const Image& x, const std::vector<PermutationMap>& plane_maps, int N, int w, int h);

/// Exact inverse of blockwise_scramble given the same forward maps.
Image blockwise_descramble(const Image& y, const std::vector<PermutationMap>& plane_maps, int N, int w, int h);

/// Sizing of the per-round Sudoku: Blockwise derives N from block_size();
/// FullFrame uses the largest square side that fits min(W,H), for
/// whole-image single-bijection demos.
enum class SudokuSizing { Blockwise, FullFrame };

struct ScrambleOptions {
    SudokuSizing sizing = SudokuSizing::Blockwise;
};

Image scramble(const Image& x, const ScramblerKey& key, const ScrambleOptions& opts = {});
Image descramble(const Image& y, const ScramblerKey& key, const ScrambleOptions& opts = {});

}  // namespace sudoscram
