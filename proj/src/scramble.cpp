#include "sudoscram/scramble.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sudoscram {

namespace {

constexpr int kRounds = 12;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int isqrt(int v) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

void check_plane_maps(const Image& x, const std::vector<PermutationMap>& maps, int N) {
    if (static_cast<int>(maps.size()) != x.nB)
        throw DomainError("expected one permutation per bit-plane (" + std::to_string(x.nB) + ")");
    const std::size_t cells = static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
    for (const auto& m : maps)
        if (m.N != N || m.forward.size() != cells)
            throw DomainError("permutation size does not match block size N=" + std::to_string(N));
    if (std::min(x.W, x.H) < N) throw DomainError("image too small for block size N=" + std::to_string(N));
}

struct EngineSetup {
    int N, n, w, h;
    // round-major: maps[u-1][l-1] scrambles plane l in round u
    std::vector<std::vector<PermutationMap>> maps;
};

EngineSetup prepare(const Image& x, const ScramblerKey& key, const ScrambleOptions& opts) {
    check_image(x);
    if (std::min(x.W, x.H) < 16)
        throw DomainError("image too small: min(W,H) = " + std::to_string(std::min(x.W, x.H)) + ", need at least 16");

    EngineSetup setup;
    if (opts.sizing == SudokuSizing::Blockwise) {
        BlockSize bs = block_size(x.W, x.H);
        setup.N = bs.N;
        setup.n = bs.n;
    } else {
        setup.n = isqrt(std::min(x.W, x.H));
        setup.N = setup.n * setup.n;
    }
    setup.w = ceil_div(x.W, kRounds);
    setup.h = ceil_div(x.H, kRounds);

    std::vector<RoundPlan> plans(static_cast<std::size_t>(x.nB));
    for (int l = 1; l <= x.nB; ++l) plans[static_cast<std::size_t>(l - 1)] = parameter_generator(key, l);

    setup.maps.resize(kRounds);
    for (int u = 1; u <= kRounds; ++u) {
        SudokuMatrix s = generate_sudoku(round_seed(key, u), setup.n);
        auto& round_maps = setup.maps[static_cast<std::size_t>(u - 1)];
        round_maps.reserve(static_cast<std::size_t>(x.nB));
        for (int l = 1; l <= x.nB; ++l) {
            const PlanEntry& e = plans[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(u - 1)];
            round_maps.push_back(build_bijection(
                s, e.p, e.f, e.param_to_fixed ? MapDirection::ParamToFixed : MapDirection::FixedToParam));
        }
    }
    return setup;
}

}  // namespace

Image img_shift(const Image& x, int w, int h) {
    Image y = x;
    y.px = shift_grid(x.px, x.W, x.H, w, h);
    return y;
}

Image img_unshift(const Image& y, int w, int h) {
    Image x = y;
    x.px = unshift_grid(y.px, y.W, y.H, w, h);
    return x;
}

std::vector<BlockRect> block_tiling(int W, int H, int N) {
    if (N < 1) throw DomainError("block size must be positive");
    if (W < N || H < N)
        throw DomainError("image too small: " + std::to_string(W) + "x" + std::to_string(H) +
                          " cannot hold a " + std::to_string(N) + "x" + std::to_string(N) + " block");
    const int n_row = ceil_div(W, N);
    const int n_col = ceil_div(H, N);
    std::vector<BlockRect> blocks;
    blocks.reserve(static_cast<std::size_t>(n_row) * static_cast<std::size_t>(n_col));
    for (int i = 1; i <= n_row; ++i) {
        const int r0 = i < n_row ? (i - 1) * N + 1 : W - N + 1;
        const int r1 = i < n_row ? i * N : W;
        for (int j = 1; j <= n_col; ++j) {
            const int c0 = j < n_col ? (j - 1) * N + 1 : H - N + 1;
            const int c1 = j < n_col ? j * N : H;
            blocks.push_back({r0, r1, c0, c1});
        }
    }
    return blocks;
}

Image blockwise_scramble(const Image& x, const std::vector<PermutationMap>& plane_maps, int N, int w, int h) {
    check_plane_maps(x, plane_maps, N);
    Image y = img_shift(x, w, h);
    const std::size_t cells = static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
    std::vector<std::uint32_t> in(cells), out(cells);
    for (const BlockRect& blk : block_tiling(y.W, y.H, N)) {
        std::size_t k = 0;
        for (int r = blk.r0; r <= blk.r1; ++r)
            for (int c = blk.c0; c <= blk.c1; ++c) in[k++] = y.at(r, c);
        std::fill(out.begin(), out.end(), 0u);
        for (int l = 0; l < x.nB; ++l) {
            const auto& fwd = plane_maps[static_cast<std::size_t>(l)].forward;
            for (std::size_t pos = 0; pos < cells; ++pos)
                out[fwd[pos]] |= ((in[pos] >> l) & 1u) << l;
        }
        k = 0;
        for (int r = blk.r0; r <= blk.r1; ++r)
            for (int c = blk.c0; c <= blk.c1; ++c) y.at(r, c) = out[k++];
    }
    return y;
}

Image blockwise_descramble(const Image& y, const std::vector<PermutationMap>& plane_maps, int N, int w, int h) {
    check_plane_maps(y, plane_maps, N);
    Image x = y;
    const std::size_t cells = static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
    std::vector<std::uint32_t> in(cells), out(cells);
    auto blocks = block_tiling(x.W, x.H, N);
    // Undo the tiles back to front; reading through the forward map inverts
    // each per-plane permutation without materializing its inverse.
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        std::size_t k = 0;
        for (int r = it->r0; r <= it->r1; ++r)
            for (int c = it->c0; c <= it->c1; ++c) in[k++] = x.at(r, c);
        std::fill(out.begin(), out.end(), 0u);
        for (int l = 0; l < y.nB; ++l) {
            const auto& fwd = plane_maps[static_cast<std::size_t>(l)].forward;
            for (std::size_t pos = 0; pos < cells; ++pos)
                out[pos] |= ((in[fwd[pos]] >> l) & 1u) << l;
        }
        k = 0;
        for (int r = it->r0; r <= it->r1; ++r)
            for (int c = it->c0; c <= it->c1; ++c) x.at(r, c) = out[k++];
    }
    return img_unshift(x, w, h);
}

Image scramble(const Image& x, const ScramblerKey& key, const ScrambleOptions& opts) {
    EngineSetup setup = prepare(x, key, opts);
    Image y = x;
    for (int u = 1; u <= kRounds; ++u)
        y = blockwise_scramble(y, setup.maps[static_cast<std::size_t>(u - 1)], setup.N, setup.w, setup.h);
    return y;
}

Image descramble(const Image& y, const ScramblerKey& key, const ScrambleOptions& opts) {
    EngineSetup setup = prepare(y, key, opts);
    Image x = y;
    for (int u = kRounds; u >= 1; --u)
        x = blockwise_descramble(x, setup.maps[static_cast<std::size_t>(u - 1)], setup.N, setup.w, setup.h);
    return x;
}

}  // namespace sudoscram
