#pragma once

#include <cstdint>
#include <vector>

namespace sudoscram {

/// Raster of W rows by H columns (matrix convention: W counts rows).
/// Depth nB is the number of bit-planes per pixel: 1 (bilevel), 8 or 16
/// (grayscale), or 24 (RGB packed as R | G<<8 | B<<16). Plane 1 is the
/// least significant bit, so plane (ch-1)*8 + b is bit b of channel ch.
struct Image {
    int W = 0;
    int H = 0;
    int nB = 0;
    std::vector<std::uint32_t> px;  // row-major, px[(r-1)*H + (c-1)]

    std::uint32_t at(int r, int c) const { return px[index(r, c)]; }
    std::uint32_t& at(int r, int c) { return px[index(r, c)]; }
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(H) + static_cast<std::size_t>(c - 1);
    }
    std::size_t pixel_count() const { return px.size(); }

    static Image zeros(int W, int H, int nB);

    friend bool operator==(const Image& a, const Image& b) = default;
};

int channel_count(const Image& img);           // 3 for nB = 24, otherwise 1
bool is_supported_depth(int nB);
std::uint32_t max_sample(int nB);              // 2^nB - 1 on the packed value

void check_image(const Image& img);            // dims >= 1, depth supported, samples in range

}  // namespace sudoscram
