#include "sudoscram/image.hpp"

#include <string>

#include "sudoscram/error.hpp"

namespace sudoscram {

Image Image::zeros(int W, int H, int nB) {
    return Image{W, H, nB,
                 std::vector<std::uint32_t>(static_cast<std::size_t>(W) * static_cast<std::size_t>(H), 0u)};
}

int channel_count(const Image& img) { return img.nB == 24 ? 3 : 1; }

bool is_supported_depth(int nB) { return nB == 1 || nB == 8 || nB == 16 || nB == 24; }

std::uint32_t max_sample(int nB) { return nB >= 32 ? ~0u : (1u << nB) - 1u; }

void check_image(const Image& img) {
    if (img.W < 1 || img.H < 1) throw DomainError("image dimensions must be positive");
    if (!is_supported_depth(img.nB))
        throw DomainError("unsupported bit depth " + std::to_string(img.nB) + " (expected 1, 8, 16, or 24)");
    if (img.px.size() != static_cast<std::size_t>(img.W) * static_cast<std::size_t>(img.H))
        throw DomainError("pixel buffer size does not match dimensions");
    const std::uint32_t cap = max_sample(img.nB);
    for (std::uint32_t v : img.px)
        if (v > cap) throw DomainError("sample value exceeds bit depth");
}

}  // namespace sudoscram
