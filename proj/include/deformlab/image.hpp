#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace deformlab {

/// 8-bit single-channel raster image, row-major, pixels[row * width + col].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h),
          pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    std::uint8_t& at(int col, int row) {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t at(int col, int row) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }

    bool empty() const { return width <= 0 || height <= 0; }
    std::size_t size() const { return pixels.size(); }
};

}  // namespace deformlab
