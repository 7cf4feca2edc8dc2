#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orpose {

/// Planar float image (CHW layout), values in [0, 1].
struct ImageF {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<float> data;

    ImageF() = default;
    ImageF(int w, int h, int c, float fill = 0.0f)
        : width(w), height(h), channels(c),
          data(static_cast<std::size_t>(w) * h * c, fill) {}

    float& at(int c, int y, int x) {
        return data[(static_cast<std::size_t>(c) * height + y) * width + x];
    }
    float at(int c, int y, int x) const {
        return data[(static_cast<std::size_t>(c) * height + y) * width + x];
    }
    bool empty() const { return data.empty(); }
};

/// Bilinear resample with half-pixel-centered sampling:
/// src = (dst + 0.5) * in/out - 0.5, edges clamped.
ImageF resize_bilinear(const ImageF& src, int out_width, int out_height);

/// Mirror horizontally (x -> width-1-x).
ImageF flip_horizontal(const ImageF& src);

void save_png(const ImageF& img, const std::string& path);
ImageF load_png(const std::string& path);

}  // namespace orpose
