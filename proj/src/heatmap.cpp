#include "orpose/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orpose {

HeatmapTarget encode_heatmap_target(const Vec2& keypoint, const BoundingBox& box, int grid_size) {
    if (grid_size < 1)
        throw std::invalid_argument("encode_heatmap_target: grid size must be >= 1");
    if (!(box.w > 0.0) || !(box.h > 0.0))
        throw std::invalid_argument("encode_heatmap_target: degenerate box");

    const double fx = (keypoint.x - box.x) / box.w * grid_size;
    const double fy = (keypoint.y - box.y) / box.h * grid_size;
    const int gx = std::clamp(static_cast<int>(std::floor(fx)), 0, grid_size - 1);
    const int gy = std::clamp(static_cast<int>(std::floor(fy)), 0, grid_size - 1);

    HeatmapTarget t;
    t.cell = gy * grid_size + gx;
    t.inside = keypoint.x >= box.x && keypoint.x < box.x + box.w && keypoint.y >= box.y &&
               keypoint.y < box.y + box.h;
    return t;
}

PersonPose2D decode_heatmap(const HeatmapStack& hm) {
    const int k = hm.resolution;
    if (k < 1 || !(hm.box.w > 0.0) || !(hm.box.h > 0.0))
        throw std::invalid_argument("decode_heatmap: stack not registered to a valid box");

    PersonPose2D pose;
    const int cells = k * k;
    for (int j = 0; j < kNumJoints; ++j) {
        const double* ch = &hm.values[static_cast<std::size_t>(j) * cells];
        int best = 0;
        for (int c = 1; c < cells; ++c)
            if (ch[c] > ch[best])
                best = c;  // ties keep the lowest flat index

        const int gx = best % k;
        const int gy = best / k;
        pose.coords[j].x = hm.box.x + (gx + 0.5) * hm.box.w / k;
        pose.coords[j].y = hm.box.y + (gy + 0.5) * hm.box.h / k;

        // Softmax-normalized maximum, computed stably around the max.
        double denom = 0.0;
        for (int c = 0; c < cells; ++c)
            denom += std::exp(ch[c] - ch[best]);
        pose.conf[j] = 1.0 / denom;
        pose.valid[j] = true;
    }
    return pose;
}

}  // namespace orpose
