#pragma once

#include "orpose/types.hpp"

namespace orpose {

struct HeatmapTarget {
    int cell = 0;        // flat index in [0, K*K)
    bool inside = false; // false when the keypoint lies outside the box
};

/// One-hot spatial target for the cross-entropy keypoint losses.
/// cell = clamp(floor((y-box.y)/box.h*K), 0, K-1) * K
///      + clamp(floor((x-box.x)/box.w*K), 0, K-1).
/// Joints outside the box report inside=false and are excluded from losses.
HeatmapTarget encode_heatmap_target(const Vec2& keypoint, const BoundingBox& box, int grid_size);

/// Arg-max decode: per channel, the maximal cell (ties break to the lowest
/// flat index) maps to its center in image coordinates through the stack's
/// box; confidence is the softmax-normalized maximum of the channel.
PersonPose2D decode_heatmap(const HeatmapStack& hm);

}  // namespace orpose
