#include "orpose/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace orpose {

const JointSchema& JointSchema::coco() {
    static const JointSchema schema = [] {
        JointSchema s;
        s.names = {"nose",           "left_eye",      "right_eye",     "left_ear",
                   "right_ear",      "left_shoulder", "right_shoulder", "left_elbow",
                   "right_elbow",    "left_wrist",    "right_wrist",   "left_hip",
                   "right_hip",      "left_knee",     "right_knee",    "left_ankle",
                   "right_ankle"};
        s.flip_pairs = {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}, {13, 14}, {15, 16}};
        s.upper_body_eval_set = {5, 6, 7, 8, 9, 10, 11, 12};
        s.left_hip = 11;
        s.right_hip = 12;
        s.validate();
        return s;
    }();
    return schema;
}

void JointSchema::validate() const {
    for (const auto& n : names)
        if (n.empty())
            throw std::invalid_argument("JointSchema: empty joint name");
    if (flip_pairs.size() != 8)
        throw std::invalid_argument("JointSchema: expected 8 flip pairs");
    std::set<int> paired;
    for (auto [l, r] : flip_pairs) {
        if (l < 0 || l >= kNumJoints || r < 0 || r >= kNumJoints || l == r)
            throw std::invalid_argument("JointSchema: flip pair out of range");
        if (!paired.insert(l).second || !paired.insert(r).second)
            throw std::invalid_argument("JointSchema: joint appears in two flip pairs");
    }
    if (paired.count(0))
        throw std::invalid_argument("JointSchema: nose must not appear in a flip pair");
    std::set<int> upper(upper_body_eval_set.begin(), upper_body_eval_set.end());
    if (upper.size() != 8)
        throw std::invalid_argument("JointSchema: upper-body eval set must have 8 distinct joints");
    for (int j : upper_body_eval_set)
        if (j < 0 || j >= kNumJoints)
            throw std::invalid_argument("JointSchema: upper-body index out of range");
}

PersonPose2D flip_pose(const PersonPose2D& pose, double image_width, const JointSchema& schema) {
    if (!(image_width > 0.0))
        throw std::invalid_argument("flip_pose: width must be positive");
    PersonPose2D out = pose;
    for (int j = 0; j < kNumJoints; ++j)
        out.coords[j].x = image_width - 1.0 - pose.coords[j].x;
    for (auto [l, r] : schema.flip_pairs) {
        std::swap(out.coords[l], out.coords[r]);
        std::swap(out.conf[l], out.conf[r]);
        std::swap(out.valid[l], out.valid[r]);
    }
    return out;
}

PersonPose2D scale_pose(const PersonPose2D& pose, double factor) {
    if (!(factor > 0.0))
        throw std::invalid_argument("scale_pose: factor must be positive");
    PersonPose2D out = pose;
    for (auto& c : out.coords) {
        c.x *= factor;
        c.y *= factor;
    }
    return out;
}

BoundingBox flip_box(const BoundingBox& box, double image_width) {
    if (!(image_width > 0.0))
        throw std::invalid_argument("flip_box: width must be positive");
    BoundingBox out = box;
    // Right edge pixel x+w-1 mirrors onto the new left edge.
    out.x = image_width - box.x - box.w;
    return out;
}

BoundingBox scale_box(const BoundingBox& box, double factor) {
    if (!(factor > 0.0))
        throw std::invalid_argument("scale_box: factor must be positive");
    BoundingBox out = box;
    out.x *= factor;
    out.y *= factor;
    out.w *= factor;
    out.h *= factor;
    return out;
}

Vec3 pelvis_of(const std::array<Vec3, kNumJoints>& coords, const JointSchema& schema) {
    const Vec3& l = coords[schema.left_hip];
    const Vec3& r = coords[schema.right_hip];
    return {(l.x + r.x) * 0.5, (l.y + r.y) * 0.5, (l.z + r.z) * 0.5};
}

PersonPose3D root_center(const std::array<Vec3, kNumJoints>& pose_camera_frame,
                         const JointSchema& schema) {
    const Vec3 root = pelvis_of(pose_camera_frame, schema);
    if (!std::isfinite(root.x) || !std::isfinite(root.y) || !std::isfinite(root.z))
        throw std::invalid_argument("root_center: non-finite hip joint");
    PersonPose3D out;
    for (int j = 0; j < kNumJoints; ++j)
        out.coords[j] = pose_camera_frame[j] - root;
    return out;
}

PersonPose3D root_center(const PersonPose3D& pose, const JointSchema& schema) {
    return root_center(pose.coords, schema);
}

double iou(const BoundingBox& a, const BoundingBox& b) {
    const double ix = std::max(0.0, std::min(a.x2(), b.x2()) - std::max(a.x, b.x));
    const double iy = std::max(0.0, std::min(a.y2(), b.y2()) - std::max(a.y, b.y));
    const double inter = ix * iy;
    const double uni = a.area() + b.area() - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

}  // namespace orpose
