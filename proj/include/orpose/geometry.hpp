#pragma once

#include "orpose/types.hpp"

namespace orpose {

/// Mirror a pose horizontally using the pixel-center convention
/// x' = width - 1 - x, swapping coordinates, confidences and validity of
/// every lateral joint pair. Involution: flip_pose(flip_pose(p)) == p.
PersonPose2D flip_pose(const PersonPose2D& pose, double image_width, const JointSchema& schema);

/// Multiply coordinates by `factor`; confidence and validity are untouched.
PersonPose2D scale_pose(const PersonPose2D& pose, double factor);

/// Mirror a box horizontally in an image of the given width (same
/// pixel-center convention as flip_pose).
BoundingBox flip_box(const BoundingBox& box, double image_width);

BoundingBox scale_box(const BoundingBox& box, double factor);

/// Pelvis = mean of the two hip joints.
Vec3 pelvis_of(const std::array<Vec3, kNumJoints>& coords, const JointSchema& schema);

/// Translate a camera-frame pose so the pelvis lands at the origin.
/// Throws std::invalid_argument when a hip coordinate is not finite.
PersonPose3D root_center(const std::array<Vec3, kNumJoints>& pose_camera_frame,
                         const JointSchema& schema);
PersonPose3D root_center(const PersonPose3D& pose, const JointSchema& schema);

double iou(const BoundingBox& a, const BoundingBox& b);

}  // namespace orpose
