#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orpose {

inline constexpr int kNumJoints = 17;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }

/// The 17-joint COCO keypoint layout plus the index sets the rest of the
/// pipeline needs: lateral flip pairs and the 8 upper-body joints used for
/// 3D evaluation (shoulders, elbows, wrists, hips).
struct JointSchema {
    std::array<std::string, kNumJoints> names;
    std::vector<std::pair<int, int>> flip_pairs;  // (left, right)
    std::array<int, 8> upper_body_eval_set;
    int left_hip = 11;
    int right_hip = 12;

    static const JointSchema& coco();

    /// Throws std::invalid_argument if any structural invariant is broken.
    void validate() const;
};

/// 2D pose of one person in image coordinates. A joint with valid[j]=false
/// carries conf[j]=0 and its coordinates are meaningless.
struct PersonPose2D {
    std::array<Vec2, kNumJoints> coords{};
    std::array<double, kNumJoints> conf{};
    std::array<bool, kNumJoints> valid{};

    static PersonPose2D all_valid() {
        PersonPose2D p;
        p.valid.fill(true);
        p.conf.fill(1.0);
        return p;
    }
};

/// Root-relative 3D pose in millimeters; the pelvis (mean of the two hips)
/// sits at the origin.
struct PersonPose3D {
    std::array<Vec3, kNumJoints> coords{};
};

struct BoundingBox {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;
    double score = 1.0;

    double x2() const { return x + w; }
    double y2() const { return y + h; }
    double area() const { return w * h; }
    Vec2 center() const { return {x + 0.5 * w, y + 0.5 * h}; }
};

/// 17-channel spatial score map registered to a person box. Channel-major
/// storage: values[(j * K + gy) * K + gx].
struct HeatmapStack {
    int resolution = 56;
    BoundingBox box;
    std::vector<double> values;

    HeatmapStack() = default;
    HeatmapStack(int k, const BoundingBox& b)
        : resolution(k), box(b), values(static_cast<std::size_t>(kNumJoints) * k * k, 0.0) {}

    double& at(int joint, int gy, int gx) {
        return values[(static_cast<std::size_t>(joint) * resolution + gy) * resolution + gx];
    }
    double at(int joint, int gy, int gx) const {
        return values[(static_cast<std::size_t>(joint) * resolution + gy) * resolution + gx];
    }
};

}  // namespace orpose
