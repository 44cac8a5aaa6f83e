#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aeronav/errors.hpp"

namespace aeronav {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// Wrap a heading to [0, 360).
inline double normalize_heading(double deg) {
    double h = std::fmod(deg, 360.0);
    if (h < 0.0) h += 360.0;
    // fmod can yield 360.0 - eps rounding back up; pin the boundary
    if (h >= 360.0) h = 0.0;
    return h;
}

/// Signed smallest rotation from `from` to `to`, in (-180, 180].
inline double heading_delta(double from, double to) {
    double d = std::fmod(to - from, 360.0);
    if (d <= -180.0) d += 360.0;
    if (d > 180.0) d -= 360.0;
    return d;
}

/// Rotate about world z by `deg` (counter-clockwise, seen from above).
inline Vec3 rotate_yaw(const Vec3& v, double deg) {
    const double c = std::cos(deg_to_rad(deg));
    const double s = std::sin(deg_to_rad(deg));
    return {v.x * c - v.y * s, v.x * s + v.y * c, v.z};
}

/// World frame: x east, y north, z up. Heading 0 = +x, CCW positive.
struct Pose {
    Vec3 position;
    double heading_deg = 0.0;  // normalized to [0, 360)

    Vec3 heading_dir() const {
        return {std::cos(deg_to_rad(heading_deg)), std::sin(deg_to_rad(heading_deg)), 0.0};
    }
};

inline Pose make_pose(const Vec3& position, double heading_deg) {
    if (!position.finite()) throw InvalidArgument("pose position must be finite");
    return Pose{position, normalize_heading(heading_deg)};
}

struct CameraIntrinsics {
    double fx = 0.0;
    double fy = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    int width = 0;
    int height = 0;
};

/// Square-pixel pinhole from a horizontal FOV. fx = fy = (w/2)/tan(fov/2),
/// principal point at (w/2, h/2).
inline CameraIntrinsics intrinsics_from_fov(double fov_degrees, int width, int height) {
    if (!(fov_degrees > 0.0 && fov_degrees < 180.0))
        throw InvalidArgument("fov must be in (0, 180), got " + std::to_string(fov_degrees));
    if (width < 1 || height < 1)
        throw InvalidArgument("image dimensions must be >= 1");
    const double f = (width / 2.0) / std::tan(deg_to_rad(fov_degrees) / 2.0);
    return CameraIntrinsics{f, f, width / 2.0, height / 2.0, width, height};
}

using LabelId = std::uint32_t;
using LabelTable = std::map<LabelId, std::string>;  // id -> caption; 0 reserved for "unlabeled"

/// One rendered view: planar depth (camera-z metres, 0 = no return) and a
/// per-pixel label grid, both row-major height x width. `view_offset_deg`
/// is the camera yaw relative to the agent heading.
struct DepthView {
    int width = 0;
    int height = 0;
    std::vector<double> depth;
    std::vector<LabelId> semantic;
    double view_offset_deg = 0.0;

    double depth_at(int u, int v) const { return depth[static_cast<std::size_t>(v) * width + u]; }
    LabelId label_at(int u, int v) const { return semantic[static_cast<std::size_t>(v) * width + u]; }
};

inline DepthView make_depth_view(int width, int height, double view_offset_deg) {
    DepthView v;
    v.width = width;
    v.height = height;
    v.depth.assign(static_cast<std::size_t>(width) * height, 0.0);
    v.semantic.assign(static_cast<std::size_t>(width) * height, 0);
    v.view_offset_deg = view_offset_deg;
    return v;
}

/// The five panoramic view offsets relative to the agent heading, degrees.
inline const std::vector<double>& panorama_offsets() {
    static const std::vector<double> offsets = {-90.0, -45.0, 0.0, 45.0, 90.0};
    return offsets;
}

struct LabeledPoint {
    Vec3 position;
    LabelId label = 0;
};

struct SemanticPointCloud {
    std::vector<LabeledPoint> points;
    LabelTable label_table;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
};

// Camera convention: image u right, v down; camera frame z forward, x right,
// y down. Fixed axis map: camera z -> heading direction, camera x -> the
// heading's right (xy rotation by -90), camera y -> world -z.
inline Vec3 camera_to_world_axes(const Vec3& cam) { return {cam.z, -cam.x, -cam.y}; }
inline Vec3 world_to_camera_axes(const Vec3& w) { return {-w.y, -w.z, w.x}; }

/// Back-project pixel (u, v) at planar depth z into the world frame for an
/// agent at `pose` looking along heading + view_offset.
inline Vec3 pixel_to_world(double u, double v, double z, const CameraIntrinsics& k,
                           const Pose& pose, double view_offset_deg) {
    const Vec3 cam{z * (u - k.cx) / k.fx, z * (v - k.cy) / k.fy, z};
    return rotate_yaw(camera_to_world_axes(cam), pose.heading_deg + view_offset_deg) + pose.position;
}

/// Inverse of pixel_to_world: (u, v, planar depth). Points behind the
/// camera come back with depth <= 0.
inline Vec3 world_to_pixel(const Vec3& world, const CameraIntrinsics& k,
                           const Pose& pose, double view_offset_deg) {
    const Vec3 local = rotate_yaw(world - pose.position, -(pose.heading_deg + view_offset_deg));
    const Vec3 cam = world_to_camera_axes(local);
    return {k.cx + k.fx * cam.x / cam.z, k.cy + k.fy * cam.y / cam.z, cam.z};
}

/// Project every labeled pixel with positive depth into a world-frame
/// semantic point cloud. Pixels with depth 0 or label 0 are skipped.
inline SemanticPointCloud project_view(const DepthView& view, const CameraIntrinsics& k,
                                       const Pose& pose, const LabelTable& labels) {
    if (view.width != k.width || view.height != k.height)
        throw InvalidArgument("view dimensions do not match intrinsics");
    if (view.depth.size() != static_cast<std::size_t>(view.width) * view.height ||
        view.semantic.size() != view.depth.size())
        throw InvalidArgument("view grids do not match stated dimensions");

    SemanticPointCloud cloud;
    cloud.label_table = labels;
    for (int v = 0; v < view.height; ++v) {
        for (int u = 0; u < view.width; ++u) {
            const double z = view.depth_at(u, v);
            const LabelId label = view.label_at(u, v);
            if (z <= 0.0 || label == 0) continue;
            cloud.points.push_back({pixel_to_world(u, v, z, k, pose, view.view_offset_deg), label});
        }
    }
    return cloud;
}

/// Concatenate view clouds into the panoramic local map. Plain union: no
/// deduplication, input order preserved. Label tables must agree wherever
/// they overlap.
inline SemanticPointCloud fuse_panorama(const std::vector<SemanticPointCloud>& views) {
    SemanticPointCloud fused;
    for (const auto& view : views) {
        for (const auto& [id, caption] : view.label_table) {
            auto [it, inserted] = fused.label_table.emplace(id, caption);
            if (!inserted && it->second != caption)
                throw InvalidArgument("conflicting label tables: id " + std::to_string(id) +
                                      " is both '" + it->second + "' and '" + caption + "'");
        }
        fused.points.insert(fused.points.end(), view.points.begin(), view.points.end());
    }
    return fused;
}

}  // namespace aeronav
