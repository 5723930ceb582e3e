#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "graspgate/errors.hpp"
#include "graspgate/pose.hpp"

namespace graspgate {

// Node value used when nothing occupies space: the largest finite double, so
// "min with anything real" always prefers the real distance.
inline constexpr double kFreeSpaceDistance = std::numeric_limits<double>::max();

// Sentinel returned by clearance() for points outside the valid query region;
// forces any feasibility comparison against a positive margin to fail.
inline constexpr double kOutOfBoundsClearance = -std::numeric_limits<double>::infinity();

enum class ShapeKind { box, cylinder, sphere };

// One rigid solid with an exact closed-form signed distance. The pose places
// the shape's local frame in the world; a cylinder's axis is local +z.
struct PrimitiveShape {
  ShapeKind kind = ShapeKind::box;
  Eigen::Vector3d half_extents = Eigen::Vector3d::Zero();  // box only
  double radius = 0.0;       // cylinder, sphere
  double half_height = 0.0;  // cylinder only
  Pose pose;

  static PrimitiveShape make_box(const Eigen::Vector3d& half_extents, const Pose& pose);
  static PrimitiveShape make_cylinder(double radius, double half_height, const Pose& pose);
  static PrimitiveShape make_sphere(double radius, const Pose& pose);

  // Tight world-frame bounding box of the solid.
  void world_aabb(Eigen::Vector3d& lo, Eigen::Vector3d& hi) const;
};

// Exact signed distance to the shape surface: positive outside, negative
// inside, zero on the boundary.
double analytic_sdf(const PrimitiveShape& shape, const Eigen::Vector3d& point);

struct Aabb {
  Eigen::Vector3d lo = Eigen::Vector3d::Zero();
  Eigen::Vector3d hi = Eigen::Vector3d::Zero();

  bool contains(const Eigen::Vector3d& p) const {
    return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
  }
  Aabb expanded(double margin) const {
    return Aabb{lo.array() - margin, hi.array() + margin};
  }
};

// Occupancy of the operating environment as an ordered union of primitives.
// An explicitly empty world must be requested via free_space(); silently
// passing no primitives is treated as a modeling mistake.
struct EnvironmentModel {
  std::vector<PrimitiveShape> primitives;
  bool is_free_space = false;

  explicit EnvironmentModel(std::vector<PrimitiveShape> prims);
  static EnvironmentModel free_space();

 private:
  EnvironmentModel() = default;  // only free_space() may build an empty model
};

// Min over primitives of the analytic SDF; kFreeSpaceDistance for an empty
// world.
double analytic_sdf(const EnvironmentModel& env, const Eigen::Vector3d& point);

struct BakeConfig {
  // Reject bakes coarser than this (0 disables the check). Callers pass
  // d_safe here so a too-coarse grid cannot silently void the conservative
  // clearance guarantee.
  double max_resolution = 0.0;
  // Require every primitive, inflated by this margin, to fit inside the
  // requested bounds (0 disables). Callers pass gripper diagonal + d_safe.
  double required_margin = 0.0;
  int threads = 0;  // <= 0: use hardware concurrency
};

// Regular voxel grid of environment signed distances. Nodes are exact
// analytic values; between nodes query() interpolates trilinearly, which for
// a 1-Lipschitz field keeps |query - true| below the voxel edge. Immutable
// after bake; concurrent queries are safe.
class SdfGrid {
 public:
  double resolution() const { return resolution_; }
  const Eigen::Vector3d& origin() const { return origin_; }
  const std::array<std::uint32_t, 3>& dims() const { return dims_; }
  const std::vector<double>& values() const { return values_; }

  // Inclusive region where query() is defined. For baked grids this is
  // exactly the bounds the caller asked for (the lattice is padded one voxel
  // beyond them); grids rebuilt from a dump fall back to the node hull shrunk
  // by one voxel per side.
  const Aabb& query_region() const { return valid_; }

  double value_at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return values_[flat_index(i, j, k)];
  }

  Eigen::Vector3d node_position(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return origin_ + resolution_ * Eigen::Vector3d(i, j, k);
  }

  bool contains(const Eigen::Vector3d& p) const {
    return (p.array() >= valid_.lo.array() - kEdgeSlack).all() &&
           (p.array() <= valid_.hi.array() + kEdgeSlack).all();
  }

  // Trilinear interpolation of the 8 surrounding nodes. Throws OutOfBounds
  // outside query_region(); callers that want the infeasibility sentinel
  // instead should go through clearance().
  double query(const Eigen::Vector3d& p) const {
    if (!contains(p)) {
      raise(Errc::out_of_bounds, "query point outside grid query region");
    }
    return interpolate(p);
  }

  void dump(const std::string& path) const;
  static SdfGrid load(const std::string& path);

  static SdfGrid from_parts(const Eigen::Vector3d& origin, double resolution,
                            const std::array<std::uint32_t, 3>& dims,
                            std::vector<double> values);

 private:
  friend SdfGrid bake(const EnvironmentModel&, const Aabb&, double, const BakeConfig&);

  // Absolute slack absorbing floating-point wobble of points computed to lie
  // exactly on the region boundary.
  static constexpr double kEdgeSlack = 1e-12;

  SdfGrid() = default;

  std::size_t flat_index(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(dims_[0]) *
               (static_cast<std::size_t>(j) + static_cast<std::size_t>(dims_[1]) * k);
  }

  double interpolate(const Eigen::Vector3d& p) const {
    double inv = 1.0 / resolution_;
    double ux = (p.x() - origin_.x()) * inv;
    double uy = (p.y() - origin_.y()) * inv;
    double uz = (p.z() - origin_.z()) * inv;
    auto cell = [](double u, std::uint32_t dim) {
      auto i = static_cast<std::int64_t>(u);
      if (i < 0) i = 0;
      if (i > static_cast<std::int64_t>(dim) - 2) i = static_cast<std::int64_t>(dim) - 2;
      return static_cast<std::uint32_t>(i);
    };
    std::uint32_t i = cell(ux, dims_[0]);
    std::uint32_t j = cell(uy, dims_[1]);
    std::uint32_t k = cell(uz, dims_[2]);
    double fx = ux - i, fy = uy - j, fz = uz - k;
    std::size_t base = flat_index(i, j, k);
    std::size_t sx = 1;
    std::size_t sy = dims_[0];
    std::size_t sz = static_cast<std::size_t>(dims_[0]) * dims_[1];
    const double* v = values_.data() + base;
    double c00 = v[0] + fx * (v[sx] - v[0]);
    double c10 = v[sy] + fx * (v[sy + sx] - v[sy]);
    double c01 = v[sz] + fx * (v[sz + sx] - v[sz]);
    double c11 = v[sz + sy] + fx * (v[sz + sy + sx] - v[sz + sy]);
    double c0 = c00 + fy * (c10 - c00);
    double c1 = c01 + fy * (c11 - c01);
    double out = c0 + fz * (c1 - c0);
    // Free-space grids hold the max-double sentinel; interpolation between
    // sentinel nodes must not manufacture infinities.
    if (out > kFreeSpaceDistance) out = kFreeSpaceDistance;
    return out;
  }

  Eigen::Vector3d origin_ = Eigen::Vector3d::Zero();
  double resolution_ = 0.0;
  std::array<std::uint32_t, 3> dims_ = {0, 0, 0};
  Aabb valid_;
  std::vector<double> values_;
};

// Evaluate the environment on a node lattice covering `bounds` (padded by one
// voxel per side so the whole requested box is queryable). Node values are
// the exact analytic min over primitives; identical for any worker count.
SdfGrid bake(const EnvironmentModel& env, const Aabb& bounds, double resolution,
             const BakeConfig& cfg = {});

// Minimum grid distance over a set of world points: the clearance phi of a
// posed body. Any out-of-bounds point short-circuits to the -inf sentinel.
// `stop_below`: return early once the running minimum is provably below it
// (callers that only need a feasibility verdict pass their threshold).
double clearance(const SdfGrid& grid, std::span<const Eigen::Vector3d> points,
                 double stop_below = -std::numeric_limits<double>::infinity());

}  // namespace graspgate
