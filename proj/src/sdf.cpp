#include "graspgate/sdf.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "graspgate/parallel.hpp"

namespace graspgate {

namespace {

void check_positive(double value, const char* what) {
  if (!(value > 0.0)) {
    raise(Errc::invalid_dimension, std::string(what) + " must be strictly positive");
  }
}

}  // namespace

PrimitiveShape PrimitiveShape::make_box(const Eigen::Vector3d& half_extents, const Pose& pose) {
  check_positive(half_extents.x(), "box half extent x");
  check_positive(half_extents.y(), "box half extent y");
  check_positive(half_extents.z(), "box half extent z");
  PrimitiveShape s;
  s.kind = ShapeKind::box;
  s.half_extents = half_extents;
  s.pose = pose;
  return s;
}

PrimitiveShape PrimitiveShape::make_cylinder(double radius, double half_height,
                                             const Pose& pose) {
  check_positive(radius, "cylinder radius");
  check_positive(half_height, "cylinder half height");
  PrimitiveShape s;
  s.kind = ShapeKind::cylinder;
  s.radius = radius;
  s.half_height = half_height;
  s.pose = pose;
  return s;
}

PrimitiveShape PrimitiveShape::make_sphere(double radius, const Pose& pose) {
  check_positive(radius, "sphere radius");
  PrimitiveShape s;
  s.kind = ShapeKind::sphere;
  s.radius = radius;
  s.pose = pose;
  return s;
}

void PrimitiveShape::world_aabb(Eigen::Vector3d& lo, Eigen::Vector3d& hi) const {
  const Eigen::Matrix3d& r = pose.rotation();
  const Eigen::Vector3d& t = pose.translation();
  Eigen::Vector3d half;
  switch (kind) {
    case ShapeKind::box:
      half = r.cwiseAbs() * half_extents;
      break;
    case ShapeKind::cylinder: {
      // Per world axis i: |axis_i| carries the half-height, the orthogonal
      // remainder carries the radius.
      Eigen::Vector3d axis = r.col(2);
      for (int i = 0; i < 3; ++i) {
        double a = std::abs(axis[i]);
        double ortho = std::sqrt(std::max(0.0, 1.0 - a * a));
        half[i] = half_height * a + radius * ortho;
      }
      break;
    }
    case ShapeKind::sphere:
      half = Eigen::Vector3d::Constant(radius);
      break;
  }
  lo = t - half;
  hi = t + half;
}

double analytic_sdf(const PrimitiveShape& shape, const Eigen::Vector3d& point) {
  // Work in the shape's local frame.
  Eigen::Vector3d p = shape.pose.rotation().transpose() * (point - shape.pose.translation());
  switch (shape.kind) {
    case ShapeKind::box: {
      Eigen::Vector3d q = p.cwiseAbs() - shape.half_extents;
      double outside = q.cwiseMax(0.0).norm();
      double inside = std::min(q.maxCoeff(), 0.0);
      return outside + inside;
    }
    case ShapeKind::cylinder: {
      double dr = std::hypot(p.x(), p.y()) - shape.radius;
      double dz = std::abs(p.z()) - shape.half_height;
      double outside = std::hypot(std::max(dr, 0.0), std::max(dz, 0.0));
      double inside = std::min(std::max(dr, dz), 0.0);
      return outside + inside;
    }
    case ShapeKind::sphere:
      return p.norm() - shape.radius;
  }
  return kFreeSpaceDistance;
}

EnvironmentModel::EnvironmentModel(std::vector<PrimitiveShape> prims)
    : primitives(std::move(prims)) {
  if (primitives.empty()) {
    raise(Errc::empty_set,
          "environment has no primitives; use EnvironmentModel::free_space() for an empty world");
  }
}

EnvironmentModel EnvironmentModel::free_space() {
  EnvironmentModel env;
  env.is_free_space = true;
  return env;
}

double analytic_sdf(const EnvironmentModel& env, const Eigen::Vector3d& point) {
  double best = kFreeSpaceDistance;
  for (const PrimitiveShape& s : env.primitives) {
    best = std::min(best, analytic_sdf(s, point));
  }
  return best;
}

SdfGrid SdfGrid::from_parts(const Eigen::Vector3d& origin, double resolution,
                            const std::array<std::uint32_t, 3>& dims,
                            std::vector<double> values) {
  check_positive(resolution, "grid resolution");
  for (int a = 0; a < 3; ++a) {
    if (dims[a] < 2) raise(Errc::bounds_too_small, "grid needs at least 2 nodes per axis");
  }
  std::size_t expected =
      static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  if (values.size() != expected) {
    raise(Errc::parse_error, "grid value count does not match dims");
  }
  SdfGrid g;
  g.origin_ = origin;
  g.resolution_ = resolution;
  g.dims_ = dims;
  g.values_ = std::move(values);
  g.valid_.lo = origin + Eigen::Vector3d::Constant(resolution);
  g.valid_.hi = origin + resolution * Eigen::Vector3d(dims[0] - 2, dims[1] - 2, dims[2] - 2);
  return g;
}

SdfGrid bake(const EnvironmentModel& env, const Aabb& bounds, double resolution,
             const BakeConfig& cfg) {
  check_positive(resolution, "bake resolution");
  if (cfg.max_resolution > 0.0 && resolution > cfg.max_resolution) {
    std::ostringstream msg;
    msg << "bake resolution " << resolution << " exceeds ceiling " << cfg.max_resolution
        << "; the conservative clearance bound would not hold";
    raise(Errc::resolution_too_coarse, msg.str());
  }
  if (!((bounds.hi.array() > bounds.lo.array()).all())) {
    raise(Errc::bounds_too_small, "bake bounds must have positive extent on every axis");
  }
  if (cfg.required_margin > 0.0 && !env.is_free_space) {
    for (std::size_t idx = 0; idx < env.primitives.size(); ++idx) {
      Eigen::Vector3d lo, hi;
      env.primitives[idx].world_aabb(lo, hi);
      lo.array() -= cfg.required_margin;
      hi.array() += cfg.required_margin;
      if ((lo.array() < bounds.lo.array()).any() || (hi.array() > bounds.hi.array()).any()) {
        std::ostringstream msg;
        msg << "primitive " << idx << " inflated by " << cfg.required_margin
            << " m exits the bake bounds";
        raise(Errc::bounds_too_small, msg.str());
      }
    }
  }

  // One-voxel pad on every side so the caller's full box stays queryable
  // after the interpolation stencil eats a voxel at each border.
  std::array<std::uint32_t, 3> dims;
  for (int a = 0; a < 3; ++a) {
    double span = bounds.hi[a] - bounds.lo[a];
    auto steps = static_cast<std::int64_t>(std::ceil(span / resolution - 1e-9));
    if (steps < 1) steps = 1;
    dims[a] = static_cast<std::uint32_t>(steps + 3);
  }
  Eigen::Vector3d origin = bounds.lo - Eigen::Vector3d::Constant(resolution);

  std::size_t total = static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  std::vector<double> values(total);
  if (env.is_free_space) {
    std::fill(values.begin(), values.end(), kFreeSpaceDistance);
  } else {
    const std::size_t plane = static_cast<std::size_t>(dims[0]) * dims[1];
    parallel_for(static_cast<std::int64_t>(total), cfg.threads,
                 [&](std::int64_t begin, std::int64_t end) {
                   for (std::int64_t f = begin; f < end; ++f) {
                     auto uf = static_cast<std::size_t>(f);
                     std::uint32_t k = static_cast<std::uint32_t>(uf / plane);
                     std::size_t rem = uf % plane;
                     std::uint32_t j = static_cast<std::uint32_t>(rem / dims[0]);
                     std::uint32_t i = static_cast<std::uint32_t>(rem % dims[0]);
                     Eigen::Vector3d p = origin + resolution * Eigen::Vector3d(i, j, k);
                     values[uf] = analytic_sdf(env, p);
                   }
                 });
  }
  SdfGrid grid = SdfGrid::from_parts(origin, resolution, dims, std::move(values));
  // The padded lattice could serve a slightly larger region, but the contract
  // is "the caller's box is queryable"; clamping to it keeps every consumer
  // (filter, oracle, labeler) on one shared bounds policy.
  grid.valid_ = bounds;
  return grid;
}

double clearance(const SdfGrid& grid, std::span<const Eigen::Vector3d> points,
                 double stop_below) {
  if (points.empty()) {
    raise(Errc::empty_point_set, "clearance needs at least one body point");
  }
  double best = kFreeSpaceDistance;
  for (const Eigen::Vector3d& p : points) {
    if (!grid.contains(p)) return kOutOfBoundsClearance;
    double d = grid.query(p);
    if (d < best) {
      best = d;
      if (best < stop_below) return best;
    }
  }
  return best;
}

namespace {

// The dump format is little-endian regardless of host; on the (ubiquitous)
// little-endian hosts the bulk value block is written/read verbatim.

void write_u32_le(std::ofstream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

void write_f64_le(std::ofstream& out, double d) {
  auto v = std::bit_cast<std::uint64_t>(d);
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

std::uint32_t read_u32_le(std::ifstream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

double read_f64_le(std::ifstream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return std::bit_cast<double>(v);
}

}  // namespace

void SdfGrid::dump(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
  out.write("SDFG", 4);
  for (std::uint32_t d : dims_) write_u32_le(out, d);
  for (int a = 0; a < 3; ++a) write_f64_le(out, origin_[a]);
  write_f64_le(out, resolution_);
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(values_.data()),
              static_cast<std::streamsize>(values_.size() * sizeof(double)));
  } else {
    for (double v : values_) write_f64_le(out, v);
  }
  if (!out) raise(Errc::io_error, "short write to '" + path + "'");
}

SdfGrid SdfGrid::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open '" + path + "' for reading");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "SDFG", 4) != 0) {
    raise(Errc::parse_error, "'" + path + "' is not a grid dump (bad magic)");
  }
  std::array<std::uint32_t, 3> dims;
  for (std::uint32_t& d : dims) d = read_u32_le(in);
  Eigen::Vector3d origin;
  for (int a = 0; a < 3; ++a) origin[a] = read_f64_le(in);
  double resolution = read_f64_le(in);
  if (!in) raise(Errc::parse_error, "'" + path + "': truncated grid header");
  std::size_t total = static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  std::vector<double> values(total);
  if constexpr (std::endian::native == std::endian::little) {
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(total * sizeof(double)));
  } else {
    for (double& v : values) v = read_f64_le(in);
  }
  if (!in) raise(Errc::parse_error, "'" + path + "': truncated grid values");
  return from_parts(origin, resolution, dims, std::move(values));
}

}  // namespace graspgate
