#include "graspgate/sdf.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include "doctest.h"
#include "graspgate/errors.hpp"
#include "support/test_rng.hpp"

using namespace graspgate;
using graspgate::testing::random_pose;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent containment predicates (sign oracle).
bool inside(const PrimitiveShape& s, const Eigen::Vector3d& world) {
  Eigen::Vector3d p = s.pose.rotation().transpose() * (world - s.pose.translation());
  switch (s.kind) {
    case ShapeKind::box:
      return (p.cwiseAbs().array() <= s.half_extents.array()).all();
    case ShapeKind::cylinder:
      return std::hypot(p.x(), p.y()) <= s.radius && std::abs(p.z()) <= s.half_height;
    case ShapeKind::sphere:
      return p.norm() <= s.radius;
  }
  return false;
}

// Dense surface sampling (magnitude oracle): the true unsigned distance lies
// in [cloud_min - pitch, cloud_min].
std::vector<Eigen::Vector3d> surface_cloud(const PrimitiveShape& s, double pitch) {
  std::vector<Eigen::Vector3d> local;
  auto steps = [pitch](double span) { return static_cast<int>(std::ceil(span / pitch)) + 1; };
  switch (s.kind) {
    case ShapeKind::box: {
      const Eigen::Vector3d& h = s.half_extents;
      int nx = steps(2 * h.x()), ny = steps(2 * h.y()), nz = steps(2 * h.z());
      auto lin = [](double lo, double hi, int n, int i) {
        return n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
      };
      for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
          double x = lin(-h.x(), h.x(), nx, i), y = lin(-h.y(), h.y(), ny, j);
          local.emplace_back(x, y, -h.z());
          local.emplace_back(x, y, h.z());
        }
      for (int i = 0; i < nx; ++i)
        for (int k = 0; k < nz; ++k) {
          double x = lin(-h.x(), h.x(), nx, i), z = lin(-h.z(), h.z(), nz, k);
          local.emplace_back(x, -h.y(), z);
          local.emplace_back(x, h.y(), z);
        }
      for (int j = 0; j < ny; ++j)
        for (int k = 0; k < nz; ++k) {
          double y = lin(-h.y(), h.y(), ny, j), z = lin(-h.z(), h.z(), nz, k);
          local.emplace_back(-h.x(), y, z);
          local.emplace_back(h.x(), y, z);
        }
      break;
    }
    case ShapeKind::cylinder: {
      int na = steps(2 * kPi * s.radius);
      int nz = steps(2 * s.half_height);
      int nr = steps(s.radius);
      for (int a = 0; a < na; ++a) {
        double th = 2 * kPi * a / na;
        double cx = s.radius * std::cos(th), cy = s.radius * std::sin(th);
        for (int k = 0; k < nz; ++k) {
          double z = -s.half_height + 2 * s.half_height * k / (nz - 1);
          local.emplace_back(cx, cy, z);
        }
        for (int r = 0; r < nr; ++r) {
          double rr = s.radius * r / (nr - 1);
          local.emplace_back(rr * std::cos(th), rr * std::sin(th), -s.half_height);
          local.emplace_back(rr * std::cos(th), rr * std::sin(th), s.half_height);
        }
      }
      break;
    }
    case ShapeKind::sphere: {
      int nb = steps(kPi * s.radius);
      for (int b = 0; b <= nb; ++b) {
        double phi = kPi * b / nb - kPi / 2;
        double ring = s.radius * std::cos(phi);
        int na = std::max(1, steps(2 * kPi * std::max(ring, pitch)));
        for (int a = 0; a < na; ++a) {
          double th = 2 * kPi * a / na;
          local.emplace_back(ring * std::cos(th), ring * std::sin(th),
                             s.radius * std::sin(phi));
        }
      }
      break;
    }
  }
  std::vector<Eigen::Vector3d> world;
  world.reserve(local.size());
  for (const auto& p : local) world.push_back(s.pose.apply(p));
  return world;
}

SdfGrid unit_box_grid(double resolution) {
  EnvironmentModel env({PrimitiveShape::make_box(Eigen::Vector3d(1, 1, 1), Pose::identity())});
  return bake(env, Aabb{Eigen::Vector3d(-2, -2, -2), Eigen::Vector3d(2, 2, 2)}, resolution);
}

}  // namespace

TEST_CASE("box SDF: frozen hand-derived values") {
  PrimitiveShape box = PrimitiveShape::make_box(Eigen::Vector3d(1, 1, 1), Pose::identity());
  CHECK(analytic_sdf(box, {2, 0, 0}) == 1.0);
  CHECK(analytic_sdf(box, {0, 0, 0}) == -1.0);
  // Edge distance: ||max(|p| - h, 0)|| with excess (1,1,0).
  CHECK(analytic_sdf(box, {2, 2, 0}) == doctest::Approx(1.4142135623730951).epsilon(1e-15));

  PrimitiveShape slab = PrimitiveShape::make_box(Eigen::Vector3d(1, 2, 3), Pose::identity());
  CHECK(analytic_sdf(slab, {0.5, 0, 0}) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("cylinder SDF: frozen hand-derived values") {
  PrimitiveShape cyl = PrimitiveShape::make_cylinder(0.5, 1.0, Pose::identity());
  CHECK(analytic_sdf(cyl, {1.5, 0, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(analytic_sdf(cyl, {0, 0, 2}) == doctest::Approx(1.0).epsilon(1e-15));
  // Radial excess 1 and axial excess 1 combine to sqrt(2).
  CHECK(analytic_sdf(cyl, {1.5, 0, 2}) == doctest::Approx(1.4142135623730951).epsilon(1e-15));
  CHECK(analytic_sdf(cyl, {0, 0, 0}) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(analytic_sdf(cyl, {0.4, 0, 0}) == doctest::Approx(-0.1).epsilon(1e-12));
}

TEST_CASE("sphere SDF: frozen hand-derived values") {
  PrimitiveShape ball =
      PrimitiveShape::make_sphere(0.25, Pose::translation(1, 1, 1));
  CHECK(analytic_sdf(ball, {1, 1, 1.5}) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(analytic_sdf(ball, {1, 1, 1}) == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("posed primitive: distance measured in the shape frame") {
  Pose pose = compose(Pose::translation(1, 2, 3), Pose::rot_z(kPi / 4));
  PrimitiveShape box = PrimitiveShape::make_box(Eigen::Vector3d(1, 1, 1), pose);
  // A point two local units along local +x sits one unit off the +x face.
  Eigen::Vector3d probe = pose.apply(Eigen::Vector3d(2, 0, 0));
  CHECK(analytic_sdf(box, probe) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("analytic SDF agrees with a dense surface cloud on random shapes") {
  std::mt19937_64 rng(0x5dfc1d);
  std::uniform_real_distribution<double> dim(0.05, 0.15);
  std::uniform_real_distribution<double> coord(-0.4, 0.4);
  const double pitch = 0.004;
  for (int s = 0; s < 9; ++s) {
    Pose pose = random_pose(rng);
    PrimitiveShape shape =
        s % 3 == 0
            ? PrimitiveShape::make_box({dim(rng), dim(rng), dim(rng)}, pose)
            : (s % 3 == 1 ? PrimitiveShape::make_cylinder(dim(rng), dim(rng), pose)
                          : PrimitiveShape::make_sphere(dim(rng), pose));
    auto cloud = surface_cloud(shape, pitch);
    REQUIRE(cloud.size() > 100);
    for (int q = 0; q < 25; ++q) {
      Eigen::Vector3d p(coord(rng), coord(rng), coord(rng));
      double d = analytic_sdf(shape, p);
      // Sign from the independent containment predicate.
      if (std::abs(d) > 1e-9) CHECK((d < 0) == inside(shape, p));
      double cloud_min = std::numeric_limits<double>::max();
      for (const auto& c : cloud) cloud_min = std::min(cloud_min, (p - c).norm());
      CHECK(std::abs(d) <= cloud_min + 1e-12);
      CHECK(std::abs(d) >= cloud_min - pitch);
    }
  }
}

TEST_CASE("environment SDF is the exact min over primitives") {
  std::vector<PrimitiveShape> prims = {
      PrimitiveShape::make_box(Eigen::Vector3d(0.1, 0.1, 0.1), Pose::translation(0.5, 0, 0)),
      PrimitiveShape::make_box(Eigen::Vector3d(0.1, 0.1, 0.1), Pose::translation(-0.5, 0, 0)),
  };
  EnvironmentModel env(prims);
  std::mt19937_64 rng(0xe2);
  std::uniform_real_distribution<double> coord(-1, 1);
  for (int i = 0; i < 1000; ++i) {
    Eigen::Vector3d p(coord(rng), coord(rng), coord(rng));
    double expected = std::min(analytic_sdf(prims[0], p), analytic_sdf(prims[1], p));
    CHECK(analytic_sdf(env, p) == expected);
  }
}

TEST_CASE("empty environment requires the explicit free-space constructor") {
  CHECK_THROWS_AS(EnvironmentModel(std::vector<PrimitiveShape>{}), Error);
  EnvironmentModel free = EnvironmentModel::free_space();
  CHECK(free.is_free_space);
  CHECK(analytic_sdf(free, {0, 0, 0}) == kFreeSpaceDistance);
}

TEST_CASE("bake: node values are exact analytic distances") {
  SdfGrid grid = unit_box_grid(0.05);
  // origin = (-2.05)^3; the node at world (2,0,0) has indices (81, 41, 41).
  CHECK((grid.node_position(81, 41, 41) - Eigen::Vector3d(2, 0, 0)).norm() <= 1e-12);
  CHECK(grid.value_at(81, 41, 41) == doctest::Approx(1.0).epsilon(1e-6));

  // Random nodes match the analytic min for a two-box environment.
  std::vector<PrimitiveShape> prims = {
      PrimitiveShape::make_box(Eigen::Vector3d(0.2, 0.3, 0.1), Pose::translation(0.6, 0, 0)),
      PrimitiveShape::make_cylinder(0.2, 0.3, Pose::translation(-0.6, 0, 0.2)),
  };
  EnvironmentModel env(prims);
  SdfGrid g2 = bake(env, Aabb{Eigen::Vector3d(-2, -2, -2), Eigen::Vector3d(2, 2, 2)}, 0.05);
  std::mt19937_64 rng(0xba6e);
  for (int n = 0; n < 1000; ++n) {
    std::uint32_t i = rng() % g2.dims()[0];
    std::uint32_t j = rng() % g2.dims()[1];
    std::uint32_t k = rng() % g2.dims()[2];
    Eigen::Vector3d p = g2.node_position(i, j, k);
    double expected = std::min(analytic_sdf(prims[0], p), analytic_sdf(prims[1], p));
    CHECK(g2.value_at(i, j, k) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("bake: free space fills the finite sentinel") {
  SdfGrid grid = bake(EnvironmentModel::free_space(),
                      Aabb{Eigen::Vector3d(-1, -1, -1), Eigen::Vector3d(1, 1, 1)}, 0.1);
  for (double v : grid.values()) CHECK(v == kFreeSpaceDistance);
  CHECK(grid.query({0.3, 0.2, -0.4}) == kFreeSpaceDistance);
}

TEST_CASE("bake: worker count does not change a single node") {
  EnvironmentModel env(
      {PrimitiveShape::make_sphere(0.3, Pose::translation(0.1, -0.2, 0.3))});
  Aabb bounds{Eigen::Vector3d(-1, -1, -1), Eigen::Vector3d(1, 1, 1)};
  BakeConfig one, four;
  one.threads = 1;
  four.threads = 4;
  SdfGrid a = bake(env, bounds, 0.05, one);
  SdfGrid b = bake(env, bounds, 0.05, four);
  REQUIRE(a.values().size() == b.values().size());
  CHECK(std::memcmp(a.values().data(), b.values().data(),
                    a.values().size() * sizeof(double)) == 0);
}

TEST_CASE("query: exact node returns the stored value") {
  SdfGrid grid = unit_box_grid(0.05);
  Eigen::Vector3d node = grid.node_position(81, 41, 41);
  CHECK(grid.query(node) == doctest::Approx(grid.value_at(81, 41, 41)).epsilon(1e-12));
}

TEST_CASE("query matches an independent trilinear evaluation") {
  std::vector<PrimitiveShape> prims = {
      PrimitiveShape::make_box(Eigen::Vector3d(0.3, 0.2, 0.25), Pose::translation(0.4, 0.1, 0)),
      PrimitiveShape::make_sphere(0.25, Pose::translation(-0.5, -0.2, 0.1)),
  };
  SdfGrid grid = bake(EnvironmentModel(prims),
                      Aabb{Eigen::Vector3d(-1.5, -1.5, -1.5), Eigen::Vector3d(1.5, 1.5, 1.5)},
                      0.05);
  std::mt19937_64 rng(0x7171);
  std::uniform_real_distribution<double> coord(-1.45, 1.45);
  for (int n = 0; n < 300; ++n) {
    Eigen::Vector3d p(coord(rng), coord(rng), coord(rng));
    // Reimplement the stencil from node lookups only.
    Eigen::Vector3d u = (p - grid.origin()) / grid.resolution();
    auto lo = [&](double v, std::uint32_t dim) {
      auto i = static_cast<std::int64_t>(std::floor(v));
      i = std::clamp<std::int64_t>(i, 0, static_cast<std::int64_t>(dim) - 2);
      return static_cast<std::uint32_t>(i);
    };
    std::uint32_t i = lo(u.x(), grid.dims()[0]);
    std::uint32_t j = lo(u.y(), grid.dims()[1]);
    std::uint32_t k = lo(u.z(), grid.dims()[2]);
    double fx = u.x() - i, fy = u.y() - j, fz = u.z() - k;
    double expected = 0.0;
    for (int dz = 0; dz < 2; ++dz)
      for (int dy = 0; dy < 2; ++dy)
        for (int dx = 0; dx < 2; ++dx) {
          double w = (dx ? fx : 1 - fx) * (dy ? fy : 1 - fy) * (dz ? fz : 1 - fz);
          expected += w * grid.value_at(i + dx, j + dy, k + dz);
        }
    CHECK(grid.query(p) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("query: cell center of a locally linear field is the corner mean") {
  // Above the center of a wide slab the field is exactly z - top, which is
  // linear, so trilinear interpolation is exact.
  EnvironmentModel env({PrimitiveShape::make_box(Eigen::Vector3d(1, 1, 0.5),
                                                 Pose::translation(0, 0, -0.5))});
  SdfGrid grid = bake(env, Aabb{Eigen::Vector3d(-0.5, -0.5, 0), Eigen::Vector3d(0.5, 0.5, 0.5)},
                      0.05);
  Eigen::Vector3d center = grid.node_position(5, 5, 5) + Eigen::Vector3d(0.025, 0.025, 0.025);
  double mean = 0.0;
  for (int dz = 0; dz < 2; ++dz)
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx) mean += grid.value_at(5 + dx, 5 + dy, 5 + dz) / 8.0;
  CHECK(grid.query(center) == doctest::Approx(mean).epsilon(1e-12));
  CHECK(grid.query(center) == doctest::Approx(center.z()).epsilon(1e-12));
}

TEST_CASE("query stays within one resolution of the analytic distance") {
  PrimitiveShape box = PrimitiveShape::make_box(Eigen::Vector3d(1, 1, 1), Pose::identity());
  SdfGrid grid = unit_box_grid(0.02);
  std::mt19937_64 rng(0x500);
  std::uniform_real_distribution<double> coord(-2, 2);
  int checked = 0;
  while (checked < 500) {
    Eigen::Vector3d p(coord(rng), coord(rng), coord(rng));
    double d = analytic_sdf(box, p);
    if (d < 0.02) continue;  // criterion covers points at true distance >= one voxel
    ++checked;
    CHECK(std::abs(grid.query(p) - d) <= 0.02);
  }
}

TEST_CASE("union monotonicity: adding a primitive never raises a node") {
  std::vector<PrimitiveShape> one = {
      PrimitiveShape::make_box(Eigen::Vector3d(0.2, 0.2, 0.2), Pose::translation(0.5, 0, 0))};
  std::vector<PrimitiveShape> two = one;
  two.push_back(PrimitiveShape::make_sphere(0.3, Pose::translation(-0.4, 0.2, -0.1)));
  Aabb bounds{Eigen::Vector3d(-1.5, -1.5, -1.5), Eigen::Vector3d(1.5, 1.5, 1.5)};
  SdfGrid ga = bake(EnvironmentModel(one), bounds, 0.1);
  SdfGrid gb = bake(EnvironmentModel(two), bounds, 0.1);
  REQUIRE(ga.values().size() == gb.values().size());
  for (std::size_t i = 0; i < ga.values().size(); ++i) {
    CHECK(gb.values()[i] <= ga.values()[i]);
  }
}

TEST_CASE("translation equivariance of the bake") {
  Eigen::Vector3d shift(0.013, -0.007, 0.021);
  std::vector<PrimitiveShape> prims = {
      PrimitiveShape::make_box(Eigen::Vector3d(0.2, 0.1, 0.3),
                               compose(Pose::translation(0.2, 0, 0.1), Pose::rot_y(0.4))),
      PrimitiveShape::make_cylinder(0.15, 0.2, Pose::translation(-0.3, 0.2, 0)),
  };
  std::vector<PrimitiveShape> moved;
  for (const auto& p : prims) {
    PrimitiveShape m = p;
    m.pose = compose(Pose::translation(shift), p.pose);
    moved.push_back(m);
  }
  Aabb bounds{Eigen::Vector3d(-1, -1, -1), Eigen::Vector3d(1, 1, 1)};
  Aabb moved_bounds{bounds.lo + shift, bounds.hi + shift};
  SdfGrid ga = bake(EnvironmentModel(prims), bounds, 0.05);
  SdfGrid gb = bake(EnvironmentModel(moved), moved_bounds, 0.05);
  REQUIRE(ga.values().size() == gb.values().size());
  for (std::size_t i = 0; i < ga.values().size(); ++i) {
    CHECK(std::abs(ga.values()[i] - gb.values()[i]) <= 1e-9);
  }
}

TEST_CASE("clearance: min over points with the out-of-bounds sentinel") {
  SdfGrid grid = unit_box_grid(0.05);
  std::vector<Eigen::Vector3d> one = {{2, 0, 0}};
  CHECK(clearance(grid, one) == doctest::Approx(1.0).epsilon(1e-9));

  std::vector<Eigen::Vector3d> two = {{2, 0, 0}, {1.5, 0, 0}};
  CHECK(clearance(grid, two) == doctest::Approx(0.5).epsilon(1e-9));

  std::vector<Eigen::Vector3d> outside = {{2, 0, 0}, {2.5, 0, 0}};
  CHECK(clearance(grid, outside) == kOutOfBoundsClearance);

  std::vector<Eigen::Vector3d> empty;
  CHECK_THROWS_AS(clearance(grid, empty), Error);
}

TEST_CASE("clearance: gripper-like lattice above a slab") {
  EnvironmentModel env({PrimitiveShape::make_box(Eigen::Vector3d(0.5, 0.5, 0.05),
                                                 Pose::translation(0, 0, -0.05))});
  double res = 0.005;
  SdfGrid grid = bake(env, Aabb{Eigen::Vector3d(-0.6, -0.6, -0.2), Eigen::Vector3d(0.6, 0.6, 0.4)},
                      res);
  // 200 points in a plane 0.1 m above the slab top.
  std::vector<Eigen::Vector3d> pts;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 10; ++j)
      pts.emplace_back(-0.19 + 0.02 * i, -0.09 + 0.02 * j, 0.1);
  double c = clearance(grid, pts);
  CHECK(c >= 0.1 - res);
  CHECK(c <= 0.1 + res);
}

TEST_CASE("query outside the region throws OutOfBounds") {
  SdfGrid grid = unit_box_grid(0.05);
  CHECK_THROWS_AS(grid.query({2.5, 0, 0}), Error);
  try {
    grid.query({0, 0, -2.2});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::out_of_bounds);
  }
  // The full requested box is queryable, including its corners.
  CHECK_NOTHROW(grid.query({2, 2, 2}));
  CHECK_NOTHROW(grid.query({-2, -2, -2}));
}

TEST_CASE("bake guard rails") {
  EnvironmentModel env({PrimitiveShape::make_box(Eigen::Vector3d(1, 1, 1), Pose::identity())});
  Aabb bounds{Eigen::Vector3d(-2, -2, -2), Eigen::Vector3d(2, 2, 2)};

  BakeConfig coarse;
  coarse.max_resolution = 0.005;
  CHECK_THROWS_AS(bake(env, bounds, 0.01, coarse), Error);
  try {
    bake(env, bounds, 0.01, coarse);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::resolution_too_coarse);
  }

  BakeConfig margin;
  margin.required_margin = 1.5;  // inflated box reaches past the +/-2 bounds
  CHECK_THROWS_AS(bake(env, bounds, 0.05, margin), Error);
  try {
    bake(env, bounds, 0.05, margin);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bounds_too_small);
  }

  Aabb degenerate{Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(0, 1, 1)};
  CHECK_THROWS_AS(bake(env, degenerate, 0.05), Error);
}

TEST_CASE("grid dump round-trips and matches the documented layout") {
  EnvironmentModel env({PrimitiveShape::make_sphere(0.2, Pose::translation(0.1, 0.2, 0.3))});
  SdfGrid grid = bake(env, Aabb{Eigen::Vector3d(-1, -1, -1), Eigen::Vector3d(1, 1, 1)}, 0.25);
  std::string path = (std::filesystem::temp_directory_path() / "graspgate_grid_test.sdfg").string();
  grid.dump(path);

  SdfGrid back = SdfGrid::load(path);
  CHECK(back.dims() == grid.dims());
  CHECK(back.resolution() == grid.resolution());
  CHECK((back.origin() - grid.origin()).norm() == 0.0);
  REQUIRE(back.values().size() == grid.values().size());
  CHECK(std::memcmp(back.values().data(), grid.values().data(),
                    grid.values().size() * sizeof(double)) == 0);

  // Manual parse: magic, u32 dims, f64 origin & resolution, x-fastest values.
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  char magic[4];
  in.read(magic, 4);
  CHECK(std::memcmp(magic, "SDFG", 4) == 0);
  std::uint32_t dims[3];
  in.read(reinterpret_cast<char*>(dims), sizeof(dims));
  CHECK(dims[0] == grid.dims()[0]);
  CHECK(dims[1] == grid.dims()[1]);
  CHECK(dims[2] == grid.dims()[2]);
  double header[4];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  CHECK(header[0] == grid.origin().x());
  CHECK(header[3] == grid.resolution());
  // Value of node (i,j,k) = (2,1,3) sits at flat index i + dims0*(j + dims1*k).
  std::size_t flat = 2 + static_cast<std::size_t>(dims[0]) * (1 + static_cast<std::size_t>(dims[1]) * 3);
  in.seekg(static_cast<std::streamoff>(4 + 12 + 32 + 8 * flat));
  double v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  CHECK(v == grid.value_at(2, 1, 3));

  std::filesystem::remove(path);
}

TEST_CASE("load rejects a corrupt header") {
  std::string path = (std::filesystem::temp_directory_path() / "graspgate_bad.sdfg").string();
  {
    std::ofstream out(path, std::ios::binary);
    out.write("NOPE", 4);
  }
  CHECK_THROWS_AS(SdfGrid::load(path), Error);
  try {
    SdfGrid::load(path);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
  std::filesystem::remove(path);
}

