#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <vector>

#include "graspgate/gripper.hpp"
#include "graspgate/pose.hpp"
#include "graspgate/sdf.hpp"

namespace graspgate::testing {

// Brute-force feasibility reference that never touches the voxel grid or the
// pose-composition helpers: homogeneous 4x4 arithmetic for the rigid
// transfer, direct analytic distances for clearance. Kept deliberately
// separate from the library code paths it checks.

inline Eigen::Matrix4d homogeneous(const Pose& p) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = p.rotation();
  m.topRightCorner<3, 1>() = p.translation();
  return m;
}

// Minimum analytic distance over the body points posed by the homogeneous
// transform; -inf as soon as any point leaves the workspace box. The box is
// widened by the same hair the grid's query region tolerates.
inline double oracle_clearance(const EnvironmentModel& env, const Aabb& workspace,
                               const Eigen::Matrix4d& pose,
                               const std::vector<Eigen::Vector3d>& body_points) {
  const Aabb box = workspace.expanded(1e-12);
  const Eigen::Matrix3d r = pose.topLeftCorner<3, 3>();
  const Eigen::Vector3d t = pose.topRightCorner<3, 1>();
  double lowest = kFreeSpaceDistance;
  for (const auto& p : body_points) {
    const Eigen::Vector3d w = r * p + t;
    if (!box.contains(w)) return -std::numeric_limits<double>::infinity();
    lowest = std::min(lowest, analytic_sdf(env, w));
  }
  return lowest;
}

struct OracleVerdict {
  bool feasible = false;
  double pick_clearance = 0.0;
  int n_feasible_placements = 0;
  std::vector<double> placement_clearances;  // exact minima, empty if pick gated
  int best_placement = -1;
  double best_clearance = -std::numeric_limits<double>::infinity();

  // True when any decisive clearance sits within +-band of the threshold,
  // i.e. a grid-based run at resolution `band` may legitimately disagree.
  bool within_band(double d_safe, double band) const {
    if (std::abs(pick_clearance - d_safe) <= band) return true;
    for (double c : placement_clearances)
      if (std::abs(c - d_safe) <= band) return true;
    return false;
  }
};

inline OracleVerdict oracle_verdict(const EnvironmentModel& env, const Aabb& workspace,
                                    const Pose& g0, const Pose& x0,
                                    const std::vector<Pose>& object_placements,
                                    const GripperBody& gripper, double d_safe,
                                    bool check_pick = true) {
  OracleVerdict v;
  const Eigen::Matrix4d m_g0 = homogeneous(g0);
  v.pick_clearance = oracle_clearance(env, workspace, m_g0, gripper.points);
  if (check_pick && v.pick_clearance < d_safe) return v;

  const Eigen::Matrix4d transfer_base = homogeneous(x0).inverse() * m_g0;
  for (std::size_t j = 0; j < object_placements.size(); ++j) {
    const Eigen::Matrix4d m_gf = homogeneous(object_placements[j]) * transfer_base;
    const double c = oracle_clearance(env, workspace, m_gf, gripper.points);
    v.placement_clearances.push_back(c);
    if (c >= d_safe) {
      ++v.n_feasible_placements;
      if (c > v.best_clearance) {
        v.best_clearance = c;
        v.best_placement = static_cast<int>(j);
      }
    }
  }
  v.feasible = v.n_feasible_placements >= 1;
  return v;
}

}  // namespace graspgate::testing
