#pragma once

#include <Eigen/Core>
#include <vector>

#include "graspgate/pose.hpp"

namespace graspgate {

// Parallel-jaw gripper dimensions, meters. The collision body is three boxes:
// two jaws and a palm bridging them, held at the fixed pre-close opening.
//
// Gripper frame: origin at the grasp center on the fingertip plane, +z the
// approach direction pointing from the fingertips into the palm, +x the
// closing axis. Jaw inner faces sit at x = +/- jaw_opening/2, the jaw solids
// span z in [0, jaw_length], the palm spans z in [jaw_length,
// jaw_length + palm_depth].
struct GripperSpec {
  double jaw_opening = 0.080;
  double jaw_length = 0.040;
  double jaw_thickness = 0.012;
  double jaw_width = 0.016;
  double palm_depth = 0.028;
  double palm_width = 0.110;
  double palm_height = 0.024;
  double sample_spacing = 0.005;

  // All dimensions positive; spacing no coarser than the thinnest solid
  // feature so every part receives interior sample points.
  void validate() const;

  // Diagonal of the body's local bounding box; callers add this (plus the
  // safety margin) when sizing workspace bounds.
  double max_extent() const;
};

// The spec discretized to a point lattice, in the gripper frame. Immutable
// after build; share freely across workers.
struct GripperBody {
  GripperSpec spec;
  std::vector<Eigen::Vector3d> points;
};

// Lattice of pitch <= sample_spacing over each of the three boxes, endpoints
// included (so all 8 corners of each box are sample points). Point order is
// palm, then -x jaw, then +x jaw, x-fastest within each box.
GripperBody build_body(const GripperSpec& spec);

// The body mapped through a world pose: R*p + t per point, order preserved.
std::vector<Eigen::Vector3d> posed_points(const GripperBody& body, const Pose& pose);

// Reuse-friendly variant for hot loops; resizes `out` as needed.
void posed_points_into(const GripperBody& body, const Pose& pose,
                       std::vector<Eigen::Vector3d>& out);

}  // namespace graspgate
