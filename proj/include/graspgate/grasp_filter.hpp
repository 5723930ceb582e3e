#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graspgate/gripper.hpp"
#include "graspgate/placing_set.hpp"
#include "graspgate/pose.hpp"
#include "graspgate/sdf.hpp"

namespace graspgate {

// One grasp proposal: gripper pose at pick time (world frame) plus the
// upstream detector's quality score, higher meaning a better pick.
struct GraspCandidate {
  std::string id;
  Pose pose;
  double quality = 0.0;  // must lie in [0, 1]
};

struct FilterConfig {
  // Minimum gripper-environment clearance a pose needs to count as
  // collision free. Both the pick check and every placement check compare
  // inclusively against this.
  double d_safe = 0.005;
  // When positive, continuous placing-set factors are resampled with this
  // count before enumeration; 0 keeps the set's own density.
  int placing_samples = 0;
  // Gate candidates on clearance at the pick pose as well (on by default);
  // when off the pick clearance is still reported but does not gate.
  bool check_pick = true;
  int threads = 0;  // <= 0: use hardware concurrency
};

// The placement chosen for a feasible candidate: the object placing pose,
// the gripper pose holding the grasp there, and the clearance it achieves.
struct PlacementChoice {
  Pose object_pose;   // x_f
  Pose gripper_pose;  // g_f
  double clearance = 0.0;
  std::size_t placement_index = 0;  // position in the enumerated placing set
};

struct FilterVerdict {
  std::string candidate_id;
  bool feasible = false;
  // Exact minimum grid distance over the gripper body at the pick pose.
  double pick_clearance = 0.0;
  // Count over the full enumerated set; 0 whenever the pick check already
  // failed (placements are not evaluated then).
  int n_feasible_placements = 0;
  // Present iff feasible: the feasible placement with the largest
  // clearance, ties to the earliest enumerated placement.
  std::optional<PlacementChoice> best_placement;
};

struct FilterResult {
  std::vector<FilterVerdict> verdicts;  // input order
  // Index into verdicts of the feasible candidate with maximal quality,
  // ties to the earliest input position; absent when nothing is feasible.
  std::optional<std::size_t> selected;

  std::optional<std::string> selected_id() const {
    if (!selected) return std::nullopt;
    return verdicts[*selected].candidate_id;
  }
};

// Decide feasibility of each candidate holding the object currently at x0:
// the pick pose must clear the environment, and at least one placing pose
// x_f of the set must admit the rigidly transferred gripper pose
// g_f = (x_f x0^-1) g0 with clearance >= d_safe. Among feasible candidates
// the one with maximal quality is selected. Deterministic for any thread
// count.
FilterResult filter(const std::vector<GraspCandidate>& candidates, const Pose& x0,
                    const PlacingSet& set, const SdfGrid& grid,
                    const GripperBody& gripper, const FilterConfig& cfg);

// Single-candidate unit of filter.
FilterVerdict evaluate_candidate(const GraspCandidate& candidate, const Pose& x0,
                                 const PlacingSet& set, const SdfGrid& grid,
                                 const GripperBody& gripper, const FilterConfig& cfg);

}  // namespace graspgate
