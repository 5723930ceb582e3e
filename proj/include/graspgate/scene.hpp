#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graspgate/gripper.hpp"
#include "graspgate/grasp_filter.hpp"
#include "graspgate/placing_set.hpp"
#include "graspgate/pose.hpp"
#include "graspgate/sdf.hpp"

namespace graspgate {

// One solid of the manipulated object, in the object's local frame, tagged
// with the semantic region it belongs to ("body", "handle", "head", ...).
struct ObjectPart {
  PrimitiveShape shape;
  std::string region;
};

struct ObjectModel {
  std::vector<ObjectPart> parts;

  // Parts rigidly placed at the given object pose.
  std::vector<PrimitiveShape> posed_shapes(const Pose& object_pose) const;
  // The object alone as an occupancy model, for held-object checks.
  EnvironmentModel posed_environment(const Pose& object_pose) const;
};

// Signed distance to the object surface in the object's local frame.
double object_sdf(const ObjectModel& object, const Eigen::Vector3d& point_local);

// Quasi-uniform samples of a primitive's surface at roughly the given pitch,
// in the frame the shape's pose refers to. Used for non-penetration audits.
std::vector<Eigen::Vector3d> surface_points(const PrimitiveShape& shape, double pitch);

struct Scene {
  std::string name;
  EnvironmentModel environment = EnvironmentModel::free_space();
  ObjectModel object;
  Pose object_initial_pose;
  PlacingSet placing_set = PlacingSet::singleton(Pose::identity());
  GripperSpec gripper;
  Aabb workspace_bounds;
  double d_safe = 0.005;
};

enum class TaskKind { rack_hanging, shelf_placing, slot_insertion };

const char* task_name(TaskKind task);
TaskKind task_from_name(const std::string& name);

// Scenario knobs. Each task reads its own block; sizes are meters, angles
// radians. Defaults reproduce the mid-difficulty layout of each task.
struct RackParams {
  double stick_height = 0.24;
  double stick_radius = 0.006;
  double stick_half_length = 0.18;
  double stick_yaw = 0.0;          // stick axis yaw around +z, 0 = along +y
  int occupied_sticks = 0;         // clutter cups hanging on the stick
  double hang_offset = 0.0;        // base placement shift along the stick
  double slide_half_range = 0.10;  // linear factor range, each side
  double swing_half_range = 0.35;  // rotational factor range, each side
  int slide_samples = 7;
  int swing_samples = 7;
};

struct ShelfParams {
  double opening_height = 0.15;   // clear height under the ceiling
  double inner_width = 0.20;      // wall-to-wall along the slide axis
  double inner_depth = 0.16;
  double wall_thickness = 0.012;
  int clutter_boxes = 0;
  double slide_half_range = 0.04;
  int slide_samples = 4;
  int roll_samples = 24;          // full turn about the lying mug's axis
};

struct SlotParams {
  double rail_gap = 0.026;        // clear gap the connector body drops into
  double rail_height = 0.016;
  double rail_half_length = 0.05;
  double case_wall_height = 0.07;
  double socket_offset_x = 0.0;   // slot position inside the case
  double socket_offset_y = 0.0;
};

struct TaskScenario {
  TaskKind task = TaskKind::rack_hanging;
  std::uint64_t seed = 0;
  RackParams rack;
  ShelfParams shelf;
  SlotParams slot;
};

// Deterministic scene construction for a scenario. Checks that the object
// at its initial pose clears the environment and that the base placement is
// free of real interpenetration.
Scene generate_scene(const TaskScenario& scenario);

// Antipodal grasp sampling on the object's primitives, viewed from above and
// from two orthogonal sides. Deterministic in (scene, n, seed): candidates
// are ordered by draw, ids g000, g001, ... Quality is the antipodal
// alignment of the contact normals; pairs wider than the jaw opening are
// discarded.
std::vector<GraspCandidate> sample_candidates(const Scene& scene, int n,
                                              std::uint64_t seed);

// Semantic region a grasp closes on: the region of the object part nearest
// to the closing segment between the jaws, with the object at object_pose.
std::string grasp_region(const Scene& scene, const Pose& gripper_pose,
                         const Pose& object_pose);

// Both contacts of the closing line straddle the object surface and no
// gripper sample point penetrates the object: the grasp would actually hold
// the part, ignoring the environment entirely.
bool pickable_in_isolation(const Scene& scene, const Pose& gripper_pose,
                           const Pose& object_pose);

// Tilt of the gripper's palm-to-fingertip axis away from straight-down.
double approach_tilt(const Pose& gripper_pose);

struct ScenarioPreset {
  std::string name;
  TaskScenario scenario;
  int n_candidates = 16;
  std::uint64_t sample_seed = 0;
};

// The fifteen pinned benchmark layouts: five per task, frozen seeds.
const std::vector<ScenarioPreset>& shipped_scenarios();
const ScenarioPreset& preset_by_name(const std::string& name);

}  // namespace graspgate
