#include "graspgate/grasp_filter.hpp"

#include <cmath>

#include "graspgate/errors.hpp"
#include "graspgate/parallel.hpp"

namespace graspgate {

namespace {

PlacingSet with_sample_override(const PlacingSet& set, int samples) {
  if (samples <= 0) return set;
  switch (set.kind()) {
    case SetKind::discrete:
      return set;
    case SetKind::linear:
      return PlacingSet::linear(set.base_pose(), set.axis(), set.lo(), set.hi(), samples);
    case SetKind::rotational:
      return PlacingSet::rotational(set.base_pose(), set.axis(), set.anchor_point(),
                                    set.lo(), set.hi(), samples);
    case SetKind::product:
      return product(with_sample_override(set.factor1(), samples),
                     with_sample_override(set.factor2(), samples));
  }
  raise(Errc::invalid_set, "unknown placing set kind");
}

void validate_inputs(const std::vector<GraspCandidate>& candidates,
                     const FilterConfig& cfg) {
  if (!(cfg.d_safe > 0.0))
    raise(Errc::invalid_dimension, "clearance threshold d_safe must be positive");
  for (const auto& c : candidates)
    if (!std::isfinite(c.quality) || c.quality < 0.0 || c.quality > 1.0)
      raise(Errc::invalid_dimension,
            "candidate " + c.id + " quality outside [0, 1]");
}

struct Placements {
  std::vector<Pose> object_poses;  // x_f
  std::vector<Pose> transfers;     // x_f * x0^-1, applied to g0 yields g_f
};

Placements prepare_placements(const Pose& x0, const PlacingSet& set) {
  Placements out;
  out.object_poses = set.enumerate();
  out.transfers.reserve(out.object_poses.size());
  const Pose x0_inv = inverse(x0);
  for (const auto& xf : out.object_poses) out.transfers.push_back(compose(xf, x0_inv));
  return out;
}

FilterVerdict evaluate_one(const GraspCandidate& candidate, const Placements& placements,
                           const SdfGrid& grid, const GripperBody& gripper,
                           const FilterConfig& cfg, std::vector<Eigen::Vector3d>& scratch) {
  FilterVerdict v;
  v.candidate_id = candidate.id;

  posed_points_into(gripper, candidate.pose, scratch);
  v.pick_clearance = clearance(grid, scratch);
  if (cfg.check_pick && !(v.pick_clearance >= cfg.d_safe)) return v;

  std::optional<PlacementChoice> best;
  for (std::size_t j = 0; j < placements.transfers.size(); ++j) {
    const Pose gf = compose(placements.transfers[j], candidate.pose);
    posed_points_into(gripper, gf, scratch);
    // Infeasible placements only need a witness below the threshold, so the
    // scan may stop early; feasible ones are scanned fully and their
    // clearance is the exact minimum.
    const double c = clearance(grid, scratch, cfg.d_safe);
    if (c >= cfg.d_safe) {
      ++v.n_feasible_placements;
      if (!best || c > best->clearance)
        best = PlacementChoice{placements.object_poses[j], gf, c, j};
    }
  }
  v.feasible = v.n_feasible_placements >= 1 &&
               (!cfg.check_pick || v.pick_clearance >= cfg.d_safe);
  if (v.feasible) v.best_placement = best;
  return v;
}

}  // namespace

FilterVerdict evaluate_candidate(const GraspCandidate& candidate, const Pose& x0,
                                 const PlacingSet& set, const SdfGrid& grid,
                                 const GripperBody& gripper, const FilterConfig& cfg) {
  validate_inputs({candidate}, cfg);
  const Placements placements =
      prepare_placements(x0, with_sample_override(set, cfg.placing_samples));
  std::vector<Eigen::Vector3d> scratch;
  return evaluate_one(candidate, placements, grid, gripper, cfg, scratch);
}

FilterResult filter(const std::vector<GraspCandidate>& candidates, const Pose& x0,
                    const PlacingSet& set, const SdfGrid& grid,
                    const GripperBody& gripper, const FilterConfig& cfg) {
  if (candidates.empty()) raise(Errc::no_candidates, "filter needs at least one candidate");
  validate_inputs(candidates, cfg);
  const Placements placements =
      prepare_placements(x0, with_sample_override(set, cfg.placing_samples));

  FilterResult result;
  result.verdicts.resize(candidates.size());
  parallel_for(static_cast<std::int64_t>(candidates.size()), cfg.threads,
               [&](std::int64_t begin, std::int64_t end) {
                 std::vector<Eigen::Vector3d> scratch;
                 for (std::int64_t i = begin; i < end; ++i)
                   result.verdicts[i] = evaluate_one(candidates[i], placements, grid,
                                                     gripper, cfg, scratch);
               });

  for (std::size_t i = 0; i < result.verdicts.size(); ++i) {
    if (!result.verdicts[i].feasible) continue;
    if (!result.selected || candidates[i].quality > candidates[*result.selected].quality)
      result.selected = i;
  }
  return result;
}

}  // namespace graspgate
