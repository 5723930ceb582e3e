#include "graspgate/errors.hpp"

namespace graspgate {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_pose: return "InvalidPose";
    case Errc::invalid_quaternion: return "InvalidQuaternion";
    case Errc::invalid_dimension: return "InvalidDimension";
    case Errc::bounds_too_small: return "BoundsTooSmall";
    case Errc::resolution_too_coarse: return "ResolutionTooCoarse";
    case Errc::out_of_bounds: return "OutOfBounds";
    case Errc::empty_point_set: return "EmptyPointSet";
    case Errc::invalid_set: return "InvalidSet";
    case Errc::nested_product: return "NestedProduct";
    case Errc::empty_set: return "EmptySet";
    case Errc::no_candidates: return "NoCandidates";
    case Errc::parse_error: return "ParseError";
    case Errc::infeasible_scenario: return "InfeasibleScenario";
    case Errc::object_too_large: return "ObjectTooLarge";
    case Errc::non_analytic_scene: return "NonAnalyticScene";
    case Errc::unlabeled_id: return "UnlabeledId";
    case Errc::pick_failure_in_executed: return "PickFailureInExecuted";
    case Errc::insufficient_candidates: return "InsufficientCandidates";
    case Errc::unlabeled_region: return "UnlabeledRegion";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace graspgate
