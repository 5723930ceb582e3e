#pragma once

#include <stdexcept>
#include <string>

namespace graspgate {

// Every failure the library raises carries one of these codes so callers can
// branch on the condition instead of parsing message text.
enum class Errc {
  invalid_pose,            // rotation block fails orthonormality / det check
  invalid_quaternion,      // quaternion norm outside accepted band
  invalid_dimension,       // non-positive shape or gripper dimension
  bounds_too_small,        // grid bounds cannot hold a single voxel
  resolution_too_coarse,   // bake resolution above the configured ceiling
  out_of_bounds,           // SDF query outside the valid grid region
  empty_point_set,         // clearance asked for zero sample points
  invalid_set,             // placing set parameters out of contract
  nested_product,          // product of products is not supported
  empty_set,               // placing set with no members
  no_candidates,           // filter invoked with an empty candidate list
  parse_error,             // malformed input file
  infeasible_scenario,     // generated scene violates its own invariants
  object_too_large,        // object cannot fit the requested container
  non_analytic_scene,      // scene lacks the primitives the oracle needs
  unlabeled_id,            // metrics saw an executed id with no label
  pick_failure_in_executed,  // executed set contains a pick-infeasible grasp
  insufficient_candidates, // baseline cannot fill its execution quota
  unlabeled_region,        // region rule references a region no part carries
  io_error,                // filesystem failure outside parsing
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace graspgate
