#pragma once

#include <memory>
#include <vector>

#include "graspgate/pose.hpp"

namespace graspgate {

// Default discretization densities used when a caller does not pick a sample
// count: one pose every 20 mm along a linear range, one every 15 degrees
// along a rotational range.
inline constexpr double kLinearSampleStep = 0.02;
inline constexpr double kRotationalSampleStep = 0.2617993877991494;  // pi / 12

enum class SetKind { discrete, linear, rotational, product };

// A family of valid object placing poses, enumerable as a finite pose list.
// Continuous families (linear slide, rotation about an axis) are discretized
// by uniform sampling over [lo, hi] with endpoints included. A product
// combines two non-product families about a shared base pose: member (i, j)
// applies factor 2's offset transform, then factor 1's, to the base.
// Immutable once constructed; all invariants are checked at construction.
class PlacingSet {
 public:
  // Member poses verbatim, in the given order. The first member doubles as
  // the base pose.
  static PlacingSet discrete(std::vector<Pose> members);
  static PlacingSet singleton(const Pose& base);
  // base translated by t * axis for `samples` evenly spaced t in [lo, hi].
  static PlacingSet linear(const Pose& base, const Eigen::Vector3d& axis,
                           double lo, double hi, int samples);
  // base rotated by angle about the world line (anchor, axis).
  static PlacingSet rotational(const Pose& base, const Eigen::Vector3d& axis,
                               const Eigen::Vector3d& anchor, double lo,
                               double hi, int samples);

  SetKind kind() const { return kind_; }
  const Pose& base_pose() const { return base_; }
  const Eigen::Vector3d& axis() const { return axis_; }
  const Eigen::Vector3d& anchor_point() const { return anchor_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int samples() const { return samples_; }
  const std::vector<Pose>& members() const { return members_; }
  const PlacingSet& factor1() const { return *factor1_; }
  const PlacingSet& factor2() const { return *factor2_; }

  std::size_t size() const;

  // All member poses in deterministic order. Products enumerate
  // factor-1-major: the first factor2().size() entries share factor 1's
  // first parameter.
  std::vector<Pose> enumerate() const;

  // Parameter value of sample k (continuous kinds only).
  double parameter_at(int k) const;
  // World offset transform of sample k: member pose = offset * base_pose.
  Pose offset_at(std::size_t k) const;

  // Densified copy: each continuous factor's sample count n becomes
  // multiplier * (n - 1) + 1, so the original sample lattice is a subset of
  // the refined one. Discrete sets are returned unchanged.
  PlacingSet refined(int multiplier) const;

 private:
  PlacingSet() = default;

  SetKind kind_ = SetKind::discrete;
  Pose base_;
  Eigen::Vector3d axis_ = Eigen::Vector3d::UnitZ();
  Eigen::Vector3d anchor_ = Eigen::Vector3d::Zero();
  double lo_ = 0.0;
  double hi_ = 0.0;
  int samples_ = 1;
  std::vector<Pose> members_;
  std::shared_ptr<const PlacingSet> factor1_;
  std::shared_ptr<const PlacingSet> factor2_;

  friend PlacingSet product(const PlacingSet& a, const PlacingSet& b);
};

// Cartesian combination of two families about their shared base pose.
// Factors must not themselves be products and must agree on the base pose.
PlacingSet product(const PlacingSet& a, const PlacingSet& b);

// Sample counts giving at most the default step over [lo, hi].
int default_linear_samples(double lo, double hi);
int default_rotational_samples(double lo, double hi);

}  // namespace graspgate
