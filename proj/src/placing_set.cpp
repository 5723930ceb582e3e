#include "graspgate/placing_set.hpp"

#include <cmath>
#include <utility>

#include "graspgate/errors.hpp"

namespace graspgate {

namespace {

void check_range(double lo, double hi, int samples) {
  if (!(lo <= hi)) raise(Errc::invalid_set, "placing set range has lo > hi");
  if (samples < 1) raise(Errc::invalid_set, "placing set needs samples >= 1");
  if (samples == 1 && lo != hi)
    raise(Errc::invalid_set, "single-sample placing set needs lo == hi");
}

void check_axis(const Eigen::Vector3d& axis) {
  if (std::abs(axis.norm() - 1.0) > 1e-9)
    raise(Errc::invalid_set, "placing set axis must be unit length");
}

int step_count(double lo, double hi, double step) {
  if (hi <= lo) return 1;
  return static_cast<int>(std::ceil((hi - lo) / step - 1e-9)) + 1;
}

}  // namespace

PlacingSet PlacingSet::discrete(std::vector<Pose> members) {
  if (members.empty()) raise(Errc::empty_set, "discrete placing set has no members");
  PlacingSet s;
  s.kind_ = SetKind::discrete;
  s.base_ = members.front();
  s.members_ = std::move(members);
  s.samples_ = static_cast<int>(s.members_.size());
  return s;
}

PlacingSet PlacingSet::singleton(const Pose& base) {
  return discrete({base});
}

PlacingSet PlacingSet::linear(const Pose& base, const Eigen::Vector3d& axis,
                              double lo, double hi, int samples) {
  check_axis(axis);
  check_range(lo, hi, samples);
  PlacingSet s;
  s.kind_ = SetKind::linear;
  s.base_ = base;
  s.axis_ = axis;
  s.lo_ = lo;
  s.hi_ = hi;
  s.samples_ = samples;
  return s;
}

PlacingSet PlacingSet::rotational(const Pose& base, const Eigen::Vector3d& axis,
                                  const Eigen::Vector3d& anchor, double lo,
                                  double hi, int samples) {
  check_axis(axis);
  check_range(lo, hi, samples);
  PlacingSet s;
  s.kind_ = SetKind::rotational;
  s.base_ = base;
  s.axis_ = axis;
  s.anchor_ = anchor;
  s.lo_ = lo;
  s.hi_ = hi;
  s.samples_ = samples;
  return s;
}

std::size_t PlacingSet::size() const {
  switch (kind_) {
    case SetKind::discrete:
      return members_.size();
    case SetKind::linear:
    case SetKind::rotational:
      return static_cast<std::size_t>(samples_);
    case SetKind::product:
      return factor1_->size() * factor2_->size();
  }
  return 0;
}

double PlacingSet::parameter_at(int k) const {
  if (kind_ != SetKind::linear && kind_ != SetKind::rotational)
    raise(Errc::invalid_set, "parameter_at applies to continuous sets only");
  if (k < 0 || k >= samples_) raise(Errc::invalid_set, "sample index out of range");
  if (samples_ == 1) return lo_;
  if (k == samples_ - 1) return hi_;  // end point exact, no rounding drift
  return lo_ + static_cast<double>(k) * (hi_ - lo_) / static_cast<double>(samples_ - 1);
}

Pose PlacingSet::offset_at(std::size_t k) const {
  if (k >= size()) raise(Errc::invalid_set, "sample index out of range");
  switch (kind_) {
    case SetKind::discrete:
      return compose(members_[k], inverse(base_));
    case SetKind::linear:
      return Pose::translation(parameter_at(static_cast<int>(k)) * axis_);
    case SetKind::rotational:
      return Pose::rot_axis_about(axis_, parameter_at(static_cast<int>(k)), anchor_);
    case SetKind::product: {
      const std::size_t n2 = factor2_->size();
      return compose(factor1_->offset_at(k / n2), factor2_->offset_at(k % n2));
    }
  }
  raise(Errc::invalid_set, "unknown placing set kind");
}

std::vector<Pose> PlacingSet::enumerate() const {
  std::vector<Pose> out;
  out.reserve(size());
  switch (kind_) {
    case SetKind::discrete:
      out = members_;
      break;
    case SetKind::linear:
      for (int k = 0; k < samples_; ++k)
        out.emplace_back(base_.rotation(),
                         (base_.translation() + parameter_at(k) * axis_).eval());
      break;
    case SetKind::rotational:
      for (int k = 0; k < samples_; ++k)
        out.push_back(compose(
            Pose::rot_axis_about(axis_, parameter_at(k), anchor_), base_));
      break;
    case SetKind::product: {
      const std::size_t n1 = factor1_->size();
      const std::size_t n2 = factor2_->size();
      for (std::size_t i = 0; i < n1; ++i) {
        const Pose o1 = factor1_->offset_at(i);
        for (std::size_t j = 0; j < n2; ++j)
          out.push_back(compose(compose(o1, factor2_->offset_at(j)), base_));
      }
      break;
    }
  }
  return out;
}

PlacingSet PlacingSet::refined(int multiplier) const {
  if (multiplier < 1) raise(Errc::invalid_set, "refinement multiplier must be >= 1");
  switch (kind_) {
    case SetKind::discrete:
      return *this;
    case SetKind::linear:
      return linear(base_, axis_, lo_, hi_, multiplier * (samples_ - 1) + 1);
    case SetKind::rotational:
      return rotational(base_, axis_, anchor_, lo_, hi_,
                        multiplier * (samples_ - 1) + 1);
    case SetKind::product:
      return product(factor1_->refined(multiplier), factor2_->refined(multiplier));
  }
  raise(Errc::invalid_set, "unknown placing set kind");
}

PlacingSet product(const PlacingSet& a, const PlacingSet& b) {
  if (a.kind() == SetKind::product || b.kind() == SetKind::product)
    raise(Errc::nested_product, "product factors must not be products");
  if (!approx_equal(a.base_pose(), b.base_pose(), 1e-9))
    raise(Errc::invalid_set, "product factors must share a base pose");
  PlacingSet s;
  s.kind_ = SetKind::product;
  s.base_ = a.base_pose();
  s.factor1_ = std::make_shared<const PlacingSet>(a);
  s.factor2_ = std::make_shared<const PlacingSet>(b);
  return s;
}

int default_linear_samples(double lo, double hi) {
  return step_count(lo, hi, kLinearSampleStep);
}

int default_rotational_samples(double lo, double hi) {
  return step_count(lo, hi, kRotationalSampleStep);
}

}  // namespace graspgate
