#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace graspgate {

// Accepted Frobenius drift of R^T R from the identity. Poses violating this
// are rejected at construction; composition repairs drift instead.
inline constexpr double kRotationTol = 1e-9;

// A quaternion whose norm deviates from 1 by more than this is rejected at
// interchange boundaries; anything closer is renormalized silently.
inline constexpr double kQuatNormTol = 1e-6;

// Rigid transform in a single fixed world frame, stored as rotation matrix
// plus translation. The rotation block is validated (orthonormal, det +1)
// whenever a pose enters through a public constructor.
class Pose {
 public:
  Pose();  // identity
  Pose(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation);

  static Pose identity();
  static Pose translation(const Eigen::Vector3d& t);
  static Pose translation(double x, double y, double z);
  static Pose rot_x(double rad);
  static Pose rot_y(double rad);
  static Pose rot_z(double rad);
  // axis must be unit length to kRotationTol.
  static Pose rot_axis(const Eigen::Vector3d& axis, double rad);
  static Pose rot_axis_about(const Eigen::Vector3d& axis, double rad,
                             const Eigen::Vector3d& anchor);
  // Interchange entry point: applies the kQuatNormTol acceptance band.
  static Pose from_quaternion(double qw, double qx, double qy, double qz,
                              const Eigen::Vector3d& t);

  const Eigen::Matrix3d& rotation() const { return r_; }
  const Eigen::Vector3d& translation() const { return t_; }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return r_ * p + t_; }

  // Unit quaternion with canonical sign: w > 0, or the first nonzero
  // component positive when w == 0. Keeps serialized poses byte-stable.
  Eigen::Vector4d quaternion_wxyz() const;

  Eigen::Matrix4d matrix() const;

 private:
  struct Unchecked {};
  Pose(const Eigen::Matrix3d& r, const Eigen::Vector3d& t, Unchecked) : r_(r), t_(t) {}

  Eigen::Matrix3d r_;
  Eigen::Vector3d t_;

  friend Pose compose(const Pose& a, const Pose& b);
  friend Pose inverse(const Pose& p);
};

// Frobenius norm of R^T R - I.
double rotation_drift(const Eigen::Matrix3d& r);

// Nearest rotation matrix in the Frobenius sense (polar factor via SVD).
Eigen::Matrix3d orthonormalized(const Eigen::Matrix3d& r);

// Transform "a after b": compose(a, b).apply(p) == a.apply(b.apply(p)).
// Repairs numerical drift above kRotationTol and logs when it has to.
Pose compose(const Pose& a, const Pose& b);

Pose inverse(const Pose& p);

// Rigid non-slippage transfer of a grasp: the gripper pose that keeps the
// object-gripper relation fixed when the object moves from x0 to xf,
// gf = (xf * x0^-1) * g0. All poses share one world frame.
Pose placing_grasp(const Pose& g0, const Pose& x0, const Pose& xf);

// Largest elementwise absolute difference across the rotation matrices and
// translations. Cheap metric for "same pose to tolerance" assertions.
double pose_distance(const Pose& a, const Pose& b);

bool approx_equal(const Pose& a, const Pose& b, double tol);

}  // namespace graspgate
