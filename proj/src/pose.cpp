#include "graspgate/pose.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "graspgate/errors.hpp"
#include "graspgate/log.hpp"

namespace graspgate {

namespace {

void check_rotation(const Eigen::Matrix3d& r) {
  double drift = rotation_drift(r);
  if (!(drift <= kRotationTol)) {
    std::ostringstream msg;
    msg << "rotation block fails orthonormality, ||R^T R - I||_F = " << drift;
    raise(Errc::invalid_pose, msg.str());
  }
  if (r.determinant() <= 0.0) {
    raise(Errc::invalid_pose, "rotation block has non-positive determinant (reflection)");
  }
}

}  // namespace

Pose::Pose() : r_(Eigen::Matrix3d::Identity()), t_(Eigen::Vector3d::Zero()) {}

Pose::Pose(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation)
    : r_(rotation), t_(translation) {
  check_rotation(r_);
}

Pose Pose::identity() { return Pose(); }

Pose Pose::translation(const Eigen::Vector3d& t) {
  return Pose(Eigen::Matrix3d::Identity(), t, Unchecked{});
}

Pose Pose::translation(double x, double y, double z) {
  return translation(Eigen::Vector3d(x, y, z));
}

Pose Pose::rot_x(double rad) {
  return Pose(Eigen::AngleAxisd(rad, Eigen::Vector3d::UnitX()).toRotationMatrix(),
              Eigen::Vector3d::Zero(), Unchecked{});
}

Pose Pose::rot_y(double rad) {
  return Pose(Eigen::AngleAxisd(rad, Eigen::Vector3d::UnitY()).toRotationMatrix(),
              Eigen::Vector3d::Zero(), Unchecked{});
}

Pose Pose::rot_z(double rad) {
  return Pose(Eigen::AngleAxisd(rad, Eigen::Vector3d::UnitZ()).toRotationMatrix(),
              Eigen::Vector3d::Zero(), Unchecked{});
}

Pose Pose::rot_axis(const Eigen::Vector3d& axis, double rad) {
  if (std::abs(axis.norm() - 1.0) > kRotationTol) {
    raise(Errc::invalid_pose, "rotation axis must be unit length");
  }
  return Pose(Eigen::AngleAxisd(rad, axis).toRotationMatrix(), Eigen::Vector3d::Zero(),
              Unchecked{});
}

Pose Pose::rot_axis_about(const Eigen::Vector3d& axis, double rad,
                          const Eigen::Vector3d& anchor) {
  Pose r = rot_axis(axis, rad);
  // Conjugate by the anchor translation so the axis line passes through it.
  return Pose(r.rotation(), anchor - r.rotation() * anchor, Unchecked{});
}

Pose Pose::from_quaternion(double qw, double qx, double qy, double qz,
                           const Eigen::Vector3d& t) {
  double norm = std::sqrt(qw * qw + qx * qx + qy * qy + qz * qz);
  if (std::abs(norm - 1.0) > kQuatNormTol) {
    std::ostringstream msg;
    msg << "quaternion norm " << norm << " outside 1 +/- " << kQuatNormTol;
    raise(Errc::invalid_quaternion, msg.str());
  }
  Eigen::Quaterniond q(qw / norm, qx / norm, qy / norm, qz / norm);
  return Pose(q.toRotationMatrix(), t, Unchecked{});
}

Eigen::Vector4d Pose::quaternion_wxyz() const {
  Eigen::Quaterniond q(r_);
  q.normalize();
  Eigen::Vector4d out(q.w(), q.x(), q.y(), q.z());
  // q and -q encode the same rotation; pick the sign that makes the first
  // nonzero component positive so serialization round-trips byte-identically.
  for (int i = 0; i < 4; ++i) {
    if (out[i] > 0.0) break;
    if (out[i] < 0.0) {
      out = -out;
      break;
    }
  }
  // Flush signed zeros; -0.0 would otherwise survive into JSON output.
  for (int i = 0; i < 4; ++i) {
    if (out[i] == 0.0) out[i] = 0.0;
  }
  return out;
}

Eigen::Matrix4d Pose::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = r_;
  m.topRightCorner<3, 1>() = t_;
  return m;
}

double rotation_drift(const Eigen::Matrix3d& r) {
  return (r.transpose() * r - Eigen::Matrix3d::Identity()).norm();
}

Eigen::Matrix3d orthonormalized(const Eigen::Matrix3d& r) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  // Keep the result a proper rotation even if the input is nearly reflective.
  if ((u * v.transpose()).determinant() < 0.0) {
    u.col(2) = -u.col(2);
  }
  return u * v.transpose();
}

Pose compose(const Pose& a, const Pose& b) {
  Eigen::Matrix3d r = a.r_ * b.r_;
  double drift = rotation_drift(r);
  if (drift > kRotationTol) {
    log_warn("compose: rotation drift above tolerance, re-orthonormalizing");
    r = orthonormalized(r);
  }
  return Pose(r, a.r_ * b.t_ + a.t_, Pose::Unchecked{});
}

Pose inverse(const Pose& p) {
  Eigen::Matrix3d rt = p.r_.transpose();
  return Pose(rt, -(rt * p.t_), Pose::Unchecked{});
}

Pose placing_grasp(const Pose& g0, const Pose& x0, const Pose& xf) {
  return compose(compose(xf, inverse(x0)), g0);
}

double pose_distance(const Pose& a, const Pose& b) {
  double dr = (a.rotation() - b.rotation()).cwiseAbs().maxCoeff();
  double dt = (a.translation() - b.translation()).cwiseAbs().maxCoeff();
  return std::max(dr, dt);
}

bool approx_equal(const Pose& a, const Pose& b, double tol) {
  return pose_distance(a, b) <= tol;
}

}  // namespace graspgate
