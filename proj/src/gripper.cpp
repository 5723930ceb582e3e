#include "graspgate/gripper.hpp"

#include <cmath>

#include "graspgate/errors.hpp"

namespace graspgate {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    raise(Errc::invalid_dimension, std::string(what) + " must be strictly positive");
  }
}

int lattice_count(double edge, double spacing) {
  // ceil with a relative nudge so exact multiples don't round up.
  return static_cast<int>(std::ceil(edge / spacing - 1e-9)) + 1;
}

void append_box_lattice(std::vector<Eigen::Vector3d>& out, const Eigen::Vector3d& lo,
                        const Eigen::Vector3d& hi, double spacing) {
  int nx = lattice_count(hi.x() - lo.x(), spacing);
  int ny = lattice_count(hi.y() - lo.y(), spacing);
  int nz = lattice_count(hi.z() - lo.z(), spacing);
  auto lin = [](double a, double b, int n, int i) {
    return i == n - 1 ? b : a + (b - a) * i / (n - 1);
  };
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        out.emplace_back(lin(lo.x(), hi.x(), nx, i), lin(lo.y(), hi.y(), ny, j),
                         lin(lo.z(), hi.z(), nz, k));
}

}  // namespace

void GripperSpec::validate() const {
  require_positive(jaw_opening, "jaw_opening");
  require_positive(jaw_length, "jaw_length");
  require_positive(jaw_thickness, "jaw_thickness");
  require_positive(jaw_width, "jaw_width");
  require_positive(palm_depth, "palm_depth");
  require_positive(palm_width, "palm_width");
  require_positive(palm_height, "palm_height");
  require_positive(sample_spacing, "sample_spacing");
  if (sample_spacing > std::min(jaw_thickness, jaw_width) + 1e-12) {
    raise(Errc::invalid_dimension,
          "sample_spacing must not exceed min(jaw_thickness, jaw_width)");
  }
}

double GripperSpec::max_extent() const {
  double span_x = std::max(palm_width, jaw_opening + 2.0 * jaw_thickness);
  double span_y = std::max(jaw_width, palm_height);
  double span_z = jaw_length + palm_depth;
  return std::sqrt(span_x * span_x + span_y * span_y + span_z * span_z);
}

GripperBody build_body(const GripperSpec& spec) {
  spec.validate();
  GripperBody body;
  body.spec = spec;

  double half_open = spec.jaw_opening / 2.0;
  Eigen::Vector3d palm_lo(-spec.palm_width / 2.0, -spec.palm_height / 2.0, spec.jaw_length);
  Eigen::Vector3d palm_hi(spec.palm_width / 2.0, spec.palm_height / 2.0,
                          spec.jaw_length + spec.palm_depth);
  Eigen::Vector3d jaw_neg_lo(-half_open - spec.jaw_thickness, -spec.jaw_width / 2.0, 0.0);
  Eigen::Vector3d jaw_neg_hi(-half_open, spec.jaw_width / 2.0, spec.jaw_length);
  Eigen::Vector3d jaw_pos_lo(half_open, -spec.jaw_width / 2.0, 0.0);
  Eigen::Vector3d jaw_pos_hi(half_open + spec.jaw_thickness, spec.jaw_width / 2.0,
                             spec.jaw_length);

  append_box_lattice(body.points, palm_lo, palm_hi, spec.sample_spacing);
  append_box_lattice(body.points, jaw_neg_lo, jaw_neg_hi, spec.sample_spacing);
  append_box_lattice(body.points, jaw_pos_lo, jaw_pos_hi, spec.sample_spacing);
  return body;
}

std::vector<Eigen::Vector3d> posed_points(const GripperBody& body, const Pose& pose) {
  std::vector<Eigen::Vector3d> out;
  posed_points_into(body, pose, out);
  return out;
}

void posed_points_into(const GripperBody& body, const Pose& pose,
                       std::vector<Eigen::Vector3d>& out) {
  out.resize(body.points.size());
  const Eigen::Matrix3d& r = pose.rotation();
  const Eigen::Vector3d& t = pose.translation();
  for (std::size_t i = 0; i < body.points.size(); ++i) {
    out[i].noalias() = r * body.points[i];
    out[i] += t;
  }
}

}  // namespace graspgate
