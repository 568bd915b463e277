/*! \file limits.cpp
 * \brief Velocity-box shaping
 */
/*
 *    Copyright 2026 The gsns Authors
 *
 *    Licensed under the Apache License, Version 2.0 (the "License");
 *    you may not use this file except in compliance with the License.
 *    You may obtain a copy of the License at
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *    Unless required by applicable law or agreed to in writing, software
 *    distributed under the License is distributed on an "AS IS" BASIS,
 *    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *    See the License for the specific language governing permissions and
 *    limitations under the License.
 */

#include "gsns/limits.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsns {

namespace {

void check_box(const Vec& lo, const Vec& hi, bool straddles_zero, const char* what) {
  if (lo.size() != hi.size()) throw std::invalid_argument(std::string(what) + ": size mismatch");
  for (int i = 0; i < lo.size(); ++i) {
    if (!(lo[i] < hi[i])) throw std::invalid_argument(std::string(what) + ": min must be below max");
    if (straddles_zero && !(lo[i] < 0.0 && 0.0 < hi[i]))
      throw std::invalid_argument(std::string(what) + ": velocity box must contain zero strictly");
  }
}

// One row of Eq-style shaping. When the position limit is already violated
// so far that the box crosses, both bounds collapse to the inward velocity
// limit: the fastest recovery that still respects the velocity hard bound.
void shape_row(double pos, double pos_min, double pos_max, double vel_min, double vel_max,
               double T, double& lo, double& hi) {
  lo = std::max((pos_min - pos) / T, vel_min);
  hi = std::min((pos_max - pos) / T, vel_max);
  if (lo > hi) {
    const double inward = pos > pos_max ? vel_min : vel_max;
    lo = inward;
    hi = inward;
  }
}

}  // namespace

void LimitSet::validate(const RobotModel& model) const {
  const int n = model.dof();
  if (joint_position_min.size() != n || joint_position_max.size() != n ||
      joint_velocity_min.size() != n || joint_velocity_max.size() != n)
    throw std::invalid_argument("limits: joint limit sizes do not match model dof");
  check_box(joint_position_min, joint_position_max, false, "limits: joint position");
  check_box(joint_velocity_min, joint_velocity_max, true, "limits: joint velocity");
  if (static_cast<int>(control_points.size()) != model.num_control_points())
    throw std::invalid_argument("limits: control-point limit count does not match model");
  for (int i = 0; i < model.num_control_points(); ++i) {
    const auto d = static_cast<Eigen::Index>(model.control_points[i].axes.size());
    const auto& cl = control_points[i];
    if (cl.position_min.size() != d || cl.position_max.size() != d ||
        cl.velocity_min.size() != d || cl.velocity_max.size() != d)
      throw std::invalid_argument("limits: control-point limit sizes do not match axis count");
    check_box(cl.position_min, cl.position_max, false, "limits: control-point position");
    check_box(cl.velocity_min, cl.velocity_max, true, "limits: control-point velocity");
  }
}

VelocityBox joint_velocity_box(const LimitSet& limits, const JointConfig& q, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("limits: sampling time must be positive");
  if (q.size() != limits.joint_position_min.size())
    throw std::invalid_argument("limits: joint vector size mismatch");
  VelocityBox box;
  box.min.resize(q.size());
  box.max.resize(q.size());
  for (int j = 0; j < q.size(); ++j) {
    shape_row(q[j], limits.joint_position_min[j], limits.joint_position_max[j],
              limits.joint_velocity_min[j], limits.joint_velocity_max[j], T, box.min[j],
              box.max[j]);
  }
  return box;
}

VelocityBox cartesian_velocity_box(const LimitSet& limits, const Vec& cp_coords, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("limits: sampling time must be positive");
  VelocityBox box;
  box.min.resize(cp_coords.size());
  box.max.resize(cp_coords.size());
  int h = 0;
  for (const auto& cl : limits.control_points) {
    for (int a = 0; a < cl.position_min.size(); ++a, ++h) {
      if (h >= cp_coords.size())
        throw std::invalid_argument("limits: control-point coordinate vector too short");
      shape_row(cp_coords[h], cl.position_min[a], cl.position_max[a], cl.velocity_min[a],
                cl.velocity_max[a], T, box.min[h], box.max[h]);
    }
  }
  if (h != cp_coords.size())
    throw std::invalid_argument("limits: control-point coordinate vector too long");
  return box;
}

GeneralizedBounds generalized_bounds(const RobotModel& model, const LimitSet& limits,
                                     const JointConfig& q, const Vec& cp_coords, double T) {
  const VelocityBox joints = joint_velocity_box(limits, q, T);
  const VelocityBox cps = cartesian_velocity_box(limits, cp_coords, T);
  GeneralizedBounds bounds;
  bounds.min.resize(joints.min.size() + cps.min.size());
  bounds.max.resize(bounds.min.size());
  bounds.min << joints.min, cps.min;
  bounds.max << joints.max, cps.max;
  bounds.row_map = build_row_map(model);
  return bounds;
}

}  // namespace gsns
