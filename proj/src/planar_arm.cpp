/*! \file planar_arm.cpp
 * \brief Planar nR kinematics
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

#include "gsns/planar_arm.hpp"

#include <cmath>
#include <stdexcept>

namespace gsns {

std::string to_string(const RowSource& src) {
  if (src.kind == RowSource::Kind::joint) {
    return "joint " + std::to_string(src.joint + 1);
  }
  const char axis = src.axis == 0 ? 'x' : 'y';
  return "cp " + std::to_string(src.cp + 1) + "." + axis;
}

int RobotModel::constrained_dims() const {
  int total = 0;
  for (const auto& cp : control_points) total += static_cast<int>(cp.axes.size());
  return total;
}

void RobotModel::validate() const {
  if (link_lengths.empty()) throw std::invalid_argument("model: at least one link required");
  for (double l : link_lengths) {
    if (!(l > 0.0) || !std::isfinite(l))
      throw std::invalid_argument("model: link lengths must be positive and finite");
  }
  for (const auto& cp : control_points) {
    if (cp.joint < 1 || cp.joint > dof())
      throw std::invalid_argument("model: control-point joint index out of range");
    if (cp.axes.empty() || cp.axes.size() > 2)
      throw std::invalid_argument("model: control point must constrain one or two axes");
    bool seen[2] = {false, false};
    for (int a : cp.axes) {
      if (a < 0 || a > 1) throw std::invalid_argument("model: control-point axis must be x or y");
      if (seen[a]) throw std::invalid_argument("model: duplicate control-point axis");
      seen[a] = true;
    }
  }
}

namespace {

void check_config(const RobotModel& model, const JointConfig& q) {
  if (q.size() != model.dof())
    throw std::invalid_argument("kinematics: joint vector size does not match model dof");
  if (!q.allFinite()) throw std::invalid_argument("kinematics: joint angles must be finite");
}

// Cumulative link angles and their sin/cos, the common ingredient of all
// kinematic maps of the chain.
struct ChainTrig {
  std::vector<double> c, s;  // l_k * cos(theta_k), l_k * sin(theta_k)
};

ChainTrig chain_trig(const RobotModel& model, const JointConfig& q) {
  const int n = model.dof();
  ChainTrig t;
  t.c.resize(n);
  t.s.resize(n);
  double angle = 0.0;
  for (int k = 0; k < n; ++k) {
    angle += q[k];
    t.c[k] = model.link_lengths[k] * std::cos(angle);
    t.s[k] = model.link_lengths[k] * std::sin(angle);
  }
  return t;
}

// Positional Jacobian of the frame at the distal end of link `frame`
// (1-based). Column j is the sum of link tangents from joint j to the frame.
Mat point_jacobian(const ChainTrig& t, int frame, int n) {
  Mat J = Mat::Zero(2, n);
  double sx = 0.0, sy = 0.0;
  for (int j = frame - 1; j >= 0; --j) {
    sx -= t.s[j];
    sy += t.c[j];
    J(0, j) = sx;
    J(1, j) = sy;
  }
  return J;
}

}  // namespace

std::vector<RowSource> build_row_map(const RobotModel& model) {
  std::vector<RowSource> map;
  map.reserve(model.dof() + model.constrained_dims());
  for (int j = 0; j < model.dof(); ++j) {
    map.push_back({RowSource::Kind::joint, j, -1, -1});
  }
  for (int i = 0; i < model.num_control_points(); ++i) {
    const auto& cp = model.control_points[i];
    for (int a : cp.axes) {
      map.push_back({RowSource::Kind::control_point, cp.joint - 1, i, a});
    }
  }
  return map;
}

std::vector<Vec2> forward_kinematics(const RobotModel& model, const JointConfig& q) {
  check_config(model, q);
  const ChainTrig t = chain_trig(model, q);
  std::vector<Vec2> points(model.dof() + 1);
  points[0] = Vec2::Zero();
  for (int k = 0; k < model.dof(); ++k) {
    points[k + 1] = points[k] + Vec2(t.c[k], t.s[k]);
  }
  return points;
}

Vec control_point_coordinates(const RobotModel& model, const std::vector<Vec2>& points) {
  if (static_cast<int>(points.size()) != model.dof() + 1)
    throw std::invalid_argument("kinematics: point list size does not match model");
  Vec coords(model.constrained_dims());
  int h = 0;
  for (const auto& cp : model.control_points) {
    for (int a : cp.axes) coords[h++] = points[cp.joint][a];
  }
  return coords;
}

Mat ee_jacobian(const RobotModel& model, const JointConfig& q) {
  check_config(model, q);
  const ChainTrig t = chain_trig(model, q);
  return point_jacobian(t, model.dof(), model.dof());
}

Mat control_point_jacobian(const RobotModel& model, const JointConfig& q, int cp_index) {
  check_config(model, q);
  if (cp_index < 0 || cp_index >= model.num_control_points())
    throw std::invalid_argument("kinematics: control-point index out of range");
  const auto& cp = model.control_points[cp_index];
  const ChainTrig t = chain_trig(model, q);
  const Mat full = point_jacobian(t, cp.joint, model.dof());
  Mat J(static_cast<int>(cp.axes.size()), model.dof());
  for (int r = 0; r < J.rows(); ++r) J.row(r) = full.row(cp.axes[r]);
  return J;
}

AugmentedJacobian augmented_matrix(const RobotModel& model, const JointConfig& q) {
  check_config(model, q);
  const int n = model.dof();
  AugmentedJacobian aug;
  aug.A = Mat::Zero(n + model.constrained_dims(), n);
  aug.A.topRows(n) = Mat::Identity(n, n);
  const ChainTrig t = chain_trig(model, q);
  int h = n;
  for (const auto& cp : model.control_points) {
    const Mat full = point_jacobian(t, cp.joint, n);
    for (int a : cp.axes) aug.A.row(h++) = full.row(a);
  }
  aug.row_map = build_row_map(model);
  return aug;
}

}  // namespace gsns
