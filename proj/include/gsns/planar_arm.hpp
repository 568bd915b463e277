/*! \file planar_arm.hpp
 * \brief Forward kinematics and Jacobians of a planar nR arm, plus the
 *        augmented matrix stacking the identity over all control-point
 *        Jacobians
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

#ifndef GSNS_PLANAR_ARM_HPP
#define GSNS_PLANAR_ARM_HPP

#include <vector>

#include "gsns/types.hpp"

namespace gsns {

/// A Cartesian point on the robot body whose motion is box-constrained.
/// The point sits at the distal end of link `joint` (1-based, so joint = n
/// is the end-effector); `axes` lists the constrained coordinates (0 = x,
/// 1 = y), one constraint row per listed axis.
struct ControlPoint {
  int joint = 1;
  std::vector<int> axes;
};

/// Geometry of a planar nR arm with revolute joints and a set of
/// constrained control points fixed at link-end frames.
struct RobotModel {
  std::vector<double> link_lengths;
  std::vector<ControlPoint> control_points;

  int dof() const { return static_cast<int>(link_lengths.size()); }
  int num_control_points() const { return static_cast<int>(control_points.size()); }

  /// Total number of constrained Cartesian coordinates (sum of d_i).
  int constrained_dims() const;

  /// Throws std::invalid_argument on non-positive lengths, empty chains,
  /// out-of-range control-point joints or bad axis sets.
  void validate() const;
};

/// Identity block over the control-point Jacobians, with a per-row record
/// of where each row comes from.
struct AugmentedJacobian {
  Mat A;
  std::vector<RowSource> row_map;

  int rows() const { return static_cast<int>(A.rows()); }
  int dof() const { return static_cast<int>(A.cols()); }
};

/// Row sources for [I over J_cp], shared between the augmented matrix and
/// the generalized bounds.
std::vector<RowSource> build_row_map(const RobotModel& model);

/// Positions of the n+1 link-end frames (index 0 is the base origin,
/// index n the end-effector).
std::vector<Vec2> forward_kinematics(const RobotModel& model, const JointConfig& q);

/// Constrained control-point coordinates in model order, extracted from
/// the forward-kinematics points (length = constrained_dims()).
Vec control_point_coordinates(const RobotModel& model, const std::vector<Vec2>& points);

/// 2 x n positional Jacobian of the end-effector.
Mat ee_jacobian(const RobotModel& model, const JointConfig& q);

/// d_i x n positional Jacobian of control point `cp_index`, rows ordered
/// as the point's axis list. Columns of joints distal to the point are zero.
Mat control_point_jacobian(const RobotModel& model, const JointConfig& q, int cp_index);

/// Stacks the n x n identity over all control-point Jacobians in model
/// order and records the row sources.
AugmentedJacobian augmented_matrix(const RobotModel& model, const JointConfig& q);

}  // namespace gsns

#endif  // GSNS_PLANAR_ARM_HPP
