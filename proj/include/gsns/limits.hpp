/*! \file limits.hpp
 * \brief Shaping of joint and Cartesian position/velocity limits into the
 *        per-step generalized velocity box
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

#ifndef GSNS_LIMITS_HPP
#define GSNS_LIMITS_HPP

#include <vector>

#include "gsns/planar_arm.hpp"
#include "gsns/types.hpp"

namespace gsns {

/// Position and velocity box limits of one control point, one entry per
/// constrained axis, ordered as the point's axis list.
struct CartesianLimits {
  Vec position_min, position_max;
  Vec velocity_min, velocity_max;
};

/// Hard limits of the whole system: per-joint position/velocity boxes and
/// per-control-point Cartesian boxes.
struct LimitSet {
  Vec joint_position_min, joint_position_max;  // [rad]
  Vec joint_velocity_min, joint_velocity_max;  // [rad/s]
  std::vector<CartesianLimits> control_points;

  /// Throws std::invalid_argument when sizes disagree with the model or a
  /// box is empty / does not straddle zero velocity.
  void validate(const RobotModel& model) const;
};

/// Per-step velocity box over the augmented vector (joint rows first, then
/// control-point rows in model order). Units per row follow row_map.
struct GeneralizedBounds {
  Vec min, max;
  std::vector<RowSource> row_map;

  int rows() const { return static_cast<int>(min.size()); }
};

/// A velocity box over one block of coordinates.
struct VelocityBox {
  Vec min, max;
};

/// Joint velocity box: the tighter of the velocity limit and the one-step
/// position-limit approach rate (Q_max - q)/T. A crossed box (position
/// limit already violated beyond recovery at full speed) collapses to the
/// inward velocity limit.
VelocityBox joint_velocity_box(const LimitSet& limits, const JointConfig& q, double T);

/// Cartesian analogue over the constrained control-point coordinates
/// (`cp_coords` as produced by control_point_coordinates()).
VelocityBox cartesian_velocity_box(const LimitSet& limits, const Vec& cp_coords, double T);

/// Concatenates the joint box and the control-point box in model order,
/// aligned with the augmented-matrix row map.
GeneralizedBounds generalized_bounds(const RobotModel& model, const LimitSet& limits,
                                     const JointConfig& q, const Vec& cp_coords, double T);

}  // namespace gsns

#endif  // GSNS_LIMITS_HPP
