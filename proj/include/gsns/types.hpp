/*! \file types.hpp
 * \brief Shared linear-algebra aliases and the constraint row map
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

#ifndef GSNS_TYPES_HPP
#define GSNS_TYPES_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gsns {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;

/// Joint angles of an nR arm [rad].
using JointConfig = Eigen::VectorXd;

/// Identifies where one row of the augmented constraint system comes from:
/// either a joint velocity row or one constrained axis of a control point.
struct RowSource {
  enum class Kind { joint, control_point };
  Kind kind = Kind::joint;
  int joint = -1;  ///< 0-based joint index (owning joint for control-point rows)
  int cp = -1;     ///< 0-based control-point index, -1 for joint rows
  int axis = -1;   ///< 0 = x, 1 = y, -1 for joint rows
};

std::string to_string(const RowSource& src);

}  // namespace gsns

#endif  // GSNS_TYPES_HPP
