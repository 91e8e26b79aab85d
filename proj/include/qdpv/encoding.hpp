// Copyright 2026 The qdpv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "qdpv/state.hpp"

namespace qdpv {

enum class Axis { X, Y, Z };

/// A classical feature vector with per-element rotation axes for angle
/// encoding. Empty axes means the default axis (Y) for every element.
struct ClassicalVector {
  std::vector<double> values;
  std::vector<Axis> axes;
};

/// Product state |v> = (x) R_axis_j(v_j)|0>, one qubit per element.
DensityMatrix angle_encode(const ClassicalVector& v);

/// Pure state with amplitudes v_i / |v| on log2(N) qubits. Lengths that are
/// not powers of two are rejected unless pad_to_power_of_two is set.
DensityMatrix amplitude_encode(const std::vector<double>& v,
                               bool pad_to_power_of_two = false);

/// Trace distance between the angle encodings of two vectors that differ in
/// exactly one element: sqrt(1 - <0|R(d)|0><0|R(-d)|0>). For x/y axes this
/// is |sin(d/2)|; for the z axis it is 0.
double encoded_neighbor_distance(const ClassicalVector& v,
                                 const ClassicalVector& w);

}  // namespace qdpv
