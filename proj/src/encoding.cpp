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

#include "qdpv/encoding.hpp"

#include <cmath>
#include <string>

#include "qdpv/gates.hpp"

namespace qdpv {

namespace {

Gate rotation_gate(Axis axis) {
  switch (axis) {
    case Axis::X: return Gate::RX;
    case Axis::Y: return Gate::RY;
    case Axis::Z: return Gate::RZ;
  }
  throw InvalidInput("unhandled axis");
}

std::vector<Axis> effective_axes(const ClassicalVector& v) {
  if (v.values.empty()) {
    throw InvalidInput("classical vector must be nonempty");
  }
  if (v.axes.empty()) {
    return std::vector<Axis>(v.values.size(), Axis::Y);
  }
  if (v.axes.size() != v.values.size()) {
    throw InvalidInput("axes length " + std::to_string(v.axes.size()) +
                       " does not match values length " +
                       std::to_string(v.values.size()));
  }
  return v.axes;
}

Complex rotated_zero_overlap(Axis axis, double theta) {
  // <0|R(theta)|0>.
  const Matrix r = gate_matrix({rotation_gate(axis), {theta}, {0}});
  return r(0, 0);
}

}  // namespace

DensityMatrix angle_encode(const ClassicalVector& v) {
  const std::vector<Axis> axes = effective_axes(v);
  Vector amps(1);
  amps(0) = 1.0;
  for (std::size_t j = 0; j < v.values.size(); ++j) {
    const Matrix r = gate_matrix({rotation_gate(axes[j]), {v.values[j]}, {0}});
    Vector qubit(2);
    qubit << r(0, 0), r(1, 0);  // R|0> is the first column
    Vector next(amps.size() * 2);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      next(2 * i) = amps(i) * qubit(0);
      next(2 * i + 1) = amps(i) * qubit(1);
    }
    amps = std::move(next);
  }
  return DensityMatrix::pure(amps);
}

DensityMatrix amplitude_encode(const std::vector<double>& v,
                               bool pad_to_power_of_two) {
  if (v.empty()) {
    throw InvalidInput("amplitude encoding needs a nonempty vector");
  }
  double norm_sq = 0.0;
  for (double x : v) norm_sq += x * x;
  if (norm_sq == 0.0) {
    throw InvalidInput("amplitude encoding needs a nonzero vector");
  }
  std::size_t dim = 1;
  while (dim < v.size()) dim *= 2;
  if (dim != v.size() && !pad_to_power_of_two) {
    throw InvalidInput("vector length " + std::to_string(v.size()) +
                       " is not a power of two (padding is opt-in)");
  }
  dim = std::max<std::size_t>(dim, 2);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim));
  const double inv_norm = 1.0 / std::sqrt(norm_sq);
  for (std::size_t i = 0; i < v.size(); ++i) {
    amps(static_cast<Eigen::Index>(i)) = v[i] * inv_norm;
  }
  return DensityMatrix::pure(amps);
}

double encoded_neighbor_distance(const ClassicalVector& v,
                                 const ClassicalVector& w) {
  const std::vector<Axis> axes_v = effective_axes(v);
  const std::vector<Axis> axes_w = effective_axes(w);
  if (v.values.size() != w.values.size()) {
    throw InvalidInput("neighbor vectors must have equal length");
  }
  if (axes_v != axes_w) {
    throw InvalidInput("neighbor vectors must use the same axes");
  }
  std::size_t diff_count = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    if (v.values[i] != w.values[i]) {
      ++diff_count;
      j = i;
    }
  }
  if (diff_count != 1) {
    throw NotNeighbors("vectors differ in " + std::to_string(diff_count) +
                       " elements, need exactly 1");
  }
  const double delta = v.values[j] - w.values[j];
  // <0|R(d)|0><0|R(-d)|0> = |<0|R(d)|0>|^2 since R(-d) = R(d)^dagger.
  const Complex z = rotated_zero_overlap(axes_v[j], delta);
  const double overlap_sq = std::norm(z);
  return std::sqrt(std::max(0.0, 1.0 - overlap_sq));
}

}  // namespace qdpv
