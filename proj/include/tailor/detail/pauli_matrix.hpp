// Copyright 2026 The Tailor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include "tailor/pauli.hpp"

namespace tailor::detail {

// Computational basis index: bit q is qubit q (qubit 1 is the least
// significant bit).

/// Dense matrix as a Kronecker product of 2x2 Pauli matrices.
Eigen::MatrixXcd pauli_matrix(const PauliOperator& p);

/// p applied to `state`, where `state` holds system index b at rows
/// b * stride .. b * stride + stride - 1 (stride > 1 leaves a reference
/// factor untouched).
Eigen::VectorXcd apply_pauli(const PauliOperator& p, const Eigen::VectorXcd& state, Eigen::Index stride = 1);

}  // namespace tailor::detail
