// Copyright 2026 The hqc Authors
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

#include <vector>

#include <Eigen/Dense>

#include "hqc/operator.hpp"

namespace hqc {

/// Pure state on n qubits; basis index bit q is qubit q.
struct StateVector {
  std::size_t n = 0;
  Eigen::VectorXcd amp;

  StateVector() = default;
  explicit StateVector(std::size_t nq);  // |0...0>
  StateVector(std::size_t nq, Eigen::VectorXcd a);
  double norm() const { return amp.norm(); }
  void normalize() { amp /= amp.norm(); }
};

// Two interchangeable implementations of the state-vector primitives. The
// serial one is the reference used by tests; the OpenMP one is used by the
// engine and fault harness.
namespace kernels {

namespace serial {
/// Applies a 2^k x 2^k matrix to `qubits` (local bit j <-> qubits[j]).
void apply_matrix(StateVector& psi, const std::vector<std::size_t>& qubits, const Eigen::MatrixXcd& m);
void apply_pauli(StateVector& psi, const PauliString& p);
/// <psi|p|psi>.
cplx expectation(const StateVector& psi, const PauliString& p);
/// Result of op * psi, for general Pauli sums.
StateVector apply_operator(const StateVector& psi, const Operator& op);
}  // namespace serial

namespace omp {
void apply_matrix(StateVector& psi, const std::vector<std::size_t>& qubits, const Eigen::MatrixXcd& m);
void apply_pauli(StateVector& psi, const PauliString& p);
cplx expectation(const StateVector& psi, const PauliString& p);
StateVector apply_operator(const StateVector& psi, const Operator& op);
}  // namespace omp

}  // namespace kernels
}  // namespace hqc
