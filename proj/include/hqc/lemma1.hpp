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

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace hqc {

/// Direct-sum decomposition of a Hilbert space into A_i (x) B_i blocks plus a kernel.
struct BlockDecomposition {
  std::vector<std::size_t> dim_a;
  std::vector<std::size_t> dim_b;
  std::vector<double> omega;  // eigenvalue of H^B_i
  std::size_t kernel_dim = 0;

  std::size_t total() const;
};

using PathFn = std::function<Eigen::MatrixXcd(double)>;

/// One leg of a Hamiltonian path, sampled on [0, 1].
struct PathLeg {
  PathFn hamiltonian;
};

/// Transports an orthonormal frame of the eigenspace of h(0) with eigenvalue
/// near `energy` along consecutive legs by projection and Lowdin
/// re-orthonormalisation. The grid doubles until successive results differ by
/// less than `tol`.
Eigen::MatrixXcd transport_frame(const std::vector<PathLeg>& legs, const Eigen::MatrixXcd& frame, double energy,
                                 double tol = 1e-12);

struct Lemma1Result {
  std::size_t d1 = 2, d2 = 2;
  BlockDecomposition blocks;
  Eigen::MatrixXcd base_ground, base_excited;  // holonomy of a single loop
  Eigen::MatrixXcd ground, excited;            // composed holonomy
  double ground_residual = 0;                  // ||ground - W1||
  double excited_offdiag = 0;                  // ||excited - (tr/d2) I||
  std::complex<double> excited_phase;          // tr(excited)/d2
  bool degenerate = false;                     // W2 spectrum had a repeated eigenvalue
};

/// Builds the two-leg loop on H0 = diag(-I_d1, I_d2) whose ground holonomy is
/// W1^{1/d2}, then composes d2 copies conjugated by (I (+) C^k), where C
/// cyclically permutes the eigenbasis of the excited-space holonomy.
Lemma1Result lemma1_compose(const Eigen::MatrixXcd& w1, std::size_t d2);

/// Principal k-th root of a unitary through its Schur form.
Eigen::MatrixXcd unitary_root(const Eigen::MatrixXcd& u, std::size_t k);

}  // namespace hqc
