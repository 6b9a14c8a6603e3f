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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hqc/kernels.hpp"
#include "hqc/schedule.hpp"

namespace hqc {

/// Dense unitary on an ordered list of qubits (local bit k <-> support[k]).
struct SupportUnitary {
  std::vector<std::size_t> support;
  Eigen::MatrixXcd matrix;

  double unitarity_error() const;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvolveOptions {
  double steps_per_unit = 200.0;  // N = ceil(steps_per_unit * T) per segment
  std::size_t max_support = 12;   // dense representation limit
};

/// Extends `m` acting on `qubits` to the ordered `support` (a superset).
Eigen::MatrixXcd embed_matrix(const Eigen::MatrixXcd& m, const std::vector<std::size_t>& qubits,
                              const std::vector<std::size_t>& support);

std::size_t step_count(const Segment& seg, const EvolveOptions& opt = {});

/// Precomputed branch matrices of one segment on a fixed support.
class SegmentPropagator {
 public:
  SegmentPropagator(const Segment& seg, std::vector<std::size_t> support = {});

  const std::vector<std::size_t>& support() const { return support_; }
  /// exp(-i dt H(t + dt/2)), exact per branch because each branch squares to a scalar.
  Eigen::MatrixXcd step(double t, double dt) const;
  /// Product of steps [first, last) of an N-step uniform grid.
  Eigen::MatrixXcd steps(std::size_t first, std::size_t last, std::size_t n_steps) const;
  /// Unit-norm path Hamiltonian at geometric progress s (direction applied).
  Eigen::MatrixXcd path_hamiltonian(double s) const;

 private:
  Segment seg_;
  std::vector<std::size_t> support_;
  std::vector<Eigen::MatrixXcd> p_, pa_, pb_;
};

/// Single midpoint step on the segment support.
SupportUnitary step_propagator(const Segment& seg, double t, double dt);
/// Full segment on its own support with the fixed step policy.
SupportUnitary segment_unitary(const Segment& seg, const EvolveOptions& opt = {});
/// Schedule propagator on its full support; throws ResourceError above opt.max_support.
SupportUnitary evolve(const Schedule& s, const EvolveOptions& opt = {});
/// Evolves a register state through the schedule.
void evolve_state(const Schedule& s, StateVector& psi, const EvolveOptions& opt = {});

/// Eigenprojectors (I -/+ S)/2 of an involution S; ground first.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> eigen_split(const Eigen::MatrixXcd& s);
/// Orthonormal basis of the range of a projector.
Eigen::MatrixXcd range_basis(const Eigen::MatrixXcd& projector);

struct TransportResult {
  SupportUnitary unitary;  // geometric holonomy of both eigenspaces, per stage composed
  std::size_t steps = 0;   // steps per segment at convergence
  double change = 0;       // last self-convergence difference
};

/// Discrete parallel transport: project onto the moving eigenspace and
/// re-orthonormalise (Lowdin), doubling the grid until the holonomy changes
/// by less than `tol`.
TransportResult parallel_transport_oracle(const Schedule& s, double tol = 1e-10);

/// 1 - |Tr(P_i W^dagger G P_i)|/rank maximised over the initial eigenspaces.
double oracle_residual(const Schedule& s, const SupportUnitary& geo);

struct HolonomyReport {
  std::string gate;
  double slowdown = 0;
  std::string envelope;
  double fidelity_ground = 0;
  double fidelity_excited = 0;
  /// 2 - 2|Tr(P_i G^dagger U D^dagger P_i)|/rank, maximised over eigenspaces,
  /// with G the geometric holonomy and D the dynamical part.
  double factorization_residual = 0;
  /// Same comparison without fitting a phase, against the closed-form transport.
  double phase_locked_residual = 0;
  /// Norm of the block of U leaving the initial ground space.
  double leakage = 0;
  /// Infidelity after fitting one phase per eigenspace of every stage's
  /// starting Hamiltonian; diagnostic for multi-stage schedules.
  double stage_fitted_infidelity = 0;
  double omega = 0;
  std::uint64_t seed = 0;
  Eigen::MatrixXcd u_ground, u_excited;  // restricted, phase-stripped unitaries

  double infidelity() const { return 1.0 - std::min(fidelity_ground, fidelity_excited); }
};

HolonomyReport extract_holonomy(const Schedule& s, const SupportUnitary& u, const SupportUnitary* geo = nullptr);

/// Infidelity with per-stage, per-eigenspace phases fitted out.
double stage_fitted_infidelity(const Schedule& s, const std::vector<SupportUnitary>& segment_unitaries);

/// Numerical propagator of every segment on its own support.
std::vector<SupportUnitary> segment_unitaries(const Schedule& s, const EvolveOptions& opt = {});

/// evolve + oracle + extract_holonomy, plus the stage-fitted diagnostic.
HolonomyReport run_holonomy(const Schedule& s, const EvolveOptions& opt = {});

}  // namespace hqc
