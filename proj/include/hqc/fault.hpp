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
#include <string>
#include <vector>

#include "hqc/engine.hpp"

namespace hqc {

/// Single-qubit Pauli applied at a fraction of the schedule duration.
struct ErrorEvent {
  char pauli = 'X';
  std::size_t qubit = 0;
  double fraction = 0.5;
};

/// Parses "P@t:qubit,fraction", e.g. "Z@t:9,0.5".
ErrorEvent parse_error_event(const std::string& text);
std::string to_string(const ErrorEvent& e);

struct FaultOptions {
  EvolveOptions evolve;
  double min_logical_fidelity = 1.0 - 1e-3;
  double residual_tolerance = 1e-9;  // coefficient magnitude below which residual terms are ignored
  std::size_t residual_term_cap = 1 << 14;
};

struct InjectResult {
  ErrorEvent event;
  std::vector<Syndrome> syndromes;  // difference to the error-free run, per block
  std::vector<PauliString> corrections;
  bool consistent = true;
  double logical_fidelity = 0;
  std::vector<std::size_t> residual_weight;  // per block, minimised over the gauge group
  std::uint64_t seed = 0;
  bool pass = false;
};

/// Runs a compiled schedule on encoded blocks with optional Pauli faults.
///
/// Segment propagators are computed once. A fault splits its segment at the
/// nearest integration step. After the run every block's stabilizers are
/// measured projectively, the syndrome difference to the error-free run is
/// decoded and corrected, and the bare logical state is compared to the
/// error-free run by Uhlmann fidelity.
class FaultHarness {
 public:
  FaultHarness(Schedule schedule, std::vector<SubsystemCode> blocks, FaultOptions opt = {});

  const Schedule& schedule() const { return schedule_; }
  const std::vector<SubsystemCode>& blocks() const { return blocks_; }

  /// Random logical state with randomised gauge, deterministic in `seed`.
  StateVector initial_state(std::uint64_t seed) const;
  /// Error-free evolution of `initial` through the whole schedule.
  StateVector reference(const StateVector& initial) const;

  InjectResult inject(const ErrorEvent& e, const StateVector& initial, std::uint64_t seed) const;
  /// Every Pauli in `paulis` on every block qubit at each fraction; parallel over events.
  std::vector<InjectResult> sweep(const std::vector<double>& fractions, std::uint64_t seed,
                                  const std::string& paulis = "XYZ") const;

  /// Heisenberg image of the fault through the ideal remainder of the schedule,
  /// reduced to the minimal weight per block modulo the gauge group.
  std::vector<std::size_t> residual_weight(const ErrorEvent& e) const;

  /// Density matrix of the bare logical qubits of all blocks.
  Eigen::MatrixXcd logical_state(const StateVector& psi) const;

 private:
  struct Split {
    std::size_t segment = 0;
    std::size_t step = 0;
    std::size_t n_steps = 0;
    double local_time = 0;
  };
  Split locate(double fraction) const;
  StateVector evolve_range(StateVector psi, std::size_t first_segment, std::size_t last_segment) const;
  StateVector state_at(const StateVector& initial, const Split& sp) const;
  StateVector finish_from(StateVector psi, const Split& sp) const;
  InjectResult measure(const ErrorEvent& e, StateVector psi, const StateVector& ref, std::uint64_t seed) const;

  Schedule schedule_;
  std::vector<SubsystemCode> blocks_;
  FaultOptions opt_;
  std::vector<SupportUnitary> segment_u_;
  std::vector<double> starts_;
};

/// Ideal evolution from time t to the end of a segment (transport times dynamical phase).
Operator partial_ideal_unitary(const Segment& seg, double t);

}  // namespace hqc
