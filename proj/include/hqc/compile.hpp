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

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "hqc/schedule.hpp"

namespace hqc {

inline constexpr double kQuarterTurn = 0.7853981633974483;  // pi/4

struct CompileOptions {
  EnvelopeKind envelope = EnvelopeKind::Linear;
  /// Each quarter-turn segment lasts slowdown * pi/4 at unit amplitude.
  double slowdown = 1.0;
  double amplitude = 1.0;
  Envelope make_envelope() const { return Envelope{envelope, slowdown * kQuarterTurn, amplitude}; }
};

/// H^{theta,sign} = sign * (cos(theta) X + sin(theta) Y).
Eigen::Matrix2cd theta_hamiltonian(double theta, int sign);

using Bloch = std::array<double, 3>;

/// Waypoints of the single-qubit loop for a named gate, starting at -Z.
///
/// Supported: X, Y, Z, P, Pdg, W (H), T, Tdg. The loop for V ends at -V Z V^dagger.
std::vector<Bloch> gate_loop(const std::string& gate);
/// Names accepted by gate_loop.
std::vector<std::string> loop_gates();

/// Segments of a loop on `qubit` tensored with the fixed factor `gtilde`.
std::vector<Segment> loop_segments(const std::vector<Bloch>& loop, std::size_t qubit, const Operator& gtilde,
                                   const CompileOptions& opt, const std::string& label);

/// Single-qubit gate driven from a stabilizer or gauge element on `qubit`.
Schedule compile_single_qubit(const std::string& gate, GroupState& gs, std::size_t qubit,
                              const CompileOptions& opt = {});

/// Single-qubit gate whose starting Hamiltonian acts trivially on `qubit`.
///
/// Uses an element with a non-trivial factor on `anchor` and identity on
/// `qubit`: first interpolate to -Z_qubit Q_anchor G, run the gate loop, and
/// interpolate back.
Schedule compile_single_qubit_sandwich(const std::string& gate, GroupState& gs, std::size_t qubit,
                                       std::size_t anchor, const CompileOptions& opt = {});

using SingleQubitCompiler = std::function<Schedule(GroupState&, const std::string&, std::size_t)>;

enum class CnotForm { Auto, ZForward, ZBackward, XForm };
std::string to_string(CnotForm f);

/// CNOT(control -> target).
///
/// ZForward: P^dagger on control, -Z_t G -> -Y_t G, then the branch segment
/// -Y_t G -> -Z_c Z_t G. ZBackward runs that path in reverse from a Z_c Z_t G
/// element and finishes with P on control. XForm uses an X_t G element. Auto
/// picks the form with the smallest maximum segment weight.
Schedule compile_cnot(GroupState& gs, std::size_t control, std::size_t target, const CompileOptions& opt = {},
                      CnotForm form = CnotForm::Auto, SingleQubitCompiler phase_compiler = {});

/// Clifford loops applied conditionally on `cat_qubit` to each target.
///
/// The control-0 branch is frozen at the starting element; the control-1
/// branch runs the loops. With constant-gap envelopes both branches share the
/// instantaneous spectrum, so the matching factor alpha(t) is 1.
Schedule compile_conditional_clifford(const std::vector<std::string>& ops, GroupState& gs, std::size_t cat_qubit,
                                      const std::vector<std::size_t>& targets, const CompileOptions& opt = {});

/// Cat-state preparation on m qubits from Z-basis outcomes (default all 0).
Schedule compile_cat_prep(std::size_t m, const std::vector<int>& outcomes = {}, const CompileOptions& opt = {});

/// Gate sequence of the three-qubit Toffoli decomposition in time order.
std::vector<std::string> toffoli_sequence();

/// Toffoli with controls (cat_qubit, q2) and target q3.
Schedule compile_toffoli_conditional(GroupState& gs, std::size_t cat_qubit, std::size_t q2, std::size_t q3,
                                     const CompileOptions& opt = {});

/// Transversal CNOT between two Bacon-Shor blocks.
Schedule compile_transversal_cnot(GroupState& gs, std::size_t control_offset, std::size_t target_offset,
                                  const CompileOptions& opt = {});

/// Transversal conditional Toffoli: cat qubit k controls block a qubit k onto block b qubit k.
Schedule compile_transversal_toffoli(GroupState& gs, std::size_t cat_offset, std::size_t a_offset,
                                     std::size_t b_offset, const CompileOptions& opt = {});

/// Register holding `blocks` Bacon-Shor blocks followed by an optional cat block.
struct BaconShorContext {
  std::size_t n = 0;
  std::vector<SubsystemCode> blocks;
  std::size_t cat_offset = 0;
  std::size_t cat_size = 0;
  GroupState state;
};
BaconShorContext bacon_shor_context(std::size_t blocks, std::size_t cat_size = 0);

/// Named library gate on a register: X, Y, Z, P, Pdg, W, T, Tdg on `qubits[0]`,
/// CNOT on (qubits[0], qubits[1]).
Schedule compile_gate(const std::string& gate, GroupState& gs, const std::vector<std::size_t>& qubits,
                      const CompileOptions& opt = {});

}  // namespace hqc
