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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hqc/operator.hpp"
#include "hqc/pauli.hpp"

namespace hqc {

struct SubsystemCode {
  std::string label;
  std::size_t n = 0;
  std::size_t offset = 0;  // first register index of the block after embed()
  std::vector<PauliString> stabilizer;
  std::vector<PauliString> gauge;
  PauliString logical_x;
  PauliString logical_z;

  /// Copy of this code placed at `offset` in a register of `total` qubits.
  SubsystemCode embed(std::size_t total, std::size_t offset) const;
};

/// Bacon-Shor qubit (r, c), 1-based, to its index inside a block.
constexpr std::size_t bs_index(std::size_t r, std::size_t c) { return 3 * (r - 1) + (c - 1); }

/// 9-qubit Bacon-Shor code on a 3x3 grid.
///
/// Stabilizers are ordered X(rows 1,2), X(rows 2,3), Z(cols 1,2), Z(cols 2,3).
/// Gauge generators are the six horizontal ZZ pairs followed by the six
/// vertical XX pairs. Logicals are the bare X on row 1 and Z on column 1.
SubsystemCode bacon_shor();
/// m-qubit cat code: stabilizer Z_i Z_{i+1} plus X...X, logical X = X...X, Z = Z_1.
/// The X...X generator is appended last.
SubsystemCode cat_code(std::size_t m);
/// Single qubit prepared in |0>, stabilizer <Z>.
SubsystemCode trivial_code();

/// Generic subsystem-code axioms; returns an empty string when they hold.
std::string check_code_axioms(const SubsystemCode& code);

/// Stabilizer and gauge generators as they transform during a protocol.
///
/// Generators are stored as operators so that non-Clifford gates (T) can be
/// tracked; element searches use only the generators that are currently
/// single Pauli strings.
class GroupState {
 public:
  GroupState() = default;
  GroupState(std::size_t n, std::vector<Operator> stabilizer, std::vector<Operator> gauge);
  static GroupState from_codes(std::size_t n, const std::vector<SubsystemCode>& codes);

  std::size_t n() const { return n_; }
  const std::vector<Operator>& stabilizer() const { return stab_; }
  const std::vector<Operator>& gauge() const { return gauge_; }
  const std::vector<std::string>& history() const { return history_; }

  std::vector<PauliString> pauli_stabilizer() const;
  std::vector<PauliString> pauli_gauge() const;

  void apply(const CliffordGate& g);
  /// Conjugates all generators by a unitary given as an operator.
  ///
  /// Non-Clifford unitaries turn generators into Pauli sums. A generator whose
  /// expansion exceeds kMaxTrackedTerms is dropped and counted in untracked();
  /// such generators never take part in element searches.
  void apply(const Operator& u, const std::string& label);
  std::size_t untracked() const { return untracked_; }

  static constexpr std::size_t kMaxTrackedTerms = 256;

 private:
  std::size_t n_ = 0;
  std::vector<Operator> stab_;
  std::vector<Operator> gauge_;
  std::vector<std::string> history_;
  std::size_t untracked_ = 0;
};

/// Is `p` (up to phase) in the group generated by the given generators?
bool in_group(const PauliString& p, const std::vector<PauliString>& gens);

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One required single-qubit factor; 'I' demands trivial action.
struct FactorConstraint {
  std::size_t qubit;
  char factor;
};

/// Minimal-weight element of <stabilizer, gauge> meeting all constraints.
///
/// Candidates are enumerated by weight, then by sorted support, then by
/// factors in X < Y < Z order. Stabilizer elements carry their definite sign;
/// elements that need gauge generators are returned with a + sign. Throws
/// NotFoundError when nothing up to `max_weight` qualifies.
PauliString find_starting_element(const GroupState& gs, const std::vector<FactorConstraint>& constraints,
                                  std::size_t max_weight = 4);
PauliString find_starting_element(const GroupState& gs, std::size_t qubit, char factor,
                                  std::size_t max_weight = 4);

struct Syndrome {
  std::vector<int> bits;  // 1 marks a -1 outcome
  bool operator==(const Syndrome&) const = default;
};

Syndrome syndrome_of(const SubsystemCode& code, const PauliString& error);

struct DecodeResult {
  PauliString correction;
  bool consistent = true;  // false when no weight <= 1 error explains the syndrome
};

/// Weight-minimal correction reproducing the syndrome, first in enumeration order.
DecodeResult decode(const SubsystemCode& code, const Syndrome& s);

/// True when `p` is in the group generated by stabilizer and gauge generators.
bool is_gauge_equivalent_to_identity(const SubsystemCode& code, const PauliString& p);
/// Minimal weight over p*g for g in the gauge group (including stabilizers).
std::size_t min_weight_mod_gauge(const SubsystemCode& code, const PauliString& p);

enum class OpKind { SingleQubit };

/// Two single-qubit operations sharing a spectator qubit of their row.
struct ParallelAssignment {
  std::vector<std::size_t> targets;
  std::size_t spectator;
  std::vector<PauliString> elements;  // starting element for each target
};

/// Simultaneously addressable operations on a Bacon-Shor block.
std::vector<ParallelAssignment> max_parallel_set(const SubsystemCode& code, OpKind kind);
/// Serial slowdown factor n / (addressable qubits).
double parallel_slowdown(const SubsystemCode& code, OpKind kind);

}  // namespace hqc
