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

#include <map>
#include <string>
#include <vector>

#include "hqc/codes.hpp"
#include "hqc/envelope.hpp"
#include "hqc/operator.hpp"

namespace hqc {

enum class Direction { Forward, Reverse };

/// One control-conditioned branch of a segment.
///
/// On the range of `projector` the Hamiltonian is f*start + g*end, or the
/// constant amplitude*start when frozen. A plain segment has one branch whose
/// projector is the identity.
struct Branch {
  Operator projector;
  Operator start;
  Operator end;
  bool frozen = false;
  int control = -1;      // control qubit, -1 for unconditional
  int control_bit = 0;   // value selecting this branch
};

struct Segment {
  std::vector<Branch> branches;
  Envelope envelope;
  Direction direction = Direction::Forward;
  bool restart = false;  // first segment of a new stage; no chaining required
  std::string label;

  std::size_t n() const;
  /// Operator at t = 0 and t = T (direction applied), without amplitude.
  Operator start_op() const;
  Operator end_op() const;
  /// Weights (a, b) multiplying the stored start and end at time t.
  std::pair<double, double> coefficients(double t) const;
  Operator hamiltonian(double t) const;
  std::vector<std::size_t> support() const;
  std::size_t weight() const;
  /// Empty string when endpoints are anticommuting involutions and projectors partition unity.
  std::string validate() const;
  /// Closed-form geometric transport sum_b P_b (I + B_b A_b)/sqrt(2).
  Operator transport() const;
  /// Ideal adiabatic unitary: transport times exp(-i omega A_b) per branch.
  Operator ideal_unitary() const;
};

/// Plain segment from `a` to `b`.
Segment make_segment(const Operator& a, const Operator& b, const Envelope& env, std::string label = {});

struct Schedule {
  std::size_t n = 0;
  std::string gate;
  std::string code;
  std::vector<std::size_t> qubits;  // gate qubits
  Operator target;                  // ideal unitary on the register
  std::vector<Segment> segments;
  GroupState context;               // group state before compilation
  std::map<std::string, std::string> metadata;

  std::vector<std::size_t> support() const;
  double duration() const;
  std::size_t max_weight() const;
  /// Checks every segment and chaining inside stages. Empty string when valid.
  std::string validate() const;
  /// Index ranges [begin, end) of stages.
  std::vector<std::pair<std::size_t, std::size_t>> stages() const;
  double omega() const;
  /// Product of closed-form segment transports.
  Operator transport() const;
};

/// Appends `b` to `a`; the first segment of `b` starts a new stage.
void append(Schedule& a, const Schedule& b);
/// Copy with every segment given envelope `kind` and duration slowdown * base.
Schedule retimed(const Schedule& s, EnvelopeKind kind, double slowdown, double base = 0.7853981633974483);

/// True if a == b or a == -b (returns the sign in `sign`).
bool equal_up_to_sign(const Operator& a, const Operator& b, int* sign = nullptr, double tol = 1e-10);

}  // namespace hqc
