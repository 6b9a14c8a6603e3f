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

#include "hqc/engine.hpp"
#include "hqc/envelope.hpp"
#include "hqc/schedule.hpp"

namespace hqc {

/// Probability that the ground state of a quarter-turn segment stays in the
/// ground space for the linear schedule with epsilon = 1/slowdown.
double ground_fidelity_closed_form(double epsilon);

/// Slowdown 1/sqrt(2 delta) at which the cycle-averaged leakage equals delta.
double required_slowdown(double delta);

struct TwoLevelResult {
  double leakage = 0;          // 1 - |<ground(T)|psi(T)>|^2
  double gate_infidelity = 0;  // 1 - |<ground(T)|psi(T)>|
  std::size_t steps = 0;
};

/// Quarter-turn two-level problem of duration slowdown * pi/4, integrated in
/// the instantaneous eigenbasis with a fourth-order Magnus scheme.
TwoLevelResult two_level_ode(EnvelopeKind kind, double slowdown, std::size_t steps_per_unit = 400);

/// Same problem in the lab frame; kept as an independent cross-check.
TwoLevelResult two_level_ode_lab(EnvelopeKind kind, double slowdown, std::size_t steps_per_unit = 2000);

/// Leakage averaged over slowdowns in [s - half_width, s + half_width]; the
/// linear-envelope oscillation has period close to 4 in the slowdown.
double averaged_leakage(EnvelopeKind kind, double slowdown, double half_width = 2.0, std::size_t samples = 81);

/// Hann-weighted leakage average over [s - half_width, s + half_width]. The
/// bump leakage oscillates with period near 4.5 in the slowdown, so local
/// slopes are taken on this smoothed curve.
double smoothed_leakage(EnvelopeKind kind, double slowdown, double half_width = 4.5, std::size_t samples = 60);

/// d log(smoothed leakage) / d log(slowdown), central difference with relative step h.
double loglog_slope(EnvelopeKind kind, double slowdown, double h = 0.1);

struct AdiabaticEstimate {
  double epsilon = 0;          // max |<phi_1| dH/dt |phi_0>|
  double gap = 0;              // minimum gap
  double ratio = 0;            // epsilon / gap^2
  double predicted_error = 0;  // 2 ratio^2, the cycle-averaged linear leakage
};

AdiabaticEstimate adiabatic_condition(const Schedule& s, std::size_t samples = 1001);

struct SlowdownSample {
  double slowdown = 0;
  double infidelity_ground = 0;
  double infidelity_excited = 0;
};

struct SlowdownCurve {
  EnvelopeKind envelope = EnvelopeKind::Linear;
  std::vector<SlowdownSample> samples;
};

/// Retimes `s` to each slowdown and extracts the holonomy; parallel over samples.
SlowdownCurve slowdown_scan(const Schedule& s, const std::vector<double>& slowdowns, EnvelopeKind kind,
                            const EvolveOptions& opt = {});

}  // namespace hqc
