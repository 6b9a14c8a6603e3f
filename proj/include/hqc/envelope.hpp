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

#include <string>
#include <string_view>
#include <utility>

namespace hqc {

enum class EnvelopeKind { Linear, Bump };

std::string to_string(EnvelopeKind k);
EnvelopeKind envelope_kind_from_string(std::string_view s);

/// Normalised bump progress s(u) = (1/a) * int_0^u exp(-1/sin(pi x)) dx on [0, 1].
double bump_progress(double u);
/// ds/du for the bump progress.
double bump_rate(double u);
/// a = int_0^1 exp(-1/sin(pi x)) dx.
double bump_normalization();

/// Constant-gap interpolation pair f = A cos(pi s/2), g = A sin(pi s/2).
struct Envelope {
  EnvelopeKind kind = EnvelopeKind::Linear;
  double T = 1.0;
  double amplitude = 1.0;

  /// Progress s in [0, 1]; throws std::out_of_range outside [0, T].
  double progress(double t) const;
  double progress_rate(double t) const;
  std::pair<double, double> eval(double t) const;
  std::pair<double, double> derivative(double t) const;
  /// Integral of the instantaneous energy over the segment.
  double omega() const { return amplitude * T; }
};

}  // namespace hqc
