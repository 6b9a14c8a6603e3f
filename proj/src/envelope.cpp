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

#include "hqc/envelope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hqc {
namespace {

using std::numbers::pi;

double bump_integrand(double u) {
  const double s = std::sin(pi * u);
  return s <= 0.0 ? 0.0 : std::exp(-1.0 / s);
}

// Cumulative integral on a uniform grid; cubic Hermite interpolation between
// nodes uses the exact integrand as the derivative.
struct BumpTable {
  static constexpr std::size_t kIntervals = 8192;
  std::vector<double> cum;
  double a = 0.0;

  BumpTable() : cum(kIntervals + 1, 0.0) {
    // 8-point Gauss-Legendre per interval.
    static constexpr std::array<double, 4> x = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                                0.9602898564975363};
    static constexpr std::array<double, 4> w = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                                0.1012285362903763};
    const double h = 1.0 / kIntervals;
    for (std::size_t i = 0; i < kIntervals; ++i) {
      const double mid = (i + 0.5) * h;
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        acc += w[k] * (bump_integrand(mid - 0.5 * h * x[k]) + bump_integrand(mid + 0.5 * h * x[k]));
      }
      cum[i + 1] = cum[i] + 0.5 * h * acc;
    }
    a = cum.back();
  }

  double eval(double u) const {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double h = 1.0 / kIntervals;
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(u / h), kIntervals - 1);
    const double t = (u - i * h) / h;
    const double y0 = cum[i], y1 = cum[i + 1];
    const double d0 = bump_integrand(i * h) * h, d1 = bump_integrand((i + 1) * h) * h;
    const double t2 = t * t, t3 = t2 * t;
    const double v = (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * d0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * d1;
    // The integrand is non-negative; clamping to the node values keeps the lookup monotone.
    return std::clamp(v, y0, y1) / a;
  }
};

const BumpTable& table() {
  static const BumpTable t;
  return t;
}

}  // namespace

std::string to_string(EnvelopeKind k) { return k == EnvelopeKind::Linear ? "linear" : "bump"; }

EnvelopeKind envelope_kind_from_string(std::string_view s) {
  if (s == "linear") return EnvelopeKind::Linear;
  if (s == "bump") return EnvelopeKind::Bump;
  throw std::invalid_argument("unknown envelope '" + std::string(s) + "'");
}

double bump_progress(double u) { return table().eval(u); }
double bump_rate(double u) { return bump_integrand(u) / table().a; }
double bump_normalization() { return table().a; }

double Envelope::progress(double t) const {
  if (t < -1e-12 * std::max(1.0, T) || t > T * (1 + 1e-12) + 1e-15) throw std::out_of_range("envelope time out of range");
  const double u = std::clamp(t / T, 0.0, 1.0);
  return kind == EnvelopeKind::Linear ? u : bump_progress(u);
}

double Envelope::progress_rate(double t) const {
  const double u = std::clamp(t / T, 0.0, 1.0);
  return (kind == EnvelopeKind::Linear ? 1.0 : bump_rate(u)) / T;
}

std::pair<double, double> Envelope::eval(double t) const {
  const double s = progress(t);
  return {amplitude * std::cos(pi * s / 2), amplitude * std::sin(pi * s / 2)};
}

std::pair<double, double> Envelope::derivative(double t) const {
  const double s = progress(t);
  const double r = progress_rate(t) * pi / 2 * amplitude;
  return {-r * std::sin(pi * s / 2), r * std::cos(pi * s / 2)};
}

}  // namespace hqc
