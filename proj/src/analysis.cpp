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

#include "hqc/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hqc/compile.hpp"
#include "hqc/parallel.hpp"

namespace hqc {
namespace {

using std::numbers::pi;
using M2 = Eigen::Matrix2cd;

const M2& sx() {
  static const M2 m = (M2() << 0, 1, 1, 0).finished();
  return m;
}
const M2& sy() {
  static const M2 m = (M2() << 0, cplx(0, -1), cplx(0, 1), 0).finished();
  return m;
}
const M2& sz() {
  static const M2 m = (M2() << 1, 0, 0, -1).finished();
  return m;
}

// exp(M) for traceless 2x2 M: cosh(q) I + sinh(q)/q M with q^2 = -det M.
M2 expm_traceless(const M2& m) {
  const cplx q = std::sqrt(-m.determinant());
  const cplx sinhc = std::abs(q) < 1e-8 ? cplx(1.0) + q * q / 6.0 : std::sinh(q) / q;
  return std::cosh(q) * M2::Identity() + sinhc * m;
}

double check_slowdown(double s) {
  if (!(s > 0)) throw std::invalid_argument("slowdown must be positive");
  return s;
}

// Rotation angle rate dphi/dt of the quarter-turn path phi = (pi/2) s(t/T).
double phi_rate(const Envelope& env, double t) { return 0.5 * pi * env.progress_rate(t); }

TwoLevelResult finish(const Eigen::Vector2cd& ground, const Eigen::Vector2cd& psi, std::size_t steps) {
  const double overlap = std::abs(ground.dot(psi));
  return {1.0 - overlap * overlap, 1.0 - overlap, steps};
}

}  // namespace

double ground_fidelity_closed_form(double eps) {
  if (!(eps > 0)) throw std::invalid_argument("epsilon must be positive");
  const double e2 = eps * eps;
  const double c = std::cos(pi / (4 * eps) * std::sqrt(1 + e2));
  return 1 / (1 + e2) + e2 / (1 + e2) * c * c;
}

double required_slowdown(double delta) {
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
  return 1.0 / std::sqrt(2.0 * delta);
}

TwoLevelResult two_level_ode(EnvelopeKind kind, double slowdown, std::size_t steps_per_unit) {
  const Envelope env{kind, check_slowdown(slowdown) * kQuarterTurn, 1.0};
  const auto n = static_cast<std::size_t>(std::ceil(env.T * steps_per_unit));
  const double h = env.T / n;
  // Rotating frame of the instantaneous eigenbasis: H' = -Z + (phi'/2) X, ground |0>.
  auto a = [&](double t) -> M2 { return cplx(0, -1) * (-sz() + 0.5 * phi_rate(env, t) * sx()); };
  const double c = std::sqrt(3.0) / 6.0;
  Eigen::Vector2cd psi(1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const double t0 = j * h;
    const M2 a1 = a(t0 + (0.5 - c) * h), a2 = a(t0 + (0.5 + c) * h);
    const M2 omega = 0.5 * h * (a1 + a2) + (std::sqrt(3.0) / 12.0) * h * h * (a2 * a1 - a1 * a2);
    psi = expm_traceless(omega) * psi;
  }
  return finish(Eigen::Vector2cd(1, 0), psi, n);
}

TwoLevelResult two_level_ode_lab(EnvelopeKind kind, double slowdown, std::size_t steps_per_unit) {
  const Envelope env{kind, check_slowdown(slowdown) * kQuarterTurn, 1.0};
  const auto n = static_cast<std::size_t>(std::ceil(env.T * steps_per_unit));
  const double h = env.T / n;
  // H(t) = -(cos(phi) Z + sin(phi) Y): the -Z -> -Y quarter turn.
  auto ham = [&](double t) -> M2 {
    const double phi = 0.5 * pi * env.progress(std::min(t, env.T));
    return -(std::cos(phi) * sz() + std::sin(phi) * sy());
  };
  Eigen::Vector2cd psi(1, 0);
  const double c = std::sqrt(3.0) / 6.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double t0 = j * h;
    const M2 a1 = cplx(0, -1) * ham(t0 + (0.5 - c) * h), a2 = cplx(0, -1) * ham(t0 + (0.5 + c) * h);
    const M2 omega = 0.5 * h * (a1 + a2) + (std::sqrt(3.0) / 12.0) * h * h * (a2 * a1 - a1 * a2);
    psi = expm_traceless(omega) * psi;
  }
  // Ground state of -Y: (|0> + i|1>)/sqrt(2).
  const Eigen::Vector2cd ground = Eigen::Vector2cd(1, cplx(0, 1)) / std::sqrt(2.0);
  return finish(ground, psi, n);
}

double averaged_leakage(EnvelopeKind kind, double slowdown, double half_width, std::size_t samples) {
  if (samples < 2) return two_level_ode(kind, slowdown).leakage;
  double acc = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double s = slowdown - half_width + 2 * half_width * i / (samples - 1);
    const double w = (i == 0 || i + 1 == samples) ? 0.5 : 1.0;
    acc += w * two_level_ode(kind, s).leakage;
  }
  return acc / (samples - 1);
}

double smoothed_leakage(EnvelopeKind kind, double slowdown, double half_width, std::size_t samples) {
  if (samples < 2 || half_width <= 0) return two_level_ode(kind, slowdown).leakage;
  double acc = 0, norm = 0;
  for (std::size_t i = 1; i < samples; ++i) {
    const double x = -half_width + 2 * half_width * i / samples;
    const double w = 0.5 * (1 + std::cos(pi * x / half_width));
    acc += w * two_level_ode(kind, slowdown + x).leakage;
    norm += w;
  }
  return acc / norm;
}

double loglog_slope(EnvelopeKind kind, double slowdown, double h) {
  const double lo = slowdown * (1 - h), hi = slowdown * (1 + h);
  const double ll = smoothed_leakage(kind, lo), lh = smoothed_leakage(kind, hi);
  return (std::log(lh) - std::log(ll)) / (std::log(hi) - std::log(lo));
}

AdiabaticEstimate adiabatic_condition(const Schedule& s, std::size_t samples) {
  AdiabaticEstimate est;
  est.gap = std::numeric_limits<double>::infinity();
  for (const auto& seg : s.segments) {
    const double amp = std::abs(seg.envelope.amplitude);
    est.gap = std::min(est.gap, 2 * amp);
    bool moving = false;
    for (const auto& b : seg.branches) moving = moving || !b.frozen;
    if (!moving) continue;
    for (std::size_t i = 0; i < samples; ++i) {
      const double t = seg.envelope.T * i / (samples - 1);
      // Between eigenvectors of a constant-gap rotation |<phi_1|dH/dt|phi_0>| = amp * dphi/dt.
      est.epsilon = std::max(est.epsilon, amp * phi_rate(seg.envelope, t));
    }
  }
  if (!std::isfinite(est.gap)) est.gap = 0;
  est.ratio = est.gap > 0 ? est.epsilon / (est.gap * est.gap) : std::numeric_limits<double>::infinity();
  est.predicted_error = 2 * est.ratio * est.ratio;
  return est;
}

SlowdownCurve slowdown_scan(const Schedule& s, const std::vector<double>& slowdowns, EnvelopeKind kind,
                            const EvolveOptions& opt) {
  SlowdownCurve curve;
  curve.envelope = kind;
  if (slowdowns.empty()) throw std::invalid_argument("empty slowdown list");
  for (std::size_t i = 0; i < slowdowns.size(); ++i) {
    check_slowdown(slowdowns[i]);
    if (i > 0 && !(slowdowns[i] > slowdowns[i - 1])) throw std::invalid_argument("slowdowns must increase");
  }
  curve.samples.resize(slowdowns.size());
  const TransportResult geo = parallel_transport_oracle(s);
  const auto count = static_cast<std::int64_t>(slowdowns.size());
  parallel_for(count, [&](std::int64_t i) {
    const Schedule r = retimed(s, kind, slowdowns[i], kQuarterTurn);
    const HolonomyReport rep = extract_holonomy(r, evolve(r, opt), &geo.unitary);
    curve.samples[i] = {slowdowns[i], 1.0 - rep.fidelity_ground, 1.0 - rep.fidelity_excited};
  });
  return curve;
}

}  // namespace hqc
