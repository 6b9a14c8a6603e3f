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

#include "hqc/fault.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hqc/parallel.hpp"

namespace hqc {
namespace {

using std::numbers::pi;
namespace kern = kernels::omp;

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()));
  const Eigen::VectorXcd s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<cplx>();
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

double uhlmann(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  const Eigen::MatrixXcd r = psd_sqrt(rho);
  const double t = psd_sqrt(r * sigma * r).trace().real();
  return std::min(1.0, t * t);
}

PauliString restrict_to(const PauliString& p, std::uint64_t mask) {
  return PauliString(p.n(), p.x() & mask, p.z() & mask, 0);
}

std::uint64_t block_mask(const SubsystemCode& c) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < c.n; ++k) m |= std::uint64_t{1} << (c.offset + k);
  return m;
}

std::uint64_t mix_seed(std::uint64_t seed, const ErrorEvent& e) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  h ^= (static_cast<std::uint64_t>(e.pauli) << 32) ^ (e.qubit * 0x100000001b3ULL);
  h ^= static_cast<std::uint64_t>(std::llround(e.fraction * 1e6)) * 0xff51afd7ed558ccdULL;
  return h;
}

}  // namespace

ErrorEvent parse_error_event(const std::string& text) {
  // P@t:qubit,fraction
  ErrorEvent e;
  const auto at = text.find("@t:");
  const auto comma = text.find(',', at == std::string::npos ? 0 : at);
  if (at != 1 || comma == std::string::npos) throw std::invalid_argument("error spec must look like Z@t:9,0.5");
  e.pauli = text[0];
  if (e.pauli != 'X' && e.pauli != 'Y' && e.pauli != 'Z') throw std::invalid_argument("error Pauli must be X, Y or Z");
  try {
    std::size_t used = 0;
    const std::string q = text.substr(at + 3, comma - at - 3);
    e.qubit = std::stoul(q, &used);
    if (used != q.size()) throw std::invalid_argument("qubit");
    const std::string f = text.substr(comma + 1);
    e.fraction = std::stod(f, &used);
    if (used != f.size()) throw std::invalid_argument("fraction");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed error spec '" + text + "'");
  }
  if (e.fraction < 0 || e.fraction > 1) throw std::invalid_argument("error fraction must lie in [0, 1]");
  return e;
}

std::string to_string(const ErrorEvent& e) {
  std::ostringstream os;
  os << e.pauli << "@t:" << e.qubit << "," << e.fraction;
  return os.str();
}

Operator partial_ideal_unitary(const Segment& seg, double t) {
  const std::size_t n = seg.n();
  const double tau = std::clamp(t, 0.0, seg.envelope.T);
  const bool fwd = seg.direction == Direction::Forward;
  const double sigma = fwd ? seg.envelope.progress(tau) : 1.0 - seg.envelope.progress(seg.envelope.T - tau);
  const double rest = 0.5 * pi * (1.0 - sigma);
  const double w = seg.envelope.amplitude * (seg.envelope.T - tau);
  const Operator id = Operator::identity(n);
  Operator u(n);
  for (const auto& b : seg.branches) {
    const Operator& a = (b.frozen || fwd) ? b.start : b.end;
    if (b.frozen) {
      u += b.projector * (std::cos(w) * id + cplx(0, -std::sin(w)) * a);
      continue;
    }
    const Operator& e = fwd ? b.end : b.start;
    const Operator h = (std::cos(0.5 * pi * sigma) * a + std::sin(0.5 * pi * sigma) * e).pruned();
    const Operator transport = std::cos(0.5 * rest) * id + std::sin(0.5 * rest) * (e * a);
    u += b.projector * transport * (std::cos(w) * id + cplx(0, -std::sin(w)) * h);
  }
  return u.pruned();
}

FaultHarness::FaultHarness(Schedule schedule, std::vector<SubsystemCode> blocks, FaultOptions opt)
    : schedule_(std::move(schedule)), blocks_(std::move(blocks)), opt_(opt) {
  if (blocks_.empty()) throw std::invalid_argument("fault harness needs at least one code block");
  for (const auto& b : blocks_)
    if (b.stabilizer.empty() || b.stabilizer.front().n() != schedule_.n)
      throw DimensionError("code block not embedded in the schedule register");
  segment_u_ = segment_unitaries(schedule_, opt_.evolve);
  double t = 0;
  for (const auto& seg : schedule_.segments) {
    starts_.push_back(t);
    t += seg.envelope.T;
  }
  starts_.push_back(t);
}

StateVector FaultHarness::initial_state(std::uint64_t seed) const {
  const std::size_t n = schedule_.n;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  StateVector psi(n);
  // Code state |0_L> with the Z-type gauge fixed: project |0...0> with the X stabilizers.
  for (const auto& b : blocks_)
    for (const auto& s : b.stabilizer)
      if (s.z() == 0) psi = kern::apply_operator(psi, 0.5 * (Operator::identity(n) + Operator(s)));
  psi.normalize();
  for (const auto& b : blocks_) {
    const double a = 0.5 * angle(rng), ph = angle(rng);
    StateVector x = psi;
    kern::apply_pauli(x, b.logical_x);
    psi.amp = std::cos(a) * psi.amp + std::polar(std::sin(a), ph) * x.amp;
    for (const auto& g : b.gauge) {
      const double th = angle(rng);
      StateVector gx = psi;
      kern::apply_pauli(gx, g);
      psi.amp = std::cos(th) * psi.amp + cplx(0, std::sin(th)) * gx.amp;
    }
  }
  psi.normalize();
  return psi;
}

StateVector FaultHarness::evolve_range(StateVector psi, std::size_t first, std::size_t last) const {
  for (std::size_t k = first; k < last; ++k) kern::apply_matrix(psi, segment_u_[k].support, segment_u_[k].matrix);
  return psi;
}

StateVector FaultHarness::reference(const StateVector& initial) const {
  return evolve_range(initial, 0, segment_u_.size());
}

FaultHarness::Split FaultHarness::locate(double fraction) const {
  if (schedule_.segments.empty()) throw std::invalid_argument("empty schedule");
  const double t = std::clamp(fraction, 0.0, 1.0) * starts_.back();
  std::size_t k = std::upper_bound(starts_.begin(), starts_.end(), t) - starts_.begin();
  k = std::min(k == 0 ? 0 : k - 1, schedule_.segments.size() - 1);
  Split sp;
  sp.segment = k;
  sp.n_steps = step_count(schedule_.segments[k], opt_.evolve);
  const double dt = schedule_.segments[k].envelope.T / sp.n_steps;
  sp.step = std::min<std::size_t>(sp.n_steps, static_cast<std::size_t>(std::llround((t - starts_[k]) / dt)));
  sp.local_time = sp.step * dt;
  return sp;
}

StateVector FaultHarness::state_at(const StateVector& initial, const Split& sp) const {
  StateVector psi = evolve_range(initial, 0, sp.segment);
  const SegmentPropagator prop(schedule_.segments[sp.segment]);
  kern::apply_matrix(psi, prop.support(), prop.steps(0, sp.step, sp.n_steps));
  return psi;
}

StateVector FaultHarness::finish_from(StateVector psi, const Split& sp) const {
  const SegmentPropagator prop(schedule_.segments[sp.segment]);
  kern::apply_matrix(psi, prop.support(), prop.steps(sp.step, sp.n_steps, sp.n_steps));
  return evolve_range(std::move(psi), sp.segment + 1, segment_u_.size());
}

Eigen::MatrixXcd FaultHarness::logical_state(const StateVector& psi) const {
  const std::size_t m = blocks_.size();
  const std::size_t dim = std::size_t{1} << m;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  const std::size_t count = std::size_t{1} << (2 * m);
  for (std::size_t code = 0; code < count; ++code) {
    PauliString phys(schedule_.n);
    PauliString small(m);
    for (std::size_t b = 0; b < m; ++b) {
      const int f = (code >> (2 * b)) & 3;  // 0 I, 1 X, 2 Y, 3 Z
      if (f == 0) continue;
      const PauliString& lx = blocks_[b].logical_x;
      const PauliString& lz = blocks_[b].logical_z;
      const PauliString l = f == 1 ? lx : (f == 3 ? lz : mul(lx, lz).times_i(1));
      phys = mul(phys, l);
      small = small.with_factor(b, "IXYZ"[f]);
    }
    const double ev = code == 0 ? 1.0 : kern::expectation(psi, phys).real();
    rho += ev * small.dense();
  }
  return rho / static_cast<double>(dim);
}

InjectResult FaultHarness::measure(const ErrorEvent& e, StateVector psi, const StateVector& ref,
                                   std::uint64_t seed) const {
  InjectResult r;
  r.event = e;
  r.seed = seed;
  std::mt19937_64 rng(mix_seed(seed, e));
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const std::size_t n = schedule_.n;
  for (const auto& b : blocks_) {
    Syndrome diff;
    for (const auto& s : b.stabilizer) {
      const double ref_ev = kern::expectation(ref, s).real();
      const double ev = std::clamp(kern::expectation(psi, s).real(), -1.0, 1.0);
      const int outcome = uni(rng) < 0.5 * (1 + ev) ? 1 : -1;
      psi = kern::apply_operator(psi, 0.5 * (Operator::identity(n) + outcome * Operator(s)));
      psi.normalize();
      diff.bits.push_back((outcome < 0) != (ref_ev < 0) ? 1 : 0);
    }
    const DecodeResult d = decode(b, diff);
    r.consistent = r.consistent && d.consistent;
    kern::apply_pauli(psi, d.correction);
    r.syndromes.push_back(diff);
    r.corrections.push_back(d.correction);
  }
  r.logical_fidelity = uhlmann(logical_state(ref), logical_state(psi));
  r.residual_weight = residual_weight(e);
  const std::size_t worst = *std::max_element(r.residual_weight.begin(), r.residual_weight.end());
  r.pass = r.consistent && r.logical_fidelity >= opt_.min_logical_fidelity && worst <= 1;
  return r;
}

InjectResult FaultHarness::inject(const ErrorEvent& e, const StateVector& initial, std::uint64_t seed) const {
  if (e.qubit >= schedule_.n) throw std::out_of_range("error qubit outside register");
  const Split sp = locate(e.fraction);
  StateVector psi = state_at(initial, sp);
  kern::apply_pauli(psi, PauliString::single(schedule_.n, e.qubit, e.pauli));
  return measure(e, finish_from(std::move(psi), sp), reference(initial), seed);
}

std::vector<InjectResult> FaultHarness::sweep(const std::vector<double>& fractions, std::uint64_t seed,
                                              const std::string& paulis) const {
  const StateVector initial = initial_state(seed);
  const StateVector ref = reference(initial);
  std::vector<ErrorEvent> events;
  for (double f : fractions)
    for (const auto& b : blocks_)
      for (std::size_t k = 0; k < b.n; ++k)
        for (char p : paulis) events.push_back({p, b.offset + k, f});
  std::vector<InjectResult> out(events.size());
  // Error-free states at each split point are shared by every event there.
  std::map<double, std::pair<Split, StateVector>> cache;
  for (double f : fractions) {
    const Split sp = locate(f);
    cache.emplace(f, std::make_pair(sp, state_at(initial, sp)));
  }
  const auto count = static_cast<std::int64_t>(events.size());
  parallel_for(count, [&](std::int64_t i) {
    const auto& [sp, base] = cache.at(events[i].fraction);
    StateVector psi = base;
    kernels::serial::apply_pauli(psi, PauliString::single(schedule_.n, events[i].qubit, events[i].pauli));
    out[i] = measure(events[i], finish_from(std::move(psi), sp), ref, seed);
  });
  return out;
}

std::vector<std::size_t> FaultHarness::residual_weight(const ErrorEvent& e) const {
  const Split sp = locate(e.fraction);
  const std::size_t n = schedule_.n;
  Operator err(PauliString::single(n, e.qubit, e.pauli));
  auto conj = [&](const Operator& u) {
    Operator next = err.conjugated_by(u).pruned(opt_.residual_tolerance * 1e-3);
    double tol = opt_.residual_tolerance * 1e-3;
    while (next.size() > opt_.residual_term_cap && tol < opt_.residual_tolerance) {
      tol *= 10;
      next = next.pruned(tol);
    }
    err = std::move(next);
  };
  conj(partial_ideal_unitary(schedule_.segments[sp.segment], sp.local_time));
  for (std::size_t k = sp.segment + 1; k < schedule_.segments.size(); ++k) conj(schedule_.segments[k].ideal_unitary());

  std::vector<std::size_t> worst(blocks_.size(), 0);
  std::vector<std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t>> memo(blocks_.size());
  for (const auto& [key, c] : err.terms()) {
    if (std::abs(c) <= opt_.residual_tolerance) continue;
    const PauliString p(n, key.first, key.second);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const PauliString r = restrict_to(p, block_mask(blocks_[b]));
      auto it = memo[b].find({r.x(), r.z()});
      if (it == memo[b].end()) it = memo[b].emplace(std::make_pair(r.x(), r.z()), min_weight_mod_gauge(blocks_[b], r)).first;
      worst[b] = std::max(worst[b], it->second);
    }
  }
  return worst;
}

}  // namespace hqc
