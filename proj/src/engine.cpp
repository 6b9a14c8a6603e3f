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

#include "hqc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "hqc/compile.hpp"
#include "hqc/parallel.hpp"

namespace hqc {
namespace {

using std::numbers::pi;

Eigen::MatrixXcd identity(std::int64_t d) { return Eigen::MatrixXcd::Identity(d, d); }

// Polar factor of a full-column-rank frame: phi (phi^dagger phi)^{-1/2}.
Eigen::MatrixXcd lowdin(const Eigen::MatrixXcd& phi) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(phi.adjoint() * phi);
  const Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() < 1e-12) throw std::runtime_error("transport frame collapsed (gap closure)");
  const Eigen::VectorXcd inv = ev.cwiseSqrt().cwiseInverse().cast<cplx>();
  return phi * es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd dense_ideal(const Schedule& s, const std::vector<std::size_t>& support) {
  Eigen::MatrixXcd u = identity(std::int64_t{1} << support.size());
  for (const auto& seg : s.segments) {
    const auto sup = seg.support();
    u = embed_matrix(seg.ideal_unitary().dense_on(sup), sup, support) * u;
  }
  return u;
}

Eigen::MatrixXcd dense_transport(const Schedule& s, const std::vector<std::size_t>& support) {
  Eigen::MatrixXcd u = identity(std::int64_t{1} << support.size());
  for (const auto& seg : s.segments) {
    const auto sup = seg.support();
    u = embed_matrix(seg.transport().dense_on(sup), sup, support) * u;
  }
  return u;
}

// One pass of projector transport with `n` steps per segment.
Eigen::MatrixXcd transport_pass(const Schedule& s, const std::vector<std::size_t>& support, std::size_t n) {
  const std::int64_t d = std::int64_t{1} << support.size();
  Eigen::MatrixXcd total = identity(d);
  for (const auto& [b, e] : s.stages()) {
    std::vector<SegmentPropagator> props;
    for (std::size_t k = b; k < e; ++k) props.emplace_back(s.segments[k], support);
    const auto [pg, pe] = eigen_split(s.segments[b].start_op().dense_on(support));
    Eigen::MatrixXcd stage = Eigen::MatrixXcd::Zero(d, d);
    for (int label : {-1, 1}) {
      const Eigen::MatrixXcd phi0 = range_basis(label < 0 ? pg : pe);
      if (phi0.cols() == 0) continue;
      Eigen::MatrixXcd phi = phi0;
      int e_label = label;
      for (std::size_t k = b; k < e; ++k) {
        if (k > b) {
          int sign = 1;
          equal_up_to_sign(s.segments[k - 1].end_op(), s.segments[k].start_op(), &sign);
          e_label *= sign;
        }
        for (std::size_t j = 1; j <= n; ++j) {
          const Eigen::MatrixXcd h = props[k - b].path_hamiltonian(static_cast<double>(j) / n);
          phi = lowdin(0.5 * (identity(d) + e_label * h) * phi);
        }
      }
      stage += phi * phi0.adjoint();
    }
    total = stage * total;
  }
  return total;
}

}  // namespace

double SupportUnitary::unitarity_error() const {
  return (matrix.adjoint() * matrix - identity(matrix.rows())).norm();
}

Eigen::MatrixXcd embed_matrix(const Eigen::MatrixXcd& m, const std::vector<std::size_t>& qubits,
                              const std::vector<std::size_t>& support) {
  if (qubits == support) return m;
  std::vector<std::size_t> pos;
  for (auto q : qubits) {
    auto it = std::find(support.begin(), support.end(), q);
    if (it == support.end()) throw DimensionError("qubit outside support");
    pos.push_back(static_cast<std::size_t>(it - support.begin()));
  }
  const std::int64_t d = std::int64_t{1} << support.size();
  const std::int64_t k = static_cast<std::int64_t>(m.rows());
  std::uint64_t mask = 0;
  for (auto p : pos) mask |= std::uint64_t{1} << p;
  auto spread = [&](std::int64_t j) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < pos.size(); ++b)
      if ((j >> b) & 1) v |= std::uint64_t{1} << pos[b];
    return v;
  };
  auto gather = [&](std::uint64_t c) {
    std::int64_t j = 0;
    for (std::size_t b = 0; b < pos.size(); ++b)
      if ((c >> pos[b]) & 1U) j |= std::int64_t{1} << b;
    return j;
  };
  std::vector<std::uint64_t> spreads(k);
  for (std::int64_t j = 0; j < k; ++j) spreads[j] = spread(j);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (std::int64_t c = 0; c < d; ++c) {
    const std::uint64_t rest = static_cast<std::uint64_t>(c) & ~mask;
    const std::int64_t j = gather(c);
    for (std::int64_t r = 0; r < k; ++r) out(rest | spreads[r], c) = m(r, j);
  }
  return out;
}

std::size_t step_count(const Segment& seg, const EvolveOptions& opt) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(opt.steps_per_unit * seg.envelope.T)));
}

SegmentPropagator::SegmentPropagator(const Segment& seg, std::vector<std::size_t> support)
    : seg_(seg), support_(support.empty() ? seg.support() : std::move(support)) {
  for (const auto& b : seg.branches) {
    p_.push_back(b.projector.dense_on(support_));
    pa_.push_back((b.projector * b.start).pruned().dense_on(support_));
    pb_.push_back((b.projector * b.end).pruned().dense_on(support_));
  }
}

Eigen::MatrixXcd SegmentPropagator::step(double t, double dt) const {
  const auto [a, b] = seg_.coefficients(t + 0.5 * dt);
  const std::int64_t d = std::int64_t{1} << support_.size();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const bool frozen = seg_.branches[i].frozen;
    const double lam = frozen ? std::abs(seg_.envelope.amplitude) : std::hypot(a, b);
    if (lam == 0.0) {
      u += p_[i];
      continue;
    }
    const cplx k(0, -std::sin(lam * dt) / lam);
    u += std::cos(lam * dt) * p_[i];
    if (frozen) {
      u += k * seg_.envelope.amplitude * pa_[i];
    } else {
      u += k * (a * pa_[i] + b * pb_[i]);
    }
  }
  return u;
}

Eigen::MatrixXcd SegmentPropagator::steps(std::size_t first, std::size_t last, std::size_t n_steps) const {
  const double dt = seg_.envelope.T / static_cast<double>(n_steps);
  Eigen::MatrixXcd u = identity(std::int64_t{1} << support_.size());
  for (std::size_t j = first; j < last; ++j) u = step(j * dt, dt) * u;
  return u;
}

Eigen::MatrixXcd SegmentPropagator::path_hamiltonian(double s) const {
  const double sp = seg_.direction == Direction::Forward ? s : 1.0 - s;
  const double c = std::cos(pi * sp / 2), sn = std::sin(pi * sp / 2);
  const std::int64_t d = std::int64_t{1} << support_.size();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 0; i < p_.size(); ++i) h += seg_.branches[i].frozen ? pa_[i] : Eigen::MatrixXcd(c * pa_[i] + sn * pb_[i]);
  return h;
}

SupportUnitary step_propagator(const Segment& seg, double t, double dt) {
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
  if (t < 0 || t + dt > seg.envelope.T * (1 + 1e-12)) throw std::out_of_range("step outside segment");
  if (auto e = seg.validate(); !e.empty()) throw std::invalid_argument(e);
  SegmentPropagator p(seg);
  return {p.support(), p.step(t, dt)};
}

SupportUnitary segment_unitary(const Segment& seg, const EvolveOptions& opt) {
  SegmentPropagator p(seg);
  const std::size_t n = step_count(seg, opt);
  return {p.support(), p.steps(0, n, n)};
}

std::vector<SupportUnitary> segment_unitaries(const Schedule& s, const EvolveOptions& opt) {
  std::vector<SupportUnitary> out(s.segments.size());
  const auto count = static_cast<std::int64_t>(s.segments.size());
  parallel_for(count, [&](std::int64_t k) { out[k] = segment_unitary(s.segments[k], opt); });
  return out;
}

namespace {

Eigen::MatrixXcd compose(const std::vector<SupportUnitary>& us, std::size_t b, std::size_t e,
                         const std::vector<std::size_t>& support) {
  Eigen::MatrixXcd u = identity(std::int64_t{1} << support.size());
  for (std::size_t k = b; k < e; ++k) u = embed_matrix(us[k].matrix, us[k].support, support) * u;
  return u;
}

}  // namespace

SupportUnitary evolve(const Schedule& s, const EvolveOptions& opt) {
  const auto support = s.support();
  if (support.size() > opt.max_support)
    throw ResourceError("schedule support of " + std::to_string(support.size()) + " qubits exceeds dense limit");
  return {support, compose(segment_unitaries(s, opt), 0, s.segments.size(), support)};
}

double stage_fitted_infidelity(const Schedule& s, const std::vector<SupportUnitary>& us) {
  const auto support = s.support();
  const std::int64_t d = std::int64_t{1} << support.size();
  Eigen::MatrixXcd v = identity(d);
  for (const auto& [b, e] : s.stages()) {
    Eigen::MatrixXcd g = identity(d), ideal = identity(d);
    for (std::size_t k = b; k < e; ++k) {
      const auto sup = s.segments[k].support();
      g = embed_matrix(s.segments[k].transport().dense_on(sup), sup, support) * g;
      ideal = embed_matrix(s.segments[k].ideal_unitary().dense_on(sup), sup, support) * ideal;
    }
    const Eigen::MatrixXcd vk = compose(us, b, e, support) * (g.adjoint() * ideal).adjoint();
    const auto [pg, pe] = eigen_split(s.segments[b].start_op().dense_on(support));
    Eigen::MatrixXcd fix = Eigen::MatrixXcd::Zero(d, d);
    for (const auto* p : {&pg, &pe}) {
      const cplx c = (*p * g.adjoint() * vk * *p).trace();
      fix += (std::abs(c) > 0 ? std::conj(c) / std::abs(c) : cplx(1)) * *p;
    }
    v = vk * fix * v;
  }
  const Eigen::MatrixXcd w = s.target.dense_on(support);
  const auto [pg, pe] = eigen_split(s.segments.front().start_op().dense_on(support));
  double worst = 0;
  for (const auto* p : {&pg, &pe}) {
    const double rank = p->trace().real();
    if (rank > 0.5) worst = std::max(worst, 1.0 - std::abs((*p * w.adjoint() * v * *p).trace()) / rank);
  }
  return worst;
}

void evolve_state(const Schedule& s, StateVector& psi, const EvolveOptions& opt) {
  if (psi.n != s.n) throw DimensionError("state and schedule sizes differ");
  for (const auto& seg : s.segments) {
    const SupportUnitary su = segment_unitary(seg, opt);
    kernels::omp::apply_matrix(psi, su.support, su.matrix);
  }
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> eigen_split(const Eigen::MatrixXcd& s) {
  const Eigen::MatrixXcd id = identity(s.rows());
  return {0.5 * (id - s), 0.5 * (id + s)};
}

Eigen::MatrixXcd range_basis(const Eigen::MatrixXcd& projector) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (projector + projector.adjoint()));
  std::vector<std::int64_t> cols;
  for (std::int64_t i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 0.5) cols.push_back(i);
  Eigen::MatrixXcd out(projector.rows(), static_cast<std::int64_t>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(j) = es.eigenvectors().col(cols[j]);
  return out;
}

TransportResult parallel_transport_oracle(const Schedule& s, double tol) {
  const auto support = s.support();
  if (support.size() > 12) throw ResourceError("oracle support too large");
  std::size_t n = 16;
  Eigen::MatrixXcd prev = transport_pass(s, support, n);
  double change = 0;
  for (;;) {
    const std::size_t next = 2 * n;
    Eigen::MatrixXcd cur = transport_pass(s, support, next);
    change = (cur - prev).norm();
    prev = std::move(cur);
    n = next;
    if (change < tol || n >= 4096) break;
  }
  return {{support, prev}, n, change};
}

double oracle_residual(const Schedule& s, const SupportUnitary& geo) {
  const Eigen::MatrixXcd w = s.target.dense_on(geo.support);
  const auto [pg, pe] = eigen_split(s.segments.front().start_op().dense_on(geo.support));
  double worst = 0;
  for (const auto* p : {&pg, &pe}) {
    const double rank = p->trace().real();
    if (rank < 0.5) continue;
    const double f = std::abs((*p * w.adjoint() * geo.matrix * *p).trace()) / rank;
    worst = std::max(worst, 1.0 - f);
  }
  return worst;
}

HolonomyReport extract_holonomy(const Schedule& s, const SupportUnitary& u, const SupportUnitary* geo) {
  if (s.segments.empty()) throw std::invalid_argument("empty schedule");
  HolonomyReport r;
  r.gate = s.gate;
  r.envelope = to_string(s.segments.front().envelope.kind);
  r.slowdown = s.segments.front().envelope.T / kQuarterTurn;
  r.omega = s.omega();
  const auto& sup = u.support;
  const std::int64_t d = std::int64_t{1} << sup.size();
  const Eigen::MatrixXcd w = s.target.dense_on(sup);
  const Eigen::MatrixXcd g = dense_transport(s, sup);
  const Eigen::MatrixXcd dyn = g.adjoint() * dense_ideal(s, sup);
  const Eigen::MatrixXcd v = u.matrix * dyn.adjoint();

  TransportResult oracle;
  if (!geo) {
    oracle = parallel_transport_oracle(s);
    geo = &oracle.unitary;
  }
  const Eigen::MatrixXcd geo_m = embed_matrix(geo->matrix, geo->support, sup);

  const auto [pg, pe] = eigen_split(s.segments.front().start_op().dense_on(sup));
  const Eigen::MatrixXcd id = identity(d);
  double fids[2] = {1, 1};
  int idx = 0;
  for (const auto* p : {&pg, &pe}) {
    const double rank = p->trace().real();
    if (rank > 0.5) {
      fids[idx] = std::abs((*p * w.adjoint() * v * *p).trace()) / rank;
      const double fr = std::abs((*p * geo_m.adjoint() * v * *p).trace()) / rank;
      r.factorization_residual = std::max(r.factorization_residual, 2.0 - 2.0 * fr);
      r.phase_locked_residual = std::max(r.phase_locked_residual, (*p * (v - g) * *p).norm() / std::sqrt(rank));
      const Eigen::MatrixXcd basis = range_basis(*p);
      Eigen::MatrixXcd restricted = basis.adjoint() * w.adjoint() * v * basis;
      (idx == 0 ? r.u_ground : r.u_excited) = restricted;
      if (idx == 0) {
        const Eigen::MatrixXcd end_ground = g * *p * g.adjoint();
        r.leakage = ((id - end_ground) * v * *p).squaredNorm() / rank;
      }
    }
    ++idx;
  }
  r.fidelity_ground = std::min(1.0, fids[0]);
  r.fidelity_excited = std::min(1.0, fids[1]);
  return r;
}

HolonomyReport run_holonomy(const Schedule& s, const EvolveOptions& opt) {
  const auto support = s.support();
  if (support.size() > opt.max_support)
    throw ResourceError("schedule support of " + std::to_string(support.size()) + " qubits exceeds dense limit");
  const auto us = segment_unitaries(s, opt);
  const TransportResult geo = parallel_transport_oracle(s);
  HolonomyReport r = extract_holonomy(s, {support, compose(us, 0, us.size(), support)}, &geo.unitary);
  r.stage_fitted_infidelity = stage_fitted_infidelity(s, us);
  return r;
}

}  // namespace hqc
