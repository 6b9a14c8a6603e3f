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

#include "hqc/schedule.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace hqc {

std::size_t Segment::n() const { return branches.empty() ? 0 : branches.front().start.n(); }

Operator Segment::start_op() const {
  Operator s(n());
  for (const auto& b : branches) {
    const Operator& a = (b.frozen || direction == Direction::Forward) ? b.start : b.end;
    s += b.projector * a;
  }
  return s.pruned();
}

Operator Segment::end_op() const {
  Operator s(n());
  for (const auto& b : branches) {
    const Operator& e = b.frozen ? b.start : (direction == Direction::Forward ? b.end : b.start);
    s += b.projector * e;
  }
  return s.pruned();
}

std::pair<double, double> Segment::coefficients(double t) const {
  const double tt = direction == Direction::Forward ? t : envelope.T - t;
  return envelope.eval(std::clamp(tt, 0.0, envelope.T));
}

Operator Segment::hamiltonian(double t) const {
  const auto [a, b] = coefficients(t);
  Operator h(n());
  for (const auto& br : branches) {
    if (br.frozen) {
      h += envelope.amplitude * (br.projector * br.start);
    } else {
      h += br.projector * (a * br.start + b * br.end);
    }
  }
  return h.pruned();
}

std::vector<std::size_t> Segment::support() const {
  std::uint64_t m = 0;
  for (const auto& b : branches) m |= b.projector.support_mask() | b.start.support_mask() | b.end.support_mask();
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::size_t Segment::weight() const { return support().size(); }

std::string Segment::validate() const {
  if (branches.empty()) return "segment without branches";
  const std::size_t nn = n();
  Operator sum(nn);
  const Operator id = Operator::identity(nn);
  for (const auto& b : branches) {
    if (b.projector.n() != nn || b.start.n() != nn || b.end.n() != nn) return "branch size mismatch";
    if (!(b.projector * b.projector).approx_equal(b.projector, 1e-10)) return "projector not idempotent";
    if (!commute(b.projector, b.start, 1e-10)) return "projector does not commute with start";
    if (!(b.start * b.start).approx_equal(id, 1e-10)) return "branch start is not an involution";
    if (!b.frozen) {
      if (!commute(b.projector, b.end, 1e-10)) return "projector does not commute with end";
      if (!(b.end * b.end).approx_equal(id, 1e-10)) return "branch end is not an involution";
      if (!anticommute(b.start, b.end, 1e-10)) return "branch endpoints do not anticommute";
    }
    sum += b.projector;
  }
  if (!sum.approx_equal(id, 1e-10)) return "branch projectors do not sum to identity";
  if (envelope.T <= 0) return "non-positive duration";
  return {};
}

Operator Segment::transport() const {
  const double r = 1.0 / std::sqrt(2.0);
  const std::size_t nn = n();
  Operator g(nn);
  for (const auto& b : branches) {
    if (b.frozen) {
      g += b.projector;
      continue;
    }
    const Operator& a = direction == Direction::Forward ? b.start : b.end;
    const Operator& e = direction == Direction::Forward ? b.end : b.start;
    g += b.projector * (r * (Operator::identity(nn) + e * a));
  }
  return g.pruned();
}

Operator Segment::ideal_unitary() const {
  const double w = envelope.omega();
  const std::size_t nn = n();
  const double r = 1.0 / std::sqrt(2.0);
  Operator u(nn);
  for (const auto& b : branches) {
    const Operator& a = (b.frozen || direction == Direction::Forward) ? b.start : b.end;
    const Operator dyn = std::cos(w) * Operator::identity(nn) + cplx(0, -std::sin(w)) * a;
    if (b.frozen) {
      u += b.projector * dyn;
    } else {
      const Operator& e = direction == Direction::Forward ? b.end : b.start;
      u += b.projector * (r * (Operator::identity(nn) + e * a)) * dyn;
    }
  }
  return u.pruned();
}

Segment make_segment(const Operator& a, const Operator& b, const Envelope& env, std::string label) {
  Segment s;
  s.envelope = env;
  s.label = std::move(label);
  s.branches.push_back(Branch{Operator::identity(a.n()), a, b, false, -1, 0});
  return s;
}

std::vector<std::size_t> Schedule::support() const {
  std::uint64_t m = 0;
  for (const auto& s : segments)
    for (auto q : s.support()) m |= std::uint64_t{1} << q;
  m |= target.support_mask();
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

double Schedule::duration() const {
  double t = 0;
  for (const auto& s : segments) t += s.envelope.T;
  return t;
}

std::size_t Schedule::max_weight() const {
  std::size_t w = 0;
  for (const auto& s : segments) w = std::max(w, s.weight());
  return w;
}

std::string Schedule::validate() const {
  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (auto e = segments[k].validate(); !e.empty()) return "segment " + std::to_string(k) + ": " + e;
    if (k > 0 && !segments[k].restart) {
      if (!equal_up_to_sign(segments[k - 1].end_op(), segments[k].start_op()))
        return "segments " + std::to_string(k - 1) + " and " + std::to_string(k) + " are not chainable";
    }
  }
  return {};
}

std::vector<std::pair<std::size_t, std::size_t>> Schedule::stages() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (k == 0 || segments[k].restart) out.emplace_back(k, k);
    out.back().second = k + 1;
  }
  return out;
}

double Schedule::omega() const {
  double w = 0;
  for (const auto& s : segments) w += s.envelope.omega();
  return w;
}

Operator Schedule::transport() const {
  Operator g = Operator::identity(n);
  for (const auto& s : segments) g = (s.transport() * g).pruned();
  return g;
}

void append(Schedule& a, const Schedule& b) {
  if (a.n == 0) a.n = b.n;
  if (a.n != b.n) throw DimensionError("schedule register mismatch");
  const std::size_t first = a.segments.size();
  a.segments.insert(a.segments.end(), b.segments.begin(), b.segments.end());
  if (first < a.segments.size()) a.segments[first].restart = true;
}

Schedule retimed(const Schedule& s, EnvelopeKind kind, double slowdown, double base) {
  if (!(slowdown > 0)) throw std::invalid_argument("slowdown must be positive");
  Schedule r = s;
  for (auto& seg : r.segments) {
    seg.envelope.kind = kind;
    seg.envelope.T = slowdown * base;
  }
  return r;
}

bool equal_up_to_sign(const Operator& a, const Operator& b, int* sign, double tol) {
  if (a.approx_equal(b, tol)) {
    if (sign) *sign = 1;
    return true;
  }
  if (a.approx_equal(-b, tol)) {
    if (sign) *sign = -1;
    return true;
  }
  return false;
}

}  // namespace hqc
