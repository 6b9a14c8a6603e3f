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

#include "hqc/pauli.hpp"

#include <algorithm>
#include <bit>

namespace hqc {
namespace {

std::uint64_t bit(std::size_t q) { return std::uint64_t{1} << q; }

void check_qubit(std::size_t n, std::size_t q) {
  if (q >= n) throw DimensionError("qubit index " + std::to_string(q) + " out of range");
}

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : bit(n) - 1; }

}  // namespace

cplx phase_value(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

PauliString::PauliString(std::size_t n) : n_(n) {
  if (n > kMaxQubits) throw DimensionError("at most 64 qubits supported");
}

PauliString::PauliString(std::size_t n, std::uint64_t x, std::uint64_t z, int phase)
    : n_(n), x_(x), z_(z), phase_(((phase % 4) + 4) % 4) {
  if (n > kMaxQubits) throw DimensionError("at most 64 qubits supported");
  if (((x | z) & ~full_mask(n)) != 0) throw DimensionError("mask exceeds qubit count");
}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  std::size_t pos = 0;
  if (text.starts_with("+i")) {
    phase = 1;
    pos = 2;
  } else if (text.starts_with("-i")) {
    phase = 3;
    pos = 2;
  } else if (text.starts_with("+")) {
    pos = 1;
  } else if (text.starts_with("-")) {
    phase = 2;
    pos = 1;
  }
  const std::size_t n = text.size() - pos;
  if (n > kMaxQubits) throw DimensionError("at most 64 qubits supported");
  std::uint64_t x = 0, z = 0;
  for (std::size_t k = 0; k < n; ++k) {
    switch (text[pos + k]) {
      case 'I': break;
      case 'X': x |= bit(k); break;
      case 'Y': x |= bit(k); z |= bit(k); break;
      case 'Z': z |= bit(k); break;
      default: throw std::invalid_argument("bad Pauli character in '" + std::string(text) + "'");
    }
  }
  return PauliString(n, x, z, phase);
}

PauliString PauliString::single(std::size_t n, std::size_t q, char p) {
  return PauliString(n).with_factor(q, p);
}

char PauliString::factor(std::size_t q) const {
  check_qubit(n_, q);
  const bool xb = x_ & bit(q), zb = z_ & bit(q);
  return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

PauliString PauliString::with_factor(std::size_t q, char p) const {
  check_qubit(n_, q);
  std::uint64_t x = x_ & ~bit(q), z = z_ & ~bit(q);
  switch (p) {
    case 'I': break;
    case 'X': x |= bit(q); break;
    case 'Y': x |= bit(q); z |= bit(q); break;
    case 'Z': z |= bit(q); break;
    default: throw std::invalid_argument("bad Pauli factor");
  }
  return PauliString(n_, x, z, phase_);
}

std::size_t PauliString::weight() const { return std::popcount(x_ | z_); }

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = x_ | z_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

PauliString PauliString::times_i(int k) const { return PauliString(n_, x_, z_, phase_ + k); }

PauliString PauliString::embed(std::size_t new_n, std::size_t offset) const {
  if (offset + n_ > new_n) throw DimensionError("embedding does not fit");
  return PauliString(new_n, x_ << offset, z_ << offset, phase_);
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  for (std::size_t q = 0; q < n_; ++q) s += factor(q);
  return s;
}

Eigen::MatrixXcd PauliString::dense() const {
  if (n_ > 14) throw DimensionError("dense matrix too large");
  const std::size_t d = std::size_t{1} << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  // Labelled form: i^phase * i^{#Y} * X^x Z^z.
  const cplx base = phase_value(phase_ + std::popcount(x_ & z_));
  for (std::size_t b = 0; b < d; ++b) {
    const double sign = (std::popcount(z_ & b) & 1) ? -1.0 : 1.0;
    m(b ^ x_, b) = base * sign;
  }
  return m;
}

bool PauliString::operator<(const PauliString& o) const {
  return std::tie(n_, x_, z_, phase_) < std::tie(o.n_, o.x_, o.z_, o.phase_);
}

PauliString mul(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) throw DimensionError("Pauli length mismatch");
  const std::uint64_t x1 = p.x(), z1 = p.z(), x2 = q.x(), z2 = q.z();
  const std::uint64_t xo1 = x1 & ~z1, y1 = x1 & z1, zo1 = ~x1 & z1;
  const std::uint64_t xo2 = x2 & ~z2, y2 = x2 & z2, zo2 = ~x2 & z2;
  // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
  const std::uint64_t pos = (xo1 & y2) | (y1 & zo2) | (zo1 & xo2);
  const std::uint64_t neg = (xo1 & zo2) | (y1 & xo2) | (zo1 & y2);
  const int ph = p.phase() + q.phase() + std::popcount(pos) - std::popcount(neg);
  return PauliString(p.n(), x1 ^ x2, z1 ^ z2, ph);
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) throw DimensionError("Pauli length mismatch");
  return ((std::popcount(p.x() & q.z()) + std::popcount(p.z() & q.x())) & 1) == 0;
}

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::P: return "P";
    case GateKind::Pdg: return "Pdg";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::GridRotation: return "grid-rotation";
  }
  return "?";
}

GateKind gate_kind_from_string(std::string_view s) {
  if (s == "H" || s == "W") return GateKind::H;
  if (s == "P") return GateKind::P;
  if (s == "Pdg" || s == "P^dagger") return GateKind::Pdg;
  if (s == "X") return GateKind::X;
  if (s == "Y") return GateKind::Y;
  if (s == "Z") return GateKind::Z;
  if (s == "CNOT" || s == "CX") return GateKind::CNOT;
  if (s == "grid-rotation") return GateKind::GridRotation;
  throw std::invalid_argument("unknown gate kind '" + std::string(s) + "'");
}

namespace {

std::size_t arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT: return 2;
    case GateKind::GridRotation: return 9;
    default: return 1;
  }
}

void validate(const CliffordGate& g, std::size_t n) {
  if (g.qubits.size() != arity(g.kind)) throw std::invalid_argument("wrong qubit count for gate");
  for (auto q : g.qubits) check_qubit(n, q);
  std::vector<std::size_t> s = g.qubits;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("repeated qubit");
}

// Conjugation of one labelled factor: returns new (x,z) and the sign flip.
struct Local {
  bool x, z, flip;
};

Local conj1(GateKind k, bool x, bool z, bool inverse) {
  const bool y = x && z;
  switch (k) {
    case GateKind::H: return {z, x, y};
    case GateKind::P:
    case GateKind::Pdg: {
      // P: X->Y, Y->-X. Pdg: X->-Y, Y->X.
      const bool forward = (k == GateKind::P) != inverse;
      if (!x) return {x, z, false};
      return {true, !z, forward ? y : !y};
    }
    case GateKind::X: return {x, z, z};
    case GateKind::Y: return {x, z, x != z};
    case GateKind::Z: return {x, z, x};
    default: return {x, z, false};
  }
}

PauliString conj_impl(const PauliString& p, const CliffordGate& g, bool inverse) {
  validate(g, p.n());
  std::uint64_t x = p.x(), z = p.z();
  int ph = p.phase();
  if (g.kind == GateKind::CNOT) {
    const std::size_t c = g.qubits[0], t = g.qubits[1];
    const bool xc = x & bit(c), zc = z & bit(c), xt = x & bit(t), zt = z & bit(t);
    // Self-inverse; sign rule from the standard tableau update.
    if (xc && zt && (xt == zc)) ph += 2;
    if (xc) x ^= bit(t);
    if (zt) z ^= bit(c);
    return PauliString(p.n(), x, z, ph);
  }
  if (g.kind == GateKind::GridRotation) {
    std::uint64_t nx = x, nz = z;
    for (std::size_t k = 0; k < 9; ++k) {
      nx &= ~bit(g.qubits[k]);
      nz &= ~bit(g.qubits[k]);
    }
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        const std::size_t from = g.qubits[3 * r + c], to = g.qubits[3 * c + r];
        if (x & bit(from)) nx |= bit(to);
        if (z & bit(from)) nz |= bit(to);
      }
    }
    return PauliString(p.n(), nx, nz, ph);
  }
  const std::size_t q = g.qubits[0];
  const Local l = conj1(g.kind, x & bit(q), z & bit(q), inverse);
  x = (x & ~bit(q)) | (l.x ? bit(q) : 0);
  z = (z & ~bit(q)) | (l.z ? bit(q) : 0);
  if (l.flip) ph += 2;
  return PauliString(p.n(), x, z, ph);
}

}  // namespace

PauliString conjugate(const PauliString& p, const CliffordGate& g) { return conj_impl(p, g, false); }

PauliString conjugate_inverse(const PauliString& p, const CliffordGate& g) {
  if (g.kind == GateKind::GridRotation) {
    // Transposition is an involution.
    return conj_impl(p, g, false);
  }
  return conj_impl(p, g, true);
}

Eigen::MatrixXcd dense(const CliffordGate& g, std::size_t n) {
  validate(g, n);
  const std::size_t d = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t b = 0; b < d; ++b) {
    switch (g.kind) {
      case GateKind::CNOT: {
        const std::size_t c = g.qubits[0], t = g.qubits[1];
        m((b & bit(c)) ? (b ^ bit(t)) : b, b) = 1;
        break;
      }
      case GateKind::GridRotation: {
        std::size_t out = b;
        for (std::size_t k = 0; k < 9; ++k) out &= ~bit(g.qubits[k]);
        for (std::size_t rr = 0; rr < 3; ++rr)
          for (std::size_t c = 0; c < 3; ++c)
            if (b & bit(g.qubits[3 * rr + c])) out |= bit(g.qubits[3 * c + rr]);
        m(out, b) = 1;
        break;
      }
      default: {
        const std::size_t q = g.qubits[0];
        const bool one = b & bit(q);
        const std::size_t f = b ^ bit(q);
        switch (g.kind) {
          case GateKind::H:
            m(b, b) += one ? -r : r;
            m(f, b) += r;
            break;
          case GateKind::P: m(b, b) = one ? cplx(0, 1) : cplx(1); break;
          case GateKind::Pdg: m(b, b) = one ? cplx(0, -1) : cplx(1); break;
          case GateKind::X: m(f, b) = 1; break;
          case GateKind::Y: m(f, b) = one ? cplx(0, -1) : cplx(0, 1); break;
          case GateKind::Z: m(b, b) = one ? -1 : 1; break;
          default: break;
        }
      }
    }
  }
  return m;
}

}  // namespace hqc
