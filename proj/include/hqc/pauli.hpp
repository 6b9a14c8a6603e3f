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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace hqc {

using cplx = std::complex<double>;

/// Maximum number of qubits a PauliString can address (one machine word per mask).
inline constexpr std::size_t kMaxQubits = 64;

/// Raised when operands disagree on qubit count or an index is out of range.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Phased tensor product of single-qubit Paulis.
///
/// The operator is i^phase times the tensor product of the labelled Hermitian
/// factors, where a qubit with both mask bits set carries the label Y and
/// Y = iXZ. Qubit k corresponds to bit k of both masks and to character k of
/// the text form.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n);
  PauliString(std::size_t n, std::uint64_t x, std::uint64_t z, int phase = 0);

  /// Parses `[+|-|+i|-i]` followed by characters from {I,X,Y,Z}.
  static PauliString parse(std::string_view text);
  /// Single factor `p` on qubit `q` of an n-qubit register.
  static PauliString single(std::size_t n, std::size_t q, char p);

  std::size_t n() const { return n_; }
  std::uint64_t x() const { return x_; }
  std::uint64_t z() const { return z_; }
  /// Exponent of i in {0,1,2,3}.
  int phase() const { return phase_; }
  char factor(std::size_t q) const;
  PauliString with_factor(std::size_t q, char p) const;
  std::size_t weight() const;
  std::uint64_t support_mask() const { return x_ | z_; }
  std::vector<std::size_t> support() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  bool is_hermitian() const { return (phase_ & 1) == 0; }

  PauliString operator-() const { return times_i(2); }
  PauliString times_i(int k) const;
  /// Same masks with phase reset to +1.
  PauliString unsigned_part() const { return PauliString(n_, x_, z_, 0); }
  bool same_up_to_phase(const PauliString& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
  }
  /// Places this string at `offset` inside a register of `new_n` qubits.
  PauliString embed(std::size_t new_n, std::size_t offset) const;

  std::string str() const;
  Eigen::MatrixXcd dense() const;

  bool operator==(const PauliString&) const = default;
  bool operator<(const PauliString& o) const;

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

PauliString mul(const PauliString& p, const PauliString& q);
inline PauliString operator*(const PauliString& p, const PauliString& q) { return mul(p, q); }
bool commutes(const PauliString& p, const PauliString& q);
inline std::size_t weight(const PauliString& p) { return p.weight(); }
/// i^k as a complex number.
cplx phase_value(int k);

enum class GateKind { H, P, Pdg, X, Y, Z, CNOT, GridRotation };

/// A member of the fixed Clifford set used for conjugation.
///
/// CNOT takes {control, target}. GridRotation takes the nine qubits of a 3x3
/// block in row-major order and transposes the grid, (r,c) -> (c,r).
struct CliffordGate {
  GateKind kind = GateKind::H;
  std::vector<std::size_t> qubits;
};

std::string to_string(GateKind k);
GateKind gate_kind_from_string(std::string_view s);

/// Returns g p g^dagger.
PauliString conjugate(const PauliString& p, const CliffordGate& g);
/// Returns g^dagger p g.
PauliString conjugate_inverse(const PauliString& p, const CliffordGate& g);
/// Dense 2^n matrix of a gate, used by tests and the state-vector engine.
Eigen::MatrixXcd dense(const CliffordGate& g, std::size_t n);

}  // namespace hqc
