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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hqc/pauli.hpp"

namespace hqc {

/// Complex linear combination of Pauli strings.
///
/// Terms are keyed by the (x, z) masks of the labelled Hermitian string; the
/// string's own phase is folded into the coefficient. Used for Hamiltonian
/// endpoints that are not single strings (H^{theta}, branch projectors) and for
/// tracking group generators through non-Clifford gates.
class Operator {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;

  Operator() = default;
  explicit Operator(std::size_t n) : n_(n) {}
  Operator(const PauliString& p);  // NOLINT(google-explicit-constructor)

  static Operator identity(std::size_t n);
  /// |bit><bit| on qubit q.
  static Operator projector(std::size_t n, std::size_t q, int bit);
  /// Single-qubit operator a*X + b*Y + c*Z on qubit q.
  static Operator bloch(std::size_t n, std::size_t q, double a, double b, double c);
  /// Embeds a 2x2 matrix acting on qubit q.
  static Operator from_matrix1(std::size_t n, std::size_t q, const Eigen::Matrix2cd& m);

  std::size_t n() const { return n_; }
  const std::map<Key, cplx>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const PauliString& p, cplx c = 1.0);
  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(cplx c);
  Operator operator-() const;
  Operator adjoint() const;
  /// Drops terms with |c| <= tol.
  Operator pruned(double tol = 1e-13) const;

  /// Returns the Pauli string if this is c*P with |c| = 1 and c in {1, i, -1, -i}.
  std::optional<PauliString> as_pauli(double tol = 1e-12) const;
  bool is_pauli(double tol = 1e-12) const { return as_pauli(tol).has_value(); }
  std::uint64_t support_mask() const;
  std::vector<std::size_t> support() const;
  std::size_t weight() const;
  double norm1() const;

  /// Dense matrix on `qubits` (local bit k <-> qubits[k]); the support must be covered.
  Eigen::MatrixXcd dense_on(const std::vector<std::size_t>& qubits) const;
  Eigen::MatrixXcd dense() const;

  bool approx_equal(const Operator& o, double tol = 1e-12) const;
  std::string str() const;

  Operator conjugated(const CliffordGate& g) const;
  /// u * this * u^dagger.
  Operator conjugated_by(const Operator& u) const;
  Operator embed(std::size_t new_n, std::size_t offset) const;

 private:
  std::size_t n_ = 0;
  std::map<Key, cplx> terms_;
};

Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(cplx c, Operator a);
inline Operator operator*(Operator a, cplx c) { return c * std::move(a); }
/// Anticommutator and commutator checks by explicit product.
bool anticommute(const Operator& a, const Operator& b, double tol = 1e-12);
bool commute(const Operator& a, const Operator& b, double tol = 1e-12);

/// Named single-qubit unitaries as operators: I, X, Y, Z, H/W, P, Pdg, T, Tdg.
Operator named_gate(std::size_t n, const std::string& name, std::size_t q);
/// CNOT(c -> t) as |0><0| I + |1><1| X.
Operator cnot_operator(std::size_t n, std::size_t c, std::size_t t);
/// 2x2 matrix of a named single-qubit gate.
Eigen::Matrix2cd gate_matrix(const std::string& name);

}  // namespace hqc
