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

#include "hqc/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace hqc {

StateVector::StateVector(std::size_t nq) : n(nq), amp(Eigen::VectorXcd::Zero(std::int64_t{1} << nq)) {
  if (nq > 30) throw DimensionError("state vector too large");
  amp(0) = 1.0;
}

StateVector::StateVector(std::size_t nq, Eigen::VectorXcd a) : n(nq), amp(std::move(a)) {
  if (amp.size() != (std::int64_t{1} << nq)) throw DimensionError("amplitude count does not match qubit count");
}

namespace kernels {
namespace {

struct LocalLayout {
  std::vector<std::uint64_t> offsets;  // basis offset of each local index
  std::vector<std::size_t> sorted;     // qubits in increasing order
  std::uint64_t blocks = 0;            // number of base indices
};

LocalLayout layout(const StateVector& psi, const std::vector<std::size_t>& qubits, const Eigen::MatrixXcd& m) {
  const std::size_t k = qubits.size();
  if (m.rows() != (std::int64_t{1} << k) || m.cols() != m.rows()) throw DimensionError("matrix size mismatch");
  LocalLayout l;
  l.sorted = qubits;
  std::sort(l.sorted.begin(), l.sorted.end());
  if (std::adjacent_find(l.sorted.begin(), l.sorted.end()) != l.sorted.end())
    throw std::invalid_argument("repeated qubit");
  if (!l.sorted.empty() && l.sorted.back() >= psi.n) throw DimensionError("qubit out of range");
  l.offsets.resize(std::size_t{1} << k);
  for (std::size_t j = 0; j < l.offsets.size(); ++j) {
    std::uint64_t off = 0;
    for (std::size_t b = 0; b < k; ++b)
      if ((j >> b) & 1U) off |= std::uint64_t{1} << qubits[b];
    l.offsets[j] = off;
  }
  l.blocks = std::uint64_t{1} << (psi.n - k);
  return l;
}

// Spreads the bits of i around the zero positions in `sorted`.
inline std::uint64_t base_index(std::uint64_t i, const std::vector<std::size_t>& sorted) {
  for (std::size_t q : sorted) {
    const std::uint64_t low = i & ((std::uint64_t{1} << q) - 1);
    i = ((i >> q) << (q + 1)) | low;
  }
  return i;
}

inline cplx pauli_sign(const PauliString& p, std::uint64_t b) {
  // P|b> = i^{phase + |x&z|} (-1)^{|z&b|} |b ^ x>
  const int k = p.phase() + std::popcount(p.x() & p.z()) + 2 * (std::popcount(p.z() & b) & 1);
  return phase_value(k);
}

}  // namespace

namespace serial {

void apply_matrix(StateVector& psi, const std::vector<std::size_t>& qubits, const Eigen::MatrixXcd& m) {
  const LocalLayout l = layout(psi, qubits, m);
  const std::size_t d = l.offsets.size();
  Eigen::VectorXcd in(d), out(d);
  for (std::uint64_t i = 0; i < l.blocks; ++i) {
    const std::uint64_t base = base_index(i, l.sorted);
    for (std::size_t j = 0; j < d; ++j) in(j) = psi.amp(base | l.offsets[j]);
    out.noalias() = m * in;
    for (std::size_t j = 0; j < d; ++j) psi.amp(base | l.offsets[j]) = out(j);
  }
}

void apply_pauli(StateVector& psi, const PauliString& p) {
  if (p.n() != psi.n) throw DimensionError("Pauli size mismatch");
  Eigen::VectorXcd out(psi.amp.size());
  for (std::int64_t b = 0; b < psi.amp.size(); ++b) out(b ^ p.x()) = pauli_sign(p, b) * psi.amp(b);
  psi.amp = std::move(out);
}

cplx expectation(const StateVector& psi, const PauliString& p) {
  if (p.n() != psi.n) throw DimensionError("Pauli size mismatch");
  cplx acc = 0;
  for (std::int64_t b = 0; b < psi.amp.size(); ++b) acc += std::conj(psi.amp(b ^ p.x())) * pauli_sign(p, b) * psi.amp(b);
  return acc;
}

StateVector apply_operator(const StateVector& psi, const Operator& op) {
  StateVector out(psi.n, Eigen::VectorXcd::Zero(psi.amp.size()));
  for (const auto& [key, c] : op.terms()) {
    StateVector t = psi;
    apply_pauli(t, PauliString(psi.n, key.first, key.second));
    out.amp += c * t.amp;
  }
  return out;
}

}  // namespace serial

namespace omp {

void apply_matrix(StateVector& psi, const std::vector<std::size_t>& qubits, const Eigen::MatrixXcd& m) {
  const LocalLayout l = layout(psi, qubits, m);
  const std::int64_t d = static_cast<std::int64_t>(l.offsets.size());
  const std::int64_t blocks = static_cast<std::int64_t>(l.blocks);
  cplx* a = psi.amp.data();
#pragma omp parallel
  {
    std::vector<cplx> in(d);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < blocks; ++i) {
      const std::uint64_t base = base_index(static_cast<std::uint64_t>(i), l.sorted);
      for (std::int64_t j = 0; j < d; ++j) in[j] = a[base | l.offsets[j]];
      for (std::int64_t r = 0; r < d; ++r) {
        cplx acc = 0;
        for (std::int64_t j = 0; j < d; ++j) acc += m(r, j) * in[j];
        a[base | l.offsets[r]] = acc;
      }
    }
  }
}

void apply_pauli(StateVector& psi, const PauliString& p) {
  if (p.n() != psi.n) throw DimensionError("Pauli size mismatch");
  Eigen::VectorXcd out(psi.amp.size());
  const std::int64_t size = psi.amp.size();
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < size; ++b) out(b ^ p.x()) = pauli_sign(p, b) * psi.amp(b);
  psi.amp = std::move(out);
}

cplx expectation(const StateVector& psi, const PauliString& p) {
  if (p.n() != psi.n) throw DimensionError("Pauli size mismatch");
  const std::int64_t size = psi.amp.size();
  double re = 0, im = 0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (std::int64_t b = 0; b < size; ++b) {
    const cplx v = std::conj(psi.amp(b ^ p.x())) * pauli_sign(p, b) * psi.amp(b);
    re += v.real();
    im += v.imag();
  }
  return {re, im};
}

StateVector apply_operator(const StateVector& psi, const Operator& op) {
  StateVector out(psi.n, Eigen::VectorXcd::Zero(psi.amp.size()));
  const std::int64_t size = psi.amp.size();
  for (const auto& [key, c] : op.terms()) {
    const PauliString p(psi.n, key.first, key.second);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < size; ++b) out.amp(b ^ p.x()) += c * pauli_sign(p, b) * psi.amp(b);
  }
  return out;
}

}  // namespace omp
}  // namespace kernels
}  // namespace hqc
