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

// Serial reference kernels against their OpenMP counterparts on random states.

#include <random>

#include <benchmark/benchmark.h>

#include "hqc/kernels.hpp"

namespace hqc {
namespace {

StateVector random_state(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  Eigen::VectorXcd a(std::int64_t{1} << n);
  for (auto& z : a) z = {d(rng), d(rng)};
  StateVector s(n, a);
  s.normalize();
  return s;
}

Eigen::MatrixXcd random_unitary(std::int64_t dim) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> d;
  Eigen::MatrixXcd m(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i)
    for (std::int64_t j = 0; j < dim; ++j) m(i, j) = {d(rng), d(rng)};
  return Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
}

PauliString wide_pauli(std::size_t n) {
  PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) p = p.with_factor(q, "XYZ"[q % 3]);
  return p;
}

template <void (*Apply)(StateVector&, const std::vector<std::size_t>&, const Eigen::MatrixXcd&)>
void BM_ApplyMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  StateVector psi = random_state(n);
  const std::vector<std::size_t> qubits{0, n / 2, n - 1};
  const Eigen::MatrixXcd u = random_unitary(8);
  for (auto _ : state) {
    Apply(psi, qubits, u);
    benchmark::DoNotOptimize(psi.amp.data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

template <void (*Apply)(StateVector&, const PauliString&)>
void BM_ApplyPauli(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  StateVector psi = random_state(n);
  const PauliString p = wide_pauli(n);
  for (auto _ : state) {
    Apply(psi, p);
    benchmark::DoNotOptimize(psi.amp.data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

template <cplx (*Expect)(const StateVector&, const PauliString&)>
void BM_Expectation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const StateVector psi = random_state(n);
  const PauliString p = wide_pauli(n);
  for (auto _ : state) benchmark::DoNotOptimize(Expect(psi, p));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

template <StateVector (*Apply)(const StateVector&, const Operator&)>
void BM_ApplyOperator(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const StateVector psi = random_state(n);
  Operator op(n);
  for (std::size_t q = 0; q + 1 < n; ++q) op += Operator(PauliString(n).with_factor(q, 'Z').with_factor(q + 1, 'X'));
  for (auto _ : state) benchmark::DoNotOptimize(Apply(psi, op).amp.data());
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n) * static_cast<std::int64_t>(op.size()));
}

BENCHMARK(BM_ApplyMatrix<kernels::serial::apply_matrix>)->Name("apply_matrix/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_ApplyMatrix<kernels::omp::apply_matrix>)->Name("apply_matrix/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_ApplyPauli<kernels::serial::apply_pauli>)->Name("apply_pauli/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_ApplyPauli<kernels::omp::apply_pauli>)->Name("apply_pauli/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_Expectation<kernels::serial::expectation>)->Name("expectation/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_Expectation<kernels::omp::expectation>)->Name("expectation/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_ApplyOperator<kernels::serial::apply_operator>)->Name("apply_operator/serial")->DenseRange(12, 18, 6);
BENCHMARK(BM_ApplyOperator<kernels::omp::apply_operator>)->Name("apply_operator/omp")->DenseRange(12, 18, 6);

}  // namespace
}  // namespace hqc

BENCHMARK_MAIN();
