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

#include "hqc/gf2.hpp"

#include <bit>

namespace hqc {
namespace {

bool test_bit(std::uint64_t x, std::uint64_t z, int pos) {
  return pos < 64 ? (x >> pos) & 1 : (z >> (pos - 64)) & 1;
}

int lowest(std::uint64_t x, std::uint64_t z) {
  if (x) return std::countr_zero(x);
  if (z) return 64 + std::countr_zero(z);
  return -1;
}

}  // namespace

SymplecticBasis::SymplecticBasis(const std::vector<PauliString>& gens)
    : n_gens_(gens.size()), n_qubits_(gens.empty() ? 0 : gens.front().n()) {
  const std::size_t words = (n_gens_ + 63) / 64;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].n() != n_qubits_) throw DimensionError("generator length mismatch");
    Row r{gens[i].x(), gens[i].z(), std::vector<std::uint64_t>(words, 0), -1};
    r.combo[i / 64] |= std::uint64_t{1} << (i % 64);
    for (const Row& b : rows_) {
      if (test_bit(r.x, r.z, b.pivot)) {
        r.x ^= b.x;
        r.z ^= b.z;
        for (std::size_t w = 0; w < words; ++w) r.combo[w] ^= b.combo[w];
      }
    }
    r.pivot = lowest(r.x, r.z);
    if (r.pivot < 0) continue;
    // Keep the basis fully reduced so a single pass decomposes any target.
    for (Row& b : rows_) {
      if (test_bit(b.x, b.z, r.pivot)) {
        b.x ^= r.x;
        b.z ^= r.z;
        for (std::size_t w = 0; w < words; ++w) b.combo[w] ^= r.combo[w];
      }
    }
    rows_.push_back(std::move(r));
  }
}

std::optional<std::vector<std::size_t>> SymplecticBasis::decompose(const PauliString& target) const {
  if (n_gens_ > 0 && target.n() != n_qubits_) throw DimensionError("target length mismatch");
  std::uint64_t x = target.x(), z = target.z();
  std::vector<std::uint64_t> combo((n_gens_ + 63) / 64, 0);
  for (const Row& b : rows_) {
    if (test_bit(x, z, b.pivot)) {
      x ^= b.x;
      z ^= b.z;
      for (std::size_t w = 0; w < combo.size(); ++w) combo[w] ^= b.combo[w];
    }
  }
  if (x || z) return std::nullopt;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n_gens_; ++i)
    if ((combo[i / 64] >> (i % 64)) & 1) idx.push_back(i);
  return idx;
}

std::pair<std::uint64_t, std::uint64_t> SymplecticBasis::residue(const PauliString& target) const {
  if (n_gens_ > 0 && target.n() != n_qubits_) throw DimensionError("target length mismatch");
  std::uint64_t x = target.x(), z = target.z();
  for (const Row& b : rows_) {
    if (test_bit(x, z, b.pivot)) {
      x ^= b.x;
      z ^= b.z;
    }
  }
  return {x, z};
}

PauliString product(const std::vector<PauliString>& gens, const std::vector<std::size_t>& idx, std::size_t n) {
  PauliString p(n);
  for (auto i : idx) p = mul(p, gens[i]);
  return p;
}

}  // namespace hqc
