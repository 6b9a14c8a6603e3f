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

#include <optional>
#include <utility>
#include <vector>

#include "hqc/pauli.hpp"

namespace hqc {

/// Symplectic row reduction over GF(2) for membership queries in a Pauli group.
///
/// Phases are ignored during elimination; callers recover them by multiplying
/// the returned generators in index order.
class SymplecticBasis {
 public:
  explicit SymplecticBasis(const std::vector<PauliString>& gens);

  std::size_t rank() const { return rows_.size(); }
  /// Indices of generators whose product equals `target` up to phase.
  std::optional<std::vector<std::size_t>> decompose(const PauliString& target) const;
  bool contains(const PauliString& target) const { return decompose(target).has_value(); }
  /// Symplectic (x, z) bits left after reducing `target` by the basis.
  ///
  /// The basis is fully reduced, so this map is linear over GF(2) and vanishes
  /// exactly on members of the group.
  std::pair<std::uint64_t, std::uint64_t> residue(const PauliString& target) const;

 private:
  struct Row {
    std::uint64_t x, z;
    std::vector<std::uint64_t> combo;  // bitset over generator indices
    int pivot;                         // 0..127: x bits then z bits
  };
  std::size_t n_gens_;
  std::size_t n_qubits_;
  std::vector<Row> rows_;
};

/// Product of gens[i] for i in idx, in increasing index order.
PauliString product(const std::vector<PauliString>& gens, const std::vector<std::size_t>& idx, std::size_t n);

}  // namespace hqc
