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

#include "hqc/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>

#include "hqc/gf2.hpp"

namespace hqc {
namespace {

PauliString from_sites(std::size_t n, const std::vector<std::size_t>& qs, char p) {
  PauliString s(n);
  for (auto q : qs) s = s.with_factor(q, p);
  return s;
}

std::vector<PauliString> pauli_only(const std::vector<Operator>& ops) {
  std::vector<PauliString> out;
  for (const auto& o : ops)
    if (auto p = o.as_pauli(1e-10)) out.push_back(*p);
  return out;
}

}  // namespace

SubsystemCode SubsystemCode::embed(std::size_t total, std::size_t off) const {
  SubsystemCode c;
  c.label = label;
  c.n = n;
  c.offset = offset + off;
  for (const auto& s : stabilizer) c.stabilizer.push_back(s.embed(total, off));
  for (const auto& g : gauge) c.gauge.push_back(g.embed(total, off));
  c.logical_x = logical_x.embed(total, off);
  c.logical_z = logical_z.embed(total, off);
  return c;
}

SubsystemCode bacon_shor() {
  SubsystemCode c;
  c.label = "bacon-shor";
  c.n = 9;
  auto row = [](std::size_t r) {
    return std::vector<std::size_t>{bs_index(r, 1), bs_index(r, 2), bs_index(r, 3)};
  };
  auto col = [](std::size_t k) {
    return std::vector<std::size_t>{bs_index(1, k), bs_index(2, k), bs_index(3, k)};
  };
  auto cat = [](std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  c.stabilizer = {from_sites(9, cat(row(1), row(2)), 'X'), from_sites(9, cat(row(2), row(3)), 'X'),
                  from_sites(9, cat(col(1), col(2)), 'Z'), from_sites(9, cat(col(2), col(3)), 'Z')};
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t k = 1; k <= 2; ++k) c.gauge.push_back(from_sites(9, {bs_index(r, k), bs_index(r, k + 1)}, 'Z'));
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t r = 1; r <= 2; ++r) c.gauge.push_back(from_sites(9, {bs_index(r, k), bs_index(r + 1, k)}, 'X'));
  c.logical_x = from_sites(9, row(1), 'X');
  c.logical_z = from_sites(9, col(1), 'Z');
  return c;
}

SubsystemCode cat_code(std::size_t m) {
  if (m < 2) throw std::invalid_argument("cat code needs at least two qubits");
  SubsystemCode c;
  c.label = "cat";
  c.n = m;
  for (std::size_t i = 0; i + 1 < m; ++i) c.stabilizer.push_back(from_sites(m, {i, i + 1}, 'Z'));
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  c.stabilizer.push_back(from_sites(m, all, 'X'));
  c.logical_x = from_sites(m, all, 'X');
  c.logical_z = PauliString::single(m, 0, 'Z');
  return c;
}

SubsystemCode trivial_code() {
  SubsystemCode c;
  c.label = "trivial";
  c.n = 1;
  c.stabilizer = {PauliString::single(1, 0, 'Z')};
  c.logical_x = PauliString::single(1, 0, 'X');
  c.logical_z = PauliString::single(1, 0, 'Z');
  return c;
}

std::string check_code_axioms(const SubsystemCode& code) {
  for (std::size_t i = 0; i < code.stabilizer.size(); ++i) {
    const auto& s = code.stabilizer[i];
    for (const auto& t : code.stabilizer)
      if (!commutes(s, t)) return "stabilizer generators do not commute";
    for (const auto& g : code.gauge)
      if (!commutes(s, g)) return "stabilizer does not commute with gauge";
  }
  // The cat code lists X...X as a stabilizer and a logical; skip that pairing.
  const bool cat = code.label == "cat";
  for (const auto& s : code.stabilizer) {
    if (cat) break;
    if (!commutes(s, code.logical_x) || !commutes(s, code.logical_z)) return "stabilizer does not commute with logicals";
  }
  for (const auto& g : code.gauge)
    if (!commutes(g, code.logical_x) || !commutes(g, code.logical_z)) return "gauge does not commute with logicals";
  if (commutes(code.logical_x, code.logical_z)) return "logical X and Z commute";
  return {};
}

GroupState::GroupState(std::size_t n, std::vector<Operator> stabilizer, std::vector<Operator> gauge)
    : n_(n), stab_(std::move(stabilizer)), gauge_(std::move(gauge)) {}

GroupState GroupState::from_codes(std::size_t n, const std::vector<SubsystemCode>& codes) {
  std::vector<Operator> s, g;
  for (const auto& c : codes) {
    if (c.stabilizer.empty() || c.stabilizer.front().n() != n) throw DimensionError("code not embedded in register");
    for (const auto& p : c.stabilizer) s.emplace_back(p);
    for (const auto& p : c.gauge) g.emplace_back(p);
  }
  return GroupState(n, std::move(s), std::move(g));
}

std::vector<PauliString> GroupState::pauli_stabilizer() const { return pauli_only(stab_); }
std::vector<PauliString> GroupState::pauli_gauge() const { return pauli_only(gauge_); }

void GroupState::apply(const CliffordGate& g) {
  for (auto& o : stab_) o = o.conjugated(g);
  for (auto& o : gauge_) o = o.conjugated(g);
  std::string h = to_string(g.kind);
  for (auto q : g.qubits) h += " " + std::to_string(q);
  history_.push_back(h);
}

void GroupState::apply(const Operator& u, const std::string& label) {
  std::size_t dropped = 0;
  auto update = [&](std::vector<Operator>& gens) {
    std::vector<Operator> kept;
    kept.reserve(gens.size());
    for (auto& o : gens) {
      Operator c = o.conjugated_by(u);
      if (c.size() > kMaxTrackedTerms) {
        ++dropped;
      } else {
        kept.push_back(std::move(c));
      }
    }
    gens = std::move(kept);
  };
  update(stab_);
  update(gauge_);
  history_.push_back(label);
  if (dropped > 0) {
    untracked_ += dropped;
    history_.push_back("untracked " + std::to_string(dropped) + " generator(s)");
  }
}

bool in_group(const PauliString& p, const std::vector<PauliString>& gens) {
  return SymplecticBasis(gens).contains(p);
}

PauliString find_starting_element(const GroupState& gs, const std::vector<FactorConstraint>& constraints,
                                  std::size_t max_weight) {
  const std::size_t n = gs.n();
  const auto stab = gs.pauli_stabilizer();
  auto all = stab;
  const auto gauge = gs.pauli_gauge();
  all.insert(all.end(), gauge.begin(), gauge.end());
  const SymplecticBasis stab_basis(stab), full_basis(all);

  std::uint64_t group_support = 0;
  for (const auto& p : all) group_support |= p.support_mask();

  std::vector<std::pair<std::size_t, char>> fixed;
  std::uint64_t excluded = 0;
  for (const auto& c : constraints) {
    if (c.qubit >= n) throw DimensionError("constraint qubit out of range");
    if (c.factor == 'I') excluded |= std::uint64_t{1} << c.qubit;
    else if (c.factor == 'X' || c.factor == 'Y' || c.factor == 'Z') fixed.emplace_back(c.qubit, c.factor);
    else throw std::invalid_argument("factor must be one of I, X, Y, Z");
  }
  std::uint64_t fixed_mask = 0;
  for (auto& f : fixed) fixed_mask |= std::uint64_t{1} << f.first;
  std::vector<std::size_t> free;
  for (std::size_t q = 0; q < n; ++q) {
    const auto b = std::uint64_t{1} << q;
    if ((group_support & b) && !(excluded & b) && !(fixed_mask & b)) free.push_back(q);
  }

  auto try_candidate = [&](const PauliString& cand) -> std::optional<PauliString> {
    if (auto idx = stab_basis.decompose(cand)) {
      const PauliString prod = product(stab, *idx, n);
      return prod;
    }
    if (full_basis.contains(cand)) return cand.unsigned_part();
    return std::nullopt;
  };

  // Membership is linear in the symplectic bits, so a candidate is in the group
  // exactly when the residues of its single-qubit factors cancel. The search
  // visits candidates by weight, then support (lexicographic), then factors in
  // X < Y < Z order, and completes the last factor by residue lookup.
  using Residue = std::pair<std::uint64_t, std::uint64_t>;
  auto add = [](Residue a, Residue b) { return Residue{a.first ^ b.first, a.second ^ b.second}; };
  PauliString base(n);
  for (auto& f : fixed) base = base.with_factor(f.first, f.second);
  const Residue base_res = full_basis.residue(base);
  static constexpr char kFactors[] = "XYZ";
  std::vector<std::array<Residue, 3>> single(free.size());
  std::map<Residue, std::vector<std::pair<std::size_t, int>>> by_residue;
  for (std::size_t i = 0; i < free.size(); ++i) {
    for (int f = 0; f < 3; ++f) {
      single[i][f] = full_basis.residue(PauliString(n).with_factor(free[i], kFactors[f]));
      by_residue[single[i][f]].emplace_back(i, f);
    }
  }
  auto build = [&](const std::vector<std::size_t>& pick, const std::vector<int>& factor) {
    PauliString cand = base;
    for (std::size_t k = 0; k < pick.size(); ++k) cand = cand.with_factor(free[pick[k]], kFactors[factor[k]]);
    return cand;
  };

  for (std::size_t w = std::max<std::size_t>(fixed.size(), 1); w <= max_weight; ++w) {
    const std::size_t extra = w - fixed.size();
    if (extra > free.size()) break;
    if (extra == 0) {
      if (base_res == Residue{0, 0})
        if (auto r = try_candidate(base)) return *r;
      continue;
    }
    // Prefix of extra - 1 support indices; the last index comes from the lookup.
    const std::size_t head = extra - 1;
    std::vector<std::size_t> pick(head);
    for (std::size_t i = 0; i < head; ++i) pick[i] = i;
    while (true) {
      const std::size_t lo = head == 0 ? 0 : pick.back() + 1;
      std::optional<std::pair<std::size_t, std::vector<int>>> best;  // (last index, factors)
      std::size_t combos = 1;
      for (std::size_t i = 0; i < head; ++i) combos *= 3;
      std::vector<int> factor(extra);
      for (std::size_t code = 0; code < combos; ++code) {
        std::size_t rem = code;
        Residue need = base_res;
        for (std::size_t i = head; i-- > 0;) {
          factor[i] = static_cast<int>(rem % 3);
          rem /= 3;
          need = add(need, single[pick[i]][factor[i]]);
        }
        const auto hit = by_residue.find(need);
        if (hit == by_residue.end()) continue;
        const auto& list = hit->second;
        const auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(lo, 0));
        if (it == list.end()) continue;
        factor[head] = it->second;
        // Smaller last index wins; ties keep the earlier (lexicographically smaller) factor prefix.
        if (!best || it->first < best->first) best = std::make_pair(it->first, factor);
      }
      if (best) {
        std::vector<std::size_t> full = pick;
        full.push_back(best->first);
        if (auto r = try_candidate(build(full, best->second))) return *r;
      }
      // Next prefix in lexicographic order, leaving room for the last index.
      std::size_t i = head;
      while (i > 0 && pick[i - 1] == free.size() - extra + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < head; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  std::string msg = "no starting element satisfies constraints";
  for (auto& c : constraints) msg += " (" + std::to_string(c.qubit) + ":" + c.factor + ")";
  throw NotFoundError(msg);
}

PauliString find_starting_element(const GroupState& gs, std::size_t qubit, char factor, std::size_t max_weight) {
  return find_starting_element(gs, {{qubit, factor}}, max_weight);
}

Syndrome syndrome_of(const SubsystemCode& code, const PauliString& error) {
  Syndrome s;
  for (const auto& g : code.stabilizer) s.bits.push_back(commutes(g, error) ? 0 : 1);
  return s;
}

DecodeResult decode(const SubsystemCode& code, const Syndrome& s) {
  if (s.bits.size() != code.stabilizer.size()) throw std::invalid_argument("syndrome length mismatch");
  const std::size_t n = code.stabilizer.front().n();
  const PauliString id(n);
  if (syndrome_of(code, id) == s) return {id, true};
  for (std::size_t k = 0; k < code.n; ++k) {
    for (char p : {'X', 'Y', 'Z'}) {
      const PauliString e = PauliString::single(n, code.offset + k, p);
      if (syndrome_of(code, e) == s) return {e, true};
    }
  }
  return {id, false};
}

bool is_gauge_equivalent_to_identity(const SubsystemCode& code, const PauliString& p) {
  auto gens = code.stabilizer;
  gens.insert(gens.end(), code.gauge.begin(), code.gauge.end());
  return in_group(p, gens);
}

std::size_t min_weight_mod_gauge(const SubsystemCode& code, const PauliString& p) {
  // Independent generators of the gauge group, then a Gray-code walk over it.
  std::vector<PauliString> basis;
  std::vector<PauliString> gens = code.gauge;
  gens.insert(gens.end(), code.stabilizer.begin(), code.stabilizer.end());
  for (const auto& g : gens) {
    if (basis.empty() || !SymplecticBasis(basis).contains(g)) basis.push_back(g);
  }
  if (basis.size() > 20) throw std::runtime_error("gauge group too large for enumeration");
  PauliString cur = p;
  std::size_t best = cur.weight();
  const std::size_t total = std::size_t{1} << basis.size();
  for (std::size_t i = 1; i < total; ++i) {
    cur = mul(cur, basis[std::countr_zero(i)]);
    best = std::min(best, cur.weight());
  }
  return best;
}

std::vector<ParallelAssignment> max_parallel_set(const SubsystemCode& code, OpKind kind) {
  if (code.label != "bacon-shor") throw std::invalid_argument("max_parallel_set expects a Bacon-Shor block");
  if (kind != OpKind::SingleQubit) throw std::invalid_argument("unsupported operation kind");
  const std::size_t n = code.stabilizer.front().n();
  auto gens = code.stabilizer;
  gens.insert(gens.end(), code.gauge.begin(), code.gauge.end());
  std::vector<ParallelAssignment> out;
  for (std::size_t r = 1; r <= 3; ++r) {
    ParallelAssignment a;
    a.spectator = code.offset + bs_index(r, 3);
    for (std::size_t c = 1; c <= 2; ++c) {
      const std::size_t q = code.offset + bs_index(r, c);
      PauliString e = PauliString::single(n, q, 'Z').with_factor(a.spectator, 'Z');
      if (!in_group(e, gens)) throw std::logic_error("row element missing from gauge group");
      a.targets.push_back(q);
      a.elements.push_back(e);
    }
    out.push_back(std::move(a));
  }
  return out;
}

double parallel_slowdown(const SubsystemCode& code, OpKind kind) {
  std::size_t count = 0;
  for (const auto& a : max_parallel_set(code, kind)) count += a.targets.size();
  return static_cast<double>(code.n) / static_cast<double>(count);
}

}  // namespace hqc
