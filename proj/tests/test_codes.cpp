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

#include <gtest/gtest.h>

#include "hqc/codes.hpp"
#include "hqc/compile.hpp"
#include "hqc/gf2.hpp"

namespace hqc {
namespace {

PauliString P(const char* s) { return PauliString::parse(s); }

// Exhaustive products of at most two generators; the oracle for element search.
std::vector<PauliString> products_up_to_two(const std::vector<PauliString>& gens) {
  std::vector<PauliString> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.push_back(gens[i]);
    for (std::size_t j = i + 1; j < gens.size(); ++j) out.push_back(mul(gens[i], gens[j]));
  }
  return out;
}

std::vector<PauliString> all_gauge_gens(const SubsystemCode& c) {
  std::vector<PauliString> g = c.stabilizer;
  g.insert(g.end(), c.gauge.begin(), c.gauge.end());
  return g;
}

TEST(BaconShor, TwelveWeightTwoGaugeGenerators) {
  const SubsystemCode c = bacon_shor();
  ASSERT_EQ(c.gauge.size(), 12u);
  for (const auto& g : c.gauge) EXPECT_EQ(g.weight(), 2u);
  // Horizontal ZZ pairs and vertical XX pairs on the grid.
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t k = 1; k <= 2; ++k) {
      const PauliString zz = PauliString::single(9, bs_index(r, k), 'Z') * PauliString::single(9, bs_index(r, k + 1), 'Z');
      const PauliString xx = PauliString::single(9, bs_index(k, r), 'X') * PauliString::single(9, bs_index(k + 1, r), 'X');
      EXPECT_NE(std::find(c.gauge.begin(), c.gauge.end(), zz), c.gauge.end());
      EXPECT_NE(std::find(c.gauge.begin(), c.gauge.end(), xx), c.gauge.end());
    }
}

TEST(BaconShor, StabilizersAreRowAndColumnPairs) {
  const SubsystemCode c = bacon_shor();
  ASSERT_EQ(c.stabilizer.size(), 4u);
  EXPECT_EQ(c.stabilizer[0], P("XXXXXXIII"));
  EXPECT_EQ(c.stabilizer[2], P("ZZIZZIZZI"));
  EXPECT_EQ(c.logical_x.weight(), 3u);
  EXPECT_EQ(c.logical_z.weight(), 3u);
}

TEST(BaconShor, SubsystemAxiomsHoldExhaustively) {
  const SubsystemCode c = bacon_shor();
  EXPECT_EQ(check_code_axioms(c), "");
  for (const auto& s : c.stabilizer) {
    for (const auto& t : c.stabilizer) EXPECT_TRUE(commutes(s, t));
    for (const auto& g : c.gauge) EXPECT_TRUE(commutes(s, g));
    EXPECT_TRUE(commutes(s, c.logical_x));
    EXPECT_TRUE(commutes(s, c.logical_z));
  }
  for (const auto& g : c.gauge) {
    EXPECT_TRUE(commutes(g, c.logical_x));
    EXPECT_TRUE(commutes(g, c.logical_z));
  }
  EXPECT_FALSE(commutes(c.logical_x, c.logical_z));
}

TEST(CatCode, TwoQubits) {
  const SubsystemCode c = cat_code(2);
  EXPECT_EQ(c.stabilizer.front(), P("ZZ"));
  EXPECT_EQ(check_code_axioms(c), "");
}

TEST(CatCode, FourQubitsHaveThreeZGenerators) {
  const SubsystemCode c = cat_code(4);
  std::size_t z_type = 0;
  for (const auto& s : c.stabilizer) z_type += s.x() == 0;
  EXPECT_EQ(z_type, 3u);
  EXPECT_EQ(SymplecticBasis(c.stabilizer).rank(), c.stabilizer.size());
  EXPECT_EQ(c.logical_x, P("XXXX"));
  EXPECT_EQ(c.logical_z, P("ZIII"));
}

TEST(CatCode, GhzStateIsPlusOneEigenstate) {
  for (std::size_t m : {2u, 3u, 5u}) {
    const SubsystemCode c = cat_code(m);
    Eigen::VectorXcd ghz = Eigen::VectorXcd::Zero(std::size_t{1} << m);
    ghz(0) = ghz(ghz.size() - 1) = 1 / std::sqrt(2.0);
    for (const auto& s : c.stabilizer) EXPECT_LE((s.dense() * ghz - ghz).norm(), 1e-12);
  }
}

TEST(CatCode, RejectsSingleQubit) { EXPECT_THROW(cat_code(1), std::invalid_argument); }

TEST(TrivialCode, StabilizedByZ) {
  const SubsystemCode c = trivial_code();
  EXPECT_EQ(c.stabilizer.front(), P("Z"));
}

TEST(FindStartingElement, ZOnCornerIsHorizontalPair) {
  const GroupState gs = GroupState::from_codes(9, {bacon_shor()});
  EXPECT_EQ(find_starting_element(gs, bs_index(1, 1), 'Z'), P("ZZIIIIIII"));
}

TEST(FindStartingElement, XOnCornerIsVerticalPair) {
  const GroupState gs = GroupState::from_codes(9, {bacon_shor()});
  const PauliString e = find_starting_element(gs, bs_index(1, 1), 'X');
  EXPECT_EQ(e, P("XIIXIIIII"));
  // Oracle: the minimal weight among products of at most two generators with X on (1,1).
  std::size_t best = 99;
  for (const auto& p : products_up_to_two(all_gauge_gens(bacon_shor())))
    if (p.factor(0) == 'X') best = std::min(best, p.weight());
  EXPECT_EQ(e.weight(), best);
}

TEST(FindStartingElement, WeightThreeElementAfterTransversalCnot) {
  // Control block 0-8, target block 9-17; CNOTs on columns (1,1) and (1,3) have acted.
  const SubsystemCode a = bacon_shor().embed(18, 0), b = bacon_shor().embed(18, 9);
  GroupState gs = GroupState::from_codes(18, {a, b});
  for (std::size_t q : {bs_index(1, 1), bs_index(1, 3)}) gs.apply(CliffordGate{GateKind::CNOT, {q, 9 + q}});
  const std::size_t t12 = 9 + bs_index(1, 2), c12 = bs_index(1, 2);
  const PauliString e = find_starting_element(gs, {{t12, 'Z'}, {c12, 'Z'}});
  EXPECT_EQ(e.weight(), 3u);
  const PauliString expected =
      PauliString::single(18, 9 + bs_index(1, 1), 'Z') * PauliString::single(18, t12, 'Z') * PauliString::single(18, c12, 'Z');
  EXPECT_TRUE(e.same_up_to_phase(expected)) << e.str();
}

TEST(FindStartingElement, ResultIsInGroupWithRequestedFactor) {
  const GroupState gs = GroupState::from_codes(9, {bacon_shor()});
  std::vector<PauliString> gens = gs.pauli_stabilizer();
  for (const auto& g : gs.pauli_gauge()) gens.push_back(g);
  for (std::size_t q = 0; q < 9; ++q)
    for (char f : {'X', 'Y', 'Z'}) {
      const PauliString e = find_starting_element(gs, q, f);
      EXPECT_EQ(e.factor(q), f);
      EXPECT_TRUE(in_group(e, gens));
    }
}

TEST(FindStartingElement, NotFoundThrows) {
  const GroupState gs = GroupState::from_codes(9, {bacon_shor()});
  EXPECT_THROW(find_starting_element(gs, 0, 'X', 1), NotFoundError);
}

TEST(GroupState, RoundTripThroughGateAndInverse) {
  const SubsystemCode a = bacon_shor().embed(18, 0), b = bacon_shor().embed(18, 9);
  const GroupState start = GroupState::from_codes(18, {a, b});
  GroupState gs = start;
  for (std::size_t q = 0; q < 9; ++q) gs.apply(CliffordGate{GateKind::CNOT, {q, 9 + q}});
  gs.apply(CliffordGate{GateKind::H, {4}});
  gs.apply(CliffordGate{GateKind::H, {4}});
  for (std::size_t q = 0; q < 9; ++q) gs.apply(CliffordGate{GateKind::CNOT, {q, 9 + q}});
  ASSERT_EQ(gs.stabilizer().size(), start.stabilizer().size());
  for (std::size_t k = 0; k < gs.stabilizer().size(); ++k) EXPECT_TRUE(gs.stabilizer()[k].approx_equal(start.stabilizer()[k]));
  EXPECT_EQ(gs.history().size(), 20u);
}

TEST(GroupState, TransversalCnotPreservesGroupModuloGauge) {
  const SubsystemCode a = bacon_shor().embed(18, 0), b = bacon_shor().embed(18, 9);
  const GroupState start = GroupState::from_codes(18, {a, b});
  GroupState gs = start;
  for (std::size_t q = 0; q < 9; ++q) gs.apply(CliffordGate{GateKind::CNOT, {q, 9 + q}});
  std::vector<PauliString> initial = start.pauli_stabilizer();
  for (const auto& g : start.pauli_gauge()) initial.push_back(g);
  for (const auto& s : gs.pauli_stabilizer()) EXPECT_TRUE(in_group(s, initial)) << s.str();
  for (const auto& g : gs.pauli_gauge()) EXPECT_TRUE(in_group(g, initial)) << g.str();
}

TEST(Decoder, TrivialSyndromeGivesIdentity) {
  const SubsystemCode c = bacon_shor();
  const DecodeResult d = decode(c, Syndrome{std::vector<int>(4, 0)});
  EXPECT_TRUE(d.correction.is_identity());
  EXPECT_TRUE(d.consistent);
}

TEST(Decoder, XOnCentreCorrectedInItsColumn) {
  const SubsystemCode c = bacon_shor();
  const PauliString e = PauliString::single(9, bs_index(2, 2), 'X');
  const DecodeResult d = decode(c, syndrome_of(c, e));
  ASSERT_EQ(d.correction.weight(), 1u);
  EXPECT_EQ(d.correction.support().front() % 3, 1u);
  EXPECT_TRUE(is_gauge_equivalent_to_identity(c, mul(d.correction, e)));
}

TEST(Decoder, AllWeightOneErrorsAreCorrected) {
  for (std::size_t offset : {0u, 9u}) {
    const SubsystemCode c = bacon_shor().embed(18, offset);
    for (std::size_t k = 0; k < 9; ++k)
      for (char f : {'X', 'Y', 'Z'}) {
        const PauliString e = PauliString::single(18, offset + k, f);
        const Syndrome s = syndrome_of(c, e);
        ASSERT_EQ(s.bits.size(), c.stabilizer.size());
        const DecodeResult d = decode(c, s);
        EXPECT_TRUE(d.consistent);
        const PauliString residual = mul(d.correction, e);
        EXPECT_TRUE(is_gauge_equivalent_to_identity(c, residual)) << f << k;
        EXPECT_TRUE(commutes(residual, c.logical_x));
        EXPECT_TRUE(commutes(residual, c.logical_z));
      }
  }
}

TEST(Decoder, LogicalErrorIsNotGaugeEquivalent) {
  const SubsystemCode c = bacon_shor();
  EXPECT_FALSE(is_gauge_equivalent_to_identity(c, c.logical_x));
  EXPECT_EQ(min_weight_mod_gauge(c, c.logical_x), 3u);
  EXPECT_EQ(min_weight_mod_gauge(c, P("XIIXIIIII")), 0u);
  EXPECT_EQ(min_weight_mod_gauge(c, P("XXIXIIIII")), 1u);
}

TEST(Parallelism, SixQubitsAddressable) {
  const SubsystemCode c = bacon_shor();
  const auto set = max_parallel_set(c, OpKind::SingleQubit);
  std::vector<std::size_t> targets;
  std::uint64_t used = 0;
  for (const auto& a : set) {
    for (auto t : a.targets) targets.push_back(t);
    // Assignments are disjoint; the two elements inside one share the spectator.
    std::uint64_t mask = 0;
    for (const auto& e : a.elements) {
      mask |= e.support_mask();
      EXPECT_TRUE(e.support_mask() >> a.spectator & 1);
      for (const auto& f : a.elements) EXPECT_TRUE(commutes(e, f));
    }
    EXPECT_EQ(mask & used, 0u);
    used |= mask;
  }
  EXPECT_EQ(targets.size(), 6u);
  EXPECT_DOUBLE_EQ(parallel_slowdown(c, OpKind::SingleQubit), 1.5);
}

TEST(GroupState, OversizedGeneratorsAreDropped) {
  // Nine Toffolis turn some generators into long Pauli sums; those are dropped
  // while the Pauli-valued ones keep feeding the element search.
  auto ctx = bacon_shor_context(2, 9);
  compile_transversal_toffoli(ctx.state, ctx.cat_offset, 0, 9);
  EXPECT_GT(ctx.state.untracked(), 0u);
  for (const auto* gens : {&ctx.state.stabilizer(), &ctx.state.gauge()})
    for (const auto& g : *gens) EXPECT_LE(g.size(), GroupState::kMaxTrackedTerms);
  bool noted = false;
  for (const auto& h : ctx.state.history()) noted = noted || h.starts_with("untracked");
  EXPECT_TRUE(noted);
  EXPECT_EQ(bacon_shor_context(2).state.untracked(), 0u);
}

}  // namespace
}  // namespace hqc
