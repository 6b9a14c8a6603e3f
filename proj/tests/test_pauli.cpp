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

#include <random>

#include <gtest/gtest.h>

#include "hqc/gf2.hpp"
#include "hqc/operator.hpp"
#include "hqc/pauli.hpp"

namespace hqc {
namespace {

PauliString P(const char* s) { return PauliString::parse(s); }

std::vector<PauliString> all_strings(std::size_t n) {
  std::vector<PauliString> out;
  const std::uint64_t m = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t z = 0; z < m; ++z) out.emplace_back(n, x, z);
  return out;
}

PauliString random_string(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t m = (std::uint64_t{1} << n) - 1;
  return PauliString(n, rng() & m, rng() & m, static_cast<int>(rng() % 4));
}

TEST(Pauli, ProductXZIsMinusIY) { EXPECT_EQ(mul(P("XI"), P("ZI")), P("-iYI")); }

TEST(Pauli, YSquaredIsIdentity) { EXPECT_EQ(mul(P("Y"), P("Y")), P("I")); }

TEST(Pauli, CommutingZProductHasPlusPhase) { EXPECT_EQ(mul(P("ZZI"), P("IZZ")), P("ZIZ")); }

TEST(Pauli, LengthMismatchThrows) {
  EXPECT_THROW(mul(P("XX"), P("XXX")), DimensionError);
  EXPECT_THROW(commutes(P("XX"), P("XXX")), DimensionError);
}

TEST(Pauli, ZAndYWithSharedFactorAnticommute) {
  EXPECT_FALSE(commutes(P("ZXZY"), P("YXZY")));
}

TEST(Pauli, CommutationExamples) {
  EXPECT_TRUE(commutes(P("ZZII"), P("IIXX")));
  EXPECT_FALSE(commutes(P("XXII"), P("IZZI")));
  const Eigen::MatrixXcd a = P("XXII").dense(), b = P("IZZI").dense();
  EXPECT_GT((a * b - b * a).norm(), 1.0);
}

TEST(Pauli, Weight) {
  EXPECT_EQ(weight(P("IIII")), 0u);
  EXPECT_EQ(weight(P("ZZII")), 2u);
  // Target (1,1), (1,2) and control (1,1) of two stacked blocks.
  EXPECT_EQ(weight(P("ZZ").embed(18, 9) * PauliString::single(18, 0, 'Z')), 3u);
}

TEST(Pauli, TextRoundTrip) {
  for (const char* s : {"-ZIIIIIIII", "+iXYZ", "-iI", "YYYY"}) {
    const PauliString p = P(s);
    EXPECT_EQ(PauliString::parse(p.str()), p) << s;
  }
  EXPECT_THROW(P("XQ"), std::invalid_argument);
}

TEST(Pauli, GroupAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10000; ++k) {
    const std::size_t n = 1 + rng() % 8;
    const PauliString a = random_string(rng, n), b = random_string(rng, n), c = random_string(rng, n);
    ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    ASSERT_EQ(mul(a, PauliString(n)), a);
    const PauliString sq = mul(a, a);
    ASSERT_TRUE(sq.is_identity());
    ASSERT_EQ(sq.phase() % 2, 0);
  }
}

TEST(Pauli, ProductMatchesDenseForAllLowWeightPairs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<PauliString> ps;
    for (const auto& p : all_strings(n))
      if (p.weight() <= 3) ps.push_back(p);
    for (const auto& a : ps)
      for (const auto& b : ps) ASSERT_LE((mul(a, b).dense() - a.dense() * b.dense()).norm(), 1e-12);
  }
}

TEST(Pauli, CommutesMatchesDenseExhaustively) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto ps = all_strings(n);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        const Eigen::MatrixXcd da = a.dense(), db = b.dense();
        ASSERT_EQ(commutes(a, b), (da * db - db * da).norm() < 1e-12);
      }
  }
}

TEST(Pauli, ConjugationMatchesDenseForEveryGateKind) {
  const std::size_t n = 3;
  std::vector<CliffordGate> gates;
  for (GateKind k : {GateKind::H, GateKind::P, GateKind::Pdg, GateKind::X, GateKind::Y, GateKind::Z})
    for (std::size_t q = 0; q < n; ++q) gates.push_back({k, {q}});
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t t = 0; t < n; ++t)
      if (c != t) gates.push_back({GateKind::CNOT, {c, t}});
  for (const auto& g : gates) {
    const Eigen::MatrixXcd u = dense(g, n);
    for (const auto& p : all_strings(n)) {
      ASSERT_LE((conjugate(p, g).dense() - u * p.dense() * u.adjoint()).norm(), 1e-12) << to_string(g.kind);
      ASSERT_EQ(conjugate_inverse(conjugate(p, g), g), p);
    }
  }
}

TEST(Pauli, GridRotationMatchesDense) {
  CliffordGate g{GateKind::GridRotation, {0, 1, 2, 3, 4, 5, 6, 7, 8}};
  const Eigen::MatrixXcd u = dense(g, 9);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const PauliString p = random_string(rng, 9);
    ASSERT_LE((conjugate(p, g).dense() - u * p.dense() * u.adjoint()).norm(), 1e-10);
  }
  EXPECT_EQ(conjugate(P("ZZIIIIIII"), g), P("ZIIZIIIII"));
}

TEST(Pauli, HadamardMapsZToX) { EXPECT_EQ(conjugate(P("Z"), CliffordGate{GateKind::H, {0}}), P("X")); }

TEST(Pauli, CnotConjugationRules) {
  const CliffordGate cx{GateKind::CNOT, {0, 1}};
  EXPECT_EQ(conjugate(P("IX"), cx), P("IX"));
  EXPECT_EQ(conjugate(P("IZ"), cx), P("ZZ"));
}

TEST(Pauli, TransversalCnotSpreadsTargetGauge) {
  // Two columns of a control block (qubits 0, 1) and a target block (2, 3).
  const std::size_t n = 4;
  const std::vector<CliffordGate> step = {{GateKind::CNOT, {0, 2}}, {GateKind::CNOT, {1, 3}}};
  PauliString p = P("IIZZ");
  Eigen::MatrixXcd m = p.dense();
  for (const auto& g : step) {
    p = conjugate(p, g);
    const Eigen::MatrixXcd u = dense(g, n);
    m = u * m * u.adjoint();
  }
  EXPECT_EQ(p, P("ZZZZ"));
  EXPECT_LE((p.dense() - m).norm(), 1e-12);
}

TEST(Pauli, UnknownGateKindThrows) { EXPECT_THROW(gate_kind_from_string("SWAP"), std::invalid_argument); }

TEST(Operator, ProductMatchesDense) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int k = 0; k < 20; ++k) {
    Operator a(3), b(3);
    for (int t = 0; t < 4; ++t) {
      a.add_term(random_string(rng, 3), cplx(g(rng), g(rng)));
      b.add_term(random_string(rng, 3), cplx(g(rng), g(rng)));
    }
    ASSERT_LE(((a * b).dense() - a.dense() * b.dense()).norm(), 1e-10);
    ASSERT_LE((a.adjoint().dense() - a.dense().adjoint()).norm(), 1e-12);
    ASSERT_LE((b.conjugated_by(a).dense() - a.dense() * b.dense() * a.dense().adjoint()).norm(), 1e-10);
  }
}

TEST(Operator, CnotOperatorAndNamedGates) {
  const CliffordGate cx{GateKind::CNOT, {1, 0}};
  EXPECT_LE((cnot_operator(2, 1, 0).dense() - dense(cx, 2)).norm(), 1e-12);
  EXPECT_LE((named_gate(1, "W", 0).dense() - dense(CliffordGate{GateKind::H, {0}}, 1)).norm(), 1e-12);
  const Operator t = named_gate(1, "T", 0);
  EXPECT_LE(((t * t).dense() - named_gate(1, "P", 0).dense()).norm(), 1e-12);
}

TEST(Operator, AsPauliRecognisesUnitTerms) {
  EXPECT_EQ(Operator(P("-XZ")).as_pauli(), P("-XZ"));
  EXPECT_FALSE(Operator::projector(2, 0, 0).is_pauli());
}

TEST(SymplecticBasis, DecomposesProducts) {
  const std::vector<PauliString> gens = {P("XXI"), P("IZZ"), P("ZIZ")};
  SymplecticBasis b(gens);
  EXPECT_EQ(b.rank(), 3u);
  const PauliString target = mul(gens[0], gens[2]);
  auto idx = b.decompose(target);
  ASSERT_TRUE(idx.has_value());
  EXPECT_TRUE(product(gens, *idx, 3).same_up_to_phase(target));
  EXPECT_FALSE(b.contains(P("XII")));
}

TEST(SymplecticBasis, ResidueIsLinearAndVanishesOnMembers) {
  const std::vector<PauliString> gens = {P("XXII"), P("IZZI"), P("ZIZZ")};
  SymplecticBasis b(gens);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    PauliString a(4), c(4);
    for (std::size_t q = 0; q < 4; ++q) {
      a = a.with_factor(q, "IXYZ"[rng() % 4]);
      c = c.with_factor(q, "IXYZ"[rng() % 4]);
    }
    const auto ra = b.residue(a), rc = b.residue(c), rac = b.residue(mul(a, c));
    EXPECT_EQ(rac.first, ra.first ^ rc.first);
    EXPECT_EQ(rac.second, ra.second ^ rc.second);
    EXPECT_EQ(ra == std::make_pair(std::uint64_t{0}, std::uint64_t{0}), b.contains(a));
  }
}

}  // namespace
}  // namespace hqc
