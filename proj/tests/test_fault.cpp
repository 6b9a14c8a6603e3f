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

#include "hqc/compile.hpp"
#include "hqc/fault.hpp"

namespace hqc {
namespace {

CompileOptions bump17() { return CompileOptions{EnvelopeKind::Bump, 17, 1}; }

struct XGateFixture {
  BaconShorContext ctx = bacon_shor_context(1);
  Schedule schedule;
  XGateFixture() { schedule = compile_single_qubit("X", ctx.state, bs_index(1, 1), bump17()); }
};

TEST(ErrorEvent, ParsesShellSyntax) {
  const ErrorEvent e = parse_error_event("Z@t:9,0.5");
  EXPECT_EQ(e.pauli, 'Z');
  EXPECT_EQ(e.qubit, 9u);
  EXPECT_DOUBLE_EQ(e.fraction, 0.5);
  EXPECT_EQ(parse_error_event(to_string(e)).qubit, 9u);
}

TEST(ErrorEvent, RejectsMalformedSpecs) {
  for (const char* bad : {"Z@9,0.5", "Q@t:1,0.5", "Z@t:x,0.5", "Z@t:1,1.5", "Z@t:1", "Z@t:1,0.5x", ""})
    EXPECT_THROW(parse_error_event(bad), std::invalid_argument) << bad;
}

TEST(PartialIdeal, EndpointsMatchFullSegmentAndIdentity) {
  XGateFixture f;
  for (const auto& seg : f.schedule.segments) {
    EXPECT_TRUE(partial_ideal_unitary(seg, 0).approx_equal(seg.ideal_unitary(), 1e-12));
    EXPECT_TRUE(partial_ideal_unitary(seg, seg.envelope.T).approx_equal(Operator::identity(seg.n()), 1e-12));
  }
}

TEST(PartialIdeal, ComposesAcrossASplit) {
  // U(t -> T) * U(0 -> t) equals the full ideal segment up to a phase on each eigenspace.
  XGateFixture f;
  const Segment& seg = f.schedule.segments[0];
  const Operator tail = partial_ideal_unitary(seg, 0.3 * seg.envelope.T);
  const Operator full = seg.ideal_unitary();
  const Operator head = (tail.adjoint() * full).pruned();
  EXPECT_TRUE((head * head.adjoint()).pruned(1e-12).approx_equal(Operator::identity(seg.n()), 1e-12));
}

TEST(FaultHarness, NoErrorPasses) {
  XGateFixture f;
  FaultHarness h(f.schedule, f.ctx.blocks);
  const InjectResult r = h.inject({'I', 0, 0.5}, h.initial_state(3), 3);
  EXPECT_TRUE(r.pass);
  EXPECT_GE(r.logical_fidelity, 1 - 1e-4);
  EXPECT_EQ(r.residual_weight[0], 0u);
  for (int b : r.syndromes[0].bits) EXPECT_EQ(b, 0);
}

TEST(FaultHarness, SpectatorZErrorMidXGateIsCorrectable) {
  XGateFixture f;
  FaultHarness h(f.schedule, f.ctx.blocks);
  const InjectResult r = h.inject({'Z', bs_index(1, 2), 0.5}, h.initial_state(7), 7);
  EXPECT_TRUE(r.consistent);
  EXPECT_EQ(r.residual_weight[0], 1u);
  EXPECT_GE(r.logical_fidelity, 1 - 1e-3);
  EXPECT_TRUE(r.pass);
}

TEST(FaultHarness, XErrorOnCnotTargetStaysWithinOneErrorPerBlock) {
  auto ctx = bacon_shor_context(2);
  const Schedule s = compile_transversal_cnot(ctx.state, 0, 9, bump17());
  FaultHarness h(s, ctx.blocks);
  const InjectResult r = h.inject(parse_error_event("X@t:9,0.5"), h.initial_state(7), 7);
  ASSERT_EQ(r.residual_weight.size(), 2u);
  EXPECT_LE(r.residual_weight[0], 1u);
  EXPECT_LE(r.residual_weight[1], 1u);
  EXPECT_GE(r.logical_fidelity, 1 - 1e-3);
  EXPECT_TRUE(r.pass);
}

TEST(FaultHarness, SweepOverXGatePasses) {
  XGateFixture f;
  FaultHarness h(f.schedule, f.ctx.blocks);
  const auto results = h.sweep({0.1, 0.3, 0.5, 0.7, 0.9}, 11);
  EXPECT_EQ(results.size(), 5u * 9u * 3u);
  for (const auto& r : results) EXPECT_TRUE(r.pass) << to_string(r.event);
}

TEST(FaultHarness, DeterministicGivenSeed) {
  XGateFixture f;
  FaultHarness h(f.schedule, f.ctx.blocks);
  const ErrorEvent e{'Y', 4, 0.3};
  const InjectResult a = h.inject(e, h.initial_state(5), 5), b = h.inject(e, h.initial_state(5), 5);
  EXPECT_EQ(a.logical_fidelity, b.logical_fidelity);
  EXPECT_EQ(a.syndromes, b.syndromes);
}

TEST(FaultHarness, LogicalActionIsGaugeIndependent) {
  // Twenty random gauge states: the logical output must match X applied to the
  // logical input within ten times the adiabatic infidelity of the gate.
  XGateFixture f;
  FaultHarness h(f.schedule, f.ctx.blocks);
  const HolonomyReport rep = run_holonomy(f.schedule);
  const Eigen::Matrix2cd x = gate_matrix("X");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const StateVector in = h.initial_state(seed);
    const Eigen::MatrixXcd rho_in = h.logical_state(in), rho_out = h.logical_state(h.reference(in));
    const Eigen::MatrixXcd expected = x * rho_in * x.adjoint();
    const double f_out = (expected * rho_out).trace().real();  // pure states
    EXPECT_GE(f_out, 1 - 10 * std::max(rep.infidelity(), 1e-12)) << seed;
  }
}

TEST(FaultHarness, RejectsUnembeddedBlocks) {
  XGateFixture f;
  EXPECT_THROW(FaultHarness(f.schedule, {bacon_shor().embed(18, 9)}), DimensionError);
  FaultHarness h(f.schedule, f.ctx.blocks);
  EXPECT_THROW(h.inject({'X', 40, 0.5}, h.initial_state(0), 0), std::out_of_range);
}

}  // namespace
}  // namespace hqc
