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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hqc/analysis.hpp"
#include "hqc/compile.hpp"
#include "hqc/engine.hpp"
#include "hqc/fault.hpp"
#include "hqc/lemma1.hpp"

namespace hqc {
namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back((ok ? "  ok   " : "  FAIL ") + what);
  }
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string sci(double x) { return fmt("%.3e", x); }

struct GateCase {
  std::string name;
  std::function<Schedule(const CompileOptions&)> compile;
};

std::vector<GateCase> gate_cases() {
  std::vector<GateCase> out;
  for (const char* g : {"X", "Z", "P", "W", "T"}) {
    out.push_back({g, [g](const CompileOptions& o) {
                     auto ctx = bacon_shor_context(1);
                     return compile_single_qubit(g, ctx.state, bs_index(1, 1), o);
                   }});
  }
  out.push_back({"CNOT", [](const CompileOptions& o) {
                   auto ctx = bacon_shor_context(2);
                   return compile_cnot(ctx.state, bs_index(1, 1), 9 + bs_index(1, 1), o);
                 }});
  return out;
}

std::size_t operator_weight(const Segment& seg) {
  std::size_t w = 0;
  for (const auto& b : seg.branches) {
    std::uint64_t m = b.start.support_mask() | b.end.support_mask();
    if (b.control >= 0) m |= std::uint64_t{1} << b.control;
    w = std::max<std::size_t>(w, std::popcount(m));
  }
  return w;
}

std::size_t max_weight(const Schedule& s) {
  std::size_t w = 0;
  for (const auto& seg : s.segments) w = std::max(w, operator_weight(seg));
  return w;
}

Outcome closed_form_identity() {
  Outcome o;
  for (double eps : {0.5, 0.1, 0.02}) {
    const double ode = 1 - two_level_ode(EnvelopeKind::Linear, 1 / eps).leakage;
    const double exact = ground_fidelity_closed_form(eps);
    o.check(std::abs(ode - exact) <= 1e-8, "eps " + fmt("%g", eps) + ": |ode - closed form| = " + sci(std::abs(ode - exact)));
  }
  return o;
}

Outcome slowdown_rule() {
  Outcome o;
  const double s = required_slowdown(1e-4);
  o.check(s >= 69 && s <= 72, "required_slowdown(1e-4) = " + fmt("%.6f", s));
  const double avg = averaged_leakage(EnvelopeKind::Linear, 70);
  o.check(avg >= 0.5e-4 && avg <= 2e-4, "averaged ODE infidelity at 70 = " + sci(avg));
  return o;
}

Outcome bump_schedule() {
  Outcome o;
  const TwoLevelResult r = two_level_ode(EnvelopeKind::Bump, 17);
  auto in_band = [](double x) { return x >= 1e-7 && x <= 1e-5; };
  const bool leak = in_band(r.leakage), gate = in_band(r.gate_infidelity);
  o.notes.push_back("  leakage 1-|<g|psi>|^2 = " + sci(r.leakage) + (leak ? " (in band)" : " (outside band)"));
  o.notes.push_back("  gate infidelity 1-|<g|psi>| = " + sci(r.gate_infidelity) + (gate ? " (in band)" : " (outside band)"));
  o.check(leak || gate, std::string("band [1e-7, 1e-5] met by ") +
                            (leak && gate ? "both metrics" : leak ? "leakage" : gate ? "gate infidelity" : "neither"));
  return o;
}

Outcome super_polynomial_onset() {
  Outcome o;
  const double s15 = loglog_slope(EnvelopeKind::Bump, 15), s30 = loglog_slope(EnvelopeKind::Bump, 30);
  o.check(std::abs(s30) > std::abs(s15), "smoothed log-log slope at 15 = " + fmt("%.3f", s15) + ", at 30 = " + fmt("%.3f", s30));
  return o;
}

struct GateRuns {
  std::string name;
  double oracle = 0;
  HolonomyReport linear, bump;
};

std::vector<GateRuns> gate_runs;

Outcome gate_correctness() {
  Outcome o;
  for (const auto& g : gate_cases()) {
    GateRuns r;
    r.name = g.name;
    const Schedule base = g.compile({});
    r.oracle = oracle_residual(base, parallel_transport_oracle(base).unitary);
    r.linear = run_holonomy(g.compile({EnvelopeKind::Linear, 70, 1}));
    r.bump = run_holonomy(g.compile({EnvelopeKind::Bump, 17, 1}));
    o.check(r.oracle <= 1e-8, g.name + " oracle residual " + sci(r.oracle));
    o.check(r.linear.infidelity() <= 1e-4, g.name + " linear 70 infidelity " + sci(r.linear.infidelity()) +
                                               " (stage-fitted " + sci(r.linear.stage_fitted_infidelity) + ")");
    o.check(r.bump.infidelity() <= 1e-5, g.name + " bump 17 infidelity " + sci(r.bump.infidelity()) +
                                             " (stage-fitted " + sci(r.bump.stage_fitted_infidelity) + ")");
    gate_runs.push_back(r);
  }
  return o;
}

Outcome factorization() {
  Outcome o;
  for (const auto& r : gate_runs) {
    for (const auto* rep : {&r.linear, &r.bump}) {
      const double inf = rep->infidelity(), res = rep->factorization_residual;
      o.check(res <= 10 * inf, r.name + " " + rep->envelope + " residual " + sci(res) + " vs 10 x infidelity " + sci(10 * inf));
    }
  }
  return o;
}

Outcome fault_sweep() {
  Outcome o;
  const CompileOptions opt{EnvelopeKind::Bump, 17, 1};
  const std::vector<double> fractions{0.1, 0.3, 0.5, 0.7, 0.9};
  auto run = [&](const std::string& name, const Schedule& s, const std::vector<SubsystemCode>& blocks) {
    FaultHarness h(s, blocks);
    const auto results = h.sweep(fractions, 7);
    std::size_t fails = 0, max_res = 0;
    double min_fid = 1;
    bool decoded = true;
    for (const auto& r : results) {
      fails += r.pass ? 0 : 1;
      decoded = decoded && r.consistent;
      min_fid = std::min(min_fid, r.logical_fidelity);
      for (auto w : r.residual_weight) max_res = std::max(max_res, w);
    }
    o.check(decoded && fails == 0 && min_fid >= 1 - 1e-3 && max_res <= 1,
            name + ": " + std::to_string(results.size()) + " runs, " + std::to_string(fails) + " failed, min logical fidelity " +
                fmt("%.6f", min_fid) + ", max residual weight per block " + std::to_string(max_res));
  };
  {
    auto ctx = bacon_shor_context(1);
    run("X gate", compile_single_qubit("X", ctx.state, bs_index(1, 1), opt), ctx.blocks);
  }
  {
    auto ctx = bacon_shor_context(2);
    run("transversal CNOT", compile_transversal_cnot(ctx.state, 0, 9, opt), ctx.blocks);
  }
  return o;
}

Outcome weight_bound() {
  Outcome o;
  std::size_t single_xyz = 0, library = 0, count = 0;
  auto note = [&](const Schedule& s) {
    library = std::max(library, max_weight(s));
    ++count;
  };
  for (const auto& g : loop_gates()) {
    for (std::size_t q = 0; q < 9; ++q) {
      auto ctx = bacon_shor_context(1);
      const Schedule s = compile_single_qubit(g, ctx.state, q);
      note(s);
      if (g == "X" || g == "Y" || g == "Z") single_xyz = std::max(single_xyz, max_weight(s));
    }
  }
  for (CnotForm f : {CnotForm::Auto, CnotForm::ZForward, CnotForm::XForm}) {
    auto ctx = bacon_shor_context(2);
    note(compile_cnot(ctx.state, bs_index(1, 1), 9 + bs_index(1, 1), {}, f));
  }
  {
    // The reversed z-form is an alternative the compiler never selects.
    auto ctx = bacon_shor_context(2);
    const Schedule s = compile_cnot(ctx.state, bs_index(1, 1), 9 + bs_index(1, 1), {}, CnotForm::ZBackward);
    o.notes.push_back("  unused z-backward CNOT form: max weight " + std::to_string(max_weight(s)) + " (not part of the library)");
  }
  {
    auto ctx = bacon_shor_context(2);
    note(compile_transversal_cnot(ctx.state, 0, 9));
  }
  {
    auto ctx = bacon_shor_context(1, 3);
    note(compile_conditional_clifford({"X"}, ctx.state, ctx.cat_offset, {bs_index(1, 1)}));
  }
  note(compile_cat_prep(9));
  {
    auto ctx = bacon_shor_context(2, 9);
    const Schedule s = compile_transversal_toffoli(ctx.state, ctx.cat_offset, 0, 9);
    o.notes.push_back("  transversal Toffoli: " + std::to_string(s.segments.size()) + " segments, max weight " +
                      std::to_string(max_weight(s)));
    note(s);
  }
  o.check(library <= 3, std::to_string(count) + " schedules, max weight " + std::to_string(library));
  o.check(single_xyz <= 2, "single-qubit X/Y/Z max weight " + std::to_string(single_xyz));
  return o;
}

Outcome lemma1_demo() {
  Outcome o;
  Eigen::MatrixXcd x(2, 2), h(2, 2);
  x << 0, 1, 1, 0;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  for (const auto& [name, w1] : {std::pair<std::string, Eigen::MatrixXcd>{"X", x}, {"Hadamard", h}}) {
    for (std::size_t d2 : {2u, 3u}) {
      const Lemma1Result r = lemma1_compose(w1, d2);
      o.check(r.ground_residual <= 1e-8 && r.excited_offdiag <= 1e-8,
              name + " d2 = " + std::to_string(d2) + ": ground residual " + sci(r.ground_residual) +
                  ", excited off-diagonal " + sci(r.excited_offdiag));
    }
  }
  return o;
}

Outcome parallelism() {
  Outcome o;
  const SubsystemCode code = bacon_shor();
  const auto set = max_parallel_set(code, OpKind::SingleQubit);
  std::vector<std::size_t> targets;
  // One gate loop per target, driven from its assigned element.
  std::vector<Schedule> pairs;
  for (const auto& a : set) {
    for (std::size_t k = 0; k < a.targets.size(); ++k) {
      targets.push_back(a.targets[k]);
      Schedule s;
      s.n = code.n;
      const Operator gtilde(a.elements[k].with_factor(a.targets[k], 'I'));
      for (const char* g : {"X", "W", "T"}) {
        auto segs = loop_segments(gate_loop(g), a.targets[k], gtilde, {}, g);
        s.segments.insert(s.segments.end(), segs.begin(), segs.end());
      }
      pairs.push_back(s);
    }
  }
  std::sort(targets.begin(), targets.end());
  const bool distinct = std::adjacent_find(targets.begin(), targets.end()) == targets.end();
  o.check(targets.size() == 6 && distinct, std::to_string(targets.size()) + " addressable qubits");
  std::size_t checks = 0;
  double worst = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      for (const auto& si : pairs[i].segments) {
        for (const auto& sj : pairs[j].segments) {
          for (double u : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            for (double v : {0.0, 0.5, 1.0}) {
              const Operator a = si.hamiltonian(u * si.envelope.T), b = sj.hamiltonian(v * sj.envelope.T);
              const Operator c = (a * b - b * a).pruned(0);
              double norm = 0;
              for (const auto& [p, z] : c.terms()) norm = std::max(norm, std::abs(z));
              worst = std::max(worst, norm);
              ++checks;
            }
          }
        }
      }
    }
  }
  o.check(worst <= 1e-12, std::to_string(checks) + " sampled commutators, max coefficient " + sci(worst));
  return o;
}

}  // namespace
}  // namespace hqc

int main() {
  using namespace hqc;
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0 when the criterion sets no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "closed-form identity", 10, closed_form_identity},
      {2, "slowdown rule", 0, slowdown_rule},
      {3, "bump schedule at slowdown 17", 30, bump_schedule},
      {4, "super-polynomial onset", 0, super_polynomial_onset},
      {5, "gate correctness", 300, gate_correctness},
      {6, "holonomy factorization", 0, factorization},
      {7, "fault-tolerance sweep", 1200, fault_sweep},
      {8, "weight bound", 1, weight_bound},
      {9, "composed transport demo", 0, lemma1_demo},
      {10, "parallelism", 0, parallelism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0) o.check(secs < c.limit_seconds, "runtime " + fmt("%.2f", secs) + " s < " + fmt("%g", c.limit_seconds) + " s");
    std::printf("criterion %d: %s  %s (%.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs);
    for (const auto& n : o.notes) std::printf("%s\n", n.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
