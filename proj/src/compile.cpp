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

#include "hqc/compile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace hqc {
namespace {

using std::numbers::pi;

const Bloch kMZ{0, 0, -1}, kPZ{0, 0, 1}, kMX{-1, 0, 0}, kPX{1, 0, 0}, kMY{0, -1, 0}, kPY{0, 1, 0};

std::string canonical(const std::string& g) {
  if (g == "H") return "W";
  if (g == "P^dagger" || g == "Pdag") return "Pdg";
  if (g == "T^dagger" || g == "Tdag") return "Tdg";
  return g;
}

std::vector<Bloch> reversed_loop(std::vector<Bloch> loop) {
  std::reverse(loop.begin(), loop.end());
  if (loop.front()[2] > 0)
    for (auto& w : loop)
      for (auto& c : w) c = -c;
  return loop;
}

Operator bloch_op(std::size_t n, std::size_t q, const Bloch& w) { return Operator::bloch(n, q, w[0], w[1], w[2]); }

// Bloch rotation induced by conjugation with a 2x2 unitary.
std::array<Bloch, 3> bloch_rotation(const Eigen::Matrix2cd& c) {
  const Eigen::Matrix2cd s[3] = {gate_matrix("X"), gate_matrix("Y"), gate_matrix("Z")};
  std::array<Bloch, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = 0.5 * (s[i] * c * s[j] * c.adjoint()).trace().real();
  return r;
}

Bloch rotate(const std::array<Bloch, 3>& r, const Bloch& w) {
  Bloch out{};
  for (int i = 0; i < 3; ++i) out[i] = r[i][0] * w[0] + r[i][1] * w[1] + r[i][2] * w[2];
  return out;
}

// Clifford C with C Z C^dagger equal to the given factor.
Eigen::Matrix2cd frame_for(char factor) {
  if (factor == 'Z') return gate_matrix("I");
  if (factor == 'X') return gate_matrix("W");
  if (factor == 'Y') return gate_matrix("P") * gate_matrix("W");
  throw std::invalid_argument("factor must be X, Y or Z");
}

// Loop for `gate` starting at -factor, or nullopt when the rotated gate has no loop.
std::optional<std::vector<Bloch>> rotated_loop(const std::string& gate, char factor) {
  const Eigen::Matrix2cd c = frame_for(factor);
  const Eigen::Matrix2cd v = c.adjoint() * gate_matrix(gate) * c;
  for (const auto& name : loop_gates()) {
    if (std::abs(std::abs((gate_matrix(name).adjoint() * v).trace()) - 2.0) < 1e-9) {
      const auto r = bloch_rotation(c);
      std::vector<Bloch> loop;
      for (const auto& w : gate_loop(name)) loop.push_back(rotate(r, w));
      return loop;
    }
  }
  return std::nullopt;
}

Operator plain_transport(const std::vector<Segment>& segs, std::size_t n) {
  Operator g = Operator::identity(n);
  for (const auto& s : segs) g = (s.transport() * g).pruned();
  return g;
}

struct Choice {
  PauliString element;
  char factor;
};

// Minimal-weight element over candidate factors on `qubit`, ties in the given order.
std::optional<Choice> choose_element(const GroupState& gs, std::vector<FactorConstraint> extra, std::size_t qubit,
                                     const std::string& order, const std::function<bool(char)>& usable) {
  std::optional<Choice> best;
  for (char f : order) {
    if (usable && !usable(f)) continue;
    auto cons = extra;
    cons.push_back({qubit, f});
    try {
      PauliString e = find_starting_element(gs, cons);
      if (!best || e.weight() < best->element.weight()) best = Choice{e, f};
    } catch (const NotFoundError&) {
    }
  }
  return best;
}

Schedule empty_schedule(const GroupState& gs, std::string gate, std::vector<std::size_t> qubits) {
  Schedule s;
  s.n = gs.n();
  s.gate = std::move(gate);
  s.qubits = std::move(qubits);
  s.context = gs;
  s.target = Operator::identity(gs.n());
  return s;
}

}  // namespace

Eigen::Matrix2cd theta_hamiltonian(double theta, int sign) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  return s * (std::cos(theta) * gate_matrix("X") + std::sin(theta) * gate_matrix("Y"));
}

std::vector<std::string> loop_gates() { return {"X", "Y", "Z", "P", "Pdg", "W", "T", "Tdg"}; }

std::vector<Bloch> gate_loop(const std::string& gate_in) {
  const std::string gate = canonical(gate_in);
  const double r = 1.0 / std::sqrt(2.0);
  if (gate == "X") return {kMZ, kMY, kPZ};
  if (gate == "Z") return {kMZ, kMX, kPZ, kPY, kMZ};
  if (gate == "Y") return {kMZ, kMY, kPZ, kPX, kMZ, kMY, kPZ};
  if (gate == "P") return {kMZ, {-r, -r, 0}, kPZ, kPY, kMZ};
  if (gate == "W") return {kMZ, kMX, kPZ, kPY, kMZ, kMX};
  if (gate == "T") {
    return {kMZ, kMX, kPZ, kPY, kMZ, kMY, kPZ, {-std::cos(pi / 8), -std::sin(pi / 8), 0}, kMZ};
  }
  if (gate == "Pdg") return reversed_loop(gate_loop("P"));
  if (gate == "Tdg") return reversed_loop(gate_loop("T"));
  throw std::invalid_argument("no loop for gate '" + gate_in + "'");
}

std::vector<Segment> loop_segments(const std::vector<Bloch>& loop, std::size_t qubit, const Operator& gtilde,
                                   const CompileOptions& opt, const std::string& label) {
  std::vector<Segment> out;
  const std::size_t n = gtilde.n();
  for (std::size_t k = 0; k + 1 < loop.size(); ++k) {
    out.push_back(make_segment((bloch_op(n, qubit, loop[k]) * gtilde).pruned(),
                               (bloch_op(n, qubit, loop[k + 1]) * gtilde).pruned(), opt.make_envelope(),
                               label + "[" + std::to_string(k) + "]"));
  }
  return out;
}

Schedule compile_single_qubit(const std::string& gate_in, GroupState& gs, std::size_t qubit,
                              const CompileOptions& opt) {
  const std::string gate = canonical(gate_in);
  const auto choice = choose_element(gs, {}, qubit, "ZXY", [&](char f) { return rotated_loop(gate, f).has_value(); });
  if (!choice) throw NotFoundError("no starting element for " + gate + " on qubit " + std::to_string(qubit));
  Schedule s = empty_schedule(gs, gate, {qubit});
  const Operator gtilde(choice->element.with_factor(qubit, 'I'));
  s.segments = loop_segments(*rotated_loop(gate, choice->factor), qubit, gtilde, opt, gate);
  s.target = named_gate(gs.n(), gate, qubit);
  s.metadata["element"] = choice->element.str();
  s.metadata["form"] = std::string("direct-") + choice->factor;
  gs.apply(s.target, gate + " " + std::to_string(qubit));
  return s;
}

Schedule compile_single_qubit_sandwich(const std::string& gate_in, GroupState& gs, std::size_t qubit,
                                       std::size_t anchor, const CompileOptions& opt) {
  const std::string gate = canonical(gate_in);
  const std::size_t n = gs.n();
  const auto choice = choose_element(gs, {{qubit, 'I'}}, anchor, "XZY", {});
  if (!choice) throw NotFoundError("no trivial-action element for qubit " + std::to_string(qubit));
  const PauliString& e = choice->element;
  const char partner = choice->factor == 'X' ? 'Z' : (choice->factor == 'Z' ? 'X' : 'Z');
  const PauliString tilde = e.with_factor(anchor, partner);  // Q_anchor G
  const Operator tilde_op(tilde);
  Schedule s = empty_schedule(gs, gate, {qubit});
  const auto loop = gate_loop(gate);
  s.segments.push_back(make_segment(Operator(-e), bloch_op(n, qubit, loop.front()) * tilde_op, opt.make_envelope(),
                                    "enter"));
  for (auto& seg : loop_segments(loop, qubit, tilde_op, opt, gate)) s.segments.push_back(std::move(seg));
  s.segments.push_back(make_segment((bloch_op(n, qubit, loop.back()) * tilde_op).pruned(), Operator(-e),
                                    opt.make_envelope(), "exit"));
  s.target = named_gate(n, gate, qubit);
  s.metadata["element"] = e.str();
  s.metadata["form"] = "sandwich";
  gs.apply(s.target, gate + " " + std::to_string(qubit));
  return s;
}

std::string to_string(CnotForm f) {
  switch (f) {
    case CnotForm::Auto: return "auto";
    case CnotForm::ZForward: return "z-forward";
    case CnotForm::ZBackward: return "z-backward";
    case CnotForm::XForm: return "x-form";
  }
  return "?";
}

Schedule compile_cnot(GroupState& gs, std::size_t c, std::size_t t, const CompileOptions& opt, CnotForm form,
                      SingleQubitCompiler phase_compiler) {
  const std::size_t n = gs.n();
  if (!phase_compiler) {
    phase_compiler = [opt](GroupState& g, const std::string& gate, std::size_t q) {
      return compile_single_qubit(gate, g, q, opt);
    };
  }
  struct Candidate {
    CnotForm form;
    PauliString element;
    std::size_t weight;
  };
  std::vector<Candidate> cands;
  auto consider = [&](CnotForm f, std::vector<FactorConstraint> cons, std::size_t extra_weight) {
    if (form != CnotForm::Auto && form != f) return;
    try {
      PauliString e = find_starting_element(gs, cons);
      cands.push_back({f, e, e.weight() + extra_weight});
    } catch (const NotFoundError&) {
    }
  };
  consider(CnotForm::ZForward, {{t, 'Z'}, {c, 'I'}}, 1);
  consider(CnotForm::XForm, {{t, 'X'}, {c, 'I'}}, 1);
  consider(CnotForm::ZBackward, {{c, 'Z'}, {t, 'Z'}}, 0);
  if (cands.empty()) throw NotFoundError("no starting element for CNOT " + std::to_string(c) + "->" + std::to_string(t));
  const Candidate best = *std::min_element(cands.begin(), cands.end(),
                                           [](const Candidate& a, const Candidate& b) { return a.weight < b.weight; });

  Schedule s = empty_schedule(gs, "CNOT", {c, t});
  s.target = cnot_operator(n, c, t);
  s.metadata["element"] = best.element.str();
  s.metadata["form"] = to_string(best.form);

  const Operator p0 = Operator::projector(n, c, 0), p1 = Operator::projector(n, c, 1);
  const Envelope env = opt.make_envelope();
  auto on_t = [&](const PauliString& gt, char f, int sign) {
    return Operator(gt.with_factor(t, f)) * cplx(sign);
  };
  auto branch = [&](const Operator& proj, int bit, const Operator& a, const Operator& b) {
    return Branch{proj, a, b, false, static_cast<int>(c), bit};
  };

  if (best.form == CnotForm::ZForward || best.form == CnotForm::XForm) {
    append(s, phase_compiler(gs, "Pdg", c));
    const PauliString gt = best.element.with_factor(t, 'I');
    std::vector<Segment> segs;
    if (best.form == CnotForm::ZForward) {
      segs.push_back(make_segment(on_t(gt, 'Z', -1), on_t(gt, 'Y', -1), env, "V+"));
      Segment b;
      b.envelope = env;
      b.label = "branch";
      b.branches = {branch(p0, 0, on_t(gt, 'Y', -1), on_t(gt, 'Z', -1)),
                    branch(p1, 1, on_t(gt, 'Y', -1), on_t(gt, 'Z', 1))};
      segs.push_back(b);
    } else {
      segs.push_back(make_segment(on_t(gt, 'X', -1), on_t(gt, 'Z', -1), env, "x0"));
      segs.push_back(make_segment(on_t(gt, 'Z', -1), on_t(gt, 'X', 1), env, "x1"));
      Segment b1, b2;
      b1.envelope = b2.envelope = env;
      b1.label = "branch0";
      b2.label = "branch1";
      b1.branches = {branch(p0, 0, on_t(gt, 'X', 1), on_t(gt, 'Z', -1)),
                     branch(p1, 1, on_t(gt, 'X', 1), on_t(gt, 'Y', -1))};
      b2.branches = {branch(p0, 0, on_t(gt, 'Z', -1), on_t(gt, 'X', -1)),
                     branch(p1, 1, on_t(gt, 'Y', -1), on_t(gt, 'X', -1))};
      segs.push_back(b1);
      segs.push_back(b2);
    }
    segs.front().restart = true;
    s.segments.insert(s.segments.end(), segs.begin(), segs.end());
    gs.apply((s.target * named_gate(n, "P", c)).pruned(), "CNOT-core " + std::to_string(c) + " " + std::to_string(t));
  } else {
    const PauliString gt = best.element.with_factor(c, 'I').with_factor(t, 'I');
    Segment b;
    b.envelope = env;
    b.label = "branch-reverse";
    b.direction = Direction::Reverse;
    b.branches = {branch(p0, 0, on_t(gt, 'Y', -1), on_t(gt, 'Z', -1)),
                  branch(p1, 1, on_t(gt, 'Y', -1), on_t(gt, 'Z', 1))};
    b.restart = true;
    Segment v = make_segment(on_t(gt, 'Z', -1), on_t(gt, 'Y', -1), env, "V+reverse");
    v.direction = Direction::Reverse;
    s.segments.push_back(b);
    s.segments.push_back(v);
    gs.apply((named_gate(n, "Pdg", c) * s.target).pruned(), "CNOT-core " + std::to_string(c) + " " + std::to_string(t));
    append(s, phase_compiler(gs, "P", c));
  }
  return s;
}

Schedule compile_conditional_clifford(const std::vector<std::string>& ops, GroupState& gs, std::size_t cat,
                                      const std::vector<std::size_t>& targets, const CompileOptions& opt) {
  const std::size_t n = gs.n();
  std::string name = "C";
  for (const auto& o : ops) name += "-" + canonical(o);
  std::vector<std::size_t> qs{cat};
  qs.insert(qs.end(), targets.begin(), targets.end());
  Schedule s = empty_schedule(gs, name, qs);
  const Operator p0 = Operator::projector(n, cat, 0), p1 = Operator::projector(n, cat, 1);
  Operator total = Operator::identity(n);
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    const std::size_t t = targets[ti];
    const auto choice = choose_element(gs, {{cat, 'I'}}, t, "ZXY", {});
    if (!choice) throw NotFoundError("no starting element for conditional gate on " + std::to_string(t));
    const PauliString g = choice->element;
    Operator u1 = Operator::identity(n);
    const std::size_t first = s.segments.size();
    for (const auto& op_in : ops) {
      const std::string op = canonical(op_in);
      const auto e1 = Operator(g).conjugated_by(u1).as_pauli(1e-10);
      if (!e1) throw std::runtime_error("conditional branch element left the Pauli group");
      const char f1 = e1->factor(t);
      const auto loop = rotated_loop(op, f1);
      if (!loop) throw NotFoundError("no rotated loop for " + op);
      const Operator gt1(e1->with_factor(t, 'I'));
      const auto plain = loop_segments(*loop, t, gt1, opt, op);
      for (const auto& ps : plain) {
        Segment seg;
        seg.envelope = ps.envelope;
        seg.label = "cond-" + ps.label;
        seg.branches = {Branch{p0, Operator(-g), Operator(-g), true, static_cast<int>(cat), 0},
                        Branch{p1, ps.branches[0].start, ps.branches[0].end, false, static_cast<int>(cat), 1}};
        s.segments.push_back(seg);
      }
      u1 = (plain_transport(plain, n) * u1).pruned();
    }
    if (first < s.segments.size()) s.segments[first].restart = true;
    const Operator controlled = (p0 + p1 * u1).pruned();
    total = (controlled * total).pruned();
    gs.apply(controlled, name + " " + std::to_string(t));
  }
  s.target = total;
  return s;
}

Schedule compile_cat_prep(std::size_t m, const std::vector<int>& outcomes, const CompileOptions& opt) {
  if (m < 2) throw std::invalid_argument("cat state needs at least two qubits");
  if (!outcomes.empty() && outcomes.size() != m) throw std::invalid_argument("one outcome per qubit required");
  std::vector<Operator> stab;
  for (std::size_t q = 0; q < m; ++q) {
    const int o = outcomes.empty() ? 0 : outcomes[q];
    stab.emplace_back(o ? -PauliString::single(m, q, 'Z') : PauliString::single(m, q, 'Z'));
  }
  GroupState gs(m, stab, {});
  std::vector<std::size_t> qs(m);
  for (std::size_t q = 0; q < m; ++q) qs[q] = q;
  Schedule s = empty_schedule(gs, "cat-prep", qs);
  s.code = "cat";
  const Envelope env = opt.make_envelope();
  for (std::size_t q = 0; q < m; ++q) {
    const int o = outcomes.empty() ? 0 : outcomes[q];
    const PauliString z = PauliString::single(m, q, 'Z');
    Segment seg = make_segment(Operator(o ? z : -z), Operator(-PauliString::single(m, q, 'X')), env,
                               "prep" + std::to_string(q));
    seg.restart = true;
    s.segments.push_back(seg);
  }
  for (std::size_t j = 1; j < m; ++j) {
    const PauliString zz = PauliString::single(m, 0, 'Z').with_factor(j, 'Z');
    Segment seg = make_segment(Operator(-PauliString::single(m, j, 'X')), Operator(-zz), env, "pair" + std::to_string(j));
    seg.restart = true;
    s.segments.push_back(seg);
  }
  return s;
}

std::vector<std::string> toffoli_sequence() {
  return {"T1",   "W1",   "P2",   "W2", "CX21", "W2", "Tdg2", "W2",   "CX21", "W2",
          "Tdg2", "W2",   "W3",   "T3", "W3",   "CX31", "W3", "Tdg3", "W3",   "CX32",
          "W3",   "T3",   "W3",   "CX31", "W1", "W3",   "Tdg3", "W3", "CX32", "W2"};
}

Schedule compile_toffoli_conditional(GroupState& gs, std::size_t q1, std::size_t q2, std::size_t q3,
                                     const CompileOptions& opt) {
  const std::size_t n = gs.n();
  const std::size_t idx[4] = {0, q1, q2, q3};
  Schedule s = empty_schedule(gs, "Toffoli", {q1, q2, q3});
  auto single = [&, q1](GroupState& g, const std::string& gate, std::size_t q) {
    return q == q1 ? compile_single_qubit(gate, g, q, opt) : compile_single_qubit_sandwich(gate, g, q, q1, opt);
  };
  for (const auto& tok : toffoli_sequence()) {
    if (tok.starts_with("CX")) {
      const std::size_t c = idx[tok[2] - '0'], t = idx[tok[3] - '0'];
      append(s, compile_cnot(gs, c, t, opt, CnotForm::Auto, single));
    } else {
      const std::string gate = tok.substr(0, tok.size() - 1);
      append(s, single(gs, gate, idx[tok.back() - '0']));
    }
  }
  const Operator ctrl = (Operator::projector(n, q1, 1) * Operator::projector(n, q2, 1)).pruned();
  s.target = (Operator::identity(n) + ctrl * (Operator(PauliString::single(n, q3, 'X')) - Operator::identity(n))).pruned();
  s.gate = "Toffoli";
  s.qubits = {q1, q2, q3};
  return s;
}

Schedule compile_transversal_cnot(GroupState& gs, std::size_t co, std::size_t to, const CompileOptions& opt) {
  Schedule s = empty_schedule(gs, "transversal-CNOT", {});
  Operator target = Operator::identity(gs.n());
  for (std::size_t k = 0; k < 9; ++k) {
    Schedule c = compile_cnot(gs, co + k, to + k, opt);
    target = (c.target * target).pruned();
    append(s, c);
    s.qubits.push_back(co + k);
    s.qubits.push_back(to + k);
  }
  s.target = target;
  s.code = "bacon-shor";
  return s;
}

Schedule compile_transversal_toffoli(GroupState& gs, std::size_t cat, std::size_t a, std::size_t b,
                                     const CompileOptions& opt) {
  Schedule s = empty_schedule(gs, "transversal-Toffoli", {});
  for (std::size_t k = 0; k < 9; ++k) {
    append(s, compile_toffoli_conditional(gs, cat + k, a + k, b + k, opt));
    s.qubits.insert(s.qubits.end(), {cat + k, a + k, b + k});
  }
  // The product of nine Toffolis is not tracked as an operator here.
  s.target = Operator::identity(gs.n());
  s.metadata["target"] = "untracked";
  s.code = "bacon-shor";
  return s;
}

BaconShorContext bacon_shor_context(std::size_t blocks, std::size_t cat_size) {
  BaconShorContext ctx;
  ctx.n = 9 * blocks + cat_size;
  ctx.cat_offset = 9 * blocks;
  ctx.cat_size = cat_size;
  std::vector<SubsystemCode> codes;
  for (std::size_t b = 0; b < blocks; ++b) {
    ctx.blocks.push_back(bacon_shor().embed(ctx.n, 9 * b));
    codes.push_back(ctx.blocks.back());
  }
  if (cat_size > 0) codes.push_back(cat_code(cat_size).embed(ctx.n, ctx.cat_offset));
  ctx.state = GroupState::from_codes(ctx.n, codes);
  return ctx;
}

Schedule compile_gate(const std::string& gate, GroupState& gs, const std::vector<std::size_t>& qubits,
                      const CompileOptions& opt) {
  if (gate == "CNOT" || gate == "cnot" || gate == "CX") {
    if (qubits.size() != 2) throw std::invalid_argument("CNOT needs two qubits");
    return compile_cnot(gs, qubits[0], qubits[1], opt);
  }
  if (qubits.size() != 1) throw std::invalid_argument("single-qubit gate needs one qubit");
  return compile_single_qubit(gate, gs, qubits[0], opt);
}

}  // namespace hqc
