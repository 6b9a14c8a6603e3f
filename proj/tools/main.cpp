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

// Command-line front end: compile, evolve, scan, inject and report.
//
// Exit codes: 0 success, 1 usage or runtime error, 2 verdict failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hqc/analysis.hpp"
#include "hqc/compile.hpp"
#include "hqc/engine.hpp"
#include "hqc/fault.hpp"
#include "hqc/io.hpp"
#include "hqc/lemma1.hpp"

namespace {

using namespace hqc;

constexpr int kVerdictFailure = 2;

struct RunConfig {
  std::string gate = "X";
  std::string code = "bacon-shor";
  std::vector<std::string> qubits;
  std::string envelope = "linear";
  double slowdown = 70;
  std::string seed_text;
  std::string out;
  std::string error;
  std::string slowdowns = "5:80:16";
  double threshold = 1e-4;
  double steps_per_unit = 200;
};

bool is_cnot(const std::string& g) { return g == "cnot" || g == "CNOT" || g == "CX"; }

std::string canonical_gate(const std::string& g) {
  if (is_cnot(g)) return "CNOT";
  if (g == "H" || g == "h") return "W";
  const auto names = loop_gates();
  for (const auto& n : names) {
    std::string lower = n;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (g == n || g == lower) return n;
  }
  throw CLI::ValidationError("--gate", "unknown gate '" + g + "'");
}

std::uint64_t resolve_seed(const std::string& text) {
  std::string s = text;
  if (s.empty())
    if (const char* env = std::getenv("HOLONOMY_SEED")) s = env;
  if (s.empty()) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--seed", "seed must be a non-negative integer, got '" + s + "'");
  }
}

/// Code register for a gate: one block for single-qubit gates, two for CNOT.
struct Register {
  std::size_t n = 0;
  std::size_t block_size = 0;
  std::vector<SubsystemCode> blocks;
  GroupState state;
};

Register make_register(const std::string& code, std::size_t blocks) {
  Register r;
  if (code == "bacon-shor") {
    auto ctx = bacon_shor_context(blocks);
    r.n = ctx.n;
    r.block_size = 9;
    r.blocks = ctx.blocks;
    r.state = ctx.state;
  } else if (code == "trivial") {
    r.n = blocks;
    r.block_size = 1;
    for (std::size_t b = 0; b < blocks; ++b) r.blocks.push_back(trivial_code().embed(blocks, b));
    r.state = GroupState::from_codes(r.n, r.blocks);
  } else {
    throw CLI::ValidationError("--code", "unknown code '" + code + "' (bacon-shor, trivial)");
  }
  return r;
}

/// "r,c" addresses a grid position in block `block`; a bare integer is a register index.
std::size_t parse_qubit(const std::string& text, const Register& reg, std::size_t block) {
  std::size_t q = 0;
  try {
    std::size_t used = 0;
    if (const auto comma = text.find(','); comma != std::string::npos) {
      if (reg.block_size != 9) throw std::invalid_argument("grid address needs bacon-shor");
      const auto r = std::stoul(text.substr(0, comma), &used);
      const auto c = std::stoul(text.substr(comma + 1), &used);
      if (used != text.size() - comma - 1 || r < 1 || r > 3 || c < 1 || c > 3) throw std::invalid_argument(text);
      q = block * reg.block_size + bs_index(r, c);
    } else {
      q = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--qubit", "bad qubit address '" + text + "'");
  }
  if (q >= reg.n) throw CLI::ValidationError("--qubit", "qubit '" + text + "' outside the register");
  return q;
}

std::vector<std::size_t> gate_qubits(const RunConfig& cfg, const Register& reg, bool cnot) {
  const std::size_t want = cnot ? 2 : 1;
  std::vector<std::size_t> q;
  for (std::size_t k = 0; k < cfg.qubits.size(); ++k) q.push_back(parse_qubit(cfg.qubits[k], reg, cnot ? k : 0));
  if (q.empty()) {
    q.push_back(0);
    if (cnot) q.push_back(reg.block_size);
  }
  if (q.size() != want) throw CLI::ValidationError("--qubit", "gate needs " + std::to_string(want) + " qubit(s)");
  return q;
}

CompileOptions compile_options(const RunConfig& cfg) {
  if (!(cfg.slowdown > 0)) throw CLI::ValidationError("--slowdown", "slowdown must be positive");
  CompileOptions o;
  o.envelope = envelope_kind_from_string(cfg.envelope);
  o.slowdown = cfg.slowdown;
  return o;
}

Schedule compile_from(const RunConfig& cfg) {
  const std::string gate = canonical_gate(cfg.gate);
  const bool cnot = gate == "CNOT";
  Register reg = make_register(cfg.code, cnot ? 2 : 1);
  Schedule s = compile_gate(gate, reg.state, gate_qubits(cfg, reg, cnot), compile_options(cfg));
  s.code = cfg.code;
  return s;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + out + "' failed");
}

std::vector<double> parse_range(const std::string& text) {
  double a = 0, b = 0;
  long n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(text);
  if (!(is >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1 || !(a > 0) || b < a || !is.eof())
    throw CLI::ValidationError("--slowdowns", "expected first:last:count with 0 < first <= last, got '" + text + "'");
  std::vector<double> out;
  for (long k = 0; k < n; ++k) out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(k) / (n - 1));
  return out;
}

int cmd_gates(const RunConfig& cfg) {
  CompileOptions o;
  std::cout << "gate  segments  max_weight  element\n";
  for (const auto& g : loop_gates()) {
    Register reg = make_register(cfg.code, 1);
    const Schedule s = compile_single_qubit(g, reg.state, 0, o);
    std::cout << g << "  " << s.segments.size() << "  " << s.max_weight() << "  " << s.metadata.at("element") << "\n";
  }
  Register reg = make_register(cfg.code, 2);
  const Schedule c = compile_cnot(reg.state, 0, reg.block_size, o);
  std::cout << "CNOT  " << c.segments.size() << "  " << c.max_weight() << "  " << c.metadata.at("form") << "\n";
  return 0;
}

int cmd_run(const RunConfig& cfg) {
  const Schedule s = compile_from(cfg);
  EvolveOptions eo;
  eo.steps_per_unit = cfg.steps_per_unit;
  HolonomyReport r = run_holonomy(s, eo);
  r.seed = resolve_seed(cfg.seed_text);
  emit(cfg.out, io::to_json(r).dump(2) + "\n");
  return r.infidelity() <= cfg.threshold ? 0 : kVerdictFailure;
}

int cmd_scan(const RunConfig& cfg) {
  const Schedule s = compile_from(cfg);
  EvolveOptions eo;
  eo.steps_per_unit = cfg.steps_per_unit;
  const SlowdownCurve c = slowdown_scan(s, parse_range(cfg.slowdowns), envelope_kind_from_string(cfg.envelope), eo);
  std::ostringstream os;
  io::write_csv(os, c);
  emit(cfg.out, os.str());
  return 0;
}

int cmd_inject(const RunConfig& cfg) {
  ErrorEvent e;
  try {
    e = parse_error_event(cfg.error);
  } catch (const std::invalid_argument& ex) {
    throw CLI::ValidationError("--error", ex.what());
  }
  const std::string gate = canonical_gate(cfg.gate);
  const bool cnot = gate == "CNOT";
  if (cfg.code != "bacon-shor") throw CLI::ValidationError("--code", "fault injection needs bacon-shor blocks");
  auto ctx = bacon_shor_context(cnot ? 2 : 1);
  Register reg{ctx.n, 9, ctx.blocks, ctx.state};
  Schedule s = cnot ? compile_transversal_cnot(ctx.state, 0, 9, compile_options(cfg))
                    : compile_single_qubit(gate, ctx.state, gate_qubits(cfg, reg, false)[0], compile_options(cfg));
  if (e.qubit >= s.n) throw CLI::ValidationError("--error", "error qubit outside the register");
  const std::uint64_t seed = resolve_seed(cfg.seed_text);
  EvolveOptions eo;
  eo.steps_per_unit = cfg.steps_per_unit;
  FaultHarness h(std::move(s), ctx.blocks, FaultOptions{eo});
  const InjectResult r = h.inject(e, h.initial_state(seed), seed);
  emit(cfg.out, io::to_json(r).dump(2) + "\n");
  return r.pass ? 0 : kVerdictFailure;
}

std::string name_of(const Eigen::MatrixXcd& m) {
  for (const std::string g : {"I", "X", "Y", "Z", "W", "P", "Pdg", "T", "Tdg"}) {
    const Eigen::Matrix2cd ref = gate_matrix(g);
    if (m.rows() == 2 && std::abs(std::abs((ref.adjoint() * m).trace()) - 2.0) < 1e-8) return g;
  }
  return "unnamed";
}

int cmd_demo_lemma1(std::size_t d2, const std::string& target) {
  const std::string g = canonical_gate(target);
  if (g == "CNOT") throw CLI::ValidationError("--target", "target must be a single-qubit gate");
  const Lemma1Result r = lemma1_compose(gate_matrix(g), d2);
  std::cout << "d1 = " << r.d1 << ", d2 = " << r.d2 << "\n";
  std::cout << "ground holonomy: " << name_of(r.ground) << " (residual " << io::format_number(r.ground_residual)
            << ")\n";
  std::cout << "excited residual: " << io::format_number(r.excited_offdiag) << "\n";
  std::cout << "excited phase: " << io::format_number(r.excited_phase.real()) << " + "
            << io::format_number(r.excited_phase.imag()) << "i\n";
  if (r.degenerate) std::cout << "note: excited holonomy spectrum is degenerate\n";
  return r.ground_residual <= 1e-8 && r.excited_offdiag <= 1e-8 ? 0 : kVerdictFailure;
}

void add_gate_options(CLI::App* c, RunConfig& cfg) {
  c->add_option("--gate", cfg.gate, "Gate: X, Y, Z, P, Pdg, W (H), T, Tdg or cnot")->capture_default_str();
  c->add_option("--code", cfg.code, "Code: bacon-shor or trivial")->capture_default_str();
  c->add_option("--qubit", cfg.qubits,
                "Qubit address r,c (1-based grid; for cnot the second address is in the target block) "
                "or a register index; repeat for cnot");
  c->add_option("--envelope", cfg.envelope, "Envelope: linear or bump")
      ->check(CLI::IsMember({"linear", "bump"}))
      ->capture_default_str();
  c->add_option("--slowdown", cfg.slowdown, "Slowdown factor; each segment lasts slowdown*pi/4")
      ->capture_default_str();
  c->add_option("--steps-per-unit", cfg.steps_per_unit, "Integration steps per unit time")->capture_default_str();
  c->add_option("--out,-o", cfg.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomic quantum computation with stabilizer and subsystem codes"};
  app.footer("Exit codes: 0 success, 1 error, 2 verdict failure. --seed falls back to HOLONOMY_SEED.");
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gates = app.add_subcommand("gates", "List library gates with segment counts and weights");
  gates->add_option("--code", cfg.code, "Code: bacon-shor or trivial")->capture_default_str();

  auto* run = app.add_subcommand("run", "Compile and evolve one gate; write a holonomy report (JSON)");
  add_gate_options(run, cfg);
  run->add_option("--seed", cfg.seed_text, "Seed recorded in the report");
  run->add_option("--threshold", cfg.threshold, "Infidelity above which the verdict fails")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "Infidelity against slowdown (CSV)");
  add_gate_options(scan, cfg);
  scan->add_option("--slowdowns", cfg.slowdowns, "Range first:last:count")->capture_default_str();

  auto* inject = app.add_subcommand("inject", "Inject a Pauli fault, decode, and report a verdict (JSON); defaults to the bump envelope at slowdown 17");
  add_gate_options(inject, cfg);
  inject->add_option("--error", cfg.error, "Fault P@t:qubit,fraction, e.g. Z@t:9,0.5")->required();
  inject->add_option("--seed", cfg.seed_text, "Seed for the initial state and syndrome outcomes");

  auto* analysis = app.add_subcommand("analysis", "Closed-form and two-level adiabatic analysis");
  analysis->require_subcommand(1);
  double delta = 1e-4;
  auto* a_slow = analysis->add_subcommand("slowdown", "Slowdown needed for a target error");
  a_slow->add_option("--delta", delta, "Target cycle-averaged leakage")->capture_default_str();
  double a_s = 70;
  std::string a_env = "linear";
  auto* a_cf = analysis->add_subcommand("closed-form", "Ground-state fidelity of one linear segment");
  a_cf->add_option("--slowdown", a_s, "Slowdown factor")->capture_default_str();
  auto* a_ode = analysis->add_subcommand("ode", "Two-level integration of one segment");
  a_ode->add_option("--slowdown", a_s, "Slowdown factor")->capture_default_str();
  a_ode->add_option("--envelope", a_env, "Envelope: linear or bump")
      ->check(CLI::IsMember({"linear", "bump"}))
      ->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Demonstrations");
  demo->require_subcommand(1);
  std::size_t d2 = 2;
  std::string target = "X";
  auto* d_l1 = demo->add_subcommand("lemma1", "Compose loops into a ground-only holonomy");
  d_l1->add_option("--d2", d2, "Excited-space dimension")->check(CLI::Range(1, 8))->capture_default_str();
  d_l1->add_option("--target", target, "Single-qubit target gate")->capture_default_str();

  auto* exp = app.add_subcommand("export-schedule", "Write a compiled schedule (JSON)");
  add_gate_options(exp, cfg);

  // Bump envelopes suit fault injection; make that the inject default unless overridden.
  inject->preparse_callback([&](std::size_t) {
    cfg.envelope = "bump";
    cfg.slowdown = 17;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*gates) return cmd_gates(cfg);
    if (*run) return cmd_run(cfg);
    if (*scan) return cmd_scan(cfg);
    if (*inject) return cmd_inject(cfg);
    if (*a_slow) {
      if (!(delta > 0 && delta < 0.5)) throw CLI::ValidationError("--delta", "delta must lie in (0, 0.5)");
      std::cout << "required slowdown: " << io::format_number(required_slowdown(delta)) << "\n";
      return 0;
    }
    if (*a_cf) {
      if (!(a_s > 0)) throw CLI::ValidationError("--slowdown", "slowdown must be positive");
      const double f = ground_fidelity_closed_form(1.0 / a_s);
      std::cout << "ground fidelity: " << io::format_number(f) << "\nleakage: " << io::format_number(1 - f) << "\n";
      return 0;
    }
    if (*a_ode) {
      if (!(a_s > 0)) throw CLI::ValidationError("--slowdown", "slowdown must be positive");
      const TwoLevelResult r = two_level_ode(envelope_kind_from_string(a_env), a_s);
      std::cout << "leakage: " << io::format_number(r.leakage)
                << "\ngate infidelity: " << io::format_number(r.gate_infidelity) << "\n";
      return 0;
    }
    if (*d_l1) return cmd_demo_lemma1(d2, target);
    if (*exp) {
      emit(cfg.out, io::to_json(compile_from(cfg)).dump(2) + "\n");
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
