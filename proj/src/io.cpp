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

#include "hqc/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hqc::io {
namespace {

std::string direction_name(Direction d) { return d == Direction::Forward ? "forward" : "reverse"; }

Direction direction_from(const std::string& s) {
  if (s == "forward") return Direction::Forward;
  if (s == "reverse") return Direction::Reverse;
  throw FormatError("unknown direction '" + s + "'");
}

Json complex_matrix(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json to_json(const PauliString& p) { return p.str(); }

PauliString pauli_from_json(const Json& j) {
  if (!j.is_string()) throw FormatError("Pauli string expected");
  return PauliString::parse(j.get<std::string>());
}

Json to_json(const Operator& op, std::size_t n) {
  if (auto p = op.as_pauli(); p && p->is_hermitian()) return p->str();
  Json terms = Json::array();
  for (const auto& [key, c] : op.terms()) terms.push_back({PauliString(n, key.first, key.second).str(), c.real(), c.imag()});
  return terms;
}

Operator operator_from_json(const Json& j, std::size_t n) {
  if (j.is_string()) {
    const PauliString p = PauliString::parse(j.get<std::string>());
    if (p.n() != n) throw FormatError("operator size mismatch");
    return Operator(p);
  }
  if (!j.is_array()) throw FormatError("operator must be a Pauli string or a term list");
  Operator op(n);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw FormatError("operator term must be [pauli, re, im]");
    const PauliString p = PauliString::parse(t[0].get<std::string>());
    if (p.n() != n) throw FormatError("operator size mismatch");
    op.add_term(p, cplx(t[1].get<double>(), t[2].get<double>()));
  }
  return op;
}

Json to_json(const SubsystemCode& c) {
  Json j;
  j["label"] = c.label;
  j["n"] = c.n;
  if (c.offset != 0) j["offset"] = c.offset;
  j["stabilizer"] = Json::array();
  for (const auto& p : c.stabilizer) j["stabilizer"].push_back(p.str());
  j["gauge"] = Json::array();
  for (const auto& p : c.gauge) j["gauge"].push_back(p.str());
  j["logical_x"] = c.logical_x.str();
  j["logical_z"] = c.logical_z.str();
  return j;
}

SubsystemCode code_from_json(const Json& j) {
  try {
    SubsystemCode c;
    c.label = j.at("label").get<std::string>();
    c.n = j.at("n").get<std::size_t>();
    c.offset = j.value("offset", std::size_t{0});
    for (const auto& s : j.at("stabilizer")) c.stabilizer.push_back(pauli_from_json(s));
    for (const auto& s : j.at("gauge")) c.gauge.push_back(pauli_from_json(s));
    c.logical_x = pauli_from_json(j.at("logical_x"));
    c.logical_z = pauli_from_json(j.at("logical_z"));
    return c;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad code document: ") + e.what());
  }
}

Json to_json(const Segment& s) {
  const std::size_t n = s.n();
  Json j;
  j["start"] = to_json(s.start_op(), n);
  j["end"] = to_json(s.end_op(), n);
  j["envelope"] = {{"kind", to_string(s.envelope.kind)}, {"T", s.envelope.T}, {"amplitude", s.envelope.amplitude}};
  j["branches"] = Json::array();
  for (const auto& b : s.branches) {
    Json bj;
    bj["projector"] = to_json(b.projector, n);
    bj["start"] = to_json(b.start, n);
    bj["end"] = to_json(b.end, n);
    bj["frozen"] = b.frozen;
    bj["control"] = b.control;
    bj["control_bit"] = b.control_bit;
    j["branches"].push_back(bj);
  }
  j["direction"] = direction_name(s.direction);
  j["restart"] = s.restart;
  j["label"] = s.label;
  return j;
}

Segment segment_from_json(const Json& j, std::size_t n) {
  Segment s;
  const auto& e = j.at("envelope");
  s.envelope.kind = envelope_kind_from_string(e.at("kind").get<std::string>());
  s.envelope.T = e.at("T").get<double>();
  s.envelope.amplitude = e.value("amplitude", 1.0);
  for (const auto& bj : j.at("branches")) {
    Branch b;
    b.projector = operator_from_json(bj.at("projector"), n);
    b.start = operator_from_json(bj.at("start"), n);
    b.end = operator_from_json(bj.at("end"), n);
    b.frozen = bj.value("frozen", false);
    b.control = bj.value("control", -1);
    b.control_bit = bj.value("control_bit", 0);
    s.branches.push_back(std::move(b));
  }
  s.direction = direction_from(j.value("direction", std::string("forward")));
  s.restart = j.value("restart", false);
  s.label = j.value("label", std::string());
  return s;
}

Json to_json(const Schedule& s) {
  Json j;
  j["gate"] = s.gate;
  j["code"] = s.code;
  j["n"] = s.n;
  j["qubits"] = s.qubits;
  j["target"] = to_json(s.target, s.n);
  j["segments"] = Json::array();
  for (const auto& seg : s.segments) j["segments"].push_back(to_json(seg));
  Json ctx;
  ctx["stabilizer"] = Json::array();
  for (const auto& o : s.context.stabilizer()) ctx["stabilizer"].push_back(to_json(o, s.n));
  ctx["gauge"] = Json::array();
  for (const auto& o : s.context.gauge()) ctx["gauge"].push_back(to_json(o, s.n));
  j["context"] = ctx;
  j["metadata"] = Json::object();
  for (const auto& [k, v] : s.metadata) j["metadata"][k] = v;
  return j;
}

Schedule schedule_from_json(const Json& j) {
  try {
    Schedule s;
    s.gate = j.at("gate").get<std::string>();
    s.code = j.value("code", std::string());
    s.n = j.at("n").get<std::size_t>();
    s.qubits = j.at("qubits").get<std::vector<std::size_t>>();
    s.target = j.contains("target") ? operator_from_json(j["target"], s.n) : Operator::identity(s.n);
    for (const auto& sj : j.at("segments")) s.segments.push_back(segment_from_json(sj, s.n));
    if (j.contains("context")) {
      std::vector<Operator> st, g;
      for (const auto& o : j["context"].at("stabilizer")) st.push_back(operator_from_json(o, s.n));
      for (const auto& o : j["context"].at("gauge")) g.push_back(operator_from_json(o, s.n));
      s.context = GroupState(s.n, std::move(st), std::move(g));
    }
    if (j.contains("metadata"))
      for (const auto& [k, v] : j["metadata"].items()) s.metadata[k] = v.get<std::string>();
    if (auto err = s.validate(); !err.empty()) throw FormatError("invalid schedule: " + err);
    return s;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad schedule document: ") + e.what());
  }
}

Json to_json(const HolonomyReport& r) {
  Json j;
  j["gate"] = r.gate;
  j["slowdown"] = r.slowdown;
  j["envelope"] = r.envelope;
  j["fidelity_ground"] = r.fidelity_ground;
  j["fidelity_excited"] = r.fidelity_excited;
  j["factorization_residual"] = r.factorization_residual;
  j["omega"] = r.omega;
  j["seed"] = r.seed;
  j["infidelity"] = r.infidelity();
  j["phase_locked_residual"] = r.phase_locked_residual;
  j["leakage"] = r.leakage;
  j["stage_fitted_infidelity"] = r.stage_fitted_infidelity;
  return j;
}

Json to_json(const InjectResult& r) {
  Json j;
  j["error"] = to_string(r.event);
  j["pauli"] = std::string(1, r.event.pauli);
  j["qubit"] = r.event.qubit;
  j["fraction"] = r.event.fraction;
  j["seed"] = r.seed;
  j["syndromes"] = Json::array();
  for (const auto& s : r.syndromes) j["syndromes"].push_back(s.bits);
  j["corrections"] = Json::array();
  for (const auto& c : r.corrections) j["corrections"].push_back(c.str());
  j["consistent"] = r.consistent;
  j["logical_fidelity"] = r.logical_fidelity;
  j["residual_weight"] = r.residual_weight;
  j["verdict"] = r.pass ? "pass" : "fail";
  return j;
}

Json to_json(const Lemma1Result& r) {
  Json j;
  j["d1"] = r.d1;
  j["d2"] = r.d2;
  j["blocks"] = {{"dim_a", r.blocks.dim_a}, {"dim_b", r.blocks.dim_b}, {"omega", r.blocks.omega},
                 {"kernel_dim", r.blocks.kernel_dim}};
  j["ground"] = complex_matrix(r.ground);
  j["excited"] = complex_matrix(r.excited);
  j["ground_residual"] = r.ground_residual;
  j["excited_offdiag"] = r.excited_offdiag;
  j["excited_phase"] = {r.excited_phase.real(), r.excited_phase.imag()};
  j["degenerate"] = r.degenerate;
  return j;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const SlowdownCurve& c) {
  os << "slowdown,envelope,infidelity_ground,infidelity_excited\n";
  const std::string env = to_string(c.envelope);
  for (const auto& s : c.samples)
    os << format_number(s.slowdown) << ',' << env << ',' << format_number(s.infidelity_ground) << ','
       << format_number(s.infidelity_excited) << '\n';
}

namespace {

double parse_csv_number(const std::string& field, const std::string& line) {
  double v = 0;
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || ptr != end) throw FormatError("bad number in CSV row '" + line + "'");
  return v;
}

}  // namespace

SlowdownCurve read_csv(std::istream& is) {
  SlowdownCurve c;
  std::string line;
  if (!std::getline(is, line) || line != "slowdown,envelope,infidelity_ground,infidelity_excited")
    throw FormatError("missing CSV header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, env, g, e;
    if (!std::getline(ss, a, ',') || !std::getline(ss, env, ',') || !std::getline(ss, g, ',') || !std::getline(ss, e))
      throw FormatError("malformed CSV row '" + line + "'");
    c.envelope = envelope_kind_from_string(env);
    c.samples.push_back({parse_csv_number(a, line), parse_csv_number(g, line), parse_csv_number(e, line)});
  }
  return c;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << j.dump(2) << '\n';
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace hqc::io
