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

#include "hqc/operator.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hqc {

Operator::Operator(const PauliString& p) : n_(p.n()) { add_term(p); }

Operator Operator::identity(std::size_t n) { return Operator(PauliString(n)); }

Operator Operator::projector(std::size_t n, std::size_t q, int bit) {
  Operator o(n);
  o.add_term(PauliString(n), 0.5);
  o.add_term(PauliString::single(n, q, 'Z'), bit ? -0.5 : 0.5);
  return o;
}

Operator Operator::bloch(std::size_t n, std::size_t q, double a, double b, double c) {
  Operator o(n);
  o.add_term(PauliString::single(n, q, 'X'), a);
  o.add_term(PauliString::single(n, q, 'Y'), b);
  o.add_term(PauliString::single(n, q, 'Z'), c);
  return o.pruned(0.0);
}

Operator Operator::from_matrix1(std::size_t n, std::size_t q, const Eigen::Matrix2cd& m) {
  // Pauli coefficients c_P = Tr(P m)/2.
  Operator o(n);
  o.add_term(PauliString(n), (m(0, 0) + m(1, 1)) / 2.0);
  o.add_term(PauliString::single(n, q, 'X'), (m(0, 1) + m(1, 0)) / 2.0);
  o.add_term(PauliString::single(n, q, 'Y'), cplx(0, 1) * (m(0, 1) - m(1, 0)) / 2.0);
  o.add_term(PauliString::single(n, q, 'Z'), (m(0, 0) - m(1, 1)) / 2.0);
  return o.pruned(1e-15);
}

void Operator::add_term(const PauliString& p, cplx c) {
  if (terms_.empty() && n_ == 0) n_ = p.n();
  if (p.n() != n_) throw DimensionError("operator length mismatch");
  terms_[{p.x(), p.z()}] += c * phase_value(p.phase());
}

Operator& Operator::operator+=(const Operator& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  if (o.n_ != n_) throw DimensionError("operator length mismatch");
  for (const auto& [k, c] : o.terms_) terms_[k] += c;
  return *this;
}

Operator& Operator::operator-=(const Operator& o) { return *this += -o; }

Operator& Operator::operator*=(cplx c) {
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Operator Operator::operator-() const {
  Operator r = *this;
  r *= -1.0;
  return r;
}

Operator Operator::adjoint() const {
  Operator r = *this;
  for (auto& [k, v] : r.terms_) v = std::conj(v);
  return r;
}

Operator Operator::pruned(double tol) const {
  Operator r(n_);
  for (const auto& [k, v] : terms_)
    if (std::abs(v) > tol) r.terms_.emplace(k, v);
  return r;
}

std::optional<PauliString> Operator::as_pauli(double tol) const {
  const Operator p = pruned(tol);
  if (p.terms_.size() != 1) return std::nullopt;
  const auto& [k, c] = *p.terms_.begin();
  for (int ph = 0; ph < 4; ++ph)
    if (std::abs(c - phase_value(ph)) <= tol) return PauliString(n_, k.first, k.second, ph);
  return std::nullopt;
}

std::uint64_t Operator::support_mask() const {
  std::uint64_t m = 0;
  for (const auto& [k, v] : terms_)
    if (v != cplx(0)) m |= k.first | k.second;
  return m;
}

std::vector<std::size_t> Operator::support() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = support_mask(); m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::size_t Operator::weight() const { return std::popcount(support_mask()); }

double Operator::norm1() const {
  double s = 0;
  for (const auto& [k, v] : terms_) s += std::abs(v);
  return s;
}

Eigen::MatrixXcd Operator::dense_on(const std::vector<std::size_t>& qubits) const {
  const std::size_t m = qubits.size();
  if (m > 14) throw DimensionError("dense matrix too large");
  std::uint64_t covered = 0;
  for (auto q : qubits) covered |= std::uint64_t{1} << q;
  if ((support_mask() & ~covered) != 0) throw DimensionError("support not covered by qubit list");
  const std::size_t d = std::size_t{1} << m;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [k, c] : terms_) {
    std::uint64_t lx = 0, lz = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (k.first >> qubits[j] & 1) lx |= std::uint64_t{1} << j;
      if (k.second >> qubits[j] & 1) lz |= std::uint64_t{1} << j;
    }
    const cplx base = c * phase_value(std::popcount(lx & lz));
    for (std::size_t b = 0; b < d; ++b) {
      const double sign = (std::popcount(lz & b) & 1) ? -1.0 : 1.0;
      out(b ^ lx, b) += base * sign;
    }
  }
  return out;
}

Eigen::MatrixXcd Operator::dense() const {
  std::vector<std::size_t> all(n_);
  for (std::size_t q = 0; q < n_; ++q) all[q] = q;
  return dense_on(all);
}

bool Operator::approx_equal(const Operator& o, double tol) const {
  if (n_ != o.n_) return false;
  const Operator d = (*this - o);
  for (const auto& [k, v] : d.terms_)
    if (std::abs(v) > tol) return false;
  return true;
}

std::string Operator::str() const {
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (std::abs(c) < 1e-14) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    os << ")" << PauliString(n_, k.first, k.second).str().substr(1);
  }
  return first ? "0" : os.str();
}

Operator Operator::conjugated(const CliffordGate& g) const {
  Operator r(n_);
  for (const auto& [k, c] : terms_) r.add_term(conjugate(PauliString(n_, k.first, k.second), g), c);
  return r;
}

Operator Operator::conjugated_by(const Operator& u) const { return (u * *this * u.adjoint()).pruned(1e-14); }

Operator Operator::embed(std::size_t new_n, std::size_t offset) const {
  Operator r(new_n);
  for (const auto& [k, c] : terms_) r.add_term(PauliString(n_, k.first, k.second).embed(new_n, offset), c);
  return r;
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }

Operator operator*(const Operator& a, const Operator& b) {
  if (a.n() != b.n()) throw DimensionError("operator length mismatch");
  Operator r(a.n());
  for (const auto& [ka, ca] : a.terms()) {
    const PauliString pa(a.n(), ka.first, ka.second);
    for (const auto& [kb, cb] : b.terms()) {
      r.add_term(mul(pa, PauliString(a.n(), kb.first, kb.second)), ca * cb);
    }
  }
  return r;
}

Operator operator*(cplx c, Operator a) {
  a *= c;
  return a;
}

bool anticommute(const Operator& a, const Operator& b, double tol) {
  return (a * b + b * a).pruned(tol).empty();
}

bool commute(const Operator& a, const Operator& b, double tol) { return (a * b - b * a).pruned(tol).empty(); }

Eigen::Matrix2cd gate_matrix(const std::string& name) {
  using std::numbers::pi;
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  if (name == "I") m << 1, 0, 0, 1;
  else if (name == "X") m << 0, 1, 1, 0;
  else if (name == "Y") m << 0, cplx(0, -1), cplx(0, 1), 0;
  else if (name == "Z") m << 1, 0, 0, -1;
  else if (name == "W" || name == "H") m << r, r, r, -r;
  else if (name == "P") m << 1, 0, 0, cplx(0, 1);
  else if (name == "Pdg") m << 1, 0, 0, cplx(0, -1);
  else if (name == "T") m << 1, 0, 0, std::polar(1.0, pi / 4);
  else if (name == "Tdg") m << 1, 0, 0, std::polar(1.0, -pi / 4);
  else throw std::invalid_argument("unknown single-qubit gate '" + name + "'");
  return m;
}

Operator named_gate(std::size_t n, const std::string& name, std::size_t q) {
  return Operator::from_matrix1(n, q, gate_matrix(name));
}

Operator cnot_operator(std::size_t n, std::size_t c, std::size_t t) {
  Operator o = Operator::projector(n, c, 0);
  o += Operator::projector(n, c, 1) * Operator(PauliString::single(n, t, 'X'));
  return o.pruned(0.0);
}

}  // namespace hqc
