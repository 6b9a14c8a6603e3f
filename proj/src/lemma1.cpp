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

#include "hqc/lemma1.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hqc {
namespace {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using std::numbers::pi;

Mat lowdin(const Mat& phi) {
  Eigen::SelfAdjointEigenSolver<Mat> es(phi.adjoint() * phi);
  if (es.eigenvalues().minCoeff() < 1e-12) throw std::runtime_error("frame collapsed along path");
  const Eigen::VectorXcd inv = es.eigenvalues().cwiseSqrt().cwiseInverse().cast<cplx>();
  return phi * es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
}

// Spectral projector of h onto eigenvalues within 0.5 of `energy`.
Mat projector_near(const Mat& h, double energy) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.adjoint()));
  Mat p = Mat::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i) - energy) < 0.5) p += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  return p;
}

Mat pass(const std::vector<PathLeg>& legs, const Mat& frame, double energy, std::size_t n) {
  Mat phi = frame;
  for (const auto& leg : legs)
    for (std::size_t j = 1; j <= n; ++j) phi = lowdin(projector_near(leg.hamiltonian(double(j) / n), energy) * phi);
  return phi;
}

// exp(theta K) with K = [[0, -S^dagger], [S, 0]] for an isometry S (d2 x d1).
Mat rotation(const Mat& s, double theta) {
  const auto d1 = s.cols(), d2 = s.rows();
  const Mat pi_s = s * s.adjoint();
  Mat r(d1 + d2, d1 + d2);
  r.topLeftCorner(d1, d1) = std::cos(theta) * Mat::Identity(d1, d1);
  r.topRightCorner(d1, d2) = -std::sin(theta) * s.adjoint();
  r.bottomLeftCorner(d2, d1) = std::sin(theta) * s;
  r.bottomRightCorner(d2, d2) = std::cos(theta) * pi_s + (Mat::Identity(d2, d2) - pi_s);
  return r;
}

}  // namespace

std::size_t BlockDecomposition::total() const {
  std::size_t t = kernel_dim;
  for (std::size_t i = 0; i < dim_a.size(); ++i) t += dim_a[i] * dim_b[i];
  return t;
}

Eigen::MatrixXcd transport_frame(const std::vector<PathLeg>& legs, const Eigen::MatrixXcd& frame, double energy,
                                 double tol) {
  std::size_t n = 16;
  Mat prev = pass(legs, frame, energy, n);
  for (; n < 8192;) {
    n *= 2;
    Mat cur = pass(legs, frame, energy, n);
    const double change = (cur - prev).norm();
    prev = std::move(cur);
    if (change < tol) break;
  }
  return prev;
}

Eigen::MatrixXcd unitary_root(const Eigen::MatrixXcd& u, std::size_t k) {
  Eigen::ComplexSchur<Mat> schur(u);
  const Mat& t = schur.matrixT();
  Eigen::VectorXcd d(t.rows());
  for (Eigen::Index i = 0; i < t.rows(); ++i) d(i) = std::polar(1.0, std::arg(t(i, i)) / double(k));
  return schur.matrixU() * d.asDiagonal() * schur.matrixU().adjoint();
}

Lemma1Result lemma1_compose(const Eigen::MatrixXcd& w1, std::size_t d2) {
  const auto d1 = static_cast<std::size_t>(w1.rows());
  if (w1.cols() != w1.rows()) throw std::invalid_argument("W1 must be square");
  if (d2 < d1 || d2 > 4) throw std::invalid_argument("need d1 <= d2 <= 4");
  if ((w1.adjoint() * w1 - Mat::Identity(d1, d1)).norm() > 1e-10) throw std::invalid_argument("W1 must be unitary");
  const auto n1 = static_cast<Eigen::Index>(d1), n2 = static_cast<Eigen::Index>(d2), d = n1 + n2;

  Lemma1Result r;
  r.d1 = d1;
  r.d2 = d2;
  r.blocks = {{d1, d2}, {1, 1}, {-1.0, 1.0}, 0};

  Mat h0 = Mat::Identity(d, d);
  h0.topLeftCorner(n1, n1) *= -1.0;
  const Mat s1 = Mat::Identity(n2, n1);
  // Ground holonomy of the two-leg loop is Q^dagger, so Q = (W1^{1/d2})^dagger.
  const Mat q = unitary_root(w1, d2).adjoint();
  const Mat s2 = s1 * q;

  auto make_legs = [&](const Mat& conj) {
    std::vector<PathLeg> legs;
    legs.push_back({[=](double u) {
      const Mat rot = conj * rotation(s1, u * pi / 2);
      return Mat(rot * h0 * rot.adjoint());
    }});
    legs.push_back({[=](double u) {
      const Mat rot = conj * rotation(s2, (1.0 - u) * pi / 2);
      return Mat(rot * h0 * rot.adjoint());
    }});
    return legs;
  };

  const Mat ground0 = Mat::Identity(d, n1);
  Mat excited0 = Mat::Zero(d, n2);
  excited0.bottomRows(n2) = Mat::Identity(n2, n2);

  const auto base = make_legs(Mat::Identity(d, d));
  r.base_ground = ground0.adjoint() * transport_frame(base, ground0, -1.0);
  r.base_excited = excited0.adjoint() * transport_frame(base, excited0, 1.0);

  Eigen::ComplexSchur<Mat> schur(r.base_excited);
  const Mat v = schur.matrixU();
  for (Eigen::Index i = 0; i < n2; ++i)
    for (Eigen::Index j = i + 1; j < n2; ++j)
      if (std::abs(schur.matrixT()(i, i) - schur.matrixT()(j, j)) < 1e-8) r.degenerate = true;
  Mat perm = Mat::Zero(n2, n2);
  for (Eigen::Index j = 0; j < n2; ++j) perm((j + 1) % n2, j) = 1.0;
  const Mat c = v * perm * v.adjoint();

  Mat g = ground0, e = excited0;
  Mat ck = Mat::Identity(n2, n2);
  for (std::size_t k = 0; k < d2; ++k) {
    Mat conj = Mat::Identity(d, d);
    conj.bottomRightCorner(n2, n2) = ck;
    const auto legs = make_legs(conj);
    g = transport_frame(legs, g, -1.0);
    e = transport_frame(legs, e, 1.0);
    ck = c * ck;
  }
  r.ground = ground0.adjoint() * g;
  r.excited = excited0.adjoint() * e;
  r.ground_residual = (r.ground - w1).norm();
  r.excited_phase = r.excited.trace() / double(d2);
  r.excited_offdiag = (r.excited - r.excited_phase * Mat::Identity(n2, n2)).norm();
  return r;
}

}  // namespace hqc
