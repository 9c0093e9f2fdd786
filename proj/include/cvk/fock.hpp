// Copyright 2026 The cvkernels Authors
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

// Number-basis primitives: displacement matrix elements, the photon-loss Kraus
// sum, Fock-series Wigner values and the single-mode states used by the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cvk/types.hpp"

namespace cvk::fock {

/// Generalized Laguerre values L_j^{(k)}(x) for j = 0..count-1 (three-term recurrence).
inline std::vector<double> laguerre_sequence(std::size_t count, double k, double x) {
  std::vector<double> out(count);
  if (count == 0) return out;
  out[0] = 1.0;
  if (count == 1) return out;
  out[1] = 1.0 + k - x;
  for (std::size_t j = 1; j + 1 < count; ++j) {
    const double jd = static_cast<double>(j);
    out[j + 1] = ((2.0 * jd + 1.0 + k - x) * out[j] - (jd + k) * out[j - 1]) / (jd + 1.0);
  }
  return out;
}

/// Matrix elements <m|D(alpha)|n> for m, n < cutoff.
///
/// Uses the closed form sqrt(n!/m!) alpha^(m-n) e^{-|alpha|^2/2} L_n^{(m-n)}(|alpha|^2)
/// for m >= n and its adjoint counterpart above the diagonal. The elements are
/// those of the untruncated operator, so the matrix is unitary only up to the
/// weight a state carries near the cutoff.
inline MatrixXc displacement_matrix(complex alpha, std::size_t cutoff) {
  if (cutoff == 0) throw UsageError("cutoff must be at least 1");
  const auto d = static_cast<Eigen::Index>(cutoff);
  MatrixXc out = MatrixXc::Zero(d, d);
  const double x = std::norm(alpha);
  const double r = std::abs(alpha);
  const double theta = std::arg(alpha);
  const double log_r = r > 0.0 ? std::log(r) : 0.0;

  for (std::size_t k = 0; k < cutoff; ++k) {
    if (k > 0 && r == 0.0) break;
    const std::size_t count = cutoff - k;
    const std::vector<double> lag = laguerre_sequence(count, static_cast<double>(k), x);
    const double kd = static_cast<double>(k);
    const complex below = std::polar(1.0, kd * theta);
    const complex above = std::polar(k % 2 == 0 ? 1.0 : -1.0, -kd * theta);
    for (std::size_t j = 0; j < count; ++j) {
      const double jd = static_cast<double>(j);
      const double log_mag = 0.5 * (std::lgamma(jd + 1.0) - std::lgamma(jd + kd + 1.0)) + kd * log_r - 0.5 * x;
      const double value = std::exp(log_mag) * lag[j];
      const auto row = static_cast<Eigen::Index>(j + k);
      const auto col = static_cast<Eigen::Index>(j);
      out(row, col) = value * below;
      if (k > 0) out(col, row) = value * above;
    }
  }
  return out;
}

/// Photon loss with transmissivity eta: rho -> sum_k E_k rho E_k^dagger,
/// E_k = sum_n sqrt(C(n,k) eta^(n-k) (1-eta)^k) |n-k><n|. Exact at any cutoff.
inline MatrixXc apply_loss(const MatrixXc& rho, double eta) {
  require_transmissivity(eta);
  const Eigen::Index d = rho.rows();
  if (eta == 1.0) return rho;
  if (eta == 0.0) {
    MatrixXc out = MatrixXc::Zero(d, d);
    out(0, 0) = rho.trace();
    return out;
  }
  // weight(a, k)^2 = C(a + k, k) eta^a (1 - eta)^k
  const double log_eta = std::log(eta);
  const double log_loss = std::log1p(-eta);
  Eigen::MatrixXd weight(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    const double ad = static_cast<double>(a);
    for (Eigen::Index k = 0; a + k < d; ++k) {
      const double kd = static_cast<double>(k);
      const double log_binom = std::lgamma(ad + kd + 1.0) - std::lgamma(ad + 1.0) - std::lgamma(kd + 1.0);
      weight(a, k) = std::exp(0.5 * (log_binom + ad * log_eta + kd * log_loss));
    }
  }
  MatrixXc out = MatrixXc::Zero(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      complex acc = 0.0;
      for (Eigen::Index k = 0; a + k < d && b + k < d; ++k) acc += weight(a, k) * weight(b, k) * rho(a + k, b + k);
      out(a, b) = acc;
    }
  }
  return out;
}

/// Wigner function of a number-basis density matrix at amplitude alpha,
/// normalized so that the integral over d^2 alpha is the trace.
///
/// Sums rho_mn W_{|m><n|} with, for m = n + k,
/// W_{|m><n|}(alpha) = (2/pi) (-1)^n sqrt(n!/m!) (2 alpha^*)^k e^{-2|alpha|^2} L_n^{(k)}(4|alpha|^2).
inline double wigner(const MatrixXc& rho, complex alpha) {
  const std::size_t d = static_cast<std::size_t>(rho.rows());
  const double x = std::norm(alpha);
  const double two_r = 2.0 * std::abs(alpha);
  const double log_two_r = two_r > 0.0 ? std::log(two_r) : 0.0;
  const double theta = std::arg(alpha);

  std::vector<double> log_fact(d + 1);
  for (std::size_t i = 0; i <= d; ++i) log_fact[i] = std::lgamma(static_cast<double>(i) + 1.0);

  double total = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    if (k > 0 && two_r == 0.0) break;
    const std::size_t count = d - k;
    const std::vector<double> lag = laguerre_sequence(count, static_cast<double>(k), 4.0 * x);
    const double kd = static_cast<double>(k);
    complex acc = 0.0;
    for (std::size_t n = 0; n < count; ++n) {
      const double log_mag = 0.5 * (log_fact[n] - log_fact[n + k]) + kd * log_two_r - 2.0 * x;
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      acc += rho(static_cast<Eigen::Index>(n + k), static_cast<Eigen::Index>(n)) * (sign * std::exp(log_mag) * lag[n]);
    }
    // (2 alpha^*)^k carries the phase e^{-ik theta}
    acc *= std::polar(1.0, -kd * theta);
    total += k == 0 ? acc.real() : 2.0 * acc.real();
  }
  return 2.0 / pi * total;
}

inline double purity(const MatrixXc& rho) { return rho.cwiseAbs2().sum(); }

/// tr(A B) for Hermitian A, B.
inline double overlap(const MatrixXc& a, const MatrixXc& b) {
  return (a.array() * b.transpose().array()).sum().real();
}

inline MatrixXc vacuum(std::size_t cutoff) {
  const auto d = static_cast<Eigen::Index>(cutoff);
  MatrixXc rho = MatrixXc::Zero(d, d);
  rho(0, 0) = 1.0;
  return rho;
}

inline MatrixXc number_state(std::size_t n, std::size_t cutoff) {
  if (n >= cutoff) {
    throw CutoffError("cutoff " + std::to_string(cutoff) + " cannot hold number state |" + std::to_string(n) + ">");
  }
  const auto d = static_cast<Eigen::Index>(cutoff);
  MatrixXc rho = MatrixXc::Zero(d, d);
  rho(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) = 1.0;
  return rho;
}

/// Thermal state with mean photon number nbar, truncated (not renormalized).
inline MatrixXc thermal(double nbar, std::size_t cutoff) {
  const auto d = static_cast<Eigen::Index>(cutoff);
  MatrixXc rho = MatrixXc::Zero(d, d);
  const double ratio = nbar / (nbar + 1.0);
  double p = 1.0 / (nbar + 1.0);
  for (Eigen::Index n = 0; n < d; ++n) {
    rho(n, n) = p;
    p *= ratio;
  }
  return rho;
}

/// Squeezed vacuum with q-variance e^{-2r}/2, truncated (not renormalized).
inline MatrixXc squeezed_vacuum(double r, std::size_t cutoff) {
  const auto d = static_cast<Eigen::Index>(cutoff);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d);
  const double t = std::tanh(r);
  double c = 1.0 / std::sqrt(std::cosh(r));
  for (Eigen::Index n = 0; 2 * n < d; ++n) {
    psi(2 * n) = c;
    const double nd = static_cast<double>(n);
    c *= -t * std::sqrt((2.0 * nd + 1.0) * (2.0 * nd + 2.0)) / (2.0 * (nd + 1.0));
  }
  return psi * psi.adjoint();
}

}  // namespace cvk::fock
