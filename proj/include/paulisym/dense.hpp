// Copyright 2025-2026 The paulisym developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace paulisym {

/// Dense complex operator used as the exact oracle for desk-scale checks.
using DenseOperator = Eigen::MatrixXcd;

/// Largest qubit count for which dense 2^M x 2^M oracles are built.
inline constexpr std::size_t kDenseQubitCap = 12;

inline double hermiticity_defect(const DenseOperator& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Ascending eigenvalues of a Hermitian operator. Throws std::invalid_argument
/// when the input deviates from Hermiticity by more than 1e-10.
inline std::vector<double> eigenvalues_hermitian(const DenseOperator& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues_hermitian: not square");
  if (m.rows() > 0 && hermiticity_defect(m) > 1e-10)
    throw std::invalid_argument("eigenvalues_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues_hermitian: eigensolver failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

/// Multiset comparison by greedy pairing of the sorted sequences.
inline bool multiset_equal(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace paulisym
