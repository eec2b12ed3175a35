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

#include <stdexcept>
#include <utility>
#include <vector>

#include "paulisym/gf2.hpp"
#include "paulisym/pauli.hpp"
#include "paulisym/tableau.hpp"

namespace paulisym {

/// Symmetry Z-strings, the affine encoding (A, b) built from them, and the
/// qubit positions the encoding allows us to drop.
struct TaperingPlan {
  std::vector<Gf2Vector> z_strings;
  Gf2Matrix a;
  Gf2Vector b;
  std::vector<std::size_t> tapered_qubits;  // 1-based, always 1..k here

  std::size_t num_qubits() const { return a.rows(); }
  std::size_t num_tapered() const { return tapered_qubits.size(); }
};

/// Eigenvalue of Z_i for each tapered qubit, entries in {+1, -1}.
struct SectorAssignment {
  std::vector<int> eigenvalues;
};

/// Matrix K with one (r_i, s_i) row per collected term, in the sum's
/// deterministic lexicographic term order.
inline Gf2Matrix build_k_matrix(const PauliSum& h) {
  std::vector<Gf2Vector> rows;
  rows.reserve(h.size());
  for (const auto& [key, coeff] : h.terms()) rows.push_back(key.r.concat(key.s));
  return Gf2Matrix::from_rows(rows, 2 * h.num_qubits());
}

/// Canonical basis of {s' : Z^(s') commutes with h}. A vector (s', r') lies in
/// ker K; the pure-Z subspace is carved out of the kernel by a second
/// elimination over the kernel coordinates.
inline std::vector<Gf2Vector> find_z_symmetries(const PauliSum& h) {
  const std::size_t m = h.num_qubits();
  const std::vector<Gf2Vector> ker = kernel(build_k_matrix(h));
  if (ker.empty()) return {};

  // Combination coefficients c with sum_i c_i r'_i = 0.
  std::vector<Gf2Vector> r_parts;
  r_parts.reserve(ker.size());
  for (const Gf2Vector& v : ker) r_parts.push_back(v.slice(m, 2 * m));
  const std::vector<Gf2Vector> combos =
      kernel(Gf2Matrix::from_rows(r_parts, m).transpose());

  std::vector<Gf2Vector> z_vectors;
  for (const Gf2Vector& c : combos) {
    Gf2Vector v(2 * m);
    for (std::size_t i = 0; i < ker.size(); ++i) {
      if (c.get(i)) v ^= ker[i];
    }
    const Gf2Vector s = v.slice(0, m);
    if (!s.is_zero()) z_vectors.push_back(s);
  }
  return canonical_span(z_vectors, m);
}

/// Indicator Z-string for the particle-number parity of each mode set.
inline std::vector<Gf2Vector> number_conservation_strings(
    const std::vector<std::vector<std::size_t>>& spin_partition, std::size_t m) {
  std::vector<bool> used(m, false);
  std::vector<Gf2Vector> out;
  for (const auto& set : spin_partition) {
    Gf2Vector v(m);
    for (std::size_t mode : set) {
      if (mode < 1 || mode > m)
        throw std::out_of_range("number_conservation_strings: mode index out of range");
      if (used[mode - 1])
        throw std::invalid_argument("number_conservation_strings: overlapping mode sets");
      used[mode - 1] = true;
      v.set(mode - 1, true);
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Completes the Z-strings to an invertible A whose leading rows are the
/// strings; tapered qubits are 1..k.
inline TaperingPlan build_plan(const std::vector<Gf2Vector>& z_strings, std::size_t m,
                               const Gf2Vector& b) {
  if (b.size() != m) throw std::invalid_argument("build_plan: offset size mismatch");
  TaperingPlan plan;
  plan.z_strings = z_strings;
  plan.a = complete_to_invertible(z_strings, m);
  plan.b = b;
  for (std::size_t i = 1; i <= z_strings.size(); ++i) plan.tapered_qubits.push_back(i);
  return plan;
}

/// Tableau of the affine map |x> -> |Ax + b>: r' = A r, s' = (A^-1)^T s and
/// sign (-1)^((A^-1)^T s . b), carried as the sign vector (0, A^-1 b).
inline CliffordTableau affine_tableau(const Gf2Matrix& a, const Gf2Vector& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("affine_tableau: A must be square");
  const std::size_t m = a.rows();
  if (b.size() != m) throw std::invalid_argument("affine_tableau: offset size mismatch");
  const Gf2Matrix a_inv = inverse(a);
  const Gf2Vector sign = Gf2Vector(m).concat(a_inv * b);
  return CliffordTableau(TableauKind::affine, a, a_inv.transpose(), Gf2Matrix::zero(m, m), sign);
}

/// Dense permutation matrix sum_x |Ax + b><x|.
inline DenseOperator affine_dense(const Gf2Matrix& a, const Gf2Vector& b, std::size_t m) {
  if (a.rows() != m || a.cols() != m || b.size() != m)
    throw std::invalid_argument("affine_dense: size mismatch");
  if (m > kDenseQubitCap) throw std::invalid_argument("affine_dense: dense cap exceeded");
  const std::uint64_t dim = std::uint64_t{1} << m;
  DenseOperator out = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                          static_cast<Eigen::Index>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    const Gf2Vector image = (a * occupation_from_index(col, m)) ^ b;
    out(static_cast<Eigen::Index>(basis_index(image)), static_cast<Eigen::Index>(col)) = 1.0;
  }
  return out;
}

/// Fixes the tapered Z eigenvalues and deletes the tapered coordinates; the
/// remaining qubits are renumbered 1..M-k preserving order. Throws when a
/// term acts with X on a tapered qubit, which signals an inconsistent plan.
inline PauliSum taper_sector(const PauliSum& h_conjugated, const TaperingPlan& plan,
                             const SectorAssignment& sector) {
  const std::size_t m = h_conjugated.num_qubits();
  if (plan.num_qubits() != m) throw std::invalid_argument("taper_sector: qubit count mismatch");
  if (sector.eigenvalues.size() != plan.num_tapered())
    throw std::invalid_argument("taper_sector: sector size mismatch");
  for (int e : sector.eigenvalues) {
    if (e != 1 && e != -1) throw std::invalid_argument("taper_sector: eigenvalues must be +1/-1");
  }

  std::vector<bool> tapered(m, false);
  for (std::size_t q : plan.tapered_qubits) {
    if (q < 1 || q > m) throw std::out_of_range("taper_sector: tapered qubit out of range");
    tapered[q - 1] = true;
  }
  std::vector<std::size_t> kept;
  for (std::size_t q = 0; q < m; ++q) {
    if (!tapered[q]) kept.push_back(q);
  }

  PauliSum out(kept.size());
  for (const auto& [key, coeff] : h_conjugated.terms()) {
    double factor = 1.0;
    for (std::size_t i = 0; i < plan.tapered_qubits.size(); ++i) {
      const std::size_t q = plan.tapered_qubits[i] - 1;
      if (key.r.get(q))
        throw std::invalid_argument("taper_sector: term acts with X on a tapered qubit");
      if (key.s.get(q)) factor *= sector.eigenvalues[i];
    }
    Gf2Vector r(kept.size()), s(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      r.set(i, key.r.get(kept[i]));
      s.set(i, key.s.get(kept[i]));
    }
    out.add(coeff * factor, PauliString(std::move(r), std::move(s)));
  }
  return out;
}

/// All 2^k sector assignments in binary-counter order (tapered qubit 1 is the
/// most significant position; a 0 bit means eigenvalue +1), each tapered.
inline std::vector<std::pair<SectorAssignment, PauliSum>> enumerate_sectors(
    const PauliSum& h_conjugated, const TaperingPlan& plan) {
  const std::size_t k = plan.num_tapered();
  std::vector<std::pair<SectorAssignment, PauliSum>> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    SectorAssignment sector;
    for (std::size_t i = 0; i < k; ++i)
      sector.eigenvalues.push_back(((bits >> (k - 1 - i)) & 1u) ? -1 : 1);
    PauliSum tapered = taper_sector(h_conjugated, plan, sector);
    out.emplace_back(std::move(sector), std::move(tapered));
  }
  return out;
}

/// Z-string of a Boolean point symmetry: gamma_k = 1 where the adapted
/// one-particle state k is odd under the symmetry.
inline Gf2Vector boolean_symmetry_to_zstring(const std::vector<int>& eigenvalues) {
  Gf2Vector gamma(eigenvalues.size());
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    if (eigenvalues[k] == -1) {
      gamma.set(k, true);
    } else if (eigenvalues[k] != 1) {
      throw std::invalid_argument("boolean_symmetry_to_zstring: eigenvalues must be +1/-1");
    }
  }
  return gamma;
}

/// Sector that contains the encoded image of a source basis state: map the
/// state through the affine encoding and read the bits at the tapered
/// positions.
inline SectorAssignment sector_for_state(const TaperingPlan& plan, const Gf2Vector& state) {
  if (state.size() != plan.num_qubits())
    throw std::invalid_argument("sector_for_state: state size mismatch");
  const Gf2Vector image = (plan.a * state) ^ plan.b;
  SectorAssignment sector;
  for (std::size_t q : plan.tapered_qubits)
    sector.eigenvalues.push_back(image.get(q - 1) ? -1 : 1);
  return sector;
}

}  // namespace paulisym
