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

#include <cassert>
#include <stdexcept>
#include <string>

#include "paulisym/fock.hpp"
#include "paulisym/gf2.hpp"
#include "paulisym/pauli.hpp"

namespace paulisym {

/// How an exponent-vector map acts on qubit states: as a signed mode
/// permutation or as an affine map |x> -> |Ax + b>.
enum class TableauKind { permutation, affine };

/// Block description of how a conjugation maps exponent vectors:
/// r' = x_block r, s' = mix_block r + z_block s, with an extra sign
/// (-1)^(sign_vector . (r, s)) on the conjugated string.
class CliffordTableau {
 public:
  CliffordTableau(TableauKind kind, Gf2Matrix x_block, Gf2Matrix z_block, Gf2Matrix mix_block,
                  Gf2Vector sign_vector)
      : kind_(kind),
        x_block_(std::move(x_block)),
        z_block_(std::move(z_block)),
        mix_block_(std::move(mix_block)),
        sign_vector_(std::move(sign_vector)) {
    const std::size_t m = x_block_.rows();
    if (x_block_.cols() != m || z_block_.rows() != m || z_block_.cols() != m ||
        mix_block_.rows() != m || mix_block_.cols() != m || sign_vector_.size() != 2 * m)
      throw std::invalid_argument("CliffordTableau: inconsistent block sizes");
    assert(kind_ != TableauKind::permutation || sign_vector_.is_zero());
  }

  static CliffordTableau identity(std::size_t m) {
    return CliffordTableau(TableauKind::permutation, Gf2Matrix::identity(m),
                           Gf2Matrix::identity(m), Gf2Matrix::zero(m, m), Gf2Vector(2 * m));
  }

  TableauKind kind() const { return kind_; }
  std::size_t num_qubits() const { return x_block_.rows(); }
  const Gf2Matrix& x_block() const { return x_block_; }
  const Gf2Matrix& z_block() const { return z_block_; }
  const Gf2Matrix& mix_block() const { return mix_block_; }
  const Gf2Vector& sign_vector() const { return sign_vector_; }

  /// The 2M x 2M matrix [[x, 0], [mix, z]] acting on (r, s).
  Gf2Matrix full_matrix() const {
    const std::size_t m = num_qubits();
    Gf2Matrix t(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (x_block_.get(i, j)) t.set(i, j, true);
        if (mix_block_.get(i, j)) t.set(m + i, j, true);
        if (z_block_.get(i, j)) t.set(m + i, m + j, true);
      }
    }
    return t;
  }

  bool operator==(const CliffordTableau& o) const {
    return kind_ == o.kind_ && x_block_ == o.x_block_ && z_block_ == o.z_block_ &&
           mix_block_ == o.mix_block_ && sign_vector_ == o.sign_vector_;
  }
  bool operator!=(const CliffordTableau& o) const { return !(*this == o); }

  /// Grid rendering of the full matrix with block separators.
  std::string grid_str() const {
    const std::size_t m = num_qubits();
    const Gf2Matrix t = full_matrix();
    std::string out;
    for (std::size_t i = 0; i < 2 * m; ++i) {
      if (i == m) {
        for (std::size_t j = 0; j < 2 * m; ++j) out += (j == m) ? "+-" : "--";
        out.back() = '\n';
      }
      for (std::size_t j = 0; j < 2 * m; ++j) {
        if (j == m) out += "| ";
        out += t.get(i, j) ? "1 " : "0 ";
      }
      out.back() = '\n';
    }
    return out;
  }

 private:
  TableauKind kind_;
  Gf2Matrix x_block_;
  Gf2Matrix z_block_;
  Gf2Matrix mix_block_;
  Gf2Vector sign_vector_;
};

/// Tableau induced by a mode permutation: x = z = Pi_P and
/// mix = Q_P = L Pi_P + Pi_P L with L the strictly lower triangle of ones.
/// No sign arises for these tableaux.
inline CliffordTableau tableau_from_permutation(const Permutation& p) {
  const std::size_t m = p.size();
  const Gf2Matrix pi = p.to_matrix();
  const Gf2Matrix lower = Gf2Matrix::lower_triangular_ones(m);
  const Gf2Matrix q = (lower * pi) ^ (pi * lower);
  return CliffordTableau(TableauKind::permutation, pi, pi, q, Gf2Vector(2 * m));
}

inline PauliString conjugate_string(const CliffordTableau& t, const PauliString& p) {
  if (t.num_qubits() != p.num_qubits())
    throw std::invalid_argument("conjugate_string: qubit count mismatch");
  const Gf2Vector r_out = t.x_block() * p.r();
  const Gf2Vector s_out = (t.z_block() * p.s()) ^ (t.mix_block() * p.r());
  const int sign = t.sign_vector().dot(p.r().concat(p.s())) ? 2 : 0;
  return PauliString(r_out, s_out, p.phase_k() + sign);
}

inline PauliSum conjugate_sum(const CliffordTableau& t, const PauliSum& h) {
  if (t.num_qubits() != h.num_qubits())
    throw std::invalid_argument("conjugate_sum: qubit count mismatch");
  PauliSum out(h.num_qubits());
  for (const auto& [key, coeff] : h.terms())
    out.add(coeff, conjugate_string(t, PauliString(key.r, key.s)));
  return out;
}

/// Tableau of applying `before` first and `after` second. Only same-kind
/// composition is defined; the sign data of the composite is
/// sign_before + T_before^T sign_after.
inline CliffordTableau compose(const CliffordTableau& after, const CliffordTableau& before) {
  if (after.num_qubits() != before.num_qubits())
    throw std::invalid_argument("compose: qubit count mismatch");
  if (after.kind() != before.kind())
    throw std::invalid_argument("compose: mixed permutation/affine composition is not defined");
  const Gf2Matrix x = after.x_block() * before.x_block();
  const Gf2Matrix z = after.z_block() * before.z_block();
  const Gf2Matrix mix = (after.mix_block() * before.x_block()) ^ (after.z_block() * before.mix_block());
  const Gf2Vector sign =
      before.sign_vector() ^ (before.full_matrix().transpose() * after.sign_vector());
  return CliffordTableau(after.kind(), x, z, mix, sign);
}

/// Sign (-1)^tau_P(occupation): parity of the permutation that reorders the
/// image of the occupied index sequence, computed by inversion counting.
inline int cp_sign(const Permutation& p, const Gf2Vector& occupation) {
  if (occupation.size() != p.size()) throw std::invalid_argument("cp_sign: size mismatch");
  std::vector<std::size_t> image;
  for (std::size_t j = 1; j <= p.size(); ++j) {
    if (occupation.get(j - 1)) image.push_back(p(j));
  }
  return reorder_sign(image);
}

/// Dense signed permutation matrix of C_P on the 2^M qubit states.
inline DenseOperator cp_dense(const Permutation& p, std::size_t m) {
  if (p.size() != m) throw std::invalid_argument("cp_dense: size mismatch");
  if (m > kDenseQubitCap) throw std::invalid_argument("cp_dense: dense cap exceeded");
  const std::uint64_t dim = std::uint64_t{1} << m;
  DenseOperator out = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                          static_cast<Eigen::Index>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    const Gf2Vector occupation = occupation_from_index(col, m);
    const Gf2Vector image = p.apply(occupation);
    out(static_cast<Eigen::Index>(basis_index(image)), static_cast<Eigen::Index>(col)) =
        static_cast<double>(cp_sign(p, occupation));
  }
  return out;
}

/// True when conjugating by the permutation tableau maps the sum to itself
/// term for term.
inline bool verify_invariance(const PauliSum& h, const Permutation& p,
                              double tol = kZeroTolerance) {
  return conjugate_sum(tableau_from_permutation(p), h).approx_equal(h, tol);
}

/// Standard symplectic form on (r, s) pairs.
inline Gf2Matrix symplectic_form(std::size_t m) {
  Gf2Matrix omega(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    omega.set(i, m + i, true);
    omega.set(m + i, i, true);
  }
  return omega;
}

inline bool preserves_symplectic_form(const CliffordTableau& t) {
  const Gf2Matrix full = t.full_matrix();
  const Gf2Matrix omega = symplectic_form(t.num_qubits());
  return full.transpose() * omega * full == omega;
}

}  // namespace paulisym
