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

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "paulisym/dense.hpp"
#include "paulisym/gf2.hpp"
#include "paulisym/pauli.hpp"

namespace paulisym {

/// Largest fixed-particle-number sector for which dense matrices are built.
inline constexpr std::size_t kSectorDimCap = 4096;

/// Bijection of the mode labels 1..M, stored as the image sequence P(1..M).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
      if (v < 1 || v > image_.size() || seen[v - 1])
        throw std::invalid_argument("Permutation: image is not a bijection");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(std::size_t m) {
    std::vector<std::size_t> image(m);
    std::iota(image.begin(), image.end(), std::size_t{1});
    return Permutation(std::move(image));
  }

  std::size_t size() const { return image_.size(); }

  /// P(i) with 1-based i.
  std::size_t operator()(std::size_t i) const {
    if (i < 1 || i > image_.size()) throw std::out_of_range("Permutation: index out of range");
    return image_[i - 1];
  }

  const std::vector<std::size_t>& image() const { return image_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] != i + 1) return false;
    }
    return true;
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
  }

  /// (after o before)(i) = after(before(i)).
  friend Permutation compose(const Permutation& after, const Permutation& before) {
    if (after.size() != before.size())
      throw std::invalid_argument("Permutation: size mismatch in composition");
    std::vector<std::size_t> image(after.size());
    for (std::size_t i = 1; i <= after.size(); ++i) image[i - 1] = after(before(i));
    return Permutation(std::move(image));
  }

  std::size_t order() const {
    Permutation power = *this;
    std::size_t n = 1;
    while (!power.is_identity()) {
      power = compose(*this, power);
      ++n;
    }
    return n;
  }

  bool is_involution() const { return order() <= 2; }

  /// Permutation matrix with entries Pi[i][j] = 1 iff i = P(j).
  Gf2Matrix to_matrix() const {
    Gf2Matrix pi(size(), size());
    for (std::size_t j = 1; j <= size(); ++j) pi.set(image_[j - 1] - 1, j - 1, true);
    return pi;
  }

  /// Image of an occupation vector: (Pi v)_{P(j)} = v_j.
  Gf2Vector apply(const Gf2Vector& occupation) const {
    if (occupation.size() != size())
      throw std::invalid_argument("Permutation: occupation size mismatch");
    Gf2Vector out(size());
    for (std::size_t j = 1; j <= size(); ++j) {
      if (occupation.get(j - 1)) out.set(image_[j - 1] - 1, true);
    }
    return out;
  }

  bool operator==(const Permutation& o) const { return image_ == o.image_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

 private:
  std::vector<std::size_t> image_;
};

/// Antisymmetric basis ket |j1 ... jN> with strictly increasing occupied
/// mode indices (1-based).
struct OrderedKet {
  std::vector<std::size_t> occupied;

  OrderedKet() = default;
  explicit OrderedKet(std::vector<std::size_t> modes) : occupied(std::move(modes)) {
    for (std::size_t k = 1; k < occupied.size(); ++k) {
      if (occupied[k - 1] >= occupied[k])
        throw std::invalid_argument("OrderedKet: indices must strictly increase");
    }
  }

  std::size_t particles() const { return occupied.size(); }

  Gf2Vector occupation(std::size_t m) const {
    Gf2Vector v(m);
    for (std::size_t j : occupied) v.set(j - 1, true);
    return v;
  }

  static OrderedKet from_occupation(const Gf2Vector& v) {
    std::vector<std::size_t> modes;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v.get(j)) modes.push_back(j + 1);
    }
    return OrderedKet(std::move(modes));
  }

  bool operator==(const OrderedKet& o) const { return occupied == o.occupied; }
  bool operator<(const OrderedKet& o) const { return occupied < o.occupied; }
};

/// Result of applying a ladder operator: sign in {-1, 0, +1}; the ket is
/// meaningful only when sign is nonzero.
struct LadderResult {
  int sign = 0;
  OrderedKet ket;
};

/// a_i |j1 ... jN>: zero if i is unoccupied, otherwise sign (-1)^(N+l) with l
/// the 1-based position of i, and the ket with i removed.
inline LadderResult apply_annihilation(std::size_t i, const OrderedKet& ket) {
  const auto it = std::find(ket.occupied.begin(), ket.occupied.end(), i);
  if (it == ket.occupied.end()) return {};
  const std::size_t l = static_cast<std::size_t>(it - ket.occupied.begin()) + 1;
  const std::size_t n = ket.particles();
  OrderedKet out = ket;
  out.occupied.erase(out.occupied.begin() + static_cast<std::ptrdiff_t>(l - 1));
  return {((n + l) % 2 == 0) ? 1 : -1, std::move(out)};
}

/// a^dag_i |j1 ... jN>: zero if i is occupied, otherwise sign (-1)^(N+1-l)
/// with l the insertion position, and the ket with i inserted. The sign
/// counts the occupied modes above i, matching the Jordan-Wigner Z tail.
inline LadderResult apply_creation(std::size_t i, const OrderedKet& ket) {
  const auto it = std::lower_bound(ket.occupied.begin(), ket.occupied.end(), i);
  if (it != ket.occupied.end() && *it == i) return {};
  const std::size_t l = static_cast<std::size_t>(it - ket.occupied.begin()) + 1;
  const std::size_t n = ket.particles();
  OrderedKet out = ket;
  out.occupied.insert(out.occupied.begin() + static_cast<std::ptrdiff_t>(l - 1), i);
  return {((n + 1 - l) % 2 == 0) ? 1 : -1, std::move(out)};
}

struct OneBodyTerm {
  std::size_t i, j;
  Complex coeff;
};

struct TwoBodyTerm {
  std::size_t i, j, k, l;
  Complex coeff;
};

/// Second-quantized Hamiltonian: sum of h_ij adag_i a_j and
/// v_ijkl adag_i adag_j a_k a_l over 1-based mode indices.
struct SecondQuantizedHamiltonian {
  std::size_t modes = 0;
  std::vector<OneBodyTerm> one_body;
  std::vector<TwoBodyTerm> two_body;

  void validate() const {
    auto check = [this](std::size_t idx) {
      if (idx < 1 || idx > modes)
        throw std::out_of_range("SecondQuantizedHamiltonian: mode index out of range");
    };
    for (const auto& t : one_body) {
      check(t.i);
      check(t.j);
    }
    for (const auto& t : two_body) {
      check(t.i);
      check(t.j);
      check(t.k);
      check(t.l);
    }
  }

  /// Coefficient maps with duplicate index tuples merged.
  std::map<std::pair<std::size_t, std::size_t>, Complex> collected_one_body() const {
    std::map<std::pair<std::size_t, std::size_t>, Complex> out;
    for (const auto& t : one_body) out[{t.i, t.j}] += t.coeff;
    prune(out);
    return out;
  }

  std::map<std::array<std::size_t, 4>, Complex> collected_two_body() const {
    std::map<std::array<std::size_t, 4>, Complex> out;
    for (const auto& t : two_body) out[{t.i, t.j, t.k, t.l}] += t.coeff;
    prune(out);
    return out;
  }

 private:
  template <class Map>
  static void prune(Map& m) {
    for (auto it = m.begin(); it != m.end();) {
      if (std::abs(it->second) < kZeroTolerance) {
        it = m.erase(it);
      } else {
        ++it;
      }
    }
  }
};

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

/// All N-particle ordered kets on M modes, in lexicographic order of the
/// occupied index lists.
inline std::vector<OrderedKet> enumerate_kets(std::size_t m, std::size_t n) {
  if (n > m) throw std::invalid_argument("enumerate_kets: particle count exceeds modes");
  std::vector<OrderedKet> kets;
  std::vector<std::size_t> current(n);
  std::iota(current.begin(), current.end(), std::size_t{1});
  if (n == 0) {
    kets.emplace_back();
    return kets;
  }
  while (true) {
    kets.push_back(OrderedKet(current));
    std::size_t k = n;
    while (k > 0 && current[k - 1] == m - n + k) --k;
    if (k == 0) break;
    ++current[k - 1];
    for (std::size_t j = k; j < n; ++j) current[j] = current[j - 1] + 1;
  }
  return kets;
}

namespace detail {

inline void check_sector_cap(std::size_t m, std::size_t n) {
  if (n > m) throw std::invalid_argument("sector: particle count exceeds modes");
  if (binomial(m, n) > kSectorDimCap) throw std::invalid_argument("sector: dense cap exceeded");
}

inline std::map<OrderedKet, std::size_t> ket_index(const std::vector<OrderedKet>& kets) {
  std::map<OrderedKet, std::size_t> index;
  for (std::size_t i = 0; i < kets.size(); ++i) index[kets[i]] = i;
  return index;
}

/// Applies a product of ladder operators (leftmost entry acts last). Each
/// entry is (mode, daggered).
inline LadderResult apply_operator_string(
    const std::vector<std::pair<std::size_t, bool>>& ops, const OrderedKet& ket) {
  LadderResult state{1, ket};
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    LadderResult next =
        it->second ? apply_creation(it->first, state.ket) : apply_annihilation(it->first, state.ket);
    if (next.sign == 0) return {};
    next.sign *= state.sign;
    state = std::move(next);
  }
  return state;
}

}  // namespace detail

/// Matrix <K|H|L> over the N-particle ordered kets in lexicographic order.
inline DenseOperator sector_matrix(const SecondQuantizedHamiltonian& h, std::size_t n) {
  detail::check_sector_cap(h.modes, n);
  const std::vector<OrderedKet> kets = enumerate_kets(h.modes, n);
  const auto index = detail::ket_index(kets);
  const auto dim = static_cast<Eigen::Index>(kets.size());

  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (std::size_t col = 0; col < kets.size(); ++col) {
    for (const auto& t : h.one_body) {
      const LadderResult res =
          detail::apply_operator_string({{t.i, true}, {t.j, false}}, kets[col]);
      if (res.sign != 0)
        out(static_cast<Eigen::Index>(index.at(res.ket)), static_cast<Eigen::Index>(col)) +=
            t.coeff * static_cast<double>(res.sign);
    }
    for (const auto& t : h.two_body) {
      const LadderResult res = detail::apply_operator_string(
          {{t.i, true}, {t.j, true}, {t.k, false}, {t.l, false}}, kets[col]);
      if (res.sign != 0)
        out(static_cast<Eigen::Index>(index.at(res.ket)), static_cast<Eigen::Index>(col)) +=
            t.coeff * static_cast<double>(res.sign);
    }
  }
  return out;
}

/// Parity of the permutation that sorts the image sequence P(j1), ..., P(jN),
/// computed by inversion counting.
inline int reorder_sign(const std::vector<std::size_t>& image_sequence) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < image_sequence.size(); ++a) {
    for (std::size_t b = a + 1; b < image_sequence.size(); ++b) {
      if (image_sequence[a] > image_sequence[b]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Signed permutation matrix of the operator U(P)|J> = |P(J)> on the
/// N-particle ordered kets.
inline DenseOperator permutation_rep(const Permutation& p, std::size_t n) {
  detail::check_sector_cap(p.size(), n);
  const std::vector<OrderedKet> kets = enumerate_kets(p.size(), n);
  const auto index = detail::ket_index(kets);

  DenseOperator out =
      DenseOperator::Zero(static_cast<Eigen::Index>(kets.size()),
                          static_cast<Eigen::Index>(kets.size()));
  for (std::size_t col = 0; col < kets.size(); ++col) {
    std::vector<std::size_t> image;
    image.reserve(n);
    for (std::size_t j : kets[col].occupied) image.push_back(p(j));
    const int sign = reorder_sign(image);
    std::sort(image.begin(), image.end());
    out(static_cast<Eigen::Index>(index.at(OrderedKet(image))), static_cast<Eigen::Index>(col)) =
        static_cast<double>(sign);
  }
  return out;
}

/// Invariance of the collected coefficient maps under relabeling by P:
/// h_{P(i)P(j)} = h_{ij} and v_{P(ijkl)} = v_{ijkl}.
inline bool check_coefficient_symmetry(const SecondQuantizedHamiltonian& h, const Permutation& p,
                                       double tol = kZeroTolerance) {
  if (p.size() != h.modes) throw std::invalid_argument("check_coefficient_symmetry: size mismatch");

  const auto one = h.collected_one_body();
  for (const auto& [key, coeff] : one) {
    const auto it = one.find({p(key.first), p(key.second)});
    const Complex mapped = it == one.end() ? Complex{0, 0} : it->second;
    if (std::abs(mapped - coeff) > tol) return false;
  }
  const auto two = h.collected_two_body();
  for (const auto& [key, coeff] : two) {
    const auto it = two.find({p(key[0]), p(key[1]), p(key[2]), p(key[3])});
    const Complex mapped = it == two.end() ? Complex{0, 0} : it->second;
    if (std::abs(mapped - coeff) > tol) return false;
  }
  return true;
}

/// Real orthogonal diagonalizer of an involution's permutation matrix,
/// together with the eigenvalue of each output row.
struct BooleanDiagonalizer {
  Eigen::MatrixXd v;
  std::vector<int> eigenvalues;  // entries +1 or -1
};

/// Rows are built from the cycle structure: a fixed point i contributes e_i
/// with eigenvalue +1; a transposition (i, j), i < j, contributes
/// (e_i + e_j)/sqrt(2) with +1 and (e_i - e_j)/sqrt(2) with -1. Rows are
/// ordered by smallest involved index, the + combination first.
inline BooleanDiagonalizer boolean_diagonalizer(const Permutation& p) {
  if (p.order() > 2) throw std::domain_error("boolean_diagonalizer: permutation is not Boolean");
  const std::size_t m = p.size();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  BooleanDiagonalizer out;
  out.v = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  std::size_t row = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t j = p(i);
    if (j == i) {
      out.v(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(i - 1)) = 1.0;
      out.eigenvalues.push_back(1);
      ++row;
    } else if (j > i) {
      out.v(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(i - 1)) = inv_sqrt2;
      out.v(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j - 1)) = inv_sqrt2;
      out.eigenvalues.push_back(1);
      ++row;
      out.v(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(i - 1)) = inv_sqrt2;
      out.v(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j - 1)) = -inv_sqrt2;
      out.eigenvalues.push_back(-1);
      ++row;
    }
  }
  return out;
}

/// Change of one-particle basis c_a = sum_j V_aj a_j: one-body coefficients
/// transform as V h V^T and two-body ones with one V factor per operator
/// index (V real orthogonal). The output is collected and pruned.
inline SecondQuantizedHamiltonian rotate_basis(const SecondQuantizedHamiltonian& h,
                                               const Eigen::MatrixXd& v) {
  const std::size_t m = h.modes;
  if (v.rows() != static_cast<Eigen::Index>(m) || v.cols() != static_cast<Eigen::Index>(m))
    throw std::invalid_argument("rotate_basis: matrix size mismatch");
  if ((v * v.transpose() - Eigen::MatrixXd::Identity(v.rows(), v.cols())).cwiseAbs().maxCoeff() >
      1e-10)
    throw std::invalid_argument("rotate_basis: matrix is not orthogonal");

  SecondQuantizedHamiltonian out;
  out.modes = m;

  DenseOperator h1 = DenseOperator::Zero(static_cast<Eigen::Index>(m),
                                         static_cast<Eigen::Index>(m));
  for (const auto& [key, coeff] : h.collected_one_body())
    h1(static_cast<Eigen::Index>(key.first - 1), static_cast<Eigen::Index>(key.second - 1)) +=
        coeff;
  const DenseOperator h1p = v.cast<Complex>() * h1 * v.transpose().cast<Complex>();
  for (std::size_t a = 1; a <= m; ++a) {
    for (std::size_t b = 1; b <= m; ++b) {
      const Complex c = h1p(static_cast<Eigen::Index>(a - 1), static_cast<Eigen::Index>(b - 1));
      if (std::abs(c) >= kZeroTolerance) out.one_body.push_back({a, b, c});
    }
  }

  if (!h.two_body.empty()) {
    const auto at = [m](std::vector<Complex>& t, std::size_t a, std::size_t b, std::size_t c,
                        std::size_t d) -> Complex& {
      return t[((a * m + b) * m + c) * m + d];
    };
    std::vector<Complex> tensor(m * m * m * m, Complex{0, 0});
    for (const auto& [key, coeff] : h.collected_two_body())
      at(tensor, key[0] - 1, key[1] - 1, key[2] - 1, key[3] - 1) += coeff;

    // One contraction per operator index.
    for (int stage = 0; stage < 4; ++stage) {
      std::vector<Complex> next(m * m * m * m, Complex{0, 0});
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t d = 0; d < m; ++d) {
              const Complex value = at(tensor, a, b, c, d);
              if (std::abs(value) < 1e-15) continue;
              // Contract the leading index and rotate it to the back, so four
              // stages restore the original index order.
              for (std::size_t e = 0; e < m; ++e) {
                at(next, b, c, d, e) +=
                    v(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(a)) * value;
              }
            }
          }
        }
      }
      tensor = std::move(next);
    }

    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) {
          for (std::size_t d = 0; d < m; ++d) {
            const Complex value = at(tensor, a, b, c, d);
            if (std::abs(value) >= kZeroTolerance)
              out.two_body.push_back({a + 1, b + 1, c + 1, d + 1, value});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace paulisym
