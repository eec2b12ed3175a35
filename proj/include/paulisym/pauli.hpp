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

#include <complex>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "paulisym/dense.hpp"
#include "paulisym/gf2.hpp"

namespace paulisym {

using Complex = std::complex<double>;

/// Coefficients below this magnitude are dropped when sums are collected.
inline constexpr double kZeroTolerance = 1e-12;

/// Occupation convention: qubit 1 is the most significant tensor factor, so
/// |v1 ... vM> maps to the integer sum of v_j * 2^(M-j).
inline std::uint64_t basis_index(const Gf2Vector& occupation) {
  std::uint64_t idx = 0;
  const std::size_t m = occupation.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (occupation.get(j)) idx |= std::uint64_t{1} << (m - 1 - j);
  }
  return idx;
}

inline Gf2Vector occupation_from_index(std::uint64_t idx, std::size_t m) {
  Gf2Vector v(m);
  for (std::size_t j = 0; j < m; ++j) {
    if ((idx >> (m - 1 - j)) & 1u) v.set(j, true);
  }
  return v;
}

/// Tensor string i^k X^r Z^s in symplectic form. Y is never stored: it is
/// normalized to i * X Z on construction.
class PauliString {
 public:
  PauliString(Gf2Vector r, Gf2Vector s, int phase_k = 0)
      : r_(std::move(r)), s_(std::move(s)), phase_k_(((phase_k % 4) + 4) % 4) {
    if (r_.size() != s_.size())
      throw std::invalid_argument("PauliString: r and s must have equal length");
  }

  static PauliString identity(std::size_t m) { return PauliString(Gf2Vector(m), Gf2Vector(m)); }

  static PauliString x(std::size_t qubit, std::size_t m) {
    return PauliString(Gf2Vector::unit(m, check_qubit(qubit, m) - 1), Gf2Vector(m));
  }

  static PauliString z(std::size_t qubit, std::size_t m) {
    return PauliString(Gf2Vector(m), Gf2Vector::unit(m, check_qubit(qubit, m) - 1));
  }

  static PauliString y(std::size_t qubit, std::size_t m) {
    const std::size_t i = check_qubit(qubit, m) - 1;
    return PauliString(Gf2Vector::unit(m, i), Gf2Vector::unit(m, i), 1);
  }

  std::size_t num_qubits() const { return r_.size(); }
  const Gf2Vector& r() const { return r_; }
  const Gf2Vector& s() const { return s_; }
  int phase_k() const { return phase_k_; }

  Complex phase() const {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_k_];
  }

  bool is_identity() const { return r_.is_zero() && s_.is_zero() && phase_k_ == 0; }

  bool is_hermitian() const {
    return ((phase_k_ + phase_k_ + 2 * static_cast<int>(r_.dot(s_))) % 4) == 0;
  }

  /// Product from the relation Z^s X^r = (-1)^(s.r) X^r Z^s.
  friend PauliString operator*(const PauliString& p, const PauliString& q) {
    if (p.num_qubits() != q.num_qubits())
      throw std::invalid_argument("PauliString: qubit count mismatch in product");
    const int sign = p.s_.dot(q.r_) ? 2 : 0;
    return PauliString(p.r_ ^ q.r_, p.s_ ^ q.s_, p.phase_k_ + q.phase_k_ + sign);
  }

  bool commutes_with(const PauliString& q) const {
    if (num_qubits() != q.num_qubits())
      throw std::invalid_argument("PauliString: qubit count mismatch in commutation test");
    return (static_cast<int>(r_.dot(q.s_)) + static_cast<int>(s_.dot(q.r_))) % 2 == 0;
  }

  bool operator==(const PauliString& q) const {
    return r_ == q.r_ && s_ == q.s_ && phase_k_ == q.phase_k_;
  }
  bool operator!=(const PauliString& q) const { return !(*this == q); }

  DenseOperator to_dense() const;

  /// Renders the exponent part "X1 X2 Z3" (1-based qubits, X block then Z
  /// block); the phase is not included.
  std::string ops_str() const {
    std::string out;
    for (std::size_t j = 0; j < r_.size(); ++j) {
      if (r_.get(j)) {
        if (!out.empty()) out.push_back(' ');
        out += "X" + std::to_string(j + 1);
      }
    }
    for (std::size_t j = 0; j < s_.size(); ++j) {
      if (s_.get(j)) {
        if (!out.empty()) out.push_back(' ');
        out += "Z" + std::to_string(j + 1);
      }
    }
    if (out.empty()) out = "I";
    return out;
  }

 private:
  static std::size_t check_qubit(std::size_t qubit, std::size_t m) {
    if (qubit < 1 || qubit > m) throw std::out_of_range("PauliString: qubit index out of range");
    return qubit;
  }

  Gf2Vector r_;
  Gf2Vector s_;
  int phase_k_;
};

/// Exponent pair (r, s) ordered lexicographically; the deterministic term
/// order used everywhere.
struct PauliKey {
  Gf2Vector r;
  Gf2Vector s;

  bool operator==(const PauliKey& o) const { return r == o.r && s == o.s; }
  bool operator<(const PauliKey& o) const {
    if (r != o.r) return r < o.r;
    return s < o.s;
  }
};

/// Weighted sum of Pauli strings; string phases are folded into the complex
/// coefficients so each (r, s) slot appears once.
class PauliSum {
 public:
  // num_qubits may be zero: a fully tapered Hamiltonian is a scalar.
  explicit PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  const std::map<PauliKey, Complex>& terms() const { return terms_; }

  void add(Complex coeff, const PauliString& p) {
    if (p.num_qubits() != num_qubits_)
      throw std::invalid_argument("PauliSum: qubit count mismatch in add");
    add_collected(coeff * p.phase(), PauliKey{p.r(), p.s()});
  }

  void add(const PauliSum& other) {
    check_compatible(other);
    for (const auto& [key, coeff] : other.terms_) add_collected(coeff, key);
  }

  PauliSum& operator*=(Complex scale) {
    if (std::abs(scale) < kZeroTolerance) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= scale;
    return *this;
  }

  friend PauliSum operator*(const PauliSum& a, const PauliSum& b) {
    a.check_compatible(b);
    PauliSum out(a.num_qubits_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        const int sign = ka.s.dot(kb.r) ? -1 : 1;
        out.add_collected(ca * cb * static_cast<double>(sign),
                          PauliKey{ka.r ^ kb.r, ka.s ^ kb.s});
      }
    }
    return out;
  }

  Complex coefficient(const PauliString& p) const {
    const auto it = terms_.find(PauliKey{p.r(), p.s()});
    if (it == terms_.end()) return {0, 0};
    return it->second * p.phase();
  }

  bool commutes_with(const PauliString& p) const {
    if (p.num_qubits() != num_qubits_)
      throw std::invalid_argument("PauliSum: qubit count mismatch in commutation test");
    for (const auto& [key, coeff] : terms_) {
      const int symp = (static_cast<int>(key.r.dot(p.s())) + static_cast<int>(key.s.dot(p.r()))) % 2;
      if (symp != 0) return false;
    }
    return true;
  }

  bool is_hermitian(double tol = kZeroTolerance) const {
    for (const auto& [key, coeff] : terms_) {
      const double sign = key.r.dot(key.s) ? -1.0 : 1.0;
      if (std::abs(coeff - std::conj(coeff) * sign) > tol) return false;
    }
    return true;
  }

  bool approx_equal(const PauliSum& other, double tol = kZeroTolerance) const {
    if (num_qubits_ != other.num_qubits_) return false;
    for (const auto& [key, coeff] : terms_) {
      auto it = other.terms_.find(key);
      const Complex oc = it == other.terms_.end() ? Complex{0, 0} : it->second;
      if (std::abs(coeff - oc) > tol) return false;
    }
    for (const auto& [key, coeff] : other.terms_) {
      if (terms_.find(key) == terms_.end() && std::abs(coeff) > tol) return false;
    }
    return true;
  }

  DenseOperator to_dense() const {
    if (num_qubits_ > kDenseQubitCap)
      throw std::invalid_argument("PauliSum: dense cap exceeded");
    const std::uint64_t dim = std::uint64_t{1} << num_qubits_;
    DenseOperator out = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
    for (const auto& [key, coeff] : terms_) {
      const std::uint64_t rmask = basis_index(key.r);
      const std::uint64_t smask = basis_index(key.s);
      for (std::uint64_t col = 0; col < dim; ++col) {
        const double sign = (__builtin_popcountll(smask & col) & 1) ? -1.0 : 1.0;
        out(static_cast<Eigen::Index>(col ^ rmask), static_cast<Eigen::Index>(col)) +=
            coeff * sign;
      }
    }
    return out;
  }

  std::string str() const {
    std::string out;
    for (const auto& [key, coeff] : terms_) {
      if (!out.empty()) out.push_back('\n');
      out += format_coefficient(coeff);
      out.push_back(' ');
      out += PauliString(key.r, key.s).ops_str();
    }
    return out;
  }

  static std::string format_coefficient(Complex c) {
    char buf[64];
    if (std::abs(c.imag()) < kZeroTolerance) {
      std::snprintf(buf, sizeof(buf), "%+.12g", c.real());
      return buf;
    }
    if (std::abs(c.real()) < kZeroTolerance) {
      std::snprintf(buf, sizeof(buf), "%+.12gi", c.imag());
      return buf;
    }
    std::snprintf(buf, sizeof(buf), "+(%.12g%+.12gi)", c.real(), c.imag());
    return buf;
  }

 private:
  void check_compatible(const PauliSum& other) const {
    if (num_qubits_ != other.num_qubits_)
      throw std::invalid_argument("PauliSum: qubit count mismatch");
  }

  void add_collected(Complex coeff, const PauliKey& key) {
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) it->second += coeff;
    if (std::abs(it->second) < kZeroTolerance) terms_.erase(it);
  }

  std::size_t num_qubits_;
  std::map<PauliKey, Complex> terms_;
};

inline DenseOperator PauliString::to_dense() const {
  PauliSum one(num_qubits());
  one.add(1.0, *this);
  return one.to_dense();
}

/// True when every term of the sum commutes with the string. For collected
/// sums with distinct (r, s) slots this is also necessary for [h, p] = 0.
inline bool commutator_is_zero(const PauliSum& h, const PauliString& p) {
  return h.commutes_with(p);
}

}  // namespace paulisym
