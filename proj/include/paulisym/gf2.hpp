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

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace paulisym {

/// Fixed-length vector over the two-element field, bit-packed into 64-bit
/// words. Addition is XOR, the dot product is the parity of the bitwise AND.
class Gf2Vector {
 public:
  Gf2Vector() = default;

  explicit Gf2Vector(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  Gf2Vector(std::initializer_list<int> bits) : Gf2Vector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
  }

  static Gf2Vector unit(std::size_t size, std::size_t index) {
    Gf2Vector v(size);
    v.set(index, true);
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const {
    check_index(i);
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  void set(std::size_t i, bool value) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }

  bool operator[](std::size_t i) const { return get(i); }

  Gf2Vector& operator^=(const Gf2Vector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }

  /// Parity of the bitwise AND.
  bool dot(const Gf2Vector& other) const {
    check_same_size(other);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return parity64(acc);
  }

  std::size_t weight() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(popcount64(w));
    return n;
  }

  bool is_zero() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  /// Index of the first set bit, or size() when the vector is zero.
  std::size_t leading_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(ctz64(words_[w]));
    }
    return size_;
  }

  /// Concatenation (this | tail), used to assemble symplectic (r,s) vectors.
  Gf2Vector concat(const Gf2Vector& tail) const {
    Gf2Vector out(size_ + tail.size_);
    for (std::size_t i = 0; i < size_; ++i) out.set(i, get(i));
    for (std::size_t i = 0; i < tail.size_; ++i) out.set(size_ + i, tail.get(i));
    return out;
  }

  Gf2Vector slice(std::size_t begin, std::size_t end) const {
    if (begin > end || end > size_) throw std::out_of_range("Gf2Vector::slice: bad range");
    Gf2Vector out(end - begin);
    for (std::size_t i = begin; i < end; ++i) out.set(i - begin, get(i));
    return out;
  }

  bool operator==(const Gf2Vector& other) const {
    return size_ == other.size_ && words_ == other.words_;
  }
  bool operator!=(const Gf2Vector& other) const { return !(*this == other); }

  /// Lexicographic order on the bit sequence b1 b2 ... bn (0 before 1).
  bool operator<(const Gf2Vector& other) const {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::uint64_t diff = words_[w] ^ other.words_[w];
      if (diff != 0) {
        const int bit = ctz64(diff);
        return ((words_[w] >> bit) & 1u) == 0;
      }
    }
    return false;
  }

  std::string str() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
  }

 private:
  static bool parity64(std::uint64_t w) { return popcount64(w) & 1; }
  static int popcount64(std::uint64_t w) { return __builtin_popcountll(w); }
  static int ctz64(std::uint64_t w) { return __builtin_ctzll(w); }

  void check_index(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("Gf2Vector: index out of range");
  }
  void check_same_size(const Gf2Vector& other) const {
    if (size_ != other.size_) throw std::invalid_argument("Gf2Vector: size mismatch");
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense matrix over the two-element field, stored as a vector of bit-packed
/// rows. Elimination routines work row-wise so XOR of whole rows is
/// word-parallel.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;

  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, Gf2Vector(cols)) {}

  Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Gf2Matrix: ragged rows");
      data_.emplace_back(r);
    }
  }

  static Gf2Matrix identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static Gf2Matrix zero(std::size_t rows, std::size_t cols) { return Gf2Matrix(rows, cols); }

  /// Strictly lower triangular matrix of ones.
  static Gf2Matrix lower_triangular_ones(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) m.set(i, j, true);
    }
    return m;
  }

  static Gf2Matrix from_rows(const std::vector<Gf2Vector>& rows, std::size_t cols) {
    Gf2Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("Gf2Matrix: row size mismatch");
      m.data_[i] = rows[i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return row(i).get(j); }
  void set(std::size_t i, std::size_t j, bool v) { mutable_row(i).set(j, v); }

  const Gf2Vector& row(std::size_t i) const {
    if (i >= rows_) throw std::out_of_range("Gf2Matrix: row out of range");
    return data_[i];
  }

  Gf2Vector column(std::size_t j) const {
    Gf2Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.set(i, get(i, j));
    return c;
  }

  bool operator==(const Gf2Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  bool operator!=(const Gf2Matrix& other) const { return !(*this == other); }

  Gf2Matrix& operator^=(const Gf2Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw std::invalid_argument("Gf2Matrix: shape mismatch in addition");
    for (std::size_t i = 0; i < rows_; ++i) data_[i] ^= other.data_[i];
    return *this;
  }

  friend Gf2Matrix operator^(Gf2Matrix a, const Gf2Matrix& b) { return a ^= b; }

  /// Row i of the product is the XOR of the rows of `b` selected by row i of
  /// `a`, so multiplication is word-parallel as well.
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Gf2Matrix: dimension mismatch in product");
    Gf2Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (a.get(i, j)) out.data_[i] ^= b.data_[j];
      }
    }
    return out;
  }

  Gf2Vector operator*(const Gf2Vector& x) const {
    if (cols_ != x.size()) throw std::invalid_argument("Gf2Matrix: dimension mismatch in apply");
    Gf2Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.set(i, data_[i].dot(x));
    return out;
  }

  Gf2Matrix transpose() const {
    Gf2Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (get(i, j)) out.set(j, i, true);
      }
    }
    return out;
  }

  /// Reduced row echelon form; returns the pivot column of each nonzero row.
  std::vector<std::size_t> reduce_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pivot_row = rows_;
      for (std::size_t i = r; i < rows_; ++i) {
        if (get(i, c)) {
          pivot_row = i;
          break;
        }
      }
      if (pivot_row == rows_) continue;
      std::swap(data_[r], data_[pivot_row]);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i != r && get(i, c)) data_[i] ^= data_[r];
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Gf2Matrix copy = *this;
    return copy.reduce_in_place().size();
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += data_[i].str();
      s.push_back('\n');
    }
    return s;
  }

 private:
  Gf2Vector& mutable_row(std::size_t i) {
    if (i >= rows_) throw std::out_of_range("Gf2Matrix: row out of range");
    return data_[i];
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> data_;
};

/// Canonical basis of the nullspace {x : m x = 0}. Pivot columns are chosen
/// left to right; one basis vector per free column, in increasing column
/// order, with a unit entry at its free column.
inline std::vector<Gf2Vector> kernel(const Gf2Matrix& m) {
  Gf2Matrix red = m;
  const std::vector<std::size_t> pivots = red.reduce_in_place();

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<Gf2Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector x(m.cols());
    x.set(f, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (red.get(i, f)) x.set(pivots[i], true);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Inverse over the two-element field via Gauss-Jordan elimination.
/// Throws std::domain_error when the matrix is singular.
inline Gf2Matrix inverse(const Gf2Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();

  std::vector<Gf2Vector> work;
  work.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    work.push_back(m.row(i).concat(Gf2Vector::unit(n, i)));

  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot_row = n;
    for (std::size_t i = r; i < n; ++i) {
      if (work[i].get(c)) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == n) throw std::domain_error("inverse: singular matrix");
    std::swap(work[r], work[pivot_row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != r && work[i].get(c)) work[i] ^= work[r];
    }
    ++r;
  }

  Gf2Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, work[i].get(n + j));
  }
  return out;
}

/// Completes a linearly independent row set to an invertible n x n matrix.
/// The input rows are kept verbatim (and in order) as the leading rows; the
/// remaining rows are the standard basis vectors of the non-pivot columns of
/// the input row space, in increasing column order. Throws std::domain_error
/// when the input rows are dependent.
inline Gf2Matrix complete_to_invertible(const std::vector<Gf2Vector>& rows, std::size_t n) {
  if (rows.size() > n) throw std::invalid_argument("complete_to_invertible: too many rows");
  for (const Gf2Vector& r : rows) {
    if (r.size() != n) throw std::invalid_argument("complete_to_invertible: row size mismatch");
  }

  Gf2Matrix echelon = Gf2Matrix::from_rows(rows, n);
  const std::vector<std::size_t> pivots = echelon.reduce_in_place();
  if (pivots.size() != rows.size())
    throw std::domain_error("complete_to_invertible: rows are linearly dependent");

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  Gf2Matrix out(n, n);
  std::size_t next = 0;
  for (const Gf2Vector& r : rows) {
    for (std::size_t j = 0; j < n; ++j) out.set(next, j, r.get(j));
    ++next;
  }
  for (std::size_t j = 0; j < n && next < n; ++j) {
    if (!is_pivot[j]) out.set(next++, j, true);
  }
  return out;
}

/// Row space of `vectors` as a unique reduced-echelon row basis, for
/// order-independent subspace comparisons.
inline std::vector<Gf2Vector> canonical_span(const std::vector<Gf2Vector>& vectors, std::size_t n) {
  Gf2Matrix m = Gf2Matrix::from_rows(vectors, n);
  const std::vector<std::size_t> pivots = m.reduce_in_place();
  std::vector<Gf2Vector> basis;
  basis.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(m.row(i));
  return basis;
}

inline bool same_span(const std::vector<Gf2Vector>& a, const std::vector<Gf2Vector>& b,
                      std::size_t n) {
  return canonical_span(a, n) == canonical_span(b, n);
}

inline bool in_span(const Gf2Vector& v, const std::vector<Gf2Vector>& basis, std::size_t n) {
  std::vector<Gf2Vector> extended = basis;
  extended.push_back(v);
  return canonical_span(basis, n).size() == canonical_span(extended, n).size();
}

}  // namespace paulisym
