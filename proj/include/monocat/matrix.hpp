//
// Copyright 2026 The monocat Authors
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
//

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "monocat/error.hpp"
#include "monocat/field.hpp"

namespace monocat {

  // Dense row-major matrix over an exact field.
  template <typename Field>
  class Matrix {
   public:
    using field_type = Field;
    using value_type = typename Field::value_type;

    Matrix(Field field, std::size_t rows, std::size_t cols)
        : _field(std::move(field)), _rows(rows), _cols(cols), _entries(rows * cols, _field.zero()) {}

    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : _field(std::move(field)), _rows(rows), _cols(cols), _entries(std::move(entries)) {
      if (_entries.size() != rows * cols) {
        throw Error("matrix entry count " + std::to_string(_entries.size()) + " != "
                    + std::to_string(rows) + "x" + std::to_string(cols));
      }
    }

    static Matrix identity(Field field, std::size_t n) {
      Matrix m(field, n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = m._field.one();
      }
      return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    [[nodiscard]] Field const& field() const noexcept {
      return _field;
    }
    [[nodiscard]] std::vector<value_type> const& entries() const noexcept {
      return _entries;
    }

    value_type& operator()(std::size_t r, std::size_t c) {
      return _entries[r * _cols + c];
    }
    value_type const& operator()(std::size_t r, std::size_t c) const {
      return _entries[r * _cols + c];
    }

    [[nodiscard]] bool is_identity() const {
      if (_rows != _cols) {
        return false;
      }
      for (std::size_t r = 0; r < _rows; ++r) {
        for (std::size_t c = 0; c < _cols; ++c) {
          auto const& v = (*this)(r, c);
          if (r == c ? !(v == _field.one()) : !_field.is_zero(v)) {
            return false;
          }
        }
      }
      return true;
    }

    friend bool operator==(Matrix const& a, Matrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._entries == b._entries;
    }

   private:
    Field                   _field;
    std::size_t             _rows;
    std::size_t             _cols;
    std::vector<value_type> _entries;
  };

  // a * b in the usual (right-to-left) sense: rows(a) x cols(b).
  template <typename Field>
  Matrix<Field> multiply(Matrix<Field> const& a, Matrix<Field> const& b) {
    if (a.cols() != b.rows()) {
      throw Error("matrix product shape mismatch: " + std::to_string(a.cols())
                  + " != " + std::to_string(b.rows()));
    }
    auto const&   f = a.field();
    Matrix<Field> out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        auto const& x = a(i, k);
        if (f.is_zero(x)) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          f.fma(out(i, j), x, b(k, j));
        }
      }
    }
    return out;
  }

  template <typename Field>
  Matrix<Field> kron(Matrix<Field> const& a, Matrix<Field> const& b) {
    auto const&   f = a.field();
    Matrix<Field> out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
      for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
        auto const& x = a(i1, j1);
        if (f.is_zero(x)) {
          continue;
        }
        for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
          for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
            out(i1 * b.rows() + i2, j1 * b.cols() + j2) = f.mul(x, b(i2, j2));
          }
        }
      }
    }
    return out;
  }

  // Row echelon form by exact Gaussian elimination; returns the rank.
  template <typename Field>
  std::size_t rank(Matrix<Field> a) {
    auto const& f    = a.field();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
      std::size_t pivot = rank;
      while (pivot < a.rows() && f.is_zero(a(pivot, col))) {
        ++pivot;
      }
      if (pivot == a.rows()) {
        continue;
      }
      if (pivot != rank) {
        for (std::size_t c = col; c < a.cols(); ++c) {
          std::swap(a(pivot, c), a(rank, c));
        }
      }
      auto const inv = f.inv(a(rank, col));
      for (std::size_t r = rank + 1; r < a.rows(); ++r) {
        if (f.is_zero(a(r, col))) {
          continue;
        }
        auto const factor = f.mul(a(r, col), inv);
        for (std::size_t c = col; c < a.cols(); ++c) {
          a(r, c) = f.sub(a(r, c), f.mul(factor, a(rank, c)));
        }
      }
      ++rank;
    }
    return rank;
  }

  // Gauss-Jordan inverse of a square matrix.
  template <typename Field>
  Matrix<Field> inverse(Matrix<Field> const& m) {
    if (m.rows() != m.cols()) {
      throw NotInvertible("matrix is not square");
    }
    auto const&       f = m.field();
    std::size_t const n = m.rows();
    Matrix<Field>     a = m;
    Matrix<Field>     out = Matrix<Field>::identity(f, n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && f.is_zero(a(pivot, col))) {
        ++pivot;
      }
      if (pivot == n) {
        throw NotInvertible("matrix is singular");
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(out(pivot, c), out(col, c));
      }
      auto const inv = f.inv(a(col, col));
      for (std::size_t c = 0; c < n; ++c) {
        a(col, c)   = f.mul(a(col, c), inv);
        out(col, c) = f.mul(out(col, c), inv);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || f.is_zero(a(r, col))) {
          continue;
        }
        auto const factor = a(r, col);
        for (std::size_t c = 0; c < n; ++c) {
          a(r, c)   = f.sub(a(r, c), f.mul(factor, a(col, c)));
          out(r, c) = f.sub(out(r, c), f.mul(factor, out(col, c)));
        }
      }
    }
    return out;
  }

  template <typename Field>
  std::string to_string(Matrix<Field> const& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out += "[";
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c != 0) {
          out += " ";
        }
        out += m.field().to_string(m(r, c));
      }
      out += "]\n";
    }
    return out;
  }

}  // namespace monocat
