#pragma once

// Dense exact linear algebra over the field types of this library
// (Cyclotomic, ParamScalar).  Desk-scale sizes only; everything is plain
// Gauss elimination with exact division, plus a fraction-free (Bareiss) rank
// over polynomial entries for generic-parameter systems.

#include <bc/param.hpp>

#include <vector>

namespace bc {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const {
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const T& b = o.at(k, j);
          if (b.is_zero()) continue;
          r.at(i, j) += a * b;
        }
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  Matrix scaled(const T& c) const {
    Matrix r = *this;
    for (auto& v : r.data_) v *= c;
    return r;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using CycMatrix = Matrix<Cyclotomic>;
using ParamMatrix = Matrix<ParamScalar>;

// Reduced row echelon form (canonical for a given row space).
template <typename T>
Matrix<T> rref(Matrix<T> m) {
  std::size_t lead = 0;
  for (std::size_t r = 0; r < m.rows() && lead < m.cols(); ++r) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, lead).is_zero()) ++pivot;
    if (pivot == m.rows()) {
      --r;
      ++lead;
      continue;
    }
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(pivot, j), m.at(r, j));
    T inv = m.at(r, lead).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.at(r, j) = m.at(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, lead).is_zero()) continue;
      T f = m.at(i, lead);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    ++lead;
  }
  return m;
}

template <typename T>
std::size_t matrix_rank(const Matrix<T>& m) {
  Matrix<T> e = rref(m);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (!e.at(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rank;
  }
  return rank;
}

// Basis of the right kernel {x : m x = 0}, via the rref of m.
template <typename T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m, const T& one) {
  Matrix<T> e = rref(m);
  std::size_t n = m.cols();
  std::vector<long> pivot_of_col(n, -1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    std::size_t j = 0;
    while (j < n && e.at(i, j).is_zero()) ++j;
    if (j == n) break;
    pivot_of_col[j] = static_cast<long>(i);
    ++r;
  }
  std::vector<std::vector<T>> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    std::vector<T> v(n, T());
    v[j] = one;
    for (std::size_t k = 0; k < n; ++k)
      if (pivot_of_col[k] >= 0)
        v[k] = T() - e.at(static_cast<std::size_t>(pivot_of_col[k]), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename T>
Matrix<T> matrix_inverse(const Matrix<T>& m, const T& one) {
  std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n, one);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a.at(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw InvalidInput("matrix is singular");
    if (pivot != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    T f = a.at(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) = a.at(c, j) * f;
      inv.at(c, j) = inv.at(c, j) * f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c).is_zero()) continue;
      T g = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= g * a.at(c, j);
        inv.at(i, j) -= g * inv.at(c, j);
      }
    }
  }
  return inv;
}

// Fraction-free rank over polynomial entries (Bareiss), used for commutant
// computations with the parameters left formal.
std::size_t bareiss_rank(Matrix<Polynomial> m);

inline std::uint64_t hash_matrix(const CycMatrix& m) noexcept {
  std::uint64_t h = hash_combine(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      h = hash_combine(h, m.at(i, j).hash());
  return h;
}

int compare_matrices(const CycMatrix& a, const CycMatrix& b);

}  // namespace bc
