#pragma once

#include <initializer_list>
#include <vector>

#include "su2cert/laurent.hpp"
#include "su2cert/rational.hpp"

namespace su2cert {

/// Dense matrix over an exact scalar (Rational, GaussianRational, Integer).
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<long>(rows.size());
    cols_ = rows_ ? static_cast<long>(rows.begin()->size()) : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (static_cast<long>(r.size()) != cols_)
        throw std::invalid_argument("Matrix: ragged initializer");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static Matrix identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(static_cast<long>(d.size()), static_cast<long>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(long i, long j) { return data_[i * cols_ + j]; }
  const T& operator()(long i, long j) const { return data_[i * cols_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (long j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator*(const T& c, const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = c * a.data_[i];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix pow(long n) const {
    if (!is_square()) throw std::invalid_argument("Matrix::pow: not square");
    if (n < 0) throw std::invalid_argument("Matrix::pow: negative power");
    Matrix out = identity(rows_);
    Matrix base = *this;
    while (n) {
      if (n & 1) out = out * base;
      base = base * base;
      n >>= 1;
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (long i = 0; i < rows_; ++i)
      for (long j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  Matrix hconcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("Matrix::hconcat: row mismatch");
    Matrix out(rows_, cols_ + o.cols_);
    for (long i = 0; i < rows_; ++i) {
      for (long j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
      for (long j = 0; j < o.cols_; ++j) out(i, cols_ + j) = o(i, j);
    }
    return out;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) out(i, j) = U((*this)(i, j));
    return out;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }

  long rows_, cols_;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using GaussMatrix = Matrix<GaussianRational>;
using IntMatrix = Matrix<Integer>;

/// Row rank over the coefficient field, by exact Gaussian elimination.
template <class T>
long rank(Matrix<T> m) {
  long r = 0;
  for (long col = 0; col < m.cols() && r < m.rows(); ++col) {
    long pivot = -1;
    for (long i = r; i < m.rows(); ++i)
      if (!(m(i, col) == T(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (long j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    T inv = T(1) / m(r, col);
    for (long j = col; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (long i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col) == T(0)) continue;
      T f = m(i, col);
      for (long j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return r;
}

template <class T>
long kernel_dimension(const Matrix<T>& m) {
  return m.cols() - rank(m);
}

/// Columns spanning ker(m), from the reduced row echelon form.
template <class T>
Matrix<T> kernel_basis(Matrix<T> m) {
  long rows = m.rows(), cols = m.cols();
  std::vector<long> pivot_col;
  long r = 0;
  for (long col = 0; col < cols && r < rows; ++col) {
    long pivot = -1;
    for (long i = r; i < rows; ++i)
      if (!(m(i, col) == T(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (long j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    T inv = T(1) / m(r, col);
    for (long j = col; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r || m(i, col) == T(0)) continue;
      T f = m(i, col);
      for (long j = col; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (long c : pivot_col) is_pivot[c] = true;
  Matrix<T> basis(cols, cols - r);
  long at = 0;
  for (long free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, at) = T(1);
    for (long i = 0; i < r; ++i) basis(pivot_col[i], at) = -m(i, free);
    ++at;
  }
  return basis;
}

/// Exact determinant by fraction-producing elimination over the field.
template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: not square");
  long n = m.rows();
  T det(1);
  for (long col = 0; col < n; ++col) {
    long pivot = -1;
    for (long i = col; i < n; ++i)
      if (!(m(i, col) == T(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) return T(0);
    if (pivot != col) {
      for (long j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    T inv = T(1) / m(col, col);
    for (long i = col + 1; i < n; ++i) {
      if (m(i, col) == T(0)) continue;
      T f = m(i, col) * inv;
      for (long j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
    }
  }
  return det;
}

Integer int_determinant(const IntMatrix& m);

/// True iff the column space of a equals the column space of b.
template <class T>
bool same_column_space(const Matrix<T>& a, const Matrix<T>& b) {
  long ra = rank(a);
  long rb = rank(b);
  if (ra != rb) return false;
  return rank(a.hconcat(b)) == ra;
}

/// Evaluates an ordinary polynomial at a square matrix (Horner).
template <class T>
Matrix<T> matrix_poly_eval(const RatPoly& p, const Matrix<T>& a) {
  if (!a.is_square()) throw std::invalid_argument("matrix_poly_eval: not square");
  if (!p.is_zero() && p.order() < 0)
    throw std::invalid_argument("matrix_poly_eval: negative exponents");
  long n = a.rows();
  Matrix<T> acc(n, n);
  if (p.is_zero()) return acc;
  long prev = p.degree();
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) acc = acc * a.pow(prev - it->first);
    acc = acc + T(it->second) * Matrix<T>::identity(n);
    prev = it->first;
    first = false;
  }
  if (prev != 0) acc = acc * a.pow(prev);
  return acc;
}

enum class Definiteness { positive_definite, negative_definite, indefinite, degenerate };

const char* to_string(Definiteness d);

/// Sylvester inertia of a symmetric rational matrix via exact congruence
/// reduction; zero diagonal pivots are handled with symmetric swaps and
/// hyperbolic 2x2 blocks.
struct Inertia {
  long positive = 0;
  long negative = 0;
  long zero = 0;
};
Inertia inertia(RatMatrix m);

Definiteness definiteness(const RatMatrix& m);
Definiteness definiteness(const IntMatrix& m);

/// |det M|; zero signals b_1 > 0 for a linking matrix.
Integer h1_order(const IntMatrix& m);

/// Every diagonal entry even, i.e. x.x is even for all integer vectors x.
bool is_even_form(const IntMatrix& m);

/// Nontrivial invariant factors (each > 1, divisibility chain) of coker(M),
/// followed by rank deficiency = number of Z summands, via Smith normal form.
struct CokernelStructure {
  std::vector<Integer> invariant_factors;  // d_1 | d_2 | ... , all >= 2
  long free_rank = 0;
};
CokernelStructure cokernel_structure(IntMatrix m);

}  // namespace su2cert
