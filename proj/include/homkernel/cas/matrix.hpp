#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "homkernel/cas/scalar.hpp"

namespace homkernel::cas {

/// Dense matrix of Scalars, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Scalar>& v);
  static Matrix diagonal(const std::vector<Scalar>& d);
  /// Matrix whose j-th column is cols[j].
  static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Scalar> col(std::size_t j) const;
  std::vector<Scalar> row(std::size_t i) const;
  void set_col(std::size_t j, const std::vector<Scalar>& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  Matrix transpose() const;
  Matrix map(const Bindings& bindings) const;

  bool operator==(const Matrix&) const = default;

  /// Multi-line rendering, one bracketed row per line.
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [A, B] = AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);

Scalar determinant(const Matrix& m);
/// Throws SingularMatrix when the determinant is identically zero.
Matrix inverse(const Matrix& m);

std::vector<Scalar> operator+(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::vector<Scalar> operator-(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::vector<Scalar> scaled(const std::vector<Scalar>& v, const Scalar& s);
bool is_zero(const std::vector<Scalar>& v);
Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::string vec_str(const std::vector<Scalar>& v);

}  // namespace homkernel::cas
