#pragma once

#include <string>
#include <vector>

#include "xprod/field.hpp"

namespace xprod {

// Dense row-major matrix over an exact field. Never mutated after it leaves a
// constructor path, so values are safe to share between threads.
class Matrix {
 public:
  Matrix() : field_(0), rows_(0), cols_(0) {}
  Matrix(Field field, int rows, int cols);

  static Matrix identity(Field field, int n);
  static Matrix zeros(Field field, int rows, int cols) { return Matrix(field, rows, cols); }
  static Matrix column(Field field, const std::vector<Scalar>& entries);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, const Scalar& v) { at(r, c) = field_.reduce(v); }

  Matrix add(const Matrix& other) const;
  Matrix sub(const Matrix& other) const;
  Matrix neg() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;

  Matrix hstack(const Matrix& other) const;
  Matrix vstack(const Matrix& other) const;
  Matrix col(int j) const;
  Matrix cols_slice(const std::vector<int>& idx) const;
  void set_col(int j, const Matrix& column);

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  // row-major flattening of a rows×cols matrix into a column vector
  Matrix vec() const;
  static Matrix unvec(const Matrix& v, int rows, int cols);

  Matrix kronecker(const Matrix& other) const;

  std::string to_string() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> a_;

  void check_same_shape(const Matrix& other) const;
};

}  // namespace xprod
