#include "xprod/matrix.hpp"

#include <sstream>

#include "xprod/kernels.hpp"

namespace xprod {

Matrix::Matrix(Field field, int rows, int cols) : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(errc::dimension_mismatch, "negative matrix shape");
  a_.assign(static_cast<size_t>(rows) * cols, Scalar(0));
}

Matrix Matrix::identity(Field field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::column(Field field, const std::vector<Scalar>& entries) {
  Matrix m(field, static_cast<int>(entries.size()), 1);
  for (size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), 0) = field.reduce(entries[i]);
  return m;
}

void Matrix::check_same_shape(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || field_ != other.field_)
    fail(errc::dimension_mismatch, "matrix shapes or fields differ");
}

Matrix Matrix::add(const Matrix& other) const {
  check_same_shape(other);
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], other.a_[i]);
  return r;
}

Matrix Matrix::sub(const Matrix& other) const {
  check_same_shape(other);
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], other.a_[i]);
  return r;
}

Matrix Matrix::neg() const {
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.neg(a_[i]);
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(field_, rows_, cols_);
  Scalar cc = field_.reduce(c);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.mul(a_[i], cc);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::operator*(const Matrix& other) const { return kernels::mat_mul(*this, other); }

Matrix Matrix::hstack(const Matrix& other) const {
  if (rows_ != other.rows_ || field_ != other.field_) fail(errc::dimension_mismatch, "hstack row mismatch");
  Matrix r(field_, rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < other.cols_; ++j) r.at(i, cols_ + j) = other.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& other) const {
  if (cols_ != other.cols_ || field_ != other.field_) fail(errc::dimension_mismatch, "vstack column mismatch");
  Matrix r(field_, rows_ + other.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < other.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = other.at(i, j);
  return r;
}

Matrix Matrix::col(int j) const {
  Matrix r(field_, rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

Matrix Matrix::cols_slice(const std::vector<int>& idx) const {
  Matrix r(field_, rows_, static_cast<int>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return r;
}

void Matrix::set_col(int j, const Matrix& column) {
  if (column.rows() != rows_ || column.cols() != 1) fail(errc::dimension_mismatch, "set_col shape");
  for (int i = 0; i < rows_; ++i) at(i, j) = column.at(i, 0);
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || field_ != other.field_) return false;
  return a_ == other.a_;
}

Matrix Matrix::vec() const {
  Matrix r(field_, rows_ * cols_, 1);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i * cols_ + j, 0) = at(i, j);
  return r;
}

Matrix Matrix::unvec(const Matrix& v, int rows, int cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) fail(errc::dimension_mismatch, "unvec shape");
  Matrix r(v.field(), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(i, j) = v.at(i * cols + j, 0);
  return r;
}

Matrix Matrix::kronecker(const Matrix& other) const {
  if (field_ != other.field_) fail(errc::dimension_mismatch, "kronecker field mismatch");
  Matrix r(field_, rows_ * other.rows_, cols_ * other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (sgn(at(i, j)) == 0) continue;
      for (int k = 0; k < other.rows_; ++k)
        for (int l = 0; l < other.cols_; ++l)
          r.at(i * other.rows_ + k, j * other.cols_ + l) = field_.mul(at(i, j), other.at(k, l));
    }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << field_.to_string(at(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace xprod
