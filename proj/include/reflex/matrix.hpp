#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reflex/scalar.hpp"

namespace reflex {

using Vector = std::vector<GaussianRational>;

// Dense matrix over Q(i), row-major. Zero-row and zero-column shapes are
// valid values (empty constraint stacks, bases of the zero space).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);
  // Matrix unit E_{ij} (1 at row i, column j).
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  GaussianRational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Vector row(std::size_t i) const;

  Matrix transpose() const;
  Matrix conjugate() const;
  Matrix adjoint() const { return conjugate().transpose(); }
  GaussianRational trace() const;

  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussianRational& s);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const GaussianRational& s) { return a *= s; }
  friend Matrix operator*(const GaussianRational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Total order for canonical sorting; shape first, then entries.
  static int compare(const Matrix& a, const Matrix& b);

  std::string str() const;  // debug form, one bracketed row per line

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GaussianRational> entries_;
};

Vector mul(const Matrix& a, const Vector& x);

// The unique reduced row echelon form; idempotent, row space preserved.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Canonical basis of {x : m x = 0}, one vector per free column of rref(m),
// ordered by free column index. Every returned v satisfies m v = 0 exactly.
std::vector<Vector> nullspace(const Matrix& m);

// Standard block Kronecker product, consistent with column-stacking vec:
// vec(T A) = kron(I, T) vec(A) and vec(B T) = kron(T^t, I) vec(B).
Matrix kron(const Matrix& a, const Matrix& b);

// Column-stacking vectorization: vec(m)[j*rows + i] = m(i, j).
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols);

Matrix inverse(const Matrix& m);  // exact; throws std::domain_error if singular

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);

}  // namespace reflex
