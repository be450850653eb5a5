#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jetfol/scalar.hpp"

namespace jetfol {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, Field f);
Vector unit_vector(std::size_t n, std::size_t i, Field f);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f);
  static Matrix identity(std::size_t n, Field f);
  static Matrix from_rows(const std::vector<Vector>& rows, Field f, std::size_t cols = 0);
  static Matrix from_columns(const std::vector<Vector>& cols, Field f, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_ = Field::rational;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form. In float mode entries below
/// 1e-10 * max|entry| are treated as zero; rational mode is exact.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  Matrix transform;                 // transform * input == reduced (only when tracked)
};

RowEchelon rref(const Matrix& m, bool track_transform = false);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of the right nullspace {x : M x = 0}. A matrix with no rows has the
/// unit basis of its column space.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Basis of the column space, taken from pivot columns of M.
std::vector<Vector> image_basis(const Matrix& m);

struct AffineSolution {
  Vector particular;
  std::vector<Vector> kernel;
};

/// Left vector y with y^T M = 0 and y^T b != 0: proof that M x = b is inconsistent.
struct InfeasibilityCertificate {
  Vector row_combination;
  Scalar residual;  // y^T b
};

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& b);
std::variant<AffineSolution, InfeasibilityCertificate> solve_or_certify(const Matrix& m, const Vector& b);

}  // namespace jetfol
