#include "jetfol/matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace jetfol {

Vector zero_vector(std::size_t n, Field f) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(std::size_t n, std::size_t i, Field f) {
  Vector v = zero_vector(n, f);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  if (a.empty()) return Scalar();
  Scalar acc = Scalar::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, Field f, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != f) throw FieldMismatch();
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, Field f, std::size_t rows) {
  return from_rows(cols, f, rows).transpose();
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  if (field_ != o.field_) throw FieldMismatch();
  Matrix p(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) p(i, j) += a * o(k, j);
    }
  return p;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out = zero_vector(rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

namespace {

constexpr double kPivotTolerance = 1e-10;

double max_abs(const Matrix& m) {
  double mx = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) mx = std::max(mx, std::fabs(m(r, c).to_double()));
  return mx;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

RowEchelon rref(const Matrix& input, bool track_transform) {
  Matrix m = input;
  const Field f = m.field();
  const std::size_t R = m.rows(), C = m.cols();
  Matrix t = track_transform ? Matrix::identity(R, f) : Matrix();
  const double tol = f == Field::real ? kPivotTolerance * max_abs(m) : 0.0;
  auto negligible = [&](const Scalar& x) {
    return f == Field::rational ? x.is_zero() : std::fabs(x.to_double()) <= tol;
  };

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t best = R;
    if (f == Field::rational) {
      for (std::size_t r = row; r < R; ++r)
        if (!m(r, col).is_zero()) {
          best = r;
          break;
        }
    } else {
      double bv = tol;
      for (std::size_t r = row; r < R; ++r)
        if (double a = std::fabs(m(r, col).to_double()); a > bv) {
          bv = a;
          best = r;
        }
    }
    if (best == R) {
      for (std::size_t r = row; r < R; ++r) m(r, col) = Scalar::zero(f);
      continue;
    }
    swap_rows(m, row, best);
    if (track_transform) swap_rows(t, row, best);

    Scalar inv = m(row, col).inverse();
    for (std::size_t c = 0; c < C; ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    if (track_transform)
      for (std::size_t c = 0; c < R; ++c)
        if (!t(row, c).is_zero()) t(row, c) *= inv;

    for (std::size_t r = 0; r < R; ++r) {
      if (r == row) continue;
      Scalar factor = m(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = 0; c < C; ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      m(r, col) = Scalar::zero(f);
      if (track_transform)
        for (std::size_t c = 0; c < R; ++c)
          if (!t(row, c).is_zero()) t(r, c) -= factor * t(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  if (f == Field::real)
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t c = 0; c < C; ++c)
        if (negligible(m(r, c))) m(r, c) = Scalar::zero(f);
  return RowEchelon{std::move(m), std::move(pivots), std::move(t)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Scalar determinant(const Matrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = input;
  const Field f = m.field();
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(f);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = n;
    for (std::size_t r = col; r < n; ++r)
      if (!m(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p == n) return Scalar::zero(f);
    if (p != col) {
      swap_rows(m, p, col);
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  auto e = rref(m, true);
  if (e.pivots.size() != m.rows()) return std::nullopt;
  return e.transform;
}

namespace {

std::vector<Vector> kernel_from_reduced(const Matrix& red, const std::vector<std::size_t>& pivots,
                                        std::size_t ncols) {
  const Field f = red.field();
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(ncols, f);
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vector> kernel_basis(const Matrix& m) {
  if (m.rows() == 0) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < m.cols(); ++i) basis.push_back(unit_vector(m.cols(), i, m.field()));
    return basis;
  }
  auto e = rref(m);
  return kernel_from_reduced(e.reduced, e.pivots, m.cols());
}

std::vector<Vector> image_basis(const Matrix& m) {
  std::vector<Vector> out;
  if (m.rows() == 0) return out;
  for (auto p : rref(m).pivots) out.push_back(m.column(p));
  return out;
}

std::variant<AffineSolution, InfeasibilityCertificate> solve_or_certify(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side does not match matrix rows");
  const Field f = m.field();
  const std::size_t R = m.rows(), C = m.cols();
  Matrix aug(R, C + 1, f);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) aug(r, c) = m(r, c);
    if (b[r].field() != f) throw FieldMismatch();
    aug(r, C) = b[r];
  }
  auto e = rref(aug, true);
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    if (e.pivots[r] == C) {
      Vector y = e.transform.row(r);
      return InfeasibilityCertificate{y, dot(y, b)};
    }
  Vector x = zero_vector(C, f);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, C);
  Matrix left(e.reduced.rows(), C, f);
  for (std::size_t r = 0; r < left.rows(); ++r)
    for (std::size_t c = 0; c < C; ++c) left(r, c) = e.reduced(r, c);
  return AffineSolution{std::move(x), kernel_from_reduced(left, e.pivots, C)};
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& b) {
  auto r = solve_or_certify(m, b);
  if (auto* s = std::get_if<AffineSolution>(&r)) return std::move(*s);
  return std::nullopt;
}

}  // namespace jetfol
