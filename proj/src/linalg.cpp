#include "cagekit/linalg.hpp"

#include <algorithm>
#include <cstdint>

#include <gmpxx.h>

#include "cagekit/errors.hpp"

namespace cagekit {

Vector zero_vector(const Field& field, std::size_t length) { return Vector(length, field.zero()); }

Vector vector_from(const Field& field, const std::vector<Rational>& values) {
  Vector v;
  v.reserve(values.size());
  for (const auto& x : values) v.push_back(field.from_rational(x));
  return v;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].field() == field)) throw FieldMismatch("matrix entry from a different field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product dimension mismatch");
  Matrix p(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        if (!o(k, c).is_zero()) p(r, c) += a * o(k, c);
      }
    }
  return p;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw ShapeError("matrix-vector dimension mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RowEchelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, next_row);

    const FieldElement scale = m(next_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (!m(next_row, k).is_zero()) m(next_row, k) *= scale;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next_row || m(r, c).is_zero()) continue;
      const FieldElement factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(next_row, k).is_zero()) m(r, k) -= factor * m(next_row, k);
      }
    }
    pivots.push_back(c);
    ++next_row;
  }
  return RowEchelon{std::move(m), std::move(pivots)};
}

namespace {

// Rows of a rational matrix scaled to integers; row scaling keeps the rank.
std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).rational_value().value().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& x = m(r, c).rational_value().value();
      rows[r][c] = x.get_num() * (scale / x.get_den());
    }
  }
  return rows;
}

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t inv_mod(std::uint64_t a) {
  std::uint64_t result = 1, e = kPrime - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return result;
}

// Rank over Z/p. Never exceeds the rank over Q: a minor that survives mod p is nonzero.
std::size_t modular_rank(const std::vector<std::vector<mpz_class>>& rows, std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = mpz_fdiv_ui(rows[r][c].get_mpz_t(), kPrime);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = inv_mod(a[rank][c]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t f = mul_mod(a[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[r][j] = (a[r][j] + kPrime - mul_mod(f, a[rank][j])) % kPrime;
    }
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination; every division is exact.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    const mpz_class& p = a[rank][c];
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[r][j] = p * a[r][j] - a[r][c] * a[rank][j];
        mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (!m.field().is_rational() || m.rows() == 0 || m.cols() == 0) return row_reduce(m).pivots.size();
  const auto rows = integer_rows(m);
  const std::size_t full = std::min(m.rows(), m.cols());
  if (modular_rank(rows, m.cols()) == full) return full;
  return bareiss_rank(rows, m.cols());
}

SubspaceBasis kernel_basis(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  SubspaceBasis basis;
  basis.ambient_dim = m.cols();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

SubspaceBasis row_space(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  SubspaceBasis basis;
  basis.ambient_dim = m.cols();
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.vectors.push_back(e.reduced.row(r));
  return basis;
}

SubspaceBasis span_of(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw ShapeError("vector length differs from the ambient dimension");
  }
  return row_space(Matrix::from_rows(field, vectors, ambient_dim));
}

bool in_span(const Vector& v, const SubspaceBasis& basis) {
  if (v.size() != basis.ambient_dim) throw ShapeError("in_span: vector length differs from the ambient dimension");
  if (is_zero_vector(v)) return true;
  if (basis.vectors.empty()) return false;
  std::vector<Vector> rows = basis.vectors;
  rows.push_back(v);
  return rank(Matrix::from_rows(v.front().field(), rows)) == basis.vectors.size();
}

bool same_span(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim != b.ambient_dim) throw ShapeError("same_span: ambient dimensions differ");
  return std::all_of(a.vectors.begin(), a.vectors.end(), [&](const Vector& v) { return in_span(v, b); }) &&
         std::all_of(b.vectors.begin(), b.vectors.end(), [&](const Vector& v) { return in_span(v, a); });
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw ShapeError("solve: right-hand side length differs from row count");
  Matrix augmented(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  const RowEchelon e = row_reduce(std::move(augmented));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix augmented(a.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n + r) = a.field().one();
  }
  const RowEchelon e = row_reduce(std::move(augmented));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

}  // namespace cagekit
