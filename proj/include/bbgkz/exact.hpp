/**
 * Exact integer / rational / Gaussian-rational linear algebra.
 *
 * Scalars are GMP integers and rationals (mpz_class, mpq_class), so every
 * lattice computation downstream is exact. The only floating point routine
 * here is the SVD-based numerical rank used on Gamma-series values.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace bbgkz {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorKind {
  NotInSpan,
  DependentGenerators,
  NotFullDimensional,
  DegenerateHeights,
  PointOutsideSupport,
  NoStabilization,
  UnboundedDegree,
  DimensionOvershoot,
  NoStabilizationWindow,
  NoParticularSolution,
  ZeroCoordinate,
  InvalidFan,
  InvalidArgument,
  ParseError,
  IoError,
  Internal,
};

const char *error_kind_name(ErrorKind kind);

/// Domain error carrying a machine-readable kind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Scalars

/// num/den in lowest terms (the two-argument mpq_class constructor does not
/// canonicalize).
inline Rational make_rational(const Integer &num, const Integer &den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational &q);
Rational frac_of(const Rational &q); // in [0, 1)
bool is_integral(const Rational &q);

/// Canonical "p/q" string, q > 0, lowest terms (integers print as "p/1").
std::string to_string(const Rational &q);
/// Accepts "p", "p/q" and optionally signed forms; throws ParseError.
Rational parse_rational(const std::string &s);

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend GaussianRational operator+(const GaussianRational &a, const GaussianRational &b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational &a, const GaussianRational &b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational &a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational &a, const GaussianRational &b) {
    return {a * b.re, a * b.im};
  }
  friend GaussianRational operator/(const GaussianRational &a, const GaussianRational &b);
  GaussianRational &operator+=(const GaussianRational &o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational &operator-=(const GaussianRational &o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational &a, const GaussianRational &b) { return !(a == b); }
  /// Lexicographic on (re, im); used only for deterministic ordering.
  friend bool operator<(const GaussianRational &a, const GaussianRational &b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using GaussVector = std::vector<GaussianRational>;

RatVector to_rational(const IntVector &v);
RatVector real_part(const GaussVector &v);
RatVector imag_part(const GaussVector &v);
GaussVector to_gaussian(const RatVector &v);
bool is_real(const GaussVector &v);
bool is_integral(const RatVector &v);
IntVector to_integer(const RatVector &v); // requires integral entries

// ---------------------------------------------------------------------------
// Dense matrices

template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error(ErrorKind::InvalidArgument, "matrix entry count");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  /// Rows given as vectors; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<T>> &rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < m.rows_; ++r) {
      if (rows[r].size() != m.cols_) throw Error(ErrorKind::InvalidArgument, "ragged rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }
  /// Columns given as vectors.
  static Matrix from_columns(const std::vector<std::vector<T>> &cols, std::size_t nrows) {
    Matrix m(nrows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != nrows) throw Error(ErrorKind::InvalidArgument, "ragged columns");
      for (std::size_t r = 0; r < nrows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }
  bool is_zero() const {
    for (const auto &x : data_)
      if (x != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product shape");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(const Matrix &a, const Matrix &b) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix &a, const Matrix &b) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<T> apply(const std::vector<T> &v) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix &m);

// ---------------------------------------------------------------------------
// Normal forms

struct HermiteResult {
  IntMatrix H; ///< row Hermite normal form
  IntMatrix U; ///< unimodular, U * A == H
  std::size_t rank = 0;
  std::vector<std::size_t> pivots; ///< pivot column of each nonzero row of H
};

/// Row-style HNF: H is in echelon form, pivots positive, entries above a
/// pivot reduced into [0, pivot). Zero rows sit at the bottom.
HermiteResult hermite_normal_form(const IntMatrix &A);

struct SmithResult {
  IntMatrix S; ///< diagonal, s_1 | s_2 | ..., nonnegative
  IntMatrix U; ///< unimodular, rows
  IntMatrix V; ///< unimodular, columns; U * A * V == S
};

SmithResult smith_normal_form(const IntMatrix &A);

Integer determinant(const IntMatrix &A);
Rational determinant(const RatMatrix &A);

/// Exact inverse; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix &A);

/// Rank over Q.
std::size_t rank(const RatMatrix &A);

/// Rows forming a Z-basis of { m in Z^cols : A m = 0 }.
IntMatrix integer_kernel(const IntMatrix &A);

/// Some integer m with A m = b, or nullopt.
std::optional<IntVector> integer_solution(const IntMatrix &A, const IntVector &b);

/// Unique rational solution of A x = b when A has full column rank; nullopt
/// if b is outside the column span. Throws DependentGenerators if the
/// columns of A are dependent.
std::optional<RatVector> solve_full_column_rank(const RatMatrix &A, const RatVector &b);

/// Coefficients c with sum_i c_i * gens_i == p. Throws DependentGenerators
/// or NotInSpan.
RatVector solve_simplicial_coords(const std::vector<IntVector> &gens, const RatVector &p);
GaussVector solve_simplicial_coords(const std::vector<IntVector> &gens, const GaussVector &p);

// ---------------------------------------------------------------------------
// Numerics

/// Singular values in decreasing order.
std::vector<double> singular_values(const Eigen::MatrixXcd &M);

/// Number of singular values above tol * (largest singular value).
int rank_over_C(const Eigen::MatrixXcd &M, double tol = 1e-9);

} // namespace bbgkz
