#include "bbgkz/exact.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace bbgkz {

const char *error_kind_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NotInSpan: return "NotInSpan";
  case ErrorKind::DependentGenerators: return "DependentGenerators";
  case ErrorKind::NotFullDimensional: return "NotFullDimensional";
  case ErrorKind::DegenerateHeights: return "DegenerateHeights";
  case ErrorKind::PointOutsideSupport: return "PointOutsideSupport";
  case ErrorKind::NoStabilization: return "NoStabilization";
  case ErrorKind::UnboundedDegree: return "UnboundedDegree";
  case ErrorKind::DimensionOvershoot: return "DimensionOvershoot";
  case ErrorKind::NoStabilizationWindow: return "NoStabilizationWindow";
  case ErrorKind::NoParticularSolution: return "NoParticularSolution";
  case ErrorKind::ZeroCoordinate: return "ZeroCoordinate";
  case ErrorKind::InvalidFan: return "InvalidFan";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::IoError: return "IoError";
  case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Integer floor_of(const Rational &q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational frac_of(const Rational &q) { return q - Rational(floor_of(q)); }

bool is_integral(const Rational &q) { return q.get_den() == 1; }

std::string to_string(const Rational &q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string &raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto valid_int = [](const std::string &t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw Error(ErrorKind::ParseError, "not a rational: '" + raw + "'");
  Integer n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + raw + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

GaussianRational operator/(const GaussianRational &a, const GaussianRational &b) {
  Rational norm = b.re * b.re + b.im * b.im;
  if (norm == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

RatVector to_rational(const IntVector &v) { return RatVector(v.begin(), v.end()); }

RatVector real_part(const GaussVector &v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto &z : v) out.push_back(z.re);
  return out;
}

RatVector imag_part(const GaussVector &v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto &z : v) out.push_back(z.im);
  return out;
}

GaussVector to_gaussian(const RatVector &v) { return GaussVector(v.begin(), v.end()); }

bool is_real(const GaussVector &v) {
  return std::all_of(v.begin(), v.end(), [](const auto &z) { return z.is_real(); });
}

bool is_integral(const RatVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Rational &q) { return is_integral(q); });
}

IntVector to_integer(const RatVector &v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto &q : v) {
    if (!is_integral(q)) throw Error(ErrorKind::Internal, "expected integral vector");
    out.push_back(q.get_num());
  }
  return out;
}

RatMatrix to_rational(const IntMatrix &m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Integer fdiv(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class T> void swap_rows(Matrix<T> &M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < M.cols(); ++c) std::swap(M(a, c), M(b, c));
}

template <class T> void swap_cols(Matrix<T> &M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < M.rows(); ++r) std::swap(M(r, a), M(r, b));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix &M, std::size_t dst, std::size_t src, const Integer &q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < M.cols(); ++c) M(dst, c) -= q * M(src, c);
}

void col_axpy(IntMatrix &M, std::size_t dst, std::size_t src, const Integer &q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < M.rows(); ++r) M(r, dst) -= q * M(r, src);
}

void negate_row(IntMatrix &M, std::size_t r) {
  for (std::size_t c = 0; c < M.cols(); ++c) M(r, c) = -M(r, c);
}

} // namespace

HermiteResult hermite_normal_form(const IntMatrix &A) {
  const std::size_t m = A.rows(), n = A.cols();
  HermiteResult res{A, IntMatrix::identity(m), 0, {}};
  IntMatrix &H = res.H;
  IntMatrix &U = res.U;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i)
        if (H(i, col) != 0 && (best == m || abs(H(i, col)) < abs(H(best, col)))) best = i;
      if (best == m) break;
      swap_rows(H, row, best);
      swap_rows(U, row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (H(i, col) == 0) continue;
        Integer q = fdiv(H(i, col), H(row, col));
        row_axpy(H, i, row, q);
        row_axpy(U, i, row, q);
        if (H(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) {
      negate_row(H, row);
      negate_row(U, row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = fdiv(H(i, col), H(row, col));
      row_axpy(H, i, row, q);
      row_axpy(U, i, row, q);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

SmithResult smith_normal_form(const IntMatrix &A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithResult res{A, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix &S = res.S;
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t br = m, bc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (br == m || abs(S(i, j)) < abs(S(br, bc)))) {
            br = i;
            bc = j;
          }
      if (br == m) return res; // trailing block is zero
      swap_rows(S, t, br);
      swap_rows(res.U, t, br);
      swap_cols(S, t, bc);
      swap_cols(res.V, t, bc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = fdiv(S(i, t), S(t, t));
        row_axpy(S, i, t, q);
        row_axpy(res.U, i, t, q);
        if (S(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = fdiv(S(t, j), S(t, t));
        col_axpy(S, j, t, q);
        col_axpy(res.V, j, t, q);
        if (S(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // divisibility: pull a non-divisible row into row t and retry
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_axpy(S, t, bad, Integer(-1));
      row_axpy(res.U, t, bad, Integer(-1));
    }
    if (S(t, t) < 0) {
      negate_row(S, t);
      negate_row(res.U, t);
    }
  }
  return res;
}

Integer determinant(const IntMatrix &A) {
  if (A.rows() != A.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix M = A;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(M, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

Rational determinant(const RatMatrix &A) {
  if (A.rows() != A.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  RatMatrix M = A;
  const std::size_t n = M.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && M(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      swap_rows(M, k, p);
      det = -det;
    }
    det *= M(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M(i, k) == 0) continue;
      Rational f = M(i, k) / M(k, k);
      for (std::size_t j = k; j < n; ++j) M(i, j) -= f * M(k, j);
    }
  }
  return det;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix &M) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
    std::size_t p = row;
    while (p < M.rows() && M(p, col) == 0) ++p;
    if (p == M.rows()) continue;
    swap_rows(M, row, p);
    Rational inv = 1 / M(row, col);
    for (std::size_t c = col; c < M.cols(); ++c) M(row, c) *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == row || M(i, col) == 0) continue;
      Rational f = M(i, col);
      for (std::size_t c = col; c < M.cols(); ++c) M(i, c) -= f * M(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::optional<RatMatrix> inverse(const RatMatrix &A) {
  if (A.rows() != A.cols()) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = A.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = A(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::size_t rank(const RatMatrix &A) {
  RatMatrix M = A;
  return rref(M).size();
}

IntMatrix integer_kernel(const IntMatrix &A) {
  auto h = hermite_normal_form(A.transpose());
  const std::size_t k = A.cols();
  IntMatrix out(k - h.rank, k);
  for (std::size_t r = h.rank; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out(r - h.rank, c) = h.U(r, c);
  return out;
}

std::optional<IntVector> integer_solution(const IntMatrix &A, const IntVector &b) {
  if (b.size() != A.rows()) throw Error(ErrorKind::InvalidArgument, "rhs size");
  auto h = hermite_normal_form(A.transpose()); // U * A^T = H, H is k x d
  const std::size_t k = A.cols(), d = A.rows();
  std::vector<Integer> y(k);
  for (std::size_t i = 0; i < h.rank; ++i) {
    std::size_t pc = h.pivots[i];
    Integer acc = b[pc];
    for (std::size_t j = 0; j < i; ++j) acc -= y[j] * h.H(j, pc);
    if (acc % h.H(i, pc) != 0) return std::nullopt;
    y[i] = acc / h.H(i, pc);
  }
  for (std::size_t c = 0; c < d; ++c) {
    Integer acc = 0;
    for (std::size_t j = 0; j < h.rank; ++j) acc += y[j] * h.H(j, c);
    if (acc != b[c]) return std::nullopt;
  }
  IntVector m(k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < h.rank; ++j) m[c] += y[j] * h.U(j, c);
  return m;
}

std::optional<RatVector> solve_full_column_rank(const RatMatrix &A, const RatVector &b) {
  if (b.size() != A.rows()) throw Error(ErrorKind::InvalidArgument, "rhs size");
  const std::size_t n = A.cols();
  RatMatrix aug(A.rows(), n + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = A(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = rref(aug);
  std::size_t col_pivots = 0;
  for (auto p : pivots) {
    if (p == n) return std::nullopt;
    ++col_pivots;
  }
  if (col_pivots < n) throw Error(ErrorKind::DependentGenerators, "generators are linearly dependent");
  RatVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = aug(r, n);
  return x;
}

RatVector solve_simplicial_coords(const std::vector<IntVector> &gens, const RatVector &p) {
  if (gens.empty()) {
    for (const auto &x : p)
      if (x != 0) throw Error(ErrorKind::NotInSpan, "point outside the span of the generators");
    return {};
  }
  auto A = to_rational(IntMatrix::from_columns(gens, p.size()));
  auto x = solve_full_column_rank(A, p);
  if (!x) throw Error(ErrorKind::NotInSpan, "point outside the span of the generators");
  return *x;
}

GaussVector solve_simplicial_coords(const std::vector<IntVector> &gens, const GaussVector &p) {
  auto re = solve_simplicial_coords(gens, real_part(p));
  auto im = solve_simplicial_coords(gens, imag_part(p));
  GaussVector out(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
  return out;
}

std::vector<double> singular_values(const Eigen::MatrixXcd &M) {
  if (M.rows() == 0 || M.cols() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto &s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

int rank_over_C(const Eigen::MatrixXcd &M, double tol) {
  auto s = singular_values(M);
  if (s.empty() || s.front() == 0.0) return 0;
  int r = 0;
  for (double x : s)
    if (x > tol * s.front()) ++r;
  return r;
}

} // namespace bbgkz
