#include "doctest.h"

#include <random>

#include "bbgkz/exact.hpp"

using namespace bbgkz;

namespace {

IntMatrix imat(std::vector<std::vector<long>> rows) {
  std::vector<IntVector> r;
  for (auto &row : rows) {
    IntVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return IntMatrix::from_rows(r);
}

IntVector ivec(std::vector<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool is_row_hnf(const HermiteResult &h) {
  std::size_t prev = 0;
  for (std::size_t r = 0; r < h.H.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.H.cols() && h.H(r, c) == 0) ++c;
    if (r >= h.rank) {
      if (c != h.H.cols()) return false;
      continue;
    }
    if (r > 0 && c <= prev) return false;
    if (h.H(r, c) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h.H(above, c) < 0 || h.H(above, c) >= h.H(r, c)) return false;
    prev = c;
  }
  return true;
}

} // namespace

TEST_CASE("rational scalars") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-3)) == "-3/1");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(floor_of(Rational(-1, 3)) == -1);
  CHECK(frac_of(Rational(-1, 3)) == Rational(2, 3));
  CHECK(frac_of(Rational(5, 2)) == Rational(1, 2));
}

TEST_CASE("randomized exactness") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int t = 0; t < 500; ++t) {
    Rational a = make_rational(num(rng), den(rng)), b = make_rational(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
    GaussianRational g(a, b), h(b, a);
    if (!h.is_zero()) CHECK((g / h) * h == g);
  }
}

TEST_CASE("hermite normal form") {
  SUBCASE("identity") {
    auto h = hermite_normal_form(IntMatrix::identity(2));
    CHECK(h.H == IntMatrix::identity(2));
    CHECK(h.U == IntMatrix::identity(2));
  }
  SUBCASE("diagonal") {
    auto A = imat({{2, 0}, {0, 3}});
    auto h = hermite_normal_form(A);
    CHECK(h.H == A);
    CHECK(h.U == IntMatrix::identity(2));
  }
  SUBCASE("rays of a fan") {
    auto A = imat({{1, 0}, {1, 1}, {1, 2}});
    auto h = hermite_normal_form(A);
    CHECK(h.U * A == h.H);
    CHECK(h.H == imat({{1, 0}, {0, 1}, {0, 0}}));
    CHECK(abs(determinant(h.U)) == 1);
  }
  SUBCASE("random invariants") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> e(-9, 9), sz(1, 5);
    for (int t = 0; t < 200; ++t) {
      std::size_t r = sz(rng), c = sz(rng);
      IntMatrix A(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) A(i, j) = e(rng);
      auto h = hermite_normal_form(A);
      REQUIRE(h.U * A == h.H);
      CHECK(abs(determinant(h.U)) == 1);
      CHECK(is_row_hnf(h));
      CHECK(hermite_normal_form(h.H).H == h.H);
      CHECK(h.rank == rank(to_rational(A)));
    }
  }
}

TEST_CASE("smith normal form") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-6, 6), sz(1, 4);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = sz(rng), c = sz(rng);
    IntMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A(i, j) = e(rng);
    auto s = smith_normal_form(A);
    REQUIRE(s.U * A * s.V == s.S);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    std::size_t n = std::min(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.S(i, j) == 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CHECK(s.S(i, i) >= 0);
      if (s.S(i, i) != 0) CHECK(s.S(i + 1, i + 1) % s.S(i, i) == 0);
      else CHECK(s.S(i + 1, i + 1) == 0);
    }
  }
  auto s = smith_normal_form(imat({{1, 1}, {1, 2}}));
  CHECK(s.S == IntMatrix::identity(2));
  auto s2 = smith_normal_form(imat({{0, -2}, {1, -1}}));
  CHECK(s2.S(0, 0) * s2.S(1, 1) == 2);
}

TEST_CASE("simplicial coordinates") {
  CHECK(solve_simplicial_coords({ivec({1, 0}), ivec({1, 1})}, RatVector{Rational(1, 4), 0}) ==
        RatVector{Rational(1, 4), 0});
  CHECK(solve_simplicial_coords({ivec({1, 1}), ivec({1, 2})}, RatVector{Rational(5, 4), 2}) ==
        RatVector{Rational(1, 2), Rational(3, 4)});
  CHECK(solve_simplicial_coords({ivec({3, -2, 5})}, RatVector{3, -2, 5}) == RatVector{1});
  GaussVector p{GaussianRational(Rational(1), Rational(1, 3)), GaussianRational(0)};
  auto c = solve_simplicial_coords({ivec({1, 0}), ivec({1, 1})}, p);
  CHECK(c[0] == p[0]);
  CHECK(c[1].is_zero());
  CHECK_THROWS_WITH_AS(solve_simplicial_coords({ivec({1, 0, 0})}, RatVector{0, 1, 0}), doctest::Contains("span"),
                       Error);
  try {
    solve_simplicial_coords({ivec({1, 0}), ivec({2, 0})}, RatVector{1, 0});
    FAIL("expected DependentGenerators");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::DependentGenerators);
  }
  try {
    solve_simplicial_coords({ivec({1, 0, 0}), ivec({0, 1, 0})}, RatVector{0, 0, 1});
    FAIL("expected NotInSpan");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotInSpan);
  }
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-7, 7);
  for (int t = 0; t < 100; ++t) {
    std::vector<IntVector> gens(3, IntVector(3));
    for (auto &g : gens)
      for (auto &x : g) x = e(rng);
    if (rank(to_rational(IntMatrix::from_columns(gens, 3))) < 3) continue;
    RatVector p{make_rational(e(rng), 3), make_rational(e(rng), 5), make_rational(e(rng), 7)};
    auto cc = solve_simplicial_coords(gens, p);
    RatVector back(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) back[j] += cc[i] * gens[i][j];
    CHECK(back == p);
  }
}

TEST_CASE("kernel and integer solutions") {
  auto A = imat({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  auto K = integer_kernel(A);
  REQUIRE(K.rows() == 1);
  auto k = K.row(0);
  if (k[0] < 0)
    for (auto &x : k) x = -x;
  CHECK(k == ivec({1, -1, -1, 1}));
  auto sol = integer_solution(A, ivec({2, 1, 1}));
  REQUIRE(sol);
  CHECK(A.apply(*sol) == ivec({2, 1, 1}));
  CHECK_FALSE(integer_solution(imat({{2, 0}, {0, 2}}), ivec({1, 0})));
}

TEST_CASE("numerical rank") {
  CHECK(rank_over_C(Eigen::MatrixXcd::Identity(3, 3)) == 3);
  CHECK(rank_over_C(Eigen::MatrixXcd::Zero(3, 3)) == 0);
  Eigen::MatrixXcd M(2, 2);
  M << 1, 2, 2, 4;
  CHECK(rank_over_C(M) == 1);
}
