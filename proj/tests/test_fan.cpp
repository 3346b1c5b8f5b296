#include "doctest.h"

#include "bbgkz/fan.hpp"
#include "fixtures.hpp"

using namespace bbgkz;
using namespace bbgkz::test;

TEST_CASE("validate") {
  auto f1 = fan_f1();
  auto r1 = validate(f1);
  CHECK(r1.valid());
  CHECK(r1.gkz_eligible());
  CHECK(*r1.volume == 2);

  auto f2 = fan_f2();
  auto r2 = validate(f2);
  CHECK(r2.valid());
  CHECK_FALSE(r2.gkz_eligible());
  CHECK_FALSE(r2.deg.has_value());
  CHECK(*r2.volume == 4);

  StackyFan bad(2, {iv({1, 0}), iv({2, 0})}, {{0, 1}});
  CHECK_FALSE(validate(bad).valid());

  // overlapping cones
  StackyFan overlap(2, {iv({1, 0}), iv({1, 1}), iv({1, 2})}, {{0, 2}, {1, 2}});
  CHECK_FALSE(validate(overlap).valid());

  // a proper fan whose support is not the cone over conv(rays)
  StackyFan partial(2, {iv({1, 0}), iv({1, 1}), iv({1, 2})}, {{0, 1}});
  auto rp = validate(partial);
  CHECK(rp.valid());
  CHECK_FALSE(rp.gkz_eligible());

  // rays not generating the lattice
  StackyFan sub(2, {iv({1, 0}), iv({1, 2})}, {{0, 1}});
  auto rs = validate(sub);
  CHECK(rs.valid());
  CHECK_FALSE(rs.gkz_eligible());
}

TEST_CASE("minimal cone") {
  auto f1 = fan_f1();
  CHECK(*minimal_cone(f1, RatVector{0, 0}) == ConeRef{});
  CHECK(*minimal_cone(f1, RatVector{1, 1}) == ConeRef{1});
  CHECK(*minimal_cone(f1, RatVector{2, 3}) == ConeRef{1, 2});
  CHECK_FALSE(minimal_cone(f1, RatVector{-1, 0}));
  CHECK_FALSE(minimal_cone(f1, RatVector{1, 3}));
  GaussVector p{GaussianRational(Rational(1), Rational(5)), GaussianRational(0)};
  CHECK(*minimal_cone(f1, p, true) == ConeRef{0});
  CHECK_FALSE(minimal_cone(f1, p, false));
}

TEST_CASE("tangent membership") {
  auto f1 = fan_f1();
  CHECK(tangent_member(f1, RatVector{3, 2}, RatVector{-7, 100}));
  CHECK(tangent_member(f1, RatVector{0, 0}, RatVector{1, 1}));
  CHECK_FALSE(tangent_member(f1, RatVector{0, 0}, RatVector{-1, 0}));
  CHECK_FALSE(tangent_member(f1, RatVector{1, 0}, RatVector{0, -1}));
  CHECK(tangent_member(f1, RatVector{1, 0}, RatVector{0, 1}));
  CHECK_THROWS_AS(tangent_member(f1, RatVector{-1, 0}, RatVector{1, 0}), Error);

  // sampled oracle: p + eps xi in the support for small eps implies membership
  auto in_support = [&](const RatVector &q) { return minimal_cone(f1, q).has_value(); };
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 2 * a; ++b)
      for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y) {
          RatVector p{a, b}, xi{x, y};
          bool sampled = true;
          for (Rational eps : {Rational(1, 1000), Rational(1, 1000000)})
            sampled = sampled && in_support(RatVector{p[0] + eps * xi[0], p[1] + eps * xi[1]});
          if (sampled) CHECK(tangent_member(f1, p, xi));
          else CHECK_FALSE(tangent_member(f1, p, xi));
        }
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume(fan_f2()) == 4);
  CHECK(normalized_volume(fan_f1()) == 2);
  CHECK(normalized_volume(StackyFan(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, {{0, 1, 2}})) == 1);
  // unimodular change of basis and relabeling
  auto f2 = fan_f2();
  std::vector<IntVector> rays;
  for (int i = 2; i >= 0; --i) {
    const auto &v = f2.ray(i);
    rays.push_back(IntVector{v[0] + 3 * v[1], v[1]});
  }
  CHECK(normalized_volume(StackyFan(2, rays, {{0, 1}, {1, 2}, {0, 2}})) == 4);
  StackyFan low(3, {iv({1, 0, 0}), iv({0, 1, 0})}, {{0, 1}});
  CHECK_THROWS_AS(normalized_volume(low), Error);
}

TEST_CASE("triangulation from heights") {
  std::vector<IntVector> pts{iv({1, 0}), iv({1, 1}), iv({1, 2})};
  try {
    triangulate_from_heights(pts, RatVector{0, 0, 0});
    FAIL("expected DegenerateHeights");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::DegenerateHeights);
  }
  auto f = triangulate_from_heights(pts, RatVector{1, 0, 1});
  CHECK(f.max_cones() == std::vector<ConeRef>{{0, 1}, {1, 2}});
  CHECK(validate(f).gkz_eligible());

  auto g = triangulate_from_heights({iv({1, 0}), iv({1, 2})}, RatVector{0, 0});
  CHECK(g.max_cones() == std::vector<ConeRef>{{0, 1}});

  auto sq = square_points();
  auto t1 = triangulate_from_heights(sq, RatVector{0, 0, 0, 1});
  auto t2 = triangulate_from_heights(sq, RatVector{0, 1, 0, 0});
  CHECK(validate(t1).gkz_eligible());
  CHECK(validate(t2).gkz_eligible());
  CHECK(t1.max_cones() != t2.max_cones());
  CHECK(normalized_volume(t1) == 2);
  CHECK(normalized_volume(t2) == 2);
  CHECK(hull_normalized_volume(sq) == 2);
}

TEST_CASE("regular heights") {
  auto h = regular_heights(fan_f1());
  REQUIRE(h);
  CHECK(triangulate_from_heights(fan_f1().rays(), *h).max_cones() == fan_f1().max_cones());
  // an interior ray left out of the triangulation gets lifted above it
  StackyFan skip(2, {iv({1, 0}), iv({1, 1}), iv({1, 2})}, {{0, 2}});
  auto hs = regular_heights(skip);
  REQUIRE(hs);
  CHECK(triangulate_from_heights(skip.rays(), *hs).max_cones() == skip.max_cones());
  auto sq = fan_square();
  auto hq = regular_heights(sq);
  REQUIRE(hq);
  CHECK(triangulate_from_heights(sq.rays(), *hq).max_cones() == sq.max_cones());
}
