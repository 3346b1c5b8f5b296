#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "bbgkz/fan.hpp"

namespace bbgkz::test {

inline IntVector iv(std::vector<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// rays (1,0),(1,1),(1,2); cones {1,2},{2,3}; deg = first coordinate
inline StackyFan fan_f1() {
  return StackyFan(2, {iv({1, 0}), iv({1, 1}), iv({1, 2})}, {{0, 1}, {1, 2}}, iv({1, 0}));
}

/// weighted projective plane P(2,1,1)
inline StackyFan fan_f2() {
  return StackyFan(2, {iv({1, 0}), iv({0, 1}), iv({-2, -1})}, {{0, 1}, {1, 2}, {0, 2}});
}

inline std::vector<IntVector> square_points() {
  return {iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 0, 1}), iv({1, 1, 1})};
}

/// cone over the unit square, triangulated along the diagonal 1-4
inline StackyFan fan_square() {
  return StackyFan(3, square_points(), {{0, 1, 3}, {0, 2, 3}}, iv({1, 0, 0}));
}

inline GaussVector gv(std::vector<Rational> re, std::vector<Rational> im = {}) {
  GaussVector out;
  for (std::size_t i = 0; i < re.size(); ++i) out.emplace_back(re[i], i < im.size() ? im[i] : Rational(0));
  return out;
}

inline Rational rq(long a, long b = 1) { return make_rational(a, b); }

/// Regular triangulation of d + 2 random points on deg = 1 (first
/// coordinate), rays generating the lattice.
inline StackyFan random_gkz_fan(std::mt19937_64 &rng, int d, int extra = 2, long spread = 2) {
  std::uniform_int_distribution<long> e(-spread, spread);
  std::uniform_int_distribution<long> hd(0, 1000);
  for (;;) {
    std::vector<IntVector> pts;
    while (static_cast<int>(pts.size()) < d + extra) {
      IntVector p(d);
      p[0] = 1;
      for (int j = 1; j < d; ++j) p[j] = e(rng);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    RatVector h;
    for (std::size_t i = 0; i < pts.size(); ++i) h.push_back(rq(hd(rng), 7));
    try {
      auto f = triangulate_from_heights(pts, h);
      if (validate(f).gkz_eligible()) return f;
    } catch (const Error &) {
    }
  }
}

/// Complete simplicial fan in the plane from random primitive rays.
inline StackyFan random_complete_fan(std::mt19937_64 &rng, int nrays = 4, long spread = 3) {
  std::uniform_int_distribution<long> e(-spread, spread);
  for (;;) {
    std::vector<std::pair<double, IntVector>> rays;
    for (int t = 0; t < nrays; ++t) {
      long x = e(rng), y = e(rng);
      if (x == 0 && y == 0) continue;
      Integer g = gcd(Integer(x), Integer(y));
      IntVector v{Integer(x) / g, Integer(y) / g};
      bool dup = false;
      for (auto &r : rays) dup = dup || r.second == v;
      if (!dup) rays.emplace_back(std::atan2(double(y), double(x)), v);
    }
    if (rays.size() < 3) continue;
    std::sort(rays.begin(), rays.end());
    std::vector<IntVector> rv;
    std::vector<ConeRef> cones;
    bool ok = true;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      rv.push_back(rays[i].second);
      double gap = (i + 1 < rays.size() ? rays[i + 1].first : rays[0].first + 2 * M_PI) - rays[i].first;
      if (gap >= M_PI - 1e-12) ok = false;
      int a = static_cast<int>(i), b = static_cast<int>((i + 1) % rays.size());
      cones.push_back(a < b ? ConeRef{a, b} : ConeRef{b, a});
    }
    if (!ok) continue;
    StackyFan f(2, rv, cones);
    if (validate(f).valid()) return f;
  }
}

inline GaussianRational random_gauss(std::mt19937_64 &rng, long range = 12, long den = 9) {
  std::uniform_int_distribution<long> n(-range, range), d(1, den);
  return GaussianRational(rq(n(rng), d(rng)), rq(n(rng), d(rng)));
}

} // namespace bbgkz::test
