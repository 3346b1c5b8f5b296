#include "bbgkz/kring.hpp"

#include <cmath>
#include <numbers>

#include "bbgkz/quotient.hpp"

namespace bbgkz {

namespace {

std::complex<double> exp_2pi_i(const GaussianRational &a) {
  if (a.is_zero()) return 1.0;
  // quarter turns are applied exactly; the remainder r lies in [0, 1/4)
  Rational t = 4 * (a.re - floor_of(a.re));
  Integer q = floor_of(t);
  double r = Rational(t - q).get_d() / 4;
  std::complex<double> z(std::cos(2 * std::numbers::pi * r), std::sin(2 * std::numbers::pi * r));
  if (r == 0) z = 1.0;
  for (long i = 0; i < q.get_si(); ++i) z = std::complex<double>(-z.imag(), z.real());
  if (sgn(a.im) != 0) z *= std::exp(-2 * std::numbers::pi * a.im.get_d());
  return z;
}

} // namespace

std::vector<KPoint> spectrum(const StackyFan &fan, const GaussVector &beta) {
  auto Q = build_quotient(fan, beta, false);
  std::vector<KPoint> out;
  for (auto &c : collisions(fan, beta)) {
    KPoint p;
    p.exponents = c.alpha;
    p.labels = c.labels;
    for (const auto &a : c.alpha) p.y.push_back(exp_2pi_i(a));
    for (std::size_t s = 0; s < Q.tags.size(); ++s)
      if (Q.tags[s] == c.alpha) p.multiplicity += Q.summand_dims[s];
    if (p.multiplicity == 0) throw Error(ErrorKind::Internal, "spectrum point without a cohomology summand");
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const KPoint &a, const KPoint &b) { return a.exponents < b.exponents; });
  return out;
}

std::vector<Coincidence> wall_report(const StackyFan &fan, const GaussVector &beta) {
  std::vector<Coincidence> out;
  for (const auto &c : collisions(fan, beta))
    for (std::size_t x = 0; x < c.labels.size(); ++x)
      for (std::size_t y = x + 1; y < c.labels.size(); ++y) {
        Coincidence w{c.labels[x], c.labels[y], {}, {}};
        auto ra = raw_alpha(fan, w.first, beta), rb = raw_alpha(fan, w.second, beta);
        for (std::size_t i = 0; i < ra.size(); ++i) {
          GaussianRational diff = ra[i] - rb[i];
          if (!diff.is_real() || !is_integral(diff.re)) throw Error(ErrorKind::Internal, "non-integral wall witness");
          w.witness.push_back(diff);
        }
        auto cond = wall_conditions(fan, w.first, w.second);
        if (!cond) throw Error(ErrorKind::Internal, "colliding labels without a wall");
        w.conditions = std::move(*cond);
        out.push_back(std::move(w));
      }
  return out;
}

bool is_semisimple(const StackyFan &fan, const GaussVector &beta) {
  for (const auto &p : spectrum(fan, beta))
    if (p.multiplicity != 1) return false;
  return true;
}

double monomial_relation_defect(const StackyFan &fan, const GaussVector &beta, const std::vector<KPoint> &points) {
  double worst = 0;
  for (const auto &p : points)
    for (int j = 0; j < fan.rank(); ++j) {
      std::complex<double> lhs = 1.0;
      for (std::size_t i = 0; i < fan.num_rays(); ++i) {
        long e = fan.ray(i)[j].get_si();
        lhs *= std::pow(p.y[i], static_cast<double>(e));
      }
      auto rhs = exp_2pi_i(beta[j]);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
  return worst;
}

bool satisfies_sr_relations(const StackyFan &fan, const std::vector<KPoint> &points) {
  for (const auto &p : points) {
    bool found = false;
    for (std::size_t c = 0; c < fan.num_cones() && !found; ++c) {
      const auto &cone = fan.cone(c);
      bool ok = true;
      for (std::size_t i = 0; i < fan.num_rays() && ok; ++i)
        if (std::find(cone.begin(), cone.end(), static_cast<int>(i)) == cone.end()) ok = p.exponents[i].is_zero();
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

} // namespace bbgkz
