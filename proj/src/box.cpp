#include "bbgkz/box.hpp"

#include <algorithm>
#include <map>

namespace bbgkz {

namespace {

RatMatrix cone_inverse(const StackyFan &fan, std::size_t cone) {
  if (!fan.is_full_dimensional(cone))
    throw Error(ErrorKind::NotFullDimensional, "Box sets need full-dimensional maximal cones");
  return *inverse(to_rational(IntMatrix::from_columns(fan.generators(fan.cone(cone)), fan.rank())));
}

GaussVector apply_gauss(const RatMatrix &A, const GaussVector &v) {
  GaussVector out(A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c)
      if (A(r, c) != 0) out[r] += A(r, c) * v[c];
  return out;
}

ConeRef support_of(const GaussVector &alpha) {
  ConeRef s;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (!alpha[i].is_zero()) s.push_back(static_cast<int>(i));
  return s;
}

ConeRef support_of(const RatVector &alpha) {
  ConeRef s;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

BoxElement make_element(const StackyFan &fan, GaussVector alpha, const GaussVector &beta) {
  BoxElement e;
  e.alpha = std::move(alpha);
  GaussVector c = fan.combine(e.alpha);
  e.n.resize(fan.rank());
  for (int j = 0; j < fan.rank(); ++j) {
    GaussianRational nj = c[j] - beta[j];
    if (!nj.is_real() || !is_integral(nj.re)) throw Error(ErrorKind::Internal, "Box element off the lattice");
    e.n[j] = nj.re.get_num();
  }
  e.support = support_of(e.alpha);
  e.witness = fan.cones_containing(e.support);
  return e;
}

RatVector floors_at(const GaussVector &alpha, const Rational &delta) {
  RatVector out;
  for (const auto &a : alpha) out.emplace_back(floor_of(a.re + delta * a.im));
  return out;
}

} // namespace

std::vector<RatVector> sectors(const StackyFan &fan, std::size_t cone) {
  const int d = fan.rank();
  RatMatrix Vinv = cone_inverse(fan, cone);
  auto snf = smith_normal_form(IntMatrix::from_columns(fan.generators(fan.cone(cone)), d));
  RatMatrix Uinv = *inverse(to_rational(snf.U));
  std::vector<RatVector> out;
  std::vector<Integer> t(d, 0);
  for (;;) {
    RatVector tr(t.begin(), t.end());
    RatVector local = Vinv.apply(Uinv.apply(tr));
    RatVector gamma(fan.num_rays());
    for (int i = 0; i < d; ++i) gamma[fan.cone(cone)[i]] = frac_of(local[i]);
    out.push_back(std::move(gamma));
    int pos = d - 1;
    while (pos >= 0) {
      Integer s = abs(snf.S(pos, pos));
      if (t[pos] + 1 < s) {
        ++t[pos];
        break;
      }
      t[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GaussVector raw_alpha(const StackyFan &fan, const BoxLabel &label, const GaussVector &beta) {
  RatMatrix Vinv = cone_inverse(fan, label.cone);
  auto gamma = sectors(fan, label.cone).at(label.index);
  GaussVector local = apply_gauss(Vinv, beta);
  GaussVector out = to_gaussian(gamma);
  const auto &cone = fan.cone(label.cone);
  for (std::size_t i = 0; i < cone.size(); ++i) out[cone[i]] += local[i];
  return out;
}

std::vector<BoxElement> box_of_cone(const StackyFan &fan, std::size_t cone, const GaussVector &beta) {
  if (beta.size() != static_cast<std::size_t>(fan.rank()))
    throw Error(ErrorKind::InvalidArgument, "beta has wrong length");
  RatMatrix Vinv = cone_inverse(fan, cone);
  GaussVector local = apply_gauss(Vinv, beta);
  const auto &idx = fan.cone(cone);
  std::vector<BoxElement> out;
  for (const auto &gamma : sectors(fan, cone)) {
    GaussVector alpha(fan.num_rays());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      GaussianRational a = GaussianRational(gamma[idx[i]]) + local[i];
      a.re -= floor_of(a.re);
      alpha[idx[i]] = a;
    }
    out.push_back(make_element(fan, std::move(alpha), beta));
  }
  return out;
}

std::vector<BoxElement> box_of_fan(const StackyFan &fan, const GaussVector &beta) {
  std::map<GaussVector, BoxElement> merged;
  for (std::size_t c = 0; c < fan.num_cones(); ++c)
    for (auto &e : box_of_cone(fan, c, beta)) merged.try_emplace(e.alpha, std::move(e));
  std::vector<BoxElement> out;
  for (auto &entry : merged) out.push_back(std::move(entry.second));
  return out;
}

std::optional<std::size_t> find_alpha(const std::vector<BoxElement> &box, const GaussVector &alpha) {
  for (std::size_t i = 0; i < box.size(); ++i)
    if (box[i].alpha == alpha) return i;
  return std::nullopt;
}

RatVector beta_at(const GaussVector &beta, const Rational &delta) {
  RatVector out;
  for (const auto &b : beta) out.push_back(b.re + delta * b.im);
  return out;
}

std::optional<DeltaCorrespondence> correspondence_at(const StackyFan &fan, const GaussVector &beta,
                                                     const Rational &delta) {
  auto box = box_of_fan(fan, beta);
  DeltaCorrespondence out;
  out.delta = delta;
  out.beta_delta = beta_at(beta, delta);
  auto real_box = box_of_fan(fan, to_gaussian(out.beta_delta));
  if (real_box.size() != box.size()) return std::nullopt;
  std::vector<bool> hit(real_box.size(), false);
  for (const auto &e : box) {
    RatVector ad;
    for (const auto &a : e.alpha) ad.push_back(frac_of(a.re + delta * a.im));
    if (support_of(ad) != e.support) return std::nullopt;
    auto j = find_alpha(real_box, to_gaussian(ad));
    if (!j || hit[*j] || real_box[*j].witness != e.witness) return std::nullopt;
    hit[*j] = true;
    out.triples.push_back({e.alpha, ad, fan.combine(ad), e.support});
  }
  return out;
}

DeltaCorrespondence stabilize(const StackyFan &fan, const GaussVector &beta) {
  auto box = box_of_fan(fan, beta);
  auto signature = [&](const Rational &delta) {
    std::vector<RatVector> floors;
    for (const auto &e : box) floors.push_back(floors_at(e.alpha, delta));
    return floors;
  };
  Rational delta(1, 16);
  auto current = correspondence_at(fan, beta, delta);
  auto current_sig = signature(delta);
  for (int h = 0; h < 40; ++h) {
    Rational next_delta = delta / 2;
    auto next = correspondence_at(fan, beta, next_delta);
    auto next_sig = signature(next_delta);
    if (current && next && current_sig == next_sig) {
      bool same = true;
      for (std::size_t i = 0; i < current->triples.size() && same; ++i)
        same = current->triples[i].support == next->triples[i].support;
      if (same) {
        current->halvings = h;
        return *current;
      }
    }
    delta = next_delta;
    current = std::move(next);
    current_sig = std::move(next_sig);
  }
  throw Error(ErrorKind::NoStabilization, "delta halving did not stabilize");
}

std::optional<Rational> stabilization_bound(const StackyFan &fan, const GaussVector &beta) {
  auto box = box_of_fan(fan, beta);
  std::optional<Rational> best;
  auto consider = [&](const Rational &b) {
    if (sgn(b) > 0 && (!best || b < *best)) best = b;
  };
  // smallest delta > 0 with re + delta * im an integer, for re in [0, 1)
  // or, for differences, re in (-1, 1)
  auto first_hit = [&](const Rational &re, const Rational &im) {
    if (sgn(im) == 0) return;
    Rational target = sgn(im) > 0 ? Rational(floor_of(re) + 1) : Rational(floor_of(re));
    if (target == re) target -= 1;
    consider((target - re) / im);
  };
  for (const auto &e : box)
    for (const auto &a : e.alpha) first_hit(a.re, a.im);
  for (std::size_t x = 0; x < box.size(); ++x)
    for (std::size_t y = x + 1; y < box.size(); ++y)
      for (std::size_t i = 0; i < fan.num_rays(); ++i)
        first_hit(box[x].alpha[i].re - box[y].alpha[i].re, box[x].alpha[i].im - box[y].alpha[i].im);
  return best;
}

std::vector<CollisionClass> collisions(const StackyFan &fan, const GaussVector &beta) {
  std::vector<CollisionClass> out;
  std::map<GaussVector, std::size_t> where;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    auto elems = box_of_cone(fan, c, beta);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      auto [it, fresh] = where.try_emplace(elems[j].alpha, out.size());
      if (fresh) out.push_back({elems[j].alpha, {}});
      out[it->second].labels.push_back({c, j});
    }
  }
  return out;
}

std::optional<std::vector<WallCondition>> wall_conditions(const StackyFan &fan, const BoxLabel &a,
                                                          const BoxLabel &b) {
  const std::size_t d = fan.rank(), k = fan.num_rays();
  // raw_alpha is affine in beta: constant part at beta = 0, linear part from
  // unit vectors
  auto ra0 = real_part(raw_alpha(fan, a, GaussVector(d)));
  auto rb0 = real_part(raw_alpha(fan, b, GaussVector(d)));
  std::vector<RatVector> rows(k, RatVector(d + 1));
  for (std::size_t i = 0; i < k; ++i) rows[i][d] = ra0[i] - rb0[i];
  for (std::size_t j = 0; j < d; ++j) {
    GaussVector e(d);
    e[j] = GaussianRational(1);
    auto ra = real_part(raw_alpha(fan, a, e));
    auto rb = real_part(raw_alpha(fan, b, e));
    for (std::size_t i = 0; i < k; ++i) rows[i][j] = (ra[i] - ra0[i]) - (rb[i] - rb0[i]);
  }
  Integer D = 1;
  for (const auto &r : rows)
    for (const auto &x : r) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.get_den_mpz_t());
  std::vector<IntVector> irows;
  for (const auto &r : rows) {
    IntVector v;
    for (const auto &x : r) v.push_back(Rational(x * D).get_num());
    irows.push_back(std::move(v));
  }
  IntVector unit(d + 1);
  unit[d] = D;
  irows.push_back(unit);
  auto h = hermite_normal_form(IntMatrix::from_rows(irows));
  std::vector<WallCondition> out;
  for (std::size_t r = 0; r < h.rank; ++r) {
    if (h.pivots[r] == d) {
      if (h.H(r, d) != D) return std::nullopt;
      continue;
    }
    WallCondition w;
    for (std::size_t j = 0; j < d; ++j) w.functional.push_back(make_rational(h.H(r, j), D));
    w.constant = make_rational(h.H(r, d), D);
    out.push_back(std::move(w));
  }
  return out;
}

} // namespace bbgkz
