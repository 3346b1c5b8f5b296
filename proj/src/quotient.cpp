#include "bbgkz/quotient.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bbgkz {

namespace {

ConeRef support_with(const ConeRef &base, const IntVector &p, long extra = -1) {
  ConeRef s = base;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) s.push_back(static_cast<int>(i));
  if (extra >= 0) s.push_back(static_cast<int>(extra));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

RatVector point_of(const StackyFan &fan, const BoxElement &e, const IntVector &p) {
  RatVector w = real_part(e.point(fan));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (int j = 0; j < fan.rank(); ++j) w[j] += p[i] * fan.ray(i)[j];
  }
  return w;
}

int level_of(const IntVector &p) {
  Integer s = 0;
  for (const auto &x : p) s += x;
  return static_cast<int>(s.get_si());
}

// Reduced row echelon form, pivots at the earliest column.
void rref(std::vector<RatVector> &rows, std::vector<std::size_t> &pivots, std::size_t ncols) {
  std::size_t r = 0;
  pivots.clear();
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rational inv = 1 / rows[r][c];
    for (auto &x : rows[r]) x *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      Rational f = rows[o][c];
      for (std::size_t j = c; j < ncols; ++j) rows[o][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
}

bool in_shadow(const StackyFan &fan, const std::optional<RatVector> &xi, const RatVector &w) {
  return !xi || tangent_member(fan, w, *xi);
}

std::vector<IntVector> level_points(const StackyFan &fan, const BoxElement &e, int t,
                                    const std::optional<RatVector> &xi) {
  std::set<IntVector> ps;
  for (std::size_t c : e.witness)
    for (auto &p : compositions(fan.cone(c), fan.num_rays(), t)) ps.insert(std::move(p));
  std::vector<std::pair<RatVector, IntVector>> keyed;
  for (const auto &p : ps) {
    RatVector w = point_of(fan, e, p);
    if (in_shadow(fan, xi, w)) keyed.emplace_back(std::move(w), p);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<IntVector> out;
  for (auto &kp : keyed) out.push_back(std::move(kp.second));
  return out;
}

} // namespace

std::vector<IntVector> compositions(const ConeRef &cone, std::size_t k, int t) {
  std::vector<IntVector> out;
  if (t < 0) return out;
  IntVector p(k);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == cone.size()) {
      p[cone[pos]] = left;
      out.push_back(p);
      p[cone[pos]] = 0;
      return;
    }
    for (int x = left; x >= 0; --x) {
      p[cone[pos]] = x;
      rec(pos + 1, left - x);
    }
    p[cone[pos]] = 0;
  };
  if (cone.empty()) {
    if (t == 0) out.push_back(p);
    return out;
  }
  rec(0, t);
  return out;
}

std::optional<ModulePoint> decompose_point(const StackyFan &fan, const std::vector<BoxElement> &box,
                                           const RatVector &w) {
  auto mc = minimal_cone(fan, w);
  if (!mc) return std::nullopt;
  auto cones = fan.cones_containing(*mc);
  std::size_t c = cones.front();
  auto q = *fan.cone_coordinates(c, w);
  GaussVector alpha(fan.num_rays());
  IntVector p(fan.num_rays());
  for (std::size_t i = 0; i < q.size(); ++i) {
    int r = fan.cone(c)[i];
    alpha[r] = GaussianRational(frac_of(q[i]));
    p[r] = floor_of(q[i]);
  }
  auto a = find_alpha(box, alpha);
  if (!a) return std::nullopt;
  return ModulePoint{*a, p};
}

std::optional<RatVector> point_product(const StackyFan &fan, const IntVector &n_prime, const RatVector &w) {
  RatVector np = to_rational(n_prime);
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    if (!fan.cone_contains(c, np) || !fan.cone_contains(c, w)) continue;
    RatVector out = w;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += np[j];
    return out;
  }
  return std::nullopt;
}

std::optional<Def2Element> module_product(const StackyFan &fan, const GaussVector &beta, const IntVector &n_prime,
                                          const Def2Element &x) {
  std::optional<Def2Element> result;
  RatVector np = to_rational(n_prime);
  GaussVector calpha = fan.combine(x.alpha);
  // n + beta - c(alpha); real when x is a genuine basis element
  RatVector rest(fan.rank());
  for (int j = 0; j < fan.rank(); ++j) {
    GaussianRational r = GaussianRational(Rational(x.n[j])) + beta[j] - calpha[j];
    if (!r.is_real()) return std::nullopt;
    rest[j] = r.re;
  }
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    const auto &cone = fan.cone(c);
    bool supported = true;
    for (std::size_t i = 0; i < x.alpha.size() && supported; ++i)
      if (!x.alpha[i].is_zero() && !std::binary_search(cone.begin(), cone.end(), static_cast<int>(i)))
        supported = false;
    if (!supported) continue;
    auto qn = fan.cone_coordinates(c, np);
    auto pr = fan.cone_coordinates(c, rest);
    if (!qn || !pr) continue;
    bool ok = true;
    for (std::size_t i = 0; i < cone.size() && ok; ++i)
      ok = sgn((*qn)[i]) >= 0 && sgn((*pr)[i]) >= 0 && is_integral((*pr)[i]);
    if (!ok) continue;
    Def2Element out;
    out.n = x.n;
    for (int j = 0; j < fan.rank(); ++j) out.n[j] += n_prime[j];
    out.alpha = GaussVector(fan.num_rays());
    for (std::size_t i = 0; i < cone.size(); ++i) {
      const auto &a = x.alpha[cone[i]];
      out.alpha[cone[i]] = GaussianRational(frac_of(a.re + (*qn)[i]), a.im);
    }
    if (result && !(*result == out))
      throw Error(ErrorKind::Internal, "module product depends on the witness cone");
    result = std::move(out);
  }
  return result;
}

std::vector<IntVector> graded_piece(const StackyFan &fan, const RatVector &chi, const std::optional<RatVector> &xi,
                                    long m) {
  const auto &deg = fan.deg();
  if (!deg) throw Error(ErrorKind::UnboundedDegree, "no degree functional");
  for (int i : fan.used_rays()) {
    Integer s = 0;
    for (int j = 0; j < fan.rank(); ++j) s += (*deg)[j] * fan.ray(i)[j];
    if (s <= 0) throw Error(ErrorKind::UnboundedDegree, "deg is not positive on the support");
  }
  auto box = box_of_fan(fan, to_gaussian(chi));
  std::set<IntVector> out;
  for (const auto &e : box) {
    Integer dn = 0;
    for (int j = 0; j < fan.rank(); ++j) dn += (*deg)[j] * e.n[j];
    // every deg(v_i) >= 1, so |p| <= m - deg(n_alpha)
    std::set<IntVector> ps;
    for (std::size_t c : e.witness)
      for (Integer t = 0; t <= m - dn; ++t)
        for (auto &p : compositions(fan.cone(c), fan.num_rays(), static_cast<int>(t.get_si()))) ps.insert(p);
    for (const auto &p : ps) {
      Integer dp = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0)
          for (int j = 0; j < fan.rank(); ++j) dp += p[i] * (*deg)[j] * fan.ray(i)[j];
      if (dn + dp != m) continue;
      RatVector w = point_of(fan, e, p);
      if (!in_shadow(fan, xi, w)) continue;
      IntVector n(fan.rank());
      for (int j = 0; j < fan.rank(); ++j) n[j] = Rational(w[j] - chi[j]).get_num();
      out.insert(n);
    }
  }
  return {out.begin(), out.end()};
}

RatVector QuotientAlgebra::coordinates(const ModulePoint &mp) const {
  RatVector out(dim());
  int t = level_of(mp.p);
  if (t >= levels) return out;
  const Level &L = tables[mp.summand][t];
  auto it = L.index.find(mp.p);
  if (it == L.index.end()) throw Error(ErrorKind::PointOutsideSupport, "point is not in the module");
  std::size_t col = it->second;
  if (L.basis_of_column[col] >= 0) {
    out[L.basis_of_column[col]] = 1;
    return out;
  }
  auto r = std::find(L.pivots.begin(), L.pivots.end(), col) - L.pivots.begin();
  for (std::size_t j = 0; j < L.columns.size(); ++j)
    if (L.basis_of_column[j] >= 0) out[L.basis_of_column[j]] = -L.rows[r][j];
  return out;
}

RatVector QuotientAlgebra::coordinates(const RatVector &w) const {
  auto mp = decompose_point(fan, box, w);
  if (!mp) throw Error(ErrorKind::PointOutsideSupport, "point is not of the form n + chi in the support");
  if (!in_shadow(fan, xi, w)) throw Error(ErrorKind::PointOutsideSupport, "point fails the shadow condition");
  return coordinates(*mp);
}

bool QuotientAlgebra::multiplies(std::size_t i, const ModulePoint &mp) const {
  return fan.is_used(i) && fan.is_face(support_with(box[mp.summand].support, mp.p, static_cast<long>(i)));
}

QuotientAlgebra build_quotient(const StackyFan &fan, const RatVector &chi, const std::optional<RatVector> &xi,
                               const QuotientOptions &options) {
  const std::size_t k = fan.num_rays();
  const int d = fan.rank();
  const Integer vol = normalized_volume(fan);
  const int cap = options.level_cap.value_or(10 * d + 10);

  QuotientAlgebra Q;
  Q.fan = fan;
  Q.chi = chi;
  Q.xi = xi;
  Q.box = box_of_fan(fan, to_gaussian(chi));
  for (const auto &e : Q.box) Q.tags.push_back(e.alpha);
  Q.tables.assign(Q.box.size(), {});
  Q.summand_dims.assign(Q.box.size(), 0);

  Integer total = 0;
  int reached = -1;
  for (int t = 0;; ++t) {
    if (t > cap)
      throw Error(ErrorKind::NoStabilizationWindow, "quotient did not stabilize within the level cap");
    for (std::size_t a = 0; a < Q.box.size(); ++a) {
      QuotientAlgebra::Level L;
      L.columns = level_points(fan, Q.box[a], t, xi);
      for (std::size_t c = 0; c < L.columns.size(); ++c) L.index.emplace(L.columns[c], c);
      if (t > 0) {
        const auto &prev = Q.tables[a][t - 1];
        for (const auto &q : prev.columns) {
          ModulePoint mp{a, q};
          for (int j = 0; j < d; ++j) {
            RatVector row(L.columns.size());
            bool any = false;
            for (int i : fan.used_rays()) {
              if (fan.ray(i)[j] == 0 || !Q.multiplies(i, mp)) continue;
              IntVector qi = q;
              qi[i] += 1;
              auto it = L.index.find(qi);
              if (it == L.index.end())
                throw Error(ErrorKind::InvalidArgument, "shadow filter is not closed under the ring action");
              row[it->second] += fan.ray(i)[j];
              any = true;
            }
            if (any) L.rows.push_back(std::move(row));
          }
        }
      }
      rref(L.rows, L.pivots, L.columns.size());
      L.basis_of_column.assign(L.columns.size(), -1);
      std::size_t contrib = L.columns.size() - L.pivots.size();
      Q.summand_dims[a] += contrib;
      total += contrib;
      Q.tables[a].push_back(std::move(L));
    }
    if (total > vol)
      throw Error(ErrorKind::DimensionOvershoot,
                  "quotient dimension " + total.get_str() + " exceeds the volume " + vol.get_str());
    if (total == vol && reached < 0) reached = t;
    if (reached >= 0 && t - reached >= options.window) {
      Q.levels = t + 1;
      break;
    }
  }

  for (std::size_t a = 0; a < Q.box.size(); ++a)
    for (int t = 0; t < Q.levels; ++t) {
      auto &L = Q.tables[a][t];
      std::size_t piv = 0;
      for (std::size_t c = 0; c < L.columns.size(); ++c) {
        if (piv < L.pivots.size() && L.pivots[piv] == c) {
          ++piv;
          continue;
        }
        L.basis_of_column[c] = static_cast<long>(Q.basis.size());
        Q.basis.push_back({a, L.columns[c], point_of(fan, Q.box[a], L.columns[c]), t});
      }
    }

  const std::size_t n = Q.basis.size();
  Q.D.assign(k, RatMatrix(n, n));
  for (std::size_t i = 0; i < k; ++i) {
    if (!fan.is_used(i)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      ModulePoint mp{Q.basis[b].summand, Q.basis[b].p};
      if (!Q.multiplies(i, mp)) continue;
      mp.p[i] += 1;
      auto col = Q.coordinates(mp);
      for (std::size_t r = 0; r < n; ++r) Q.D[i](r, b) = col[r];
    }
  }
  return Q;
}

QuotientAlgebra build_quotient(const StackyFan &fan, const GaussVector &beta, bool shadow,
                               const QuotientOptions &options) {
  auto corr = stabilize(fan, beta);
  std::optional<RatVector> xi;
  if (shadow) xi = real_part(beta);
  auto Q = build_quotient(fan, corr.beta_delta, xi, options);
  for (std::size_t a = 0; a < Q.box.size(); ++a) {
    RatVector ad = real_part(Q.box[a].alpha);
    auto it = std::find_if(corr.triples.begin(), corr.triples.end(),
                           [&](const DeltaTriple &t) { return t.alpha_delta == ad; });
    if (it == corr.triples.end()) throw Error(ErrorKind::Internal, "summand missing from the correspondence");
    Q.tags[a] = it->alpha;
  }
  Q.correspondence = std::move(corr);
  return Q;
}

Def2Check verify_def2_isomorphism(const StackyFan &fan, const GaussVector &beta,
                                  const DeltaCorrespondence &correspondence, int max_offset) {
  Def2Check check;
  const int d = fan.rank();
  const std::size_t k = fan.num_rays();

  // ring elements n' = c(gamma) + sum p' v_i
  std::set<IntVector> ring;
  for (const auto &g : box_of_fan(fan, GaussVector(d))) {
    for (std::size_t c : g.witness)
      for (int t = 0; t <= max_offset; ++t)
        for (const auto &p : compositions(fan.cone(c), k, t)) {
          RatVector w = point_of(fan, g, p);
          ring.insert(to_integer(w));
        }
  }

  auto box = box_of_fan(fan, beta);
  auto real_box = box_of_fan(fan, to_gaussian(correspondence.beta_delta));
  std::vector<Def2Element> elems;
  for (const auto &e : box) {
    std::set<IntVector> seen;
    for (std::size_t c : e.witness)
      for (int t = 0; t <= max_offset; ++t)
        for (const auto &p : compositions(fan.cone(c), k, t)) {
          IntVector n = e.n;
          for (std::size_t i = 0; i < k; ++i)
            for (int j = 0; j < d; ++j) n[j] += p[i] * fan.ray(i)[j];
          if (seen.insert(n).second) elems.push_back({n, e.alpha});
        }
  }

  auto triple_of = [&](const GaussVector &alpha) -> const DeltaTriple & {
    for (const auto &t : correspondence.triples)
      if (t.alpha == alpha) return t;
    throw Error(ErrorKind::Internal, "alpha missing from the correspondence");
  };
  // phi(c(alpha) + sum p_i v_i) = c(alpha_delta) + sum p_i v_i; the tag must
  // be the one the real module assigns to that point
  auto phi = [&](const Def2Element &x) {
    const auto &t = triple_of(x.alpha);
    GaussVector c = fan.combine(x.alpha);
    RatVector w(d);
    for (int j = 0; j < d; ++j) w[j] = Rational(x.n[j]) + beta[j].re - c[j].re + t.point[j];
    return std::make_pair(w, t.alpha_delta);
  };
  auto remark_tag = [&](const RatVector &w) -> std::optional<RatVector> {
    auto mp = decompose_point(fan, real_box, w);
    if (!mp) return std::nullopt;
    return real_part(real_box[mp->summand].alpha);
  };
  auto fail = [&](const std::string &msg) {
    if (check.ok) check.failure = msg;
    check.ok = false;
  };

  for (const auto &x : elems) {
    auto [w, tag] = phi(x);
    if (remark_tag(w) != tag) fail("phi does not preserve the alpha tag");
    for (const auto &np : ring) {
      ++check.products;
      auto lhs = module_product(fan, beta, np, x);
      auto rhs = point_product(fan, np, w);
      if (lhs.has_value() != rhs.has_value()) {
        fail("zero pattern differs");
        continue;
      }
      if (!lhs) continue;
      auto [lw, ltag] = phi(*lhs);
      if (lw != *rhs) fail("product points differ");
      if (remark_tag(*rhs) != ltag) fail("product tags differ");
    }
  }
  return check;
}

} // namespace bbgkz
