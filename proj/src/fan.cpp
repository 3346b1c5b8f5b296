#include "bbgkz/fan.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "lp.hpp"

namespace bbgkz {

namespace {

std::string cone_name(const ConeRef &c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i] + 1;
  os << '}';
  return os.str();
}

bool subset_of(const ConeRef &a, const ConeRef &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Rational dot(const IntVector &a, const RatVector &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace

StackyFan::StackyFan(int rank, std::vector<IntVector> rays, std::vector<ConeRef> max_cones,
                     std::optional<IntVector> deg)
    : rank_(rank), rays_(std::move(rays)), cones_(std::move(max_cones)), deg_(std::move(deg)) {
  if (rank_ <= 0) throw Error(ErrorKind::InvalidFan, "rank must be positive");
  for (const auto &v : rays_)
    if (v.size() != static_cast<std::size_t>(rank_))
      throw Error(ErrorKind::InvalidFan, "ray length differs from rank");
  if (deg_ && deg_->size() != static_cast<std::size_t>(rank_))
    throw Error(ErrorKind::InvalidFan, "deg length differs from rank");
  if (cones_.empty()) throw Error(ErrorKind::InvalidFan, "no maximal cones");
  used_mask_.assign(rays_.size(), false);
  for (auto &c : cones_) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error(ErrorKind::InvalidFan, "repeated ray in cone " + cone_name(c));
    for (int i : c) {
      if (i < 0 || static_cast<std::size_t>(i) >= rays_.size())
        throw Error(ErrorKind::InvalidFan, "ray index out of range in cone");
      used_mask_[i] = true;
    }
  }
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (used_mask_[i]) used_.push_back(static_cast<int>(i));

  for (const auto &c : cones_) {
    auto gens = generators(c);
    bool simp = c.size() <= static_cast<std::size_t>(rank_) &&
                bbgkz::rank(to_rational(IntMatrix::from_columns(gens, rank_))) == c.size();
    simplicial_.push_back(simp);
    if (simp && c.size() == static_cast<std::size_t>(rank_))
      inverses_.push_back(inverse(to_rational(IntMatrix::from_columns(gens, rank_))));
    else
      inverses_.emplace_back();
  }
  effective_deg_ = deg_ ? deg_ : infer_deg(rays_, rank_);
}

std::vector<IntVector> StackyFan::generators(const ConeRef &cone) const {
  std::vector<IntVector> out;
  out.reserve(cone.size());
  for (int i : cone) out.push_back(rays_[i]);
  return out;
}

bool StackyFan::all_full_dimensional() const {
  for (std::size_t c = 0; c < cones_.size(); ++c)
    if (!is_full_dimensional(c)) return false;
  return true;
}

std::optional<RatVector> StackyFan::cone_coordinates(std::size_t c, const RatVector &p) const {
  if (inverses_[c]) return inverses_[c]->apply(p);
  if (!simplicial_[c]) throw Error(ErrorKind::DependentGenerators, "cone " + cone_name(cones_[c]) + " is not simplicial");
  try {
    return solve_simplicial_coords(generators(cones_[c]), p);
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::NotInSpan) return std::nullopt;
    throw;
  }
}

bool StackyFan::cone_contains(std::size_t c, const RatVector &p) const {
  auto q = cone_coordinates(c, p);
  return q && std::all_of(q->begin(), q->end(), [](const Rational &x) { return sgn(x) >= 0; });
}

std::vector<std::size_t> StackyFan::cones_containing(const ConeRef &face) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cones_.size(); ++c)
    if (subset_of(face, cones_[c])) out.push_back(c);
  return out;
}

RatVector StackyFan::combine(const RatVector &coeffs) const {
  RatVector out(rank_);
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) out[j] += coeffs[i] * rays_[i][j];
  }
  return out;
}

GaussVector StackyFan::combine(const GaussVector &coeffs) const {
  GaussVector out(rank_);
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (int j = 0; j < rank_; ++j) out[j] += Rational(rays_[i][j]) * coeffs[i];
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<IntVector> infer_deg(const std::vector<IntVector> &rays, int rank) {
  if (rays.empty()) return std::nullopt;
  // deg . v_i = 1 for all i: rows v_i
  auto A = to_rational(IntMatrix::from_rows(rays));
  if (bbgkz::rank(A) < static_cast<std::size_t>(rank)) return std::nullopt;
  std::optional<RatVector> sol;
  try {
    sol = solve_full_column_rank(A, RatVector(rays.size(), Rational(1)));
  } catch (const Error &) {
    return std::nullopt;
  }
  if (!sol || !is_integral(*sol)) return std::nullopt;
  return to_integer(*sol);
}

bool rays_generate_lattice(const std::vector<IntVector> &rays, int rank) {
  if (rays.empty()) return false;
  auto h = hermite_normal_form(IntMatrix::from_rows(rays));
  if (h.rank != static_cast<std::size_t>(rank)) return false;
  for (std::size_t i = 0; i < h.rank; ++i)
    if (h.H(i, h.pivots[i]) != 1) return false;
  return true;
}

namespace {

// Two simplicial cones meet in the cone on their shared rays iff no point of
// the intersection carries weight on a non-shared ray.
bool improper_intersection(const StackyFan &fan, const ConeRef &a, const ConeRef &b) {
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  const std::size_t d = fan.rank();
  RatMatrix Aeq(d + 1, n);
  RatVector beq(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < na; ++i) Aeq(j, i) = fan.ray(a[i])[j];
    for (std::size_t i = 0; i < nb; ++i) Aeq(j, na + i) = -fan.ray(b[i])[j];
  }
  bool any = false;
  for (std::size_t i = 0; i < na; ++i)
    if (!std::binary_search(b.begin(), b.end(), a[i])) Aeq(d, i) = 1, any = true;
  for (std::size_t i = 0; i < nb; ++i)
    if (!std::binary_search(a.begin(), a.end(), b[i])) Aeq(d, na + i) = 1, any = true;
  if (!any) return false;
  beq[d] = 1;
  RatMatrix Ale(n, n);
  for (std::size_t i = 0; i < n; ++i) Ale(i, i) = -1;
  return detail::find_feasible(Ale, RatVector(n), Aeq, beq, n).has_value();
}

} // namespace

ValidationReport validate(const StackyFan &fan) {
  ValidationReport rep;
  const auto &cones = fan.max_cones();
  for (std::size_t c = 0; c < cones.size(); ++c) {
    if (cones[c].empty()) continue;
    if (!fan.is_simplicial(c))
      rep.violations.push_back("cone " + cone_name(cones[c]) + " is not simplicial");
  }
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      if (cones[a] == cones[b]) {
        rep.violations.push_back("cone " + cone_name(cones[a]) + " listed twice");
        continue;
      }
      if (subset_of(cones[a], cones[b]) || subset_of(cones[b], cones[a])) {
        rep.violations.push_back("cone " + cone_name(cones[a]) + " and " + cone_name(cones[b]) +
                                 ": one is a face of the other");
        continue;
      }
      if (!fan.is_simplicial(a) || !fan.is_simplicial(b)) continue;
      if (improper_intersection(fan, cones[a], cones[b]))
        rep.violations.push_back("cones " + cone_name(cones[a]) + " and " + cone_name(cones[b]) +
                                 " do not meet in a common face");
    }

  rep.deg = fan.deg();
  if (fan.declared_deg()) {
    for (std::size_t i = 0; i < fan.num_rays(); ++i) {
      Integer s = 0;
      for (int j = 0; j < fan.rank(); ++j) s += (*fan.declared_deg())[j] * fan.ray(i)[j];
      if (s != 1) rep.violations.push_back("deg(v_" + std::to_string(i + 1) + ") != 1");
    }
  } else if (!rep.deg) {
    rep.gkz_issues.push_back("no integral deg with deg(v_i) = 1");
  }
  if (!rays_generate_lattice(fan.rays(), fan.rank()))
    rep.gkz_issues.push_back("rays do not generate the lattice");

  if (fan.all_full_dimensional()) {
    rep.volume = normalized_volume(fan);
  } else {
    rep.gkz_issues.push_back("some maximal cone is not full-dimensional");
  }

  if (rep.valid() && rep.gkz_issues.empty() && rep.volume) {
    // support equals K iff volumes agree (cones are non-overlapping and
    // generated by points of Delta)
    Integer hull = hull_normalized_volume(fan.rays());
    if (hull != *rep.volume)
      rep.gkz_issues.push_back("support is not the cone over conv(rays): volume " +
                               rep.volume->get_str() + " vs " + hull.get_str());
  }
  return rep;
}

std::optional<ConeRef> minimal_cone(const StackyFan &fan, const RatVector &p) {
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    if (!fan.is_simplicial(c)) continue;
    auto q = fan.cone_coordinates(c, p);
    if (!q || std::any_of(q->begin(), q->end(), [](const Rational &x) { return sgn(x) < 0; })) continue;
    ConeRef out;
    for (std::size_t i = 0; i < q->size(); ++i)
      if (sgn((*q)[i]) > 0) out.push_back(fan.cone(c)[i]);
    return out;
  }
  return std::nullopt;
}

std::optional<ConeRef> minimal_cone(const StackyFan &fan, const GaussVector &p, bool use_real_part) {
  if (!use_real_part && !is_real(p)) return std::nullopt;
  return minimal_cone(fan, real_part(p));
}

bool tangent_member(const StackyFan &fan, const RatVector &p, const RatVector &xi) {
  bool inside = false;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    if (!fan.is_simplicial(c)) continue;
    auto q = fan.cone_coordinates(c, p);
    if (!q || std::any_of(q->begin(), q->end(), [](const Rational &x) { return sgn(x) < 0; })) continue;
    inside = true;
    auto dir = fan.cone_coordinates(c, xi);
    if (!dir) continue;
    bool ok = true;
    for (std::size_t i = 0; i < q->size() && ok; ++i)
      if (sgn((*q)[i]) == 0 && sgn((*dir)[i]) < 0) ok = false;
    if (ok) return true;
  }
  if (!inside) throw Error(ErrorKind::PointOutsideSupport, "point is outside the fan support");
  return false;
}

Integer normalized_volume(const StackyFan &fan) {
  Integer vol = 0;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    if (fan.cone(c).size() != static_cast<std::size_t>(fan.rank()))
      throw Error(ErrorKind::NotFullDimensional, "cone " + cone_name(fan.cone(c)) + " is not full-dimensional");
    vol += abs(determinant(IntMatrix::from_columns(fan.generators(fan.cone(c)), fan.rank())));
  }
  return vol;
}

StackyFan triangulate_from_heights(const std::vector<IntVector> &points, const RatVector &heights) {
  if (points.empty() || points.size() != heights.size())
    throw Error(ErrorKind::InvalidArgument, "points and heights must be nonempty and of equal length");
  const int d = static_cast<int>(points.front().size());
  auto deg = infer_deg(points, d);
  if (!deg) {
    // a rational functional suffices for the lifting argument
    auto A = to_rational(IntMatrix::from_rows(points));
    std::optional<RatVector> sol;
    try {
      sol = solve_full_column_rank(A, RatVector(points.size(), Rational(1)));
    } catch (const Error &) {
    }
    if (!sol) throw Error(ErrorKind::InvalidArgument, "points are not on a common hyperplane deg = 1");
  }
  const std::size_t n = points.size();
  if (n < static_cast<std::size_t>(d)) throw Error(ErrorKind::NotFullDimensional, "too few points");

  std::vector<ConeRef> facets;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  for (;;) {
    std::vector<IntVector> gens;
    for (int i : idx) gens.push_back(points[i]);
    auto V = to_rational(IntMatrix::from_columns(gens, d));
    if (auto Vinv = inverse(V)) {
      // psi(v_i) = h_i on the subset: psi = h_S^T V^{-1}
      RatVector psi(d);
      for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) psi[c] += heights[idx[r]] * (*Vinv)(r, c);
      bool lower = true, tight = false;
      for (std::size_t j = 0; j < n && lower; ++j) {
        if (std::find(idx.begin(), idx.end(), static_cast<int>(j)) != idx.end()) continue;
        Rational val = dot(points[j], psi);
        if (val > heights[j]) lower = false;
        else if (val == heights[j]) tight = true;
      }
      if (lower && tight) throw Error(ErrorKind::DegenerateHeights, "lower hull has a non-simplicial face");
      if (lower) facets.push_back(ConeRef(idx.begin(), idx.end()));
    }
    int pos = d - 1;
    while (pos >= 0 && idx[pos] == static_cast<int>(n) - d + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
  }
  if (facets.empty()) throw Error(ErrorKind::NotFullDimensional, "points do not span the lattice");
  return StackyFan(d, points, facets, deg);
}

Integer hull_normalized_volume(const std::vector<IntVector> &points) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> dist(0, 1 << 20);
  for (int attempt = 0; attempt < 16; ++attempt) {
    RatVector h;
    for (std::size_t i = 0; i < points.size(); ++i) h.push_back(make_rational(dist(rng), 1 << 10));
    try {
      return normalized_volume(triangulate_from_heights(points, h));
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::DegenerateHeights) throw;
    }
  }
  throw Error(ErrorKind::DegenerateHeights, "no generic heights found");
}

std::optional<RatVector> regular_heights(const StackyFan &fan) {
  // For every maximal cone sigma and ray j outside it:
  //   sum_{i in sigma} h_i (V_sigma^{-1} v_j)_i - h_j <= -1
  const std::size_t k = fan.num_rays();
  std::vector<RatVector> rows;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    if (!fan.is_full_dimensional(c)) return std::nullopt;
    const auto &cone = fan.cone(c);
    for (std::size_t j = 0; j < k; ++j) {
      if (std::binary_search(cone.begin(), cone.end(), static_cast<int>(j))) continue;
      auto q = fan.cone_coordinates(c, to_rational(fan.ray(j)));
      RatVector row(k);
      for (std::size_t i = 0; i < cone.size(); ++i) row[cone[i]] += (*q)[i];
      row[j] -= 1;
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return RatVector(k);
  RatMatrix A = RatMatrix::from_rows(rows);
  return detail::find_feasible(A, RatVector(rows.size(), Rational(-1)), RatMatrix(0, k), {}, k);
}

} // namespace bbgkz
