#include "bbgkz/gkz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <thread>

namespace bbgkz {

namespace {

Integer abs_sum(const IntVector &m) {
  Integer s = 0;
  for (const auto &x : m) s += abs(x);
  return s;
}

IntMatrix ray_matrix(const StackyFan &fan) { return IntMatrix::from_columns(fan.rays(), fan.rank()); }

bool negative_integer(const GaussianRational &z) { return z.is_real() && is_integral(z.re) && sgn(z.re) < 0; }

std::vector<Complex> pairwise_sum(const std::vector<std::vector<Complex>> &terms, const std::vector<std::size_t> &idx,
                                  std::size_t lo, std::size_t hi, std::size_t dim) {
  if (hi - lo == 0) return std::vector<Complex>(dim, 0.0);
  if (hi - lo == 1) return terms[idx[lo]];
  std::size_t mid = lo + (hi - lo) / 2;
  auto a = pairwise_sum(terms, idx, lo, mid, dim);
  auto b = pairwise_sum(terms, idx, mid, hi, dim);
  for (std::size_t i = 0; i < dim; ++i) a[i] += b[i];
  return a;
}

std::vector<Complex> pairwise_sum(const std::vector<std::vector<Complex>> &terms, const std::vector<std::size_t> &idx,
                                  std::size_t dim) {
  return pairwise_sum(terms, idx, 0, idx.size(), dim);
}

// Coordinates of [v]^p [c(alpha_delta)] in the quotient, for p on cones
// containing the support and below the top level.
struct MonomialTable {
  std::vector<IntVector> p;
  std::vector<std::vector<Complex>> coords;
  std::vector<bool> shadow;
};

MonomialTable monomials(const GkzInstance &inst, std::size_t summand) {
  const auto &Q = inst.quotient;
  const auto &e = Q.box[summand];
  std::set<IntVector> seen;
  for (std::size_t c : e.witness)
    for (int t = 0; t < Q.levels; ++t)
      for (auto &p : compositions(inst.fan.cone(c), inst.fan.num_rays(), t)) seen.insert(std::move(p));
  MonomialTable table;
  for (const auto &p : seen) {
    table.p.push_back(p);
    try {
      auto q = Q.coordinates(ModulePoint{summand, p});
      std::vector<Complex> z;
      for (const auto &x : q) z.emplace_back(x.get_d(), 0.0);
      table.coords.push_back(std::move(z));
      table.shadow.push_back(true);
    } catch (const Error &err) {
      if (err.kind() != ErrorKind::PointOutsideSupport) throw;
      table.coords.emplace_back();
      table.shadow.push_back(false);
    }
  }
  return table;
}

std::vector<Complex> log_coordinates(const EvalPoint &x) {
  std::vector<Complex> out;
  for (std::size_t i = 0; i < x.x.size(); ++i) {
    if (x.x[i] == Complex(0.0)) throw Error(ErrorKind::ZeroCoordinate, "x has a zero coordinate");
    double offset = i < x.arg_offsets.size() ? x.arg_offsets[i] : 0.0;
    out.emplace_back(std::log(std::abs(x.x[i])), std::arg(x.x[i]) + offset);
  }
  return out;
}

std::vector<std::vector<Complex>> evaluate_each(const GkzInstance &inst, const std::vector<LVector> &terms,
                                                const EvalPoint &x, std::optional<std::size_t> derivative,
                                                std::size_t *shadow_violations) {
  const auto &fan = inst.fan;
  const std::size_t k = fan.num_rays();
  const std::size_t dim = inst.quotient.dim();
  if (x.x.size() != k) throw Error(ErrorKind::InvalidArgument, "x has wrong length");
  const auto logx = log_coordinates(x);
  const int order = std::max(1, inst.quotient.levels);

  std::map<std::size_t, MonomialTable> tables;
  for (const auto &t : terms) {
    std::size_t s = inst.summand_of[t.alpha];
    if (!tables.count(s)) tables.emplace(s, monomials(inst, s));
  }

  std::vector<std::vector<Complex>> out(terms.size());
  std::atomic<std::size_t> violations{0};
  auto work = [&](std::size_t index) {
    const auto &t = terms[index];
    const auto &table = tables.at(inst.summand_of[t.alpha]);
    std::vector<Complex> value(dim, 0.0);
    Complex exponent = 0;
    std::vector<bool> vanishing(k);
    std::vector<std::vector<Complex>> jets(k);
    for (std::size_t i = 0; i < k; ++i) {
      Complex li = t.l[i].to_complex();
      exponent += li * logx[i];
      const int o = fan.is_used(i) ? order : 1;
      auto rg = reciprocal_gamma_jet(li, o);
      std::vector<Complex> jet(o, 0.0);
      Complex power = 1.0;
      std::vector<Complex> ex(o);
      for (int n = 0; n < o; ++n) {
        ex[n] = power;
        power *= logx[i] / double(n + 1);
      }
      for (int a = 0; a < o; ++a)
        for (int b = 0; a + b < o; ++b) jet[a + b] += ex[a] * rg[b];
      GaussianRational effective = t.l[i];
      if (derivative && *derivative == i) {
        for (int n = o - 1; n >= 0; --n) jet[n] = li * jet[n] + (n > 0 ? jet[n - 1] : 0.0);
        exponent -= logx[i];
        effective -= GaussianRational(1);
      }
      vanishing[i] = negative_integer(effective);
      if (vanishing[i]) jet[0] = 0.0;
      jets[i] = std::move(jet);
    }
    Complex prefactor = std::exp(exponent);
    for (std::size_t m = 0; m < table.p.size(); ++m) {
      const auto &p = table.p[m];
      bool skip = false;
      Complex coef = prefactor;
      for (std::size_t i = 0; i < k && !skip; ++i) {
        long pi = p[i].get_si();
        if (vanishing[i] && pi == 0) skip = true;
        else if (pi >= static_cast<long>(jets[i].size())) skip = true;
        else coef *= jets[i][pi];
      }
      if (skip || coef == Complex(0.0)) continue;
      if (!table.shadow[m]) {
        ++violations;
        continue;
      }
      for (std::size_t b = 0; b < dim; ++b)
        if (table.coords[m][b] != Complex(0.0)) value[b] += coef * table.coords[m][b];
    }
    out[index] = std::move(value);
  };

  const unsigned workers = std::min<std::size_t>(worker_threads(), std::max<std::size_t>(1, terms.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < terms.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < terms.size(); i = next++) work(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto &th : pool) th.join();
    for (auto &e : errors)
      if (e) std::rethrow_exception(e);
  }
  if (shadow_violations) *shadow_violations += violations.load();
  return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

SeriesValue summarize(const GkzInstance &inst, const IntVector &v, const EvalPoint &x, long B,
                      const std::vector<LVector> &terms, std::optional<std::size_t> derivative) {
  SeriesValue s;
  s.v = v;
  s.x = x.x;
  s.truncation_bound = B;
  s.terms = terms.size();
  auto each = evaluate_each(inst, terms, x, derivative, &s.shadow_violations);
  const std::size_t dim = inst.quotient.dim();
  s.value = pairwise_sum(each, all_indices(terms.size()), dim);
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].window() < B) inner.push_back(i);
  auto previous = pairwise_sum(each, inner, dim);
  for (std::size_t b = 0; b < dim; ++b) s.tail_estimate = std::max(s.tail_estimate, std::abs(s.value[b] - previous[b]));
  return s;
}

} // namespace

unsigned worker_threads() {
  if (const char *env = std::getenv("BBGKZ_THREADS")) {
    char *end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n >= 1) return static_cast<unsigned>(std::min(n, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

long LVector::window() const { return abs_sum(offset).get_si(); }

GkzInstance make_instance(const StackyFan &fan, const GaussVector &beta) {
  auto report = validate(fan);
  if (!report.gkz_eligible()) {
    std::string why = report.valid() ? report.gkz_issues.front() : report.violations.front();
    throw Error(ErrorKind::InvalidFan, "fan is not GKZ-eligible: " + why);
  }
  GkzInstance inst{fan, beta, {}, build_quotient(fan, beta, true), box_of_fan(fan, beta), {}, {}};
  inst.correspondence = *inst.quotient.correspondence;
  for (const auto &e : inst.box) {
    auto it = std::find(inst.quotient.tags.begin(), inst.quotient.tags.end(), e.alpha);
    if (it == inst.quotient.tags.end()) throw Error(ErrorKind::Internal, "Box element without a quotient summand");
    inst.summand_of.push_back(static_cast<std::size_t>(it - inst.quotient.tags.begin()));
  }
  inst.relations = integer_kernel(ray_matrix(fan));
  return inst;
}

std::vector<LVector> enumerate_L(const GkzInstance &inst, std::size_t alpha, const IntVector &v, long B) {
  const auto &fan = inst.fan;
  const std::size_t k = fan.num_rays(), d = fan.rank();
  const auto &e = inst.box.at(alpha);
  // l = alpha + m with sum m_i v_i = -v - n_alpha
  IntVector target(d);
  for (std::size_t j = 0; j < d; ++j) target[j] = -v[j] - e.n[j];
  auto m0 = integer_solution(ray_matrix(fan), target);
  if (!m0) throw Error(ErrorKind::NoParticularSolution, "beta - v is not reachable from alpha over the lattice");

  const IntMatrix &K = inst.relations;
  const std::size_t r = K.rows();
  std::vector<LVector> out;
  auto emit = [&](const IntVector &m) {
    if (abs_sum(m) > B) return;
    LVector lv;
    lv.alpha = alpha;
    lv.v = v;
    lv.offset = m;
    for (std::size_t i = 0; i < k; ++i) lv.l.push_back(e.alpha[i] + GaussianRational(Rational(m[i])));
    out.push_back(std::move(lv));
  };
  if (r == 0) {
    emit(*m0);
    return out;
  }
  // t = P (m - m0) with P K^T = I bounds the kernel coordinates
  RatMatrix Kr = to_rational(K);
  RatMatrix P = *inverse(Kr * Kr.transpose()) * Kr;
  Integer reach = B + abs_sum(*m0);
  std::vector<Integer> bound(r);
  for (std::size_t j = 0; j < r; ++j) {
    Rational worst = 0;
    for (std::size_t i = 0; i < k; ++i) worst = std::max(worst, Rational(abs(P(j, i))));
    Rational b = worst * reach;
    bound[j] = floor_of(b);
  }
  std::vector<Integer> t(r);
  for (std::size_t j = 0; j < r; ++j) t[j] = -bound[j];
  for (;;) {
    IntVector m = *m0;
    for (std::size_t j = 0; j < r; ++j)
      if (t[j] != 0)
        for (std::size_t i = 0; i < k; ++i) m[i] += t[j] * K(j, i);
    emit(m);
    std::size_t pos = 0;
    while (pos < r && t[pos] == bound[pos]) t[pos] = -bound[pos], ++pos;
    if (pos == r) break;
    ++t[pos];
  }
  std::sort(out.begin(), out.end(), [](const LVector &a, const LVector &b) { return a.offset < b.offset; });
  return out;
}

std::vector<LVector> series_terms(const GkzInstance &inst, const IntVector &v, long B) {
  std::vector<LVector> out;
  for (std::size_t a = 0; a < inst.box.size(); ++a) {
    auto part = enumerate_L(inst, a, v, B);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Complex> evaluate_terms(const GkzInstance &inst, const std::vector<LVector> &terms, const EvalPoint &x,
                                    std::optional<std::size_t> derivative, std::size_t *shadow_violations) {
  auto each = evaluate_each(inst, terms, x, derivative, shadow_violations);
  return pairwise_sum(each, all_indices(terms.size()), inst.quotient.dim());
}

SeriesValue gamma_series(const GkzInstance &inst, const IntVector &v, const EvalPoint &x, long B) {
  return summarize(inst, v, x, B, series_terms(inst, v, B), std::nullopt);
}

SeriesValue gamma_series_derivative(const GkzInstance &inst, const IntVector &v, std::size_t j, const EvalPoint &x,
                                    long B) {
  return summarize(inst, v, x, B, series_terms(inst, v, B), j);
}

TermShiftCheck verify_term_shift(const GkzInstance &inst, const IntVector &v, std::size_t j, long B) {
  TermShiftCheck check;
  const auto &fan = inst.fan;
  const std::size_t d = fan.rank();
  IntVector w = v;
  for (std::size_t c = 0; c < d; ++c) w[c] += fan.ray(j)[c];
  for (std::size_t a = 0; a < inst.box.size(); ++a) {
    auto S = enumerate_L(inst, a, v, B);
    auto T = enumerate_L(inst, a, w, B);
    std::map<IntVector, const LVector *> in_T;
    for (const auto &t : T) in_T.emplace(t.offset, &t);
    std::set<IntVector> shifted;
    for (const auto &s : S) {
      LVector moved = s;
      moved.v = w;
      moved.offset[j] -= 1;
      moved.l[j] -= GaussianRational(1);
      // sum l_i v_i must drop by exactly v_j
      GaussVector lhs(d);
      for (std::size_t i = 0; i < fan.num_rays(); ++i)
        for (std::size_t c = 0; c < d; ++c) lhs[c] += Rational(fan.ray(i)[c]) * moved.l[i];
      for (std::size_t c = 0; c < d; ++c)
        if (lhs[c] != inst.beta[c] - GaussianRational(Rational(w[c]))) check.ok = false;
      shifted.insert(moved.offset);
      if (in_T.count(moved.offset)) {
        ++check.matched;
      } else {
        if (moved.window() <= B) check.ok = false;
        check.boundary.push_back(std::move(moved));
      }
    }
    for (const auto &t : T) {
      if (shifted.count(t.offset)) continue;
      IntVector back = t.offset;
      back[j] += 1;
      if (abs_sum(back) <= B) check.ok = false;
      check.boundary.push_back(t);
    }
  }
  return check;
}

bool verify_euler(const GkzInstance &inst) {
  const auto &Q = inst.quotient;
  const std::size_t n = Q.dim();
  for (int j = 0; j < inst.fan.rank(); ++j) {
    RatMatrix E(n, n);
    for (std::size_t i = 0; i < inst.fan.num_rays(); ++i) {
      const Integer &g = inst.fan.ray(i)[j];
      if (g == 0) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) E(r, c) += g * Q.D[i](r, c);
    }
    if (!E.is_zero()) return false;
  }
  return true;
}

DecompositionCheck verify_shadow_decomposition(const GkzInstance &inst, int max_level) {
  DecompositionCheck check;
  const auto &fan = inst.fan;
  const auto &Q = inst.quotient;
  const std::size_t k = fan.num_rays(), d = fan.rank();
  const RatVector &bd = inst.correspondence.beta_delta;
  const RatVector xi = real_part(inst.beta);

  std::set<RatVector> points;
  for (const auto &e : Q.box)
    for (std::size_t c : e.witness)
      for (int t = 0; t <= max_level; ++t)
        for (const auto &p : compositions(fan.cone(c), k, t)) {
          RatVector w = real_part(e.point(fan));
          for (std::size_t i = 0; i < k; ++i)
            if (p[i] != 0)
              for (std::size_t j = 0; j < d; ++j) w[j] += p[i] * fan.ray(i)[j];
          if (tangent_member(fan, w, xi)) points.insert(std::move(w));
        }

  auto fail = [&](const RatVector &w, const std::string &why) {
    std::string s = "(";
    for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "," : "") + to_string(w[j]);
    check.failures.push_back(s + "): " + why);
  };

  for (const auto &w : points) {
    ++check.checked;
    // a maximal cone containing w + eps beta_delta
    std::optional<std::size_t> sigma;
    RatVector a, b;
    for (std::size_t c = 0; c < fan.num_cones() && !sigma; ++c) {
      auto aw = fan.cone_coordinates(c, w);
      auto ab = fan.cone_coordinates(c, bd);
      if (!aw || !ab) continue;
      bool inside = true;
      for (std::size_t i = 0; i < d && inside; ++i)
        inside = sgn((*aw)[i]) > 0 || (sgn((*aw)[i]) == 0 && sgn((*ab)[i]) >= 0);
      if (inside) sigma = c, a = *aw, b = *ab;
    }
    if (!sigma) {
      fail(w, "no maximal cone contains w + eps beta_delta");
      continue;
    }
    const auto &cone = fan.cone(*sigma);
    // unique sector of Box(sigma; beta_delta) below w
    std::size_t below = 0;
    for (const auto &e : box_of_cone(fan, *sigma, to_gaussian(bd))) {
      bool ok = true;
      for (std::size_t i = 0; i < d && ok; ++i) {
        Rational diff = a[i] - e.alpha[cone[i]].re;
        ok = is_integral(diff) && sgn(diff) >= 0;
      }
      below += ok;
    }
    if (below != 1) {
      fail(w, "Box element below w is not unique");
      continue;
    }
    RatVector ad(k);
    IntVector p(k);
    for (std::size_t i = 0; i < d; ++i) {
      ad[cone[i]] = frac_of(a[i]);
      p[cone[i]] = floor_of(a[i]);
    }
    auto s = find_alpha(Q.box, to_gaussian(ad));
    if (!s) {
      fail(w, "alpha_delta missing from the Box set");
      continue;
    }
    const GaussVector &alpha = Q.tags[*s];
    // v in Box(sigma; 0) with n in -v + sum Z v_i, n = w - beta_delta
    RatVector neg_n(d);
    for (std::size_t j = 0; j < d; ++j) neg_n[j] = bd[j] - w[j];
    auto cn = *fan.cone_coordinates(*sigma, neg_n);
    RatVector vr(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) vr[j] += frac_of(cn[i]) * fan.ray(cone[i])[j];
    if (!is_integral(vr)) {
      fail(w, "v is not a lattice point");
      continue;
    }
    GaussVector target(d);
    for (std::size_t j = 0; j < d; ++j) target[j] = inst.beta[j] - GaussianRational(vr[j]);
    auto lc = solve_simplicial_coords(fan.generators(cone), target);
    GaussVector l(k);
    for (std::size_t i = 0; i < d; ++i) l[cone[i]] = lc[i];
    bool in_L = true;
    for (std::size_t i = 0; i < k && in_L; ++i) {
      GaussianRational diff = l[i] - alpha[i];
      in_L = diff.is_real() && is_integral(diff.re);
    }
    if (!in_L) {
      fail(w, "l is not in L(alpha, v)");
      continue;
    }
    for (std::size_t i = 0; i < k; ++i)
      if (negative_integer(l[i]) && sgn(p[i]) <= 0) {
        fail(w, "missing ray for a negative integral l_i");
        break;
      }
  }
  return check;
}

std::vector<IntVector> cone_points(const GkzInstance &inst, long cap) {
  std::vector<IntVector> out;
  RatVector zero(inst.fan.rank());
  for (long m = 0; m <= cap; ++m) {
    auto piece = graded_piece(inst.fan, zero, std::nullopt, m);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

SolutionSystem solution_system(const GkzInstance &inst, const EvalPoint &x, long B, long vcap, double rank_tol) {
  SolutionSystem sys;
  sys.rows = cone_points(inst, vcap);
  const std::size_t dim = inst.quotient.dim();
  Eigen::MatrixXcd M(sys.rows.size(), dim);
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    auto s = gamma_series(inst, sys.rows[r], x, B);
    sys.tail_estimate = std::max(sys.tail_estimate, s.tail_estimate);
    for (std::size_t c = 0; c < dim; ++c) M(r, c) = s.value[c];
    sys.matrix.push_back(std::move(s.value));
  }
  sys.singular_values = singular_values(M);
  sys.rank = rank_over_C(M, rank_tol);
  sys.rank_deficient = sys.rank < static_cast<int>(dim);
  if (!sys.singular_values.empty() && sys.singular_values.size() >= dim && dim > 0) {
    double top = sys.singular_values.front();
    double next = sys.singular_values.size() > dim
                      ? sys.singular_values[dim]
                      : std::numeric_limits<double>::epsilon() * double(std::max<std::size_t>(sys.rows.size(), dim)) * top;
    sys.gap = next > 0 ? sys.singular_values[dim - 1] / next : std::numeric_limits<double>::infinity();
  }
  return sys;
}

bool GkzVerification::passed() const {
  return euler && term_shift && shadow_violations == 0 && decomposition.failures.empty() && residual_within_tail &&
         !system.rank_deficient;
}

GkzVerification verify_instance(const GkzInstance &inst, const EvalPoint &x, long B, long vcap, double rank_tol) {
  GkzVerification out;
  out.euler = verify_euler(inst);
  out.term_shift = true;
  const std::size_t k = inst.fan.num_rays(), d = inst.fan.rank();
  out.residual_within_tail = true;
  double worst_ratio = -1;
  for (const auto &v : cone_points(inst, vcap))
    for (std::size_t j = 0; j < k; ++j) {
      auto shift = verify_term_shift(inst, v, j, B);
      ++out.term_shift_checks;
      out.term_shift = out.term_shift && shift.ok;
      out.boundary_terms += shift.boundary.size();

      auto terms = series_terms(inst, v, B);
      auto shifted = terms;
      for (auto &t : shifted) {
        t.l[j] -= GaussianRational(1);
        t.offset[j] -= 1;
      }
      auto derivative = gamma_series_derivative(inst, v, j, x, B);
      IntVector w = v;
      for (std::size_t c = 0; c < d; ++c) w[c] += inst.fan.ray(j)[c];
      auto next = gamma_series(inst, w, x, B);
      auto matched = evaluate_terms(inst, shifted, x, std::nullopt, &out.shadow_violations);
      out.shadow_violations += derivative.shadow_violations + next.shadow_violations;
      double raw = 0, tight = 0;
      for (std::size_t b = 0; b < inst.quotient.dim(); ++b) {
        raw = std::max(raw, std::abs(derivative.value[b] - next.value[b]));
        tight = std::max(tight, std::abs(derivative.value[b] - matched[b]));
      }
      double allowance = 10 * std::max(derivative.tail_estimate, next.tail_estimate);
      if (raw > allowance + 1e-14 * std::max(1.0, std::abs(raw))) out.residual_within_tail = false;
      double ratio = raw / std::max(allowance, std::numeric_limits<double>::min());
      if (ratio >= worst_ratio) {
        worst_ratio = ratio;
        out.worst_residual = raw;
        out.worst_allowance = allowance;
      }
      out.max_residual = std::max(out.max_residual, raw);
      out.max_matched_residual = std::max(out.max_matched_residual, tight);
    }
  out.decomposition = verify_shadow_decomposition(inst, 6);
  out.system = solution_system(inst, x, B, vcap, rank_tol);
  return out;
}

std::vector<Complex> default_point(const GkzInstance &inst) {
  auto h = regular_heights(inst.fan);
  if (!h) throw Error(ErrorKind::InvalidFan, "fan is not a regular triangulation");
  double rho = 0.5;
  bool first = true;
  for (std::size_t r = 0; r < inst.relations.rows(); ++r) {
    Rational s = 0;
    for (std::size_t i = 0; i < inst.fan.num_rays(); ++i) s += (*h)[i] * inst.relations(r, i);
    double sd = std::abs(s.get_d());
    if (sd == 0) continue;
    double candidate = std::pow(1e-2, 1.0 / sd);
    rho = first ? candidate : std::min(rho, candidate);
    first = false;
  }
  std::vector<Complex> x;
  for (const auto &hi : *h) x.emplace_back(std::pow(rho, hi.get_d()), 0.0);
  return x;
}

} // namespace bbgkz
