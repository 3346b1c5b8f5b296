// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include "bbgkz/gamma.hpp"
#include "bbgkz/gkz.hpp"
#include "bbgkz/kring.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace bbgkz;
using namespace bbgkz::test;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string &what) {
    if (!ok && pass) note << what;
    pass = pass && ok;
  }
};

std::vector<QuotientAlgebra> structure_pool;

std::complex<double> e2pi(double x) { return {std::cos(2 * std::numbers::pi * x), std::sin(2 * std::numbers::pi * x)}; }

// F2 labels by cone (0-based: {1,2}, {2,3}, {1,3}) and sector
const BoxLabel P1{1, 0}, P2{1, 1}, P3{2, 0}, P4{0, 0};

Outcome spectrum_example() {
  Outcome o;
  auto f2 = fan_f2();
  double a = 1.0 / 3, b = 1.0 / 5;
  std::map<BoxLabel, std::vector<std::complex<double>>> closed{
      {P1, {1.0, e2pi(-a / 2 + b), e2pi(-a / 2)}},
      {P2, {1.0, e2pi(-a / 2 + b + 0.5), e2pi(-a / 2 + 0.5)}},
      {P3, {e2pi(a - 2 * b), 1.0, e2pi(-b)}},
      {P4, {e2pi(a), e2pi(b), 1.0}}};
  auto pts = spectrum(f2, gv({rq(1, 3), rq(1, 5)}));
  o.require(pts.size() == 4, "expected 4 points");
  std::size_t total = 0, matched = 0;
  double worst = 0;
  for (const auto &p : pts) {
    total += p.multiplicity;
    if (p.labels.size() != 1 || !closed.count(p.labels[0])) continue;
    const auto &want = closed[p.labels[0]];
    bool ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
      double rel = std::abs(p.y[i] - want[i]) / std::abs(want[i]);
      worst = std::max(worst, rel);
      ok = ok && rel <= 1e-12;
    }
    matched += ok;
  }
  o.require(matched == 4, "closed forms not matched");
  o.require(total == 4, "total multiplicity");
  o.note << (o.pass ? "" : "; ") << "max relative error " << worst;
  return o;
}

Outcome walls() {
  Outcome o;
  auto f2 = fan_f2();
  using Class = std::pair<std::set<BoxLabel>, std::size_t>;
  auto classes = [&](const GaussVector &beta) {
    std::set<Class> out;
    for (const auto &p : spectrum(f2, beta)) out.insert({{p.labels.begin(), p.labels.end()}, p.multiplicity});
    return out;
  };
  o.require(classes(gv({0, 0})) == std::set<Class>{{{P1, P3, P4}, 3}, {{P2}, 1}}, "classes at (0,0)");
  o.require(classes(gv({0, rq(1, 2)})) == std::set<Class>{{{P1, P4}, 2}, {{P2, P3}, 2}}, "classes at (0,1/2)");

  auto integral = [](const Rational &x) { return is_integral(x); };
  const std::vector<Rational> as{0, rq(1, 2), rq(2, 3), 1, 2}, bs{0, rq(1, 3), rq(1, 2), rq(5, 6), 1};
  std::size_t hits = 0;
  for (const auto &a : as)
    for (const auto &b : bs) {
      std::set<std::pair<BoxLabel, BoxLabel>> predicted;
      auto add = [&](BoxLabel x, BoxLabel y) { predicted.insert({std::min(x, y), std::max(x, y)}); };
      if (integral(-a / 2 + b)) add(P1, P3);
      if (integral(-a / 2 + b + rq(1, 2))) add(P2, P3);
      if (integral(-a / 2)) add(P1, P4);
      if (integral(-a / 2 + rq(1, 2))) add(P2, P4);
      if (integral(b)) add(P3, P4);
      std::set<std::pair<BoxLabel, BoxLabel>> observed;
      for (const auto &c : collisions(f2, gv({a, b})))
        for (std::size_t i = 0; i < c.labels.size(); ++i)
          for (std::size_t j = i + 1; j < c.labels.size(); ++j)
            observed.insert({std::min(c.labels[i], c.labels[j]), std::max(c.labels[i], c.labels[j])});
      hits += !predicted.empty();
      o.require(observed == predicted, "grid mismatch at (" + to_string(a) + ", " + to_string(b) + ")");
    }
  o.note << (o.pass ? "" : "; ") << "25 grid points, " << hits << " on walls";
  return o;
}

std::set<RatVector> brute_force_box(const StackyFan &fan, std::size_t cone, const RatVector &beta) {
  const int d = fan.rank();
  auto gens = fan.generators(fan.cone(cone));
  std::vector<Integer> lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    Rational mn = 0, mx = 0;
    for (const auto &g : gens) (g[j] < 0 ? mn : mx) += g[j];
    lo[j] = floor_of(mn - beta[j]) - 1;
    hi[j] = floor_of(mx - beta[j]) + 1;
  }
  std::set<RatVector> out;
  IntVector n = lo;
  for (;;) {
    RatVector p(d);
    for (int j = 0; j < d; ++j) p[j] = n[j] + beta[j];
    auto c = solve_simplicial_coords(gens, p);
    if (std::all_of(c.begin(), c.end(), [](const Rational &x) { return sgn(x) >= 0 && x < 1; })) {
      RatVector alpha(fan.num_rays());
      for (int i = 0; i < d; ++i) alpha[fan.cone(cone)[i]] = c[i];
      out.insert(alpha);
    }
    int pos = d - 1;
    while (pos >= 0 && n[pos] == hi[pos]) n[pos] = lo[pos], --pos;
    if (pos < 0) break;
    ++n[pos];
  }
  return out;
}

Outcome box_examples() {
  Outcome o;
  auto f1 = fan_f1();
  auto points = [&](const GaussVector &beta) {
    std::set<RatVector> out;
    for (const auto &e : box_of_fan(f1, beta)) out.insert(real_part(e.point(f1)));
    return out;
  };
  o.require(points(gv({rq(1, 4), 0})) == std::set<RatVector>{{rq(1, 4), 0}, {rq(5, 4), 2}}, "F1 at (1/4,0)");
  o.require(points(gv({0, 0})) == std::set<RatVector>{{0, 0}}, "F1 at (0,0)");
  std::mt19937_64 rng(2025);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + t % 2;
    auto fan = t % 4 == 3 ? random_complete_fan(rng, 5) : random_gkz_fan(rng, d, 2, 3);
    RatVector beta;
    for (int j = 0; j < fan.rank(); ++j) beta.push_back(make_rational(num(rng), den(rng)));
    for (std::size_t c = 0; c < fan.num_cones(); ++c) {
      std::set<RatVector> mine;
      for (const auto &e : box_of_cone(fan, c, to_gaussian(beta))) mine.insert(real_part(e.alpha));
      o.require(mine == brute_force_box(fan, c, beta), "brute force mismatch on instance " + std::to_string(t));
    }
  }
  return o;
}

Outcome dimension_volume() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::vector<std::pair<StackyFan, GaussVector>> cases{
      {fan_f1(), gv({rq(1, 3), rq(1, 5)}, {rq(1, 7), 0})},
      {fan_f2(), gv({rq(1, 3), rq(1, 5)}, {rq(2, 9), rq(-1, 4)})},
      {StackyFan(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}}), gv({rq(1, 2), rq(1, 3)}, {1, 1})}};
  for (int t = 0; t < 10; ++t) {
    auto fan = t % 2 ? random_complete_fan(rng, 3 + t % 3) : random_gkz_fan(rng, 2 + (t / 2) % 2);
    GaussVector beta;
    for (int j = 0; j < fan.rank(); ++j) beta.push_back(random_gauss(rng));
    cases.emplace_back(fan, beta);
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto Q = build_quotient(cases[i].first, cases[i].second, false);
    std::size_t sum = 0;
    for (auto s : Q.summand_dims) sum += s;
    o.require(Integer(Q.dim()) == normalized_volume(cases[i].first), "dim != vol on case " + std::to_string(i));
    o.require(sum == Q.dim(), "summands do not add up on case " + std::to_string(i));
    structure_pool.push_back(std::move(Q));
  }
  o.note << (o.pass ? "" : "; ") << cases.size() << " instances";
  return o;
}

Outcome stabilization() {
  Outcome o;
  std::mt19937_64 rng(515);
  std::size_t products = 0;
  for (int t = 0; t < 10; ++t) {
    auto fan = t % 3 == 0 ? fan_f1() : t % 3 == 1 ? fan_f2() : random_complete_fan(rng, 4, 2);
    GaussVector beta;
    for (int j = 0; j < fan.rank(); ++j) beta.push_back(random_gauss(rng));
    auto s = stabilize(fan, beta);
    auto half = correspondence_at(fan, beta, s.delta / 2);
    o.require(half.has_value(), "no correspondence at delta/2");
    if (!half) continue;
    auto box = box_of_fan(fan, beta);
    for (std::size_t i = 0; i < s.triples.size(); ++i) {
      const auto &a = s.triples[i], &b = half->triples[i];
      o.require(a.alpha == b.alpha && a.support == b.support, "delta/2 changes the correspondence");
      ConeRef supp;
      for (std::size_t r = 0; r < a.alpha_delta.size(); ++r)
        if (a.alpha_delta[r] != 0) supp.push_back(int(r));
      o.require(supp == a.support && box[i].support == a.support, "support not preserved");
      for (std::size_t r = 0; r < a.alpha.size(); ++r)
        o.require(floor_of(a.alpha[r].re + s.delta * a.alpha[r].im) ==
                      floor_of(a.alpha[r].re + s.delta / 2 * a.alpha[r].im),
                  "integer parts move under halving");
    }
    auto r = verify_def2_isomorphism(fan, beta, s, 4);
    o.require(r.ok, "module isomorphism: " + r.failure);
    products += r.products;
  }
  o.note << (o.pass ? "" : "; ") << products << " products checked";
  return o;
}

struct GkzCase {
  std::string name;
  GkzInstance inst;
  EvalPoint x;
};

std::vector<GkzCase> gkz_cases() {
  std::vector<GkzCase> out;
  const EvalPoint xf1{{1.0, 10.0, 1.0}, {}};
  out.push_back({"F1 beta=0", make_instance(fan_f1(), gv({0, 0})), xf1});
  out.push_back({"F1 beta=(1/4,0)", make_instance(fan_f1(), gv({rq(1, 4), 0})), xf1});
  out.push_back({"F1 beta=(1/3+i/7,1/5)", make_instance(fan_f1(), gv({rq(1, 3), rq(1, 5)}, {rq(1, 7), 0})), xf1});
  // x_1 x_4 / (x_2 x_3) = 100, the same series variable size as F1 at (1,10,1)
  out.push_back({"square", make_instance(fan_square(), gv({rq(1, 3), rq(1, 7), rq(1, 11)})),
                 EvalPoint{{10.0, 1.0, 1.0, 10.0}, {}}});
  return out;
}

double max_abs_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void gkz_criterion(std::vector<std::pair<std::string, Outcome>> &results) {
  constexpr long B = 15;
  Outcome euler, shift, residual, rank;
  std::ostringstream residuals, ranks;
  std::size_t shift_checks = 0;
  double worst_matched = 0;
  for (auto &c : gkz_cases()) {
    structure_pool.push_back(c.inst.quotient);
    euler.require(verify_euler(c.inst), c.name);
    const std::size_t k = c.inst.fan.num_rays(), d = c.inst.fan.rank();
    double worst = 0, matched = 0;
    for (const auto &v : cone_points(c.inst, 2))
      for (std::size_t j = 0; j < k; ++j) {
        auto ts = verify_term_shift(c.inst, v, j, B);
        ++shift_checks;
        shift.require(ts.ok, c.name);
        auto lhs = gamma_series_derivative(c.inst, v, j, c.x, B);
        IntVector w = v;
        for (std::size_t r = 0; r < d; ++r) w[r] += c.inst.fan.ray(j)[r];
        auto rhs = gamma_series(c.inst, w, c.x, B);
        worst = std::max(worst, max_abs_diff(lhs.value, rhs.value));
        auto shifted = series_terms(c.inst, v, B);
        for (auto &t : shifted) {
          t.l[j] -= GaussianRational(1);
          t.offset[j] -= 1;
        }
        matched = std::max(matched, max_abs_diff(lhs.value, evaluate_terms(c.inst, shifted, c.x, std::nullopt)));
      }
    worst_matched = std::max(worst_matched, matched);
    residual.require(worst < 1e-8, "first failing instance " + c.name);
    residuals << (residuals.tellp() ? ", " : "") << c.name << " " << worst;

    auto sys = solution_system(c.inst, c.x, B, 2);
    std::size_t vol = normalized_volume(c.inst.fan).get_ui();
    rank.require(sys.rank == vol && vol == 2, c.name + " rank");
    rank.require(sys.gap >= 1e3, c.name + " gap");
    ranks << (ranks.tellp() ? ", " : "") << c.name << " rank " << sys.rank << " gap " << sys.gap;
  }
  shift.note << (shift.pass ? "" : "; ") << shift_checks << " (v, j) pairs";
  residual.note << (residual.pass ? "" : "; ") << "max |d_j Phi_v - Phi_{v+v_j}|: " << residuals.str()
                << "; same L-set comparison " << worst_matched;
  rank.note << (rank.pass ? "" : "; ") << ranks.str();
  results.emplace_back("6a Euler operators vanish", std::move(euler));
  results.emplace_back("6b term-shift identities", std::move(shift));
  results.emplace_back("6c derivative residuals below 1e-8 at B=15", std::move(residual));
  results.emplace_back("6d solution rank and singular-value gap", std::move(rank));
}

Outcome gamma_golden() {
  Outcome o;
  std::ifstream in(std::string(BBGKZ_TEST_DATA) + "/rgamma_golden.json");
  o.require(bool(in), "golden data missing");
  if (!in) return o;
  auto golden = nlohmann::json::parse(in);
  const int order = golden["order"];
  double worst = 0;
  std::size_t count = 0;
  for (const auto &pt : golden["points"]) {
    Complex l(std::stod(pt["re"].get<std::string>()), std::stod(pt["im"].get<std::string>()));
    for (int ord = 1; ord <= order; ++ord) {
      auto jet = reciprocal_gamma_jet(l, ord);
      for (int n = 0; n < ord; ++n) {
        const auto &c = pt["coefficients"][n];
        Complex want(std::stod(c[0].get<std::string>()), std::stod(c[1].get<std::string>()));
        double err = want == Complex(0.0) ? std::abs(jet[n]) : std::abs(jet[n] - want) / std::abs(want);
        worst = std::max(worst, err);
        o.require(err <= 1e-10, "l = " + pt["l"].get<std::string>());
        ++count;
      }
    }
  }
  o.note << (o.pass ? "" : "; ") << count << " coefficients, max relative error " << worst;
  return o;
}

Outcome structure() {
  Outcome o;
  for (const auto &Q : structure_pool) {
    const std::size_t n = Q.dim();
    for (std::size_t i = 0; i < Q.D.size(); ++i) {
      RatMatrix P = RatMatrix::identity(n);
      for (std::size_t t = 0; t < n; ++t) P = P * Q.D[i];
      o.require(P.is_zero(), "D_i^dim != 0");
      for (std::size_t j = i + 1; j < Q.D.size(); ++j) o.require(Q.D[i] * Q.D[j] == Q.D[j] * Q.D[i], "D_i D_j != D_j D_i");
    }
  }
  o.note << (o.pass ? "" : "; ") << structure_pool.size() << " algebras";
  return o;
}

std::string capture(const std::string &command) {
  std::string out;
  FILE *p = popen(command.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  out += "\nexit " + std::to_string(pclose(p));
  return out;
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("bbgkz_acceptance_" + std::to_string(::getpid()));
  const std::string cli = BBGKZ_CLI;
  capture(cli + " --seed-examples " + dir.string());
  auto f = [&](const char *name) { return (dir / name).string(); };
  std::vector<std::string> commands;
  for (auto fan : {"f1.json", "f2.json", "square.json"}) commands.push_back("validate --fan " + f(fan));
  std::vector<std::pair<const char *, const char *>> inputs{{"f1.json", "beta_zero.json"},
                                                            {"f1.json", "beta_f1_quarter.json"},
                                                            {"f1.json", "beta_f1_complex.json"},
                                                            {"f2.json", "beta_zero.json"},
                                                            {"f2.json", "beta_f2_generic.json"},
                                                            {"f2.json", "beta_f2_half.json"},
                                                            {"square.json", "beta_square.json"}};
  for (auto [fan, beta] : inputs) {
    std::string base = std::string(" --fan ") + f(fan) + " --beta " + f(beta);
    commands.push_back("box" + base);
    commands.push_back("box --stabilize" + base);
    commands.push_back("cohomology" + base);
    commands.push_back("kring" + base);
    commands.push_back("gkz solve --bound 10" + base);
    commands.push_back("gkz verify --bound 8 --vcap 1" + base);
  }
  commands.push_back("cohomology --fan " + f("f1.json") + " --beta " + f("beta_f1_quarter.json") + " --shadow " +
                     f("xi_f1_quarter.json"));
  commands.push_back("gkz solve --fan " + f("f1.json") + " --beta " + f("beta_zero.json") + " --x " + f("x_f1.json"));
  for (const auto &c : commands) {
    auto a = capture(cli + " " + c + " 2>/dev/null"), b = capture(cli + " " + c + " 2>/dev/null");
    o.require(a == b, "output differs: " + c);
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  o.note << (o.pass ? "" : "; ") << commands.size() << " commands run twice";
  return o;
}

} // namespace

int main() {
  std::vector<std::pair<std::string, Outcome>> results;
  auto run = [&](const std::string &name, const std::function<Outcome()> &f) {
    try {
      results.emplace_back(name, f());
    } catch (const std::exception &e) {
      Outcome o;
      o.require(false, std::string("exception: ") + e.what());
      results.emplace_back(name, std::move(o));
    }
  };
  run("1 weighted projective plane spectrum", spectrum_example);
  run("2 walls and collision classes", walls);
  run("3 box examples and brute force", box_examples);
  run("4 dimension equals volume", dimension_volume);
  run("5 delta-stabilization", stabilization);
  try {
    gkz_criterion(results);
  } catch (const std::exception &e) {
    Outcome o;
    o.require(false, std::string("exception: ") + e.what());
    results.emplace_back("6 GKZ verification", std::move(o));
  }
  run("7 reciprocal Gamma jets", gamma_golden);
  run("8 nilpotency and commutativity", structure);
  run("9 CLI determinism", determinism);

  int failures = 0;
  for (const auto &[name, o] : results) {
    std::cout << (o.pass ? "PASS " : "FAIL ") << name;
    if (!o.note.str().empty()) std::cout << " (" << o.note.str() << ")";
    std::cout << "\n";
    failures += !o.pass;
  }
  std::cout << failures << " of " << results.size() << " criteria failed\n";
  return failures ? 1 : 0;
}
