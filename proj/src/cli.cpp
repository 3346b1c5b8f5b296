#include "bbgkz/cli.hpp"

#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "bbgkz/io.hpp"

namespace bbgkz::cli {

namespace {

using io::Json;

struct Options {
  std::string fan, beta, shadow, x, output, seed_dir;
  long bound = 15;
  long vcap = 2;
  double rank_tol = 1e-9;
  bool stabilize = false;
};

Json label_json(const BoxLabel &l) {
  Json j;
  j["cone"] = l.cone + 1;
  j["sector"] = l.index + 1;
  return j;
}

Json support_json(const ConeRef &s) {
  Json j = Json::array();
  for (int i : s) j.push_back(i + 1);
  return j;
}

Json witness_json(const std::vector<std::size_t> &w) {
  Json j = Json::array();
  for (auto c : w) j.push_back(c + 1);
  return j;
}

Json cmd_validate(const Options &o) {
  auto fan = io::fan_from_json(io::read_json(o.fan));
  auto r = validate(fan);
  Json j;
  j["valid"] = r.valid();
  j["gkz_eligible"] = r.gkz_eligible();
  if (r.volume) j["volume"] = r.volume->get_si();
  else j["volume"] = nullptr;
  j["deg"] = r.deg ? io::integer_array(*r.deg) : Json(nullptr);
  j["violations"] = r.violations;
  j["gkz_issues"] = r.gkz_issues;
  return j;
}

Json cmd_box(const Options &o) {
  auto fan = io::fan_from_json(io::read_json(o.fan));
  auto beta = io::beta_from_json(io::read_json(o.beta));
  if (beta.size() != static_cast<std::size_t>(fan.rank()))
    throw Error(ErrorKind::InvalidArgument, "beta has wrong length");
  Json j;
  j["beta"] = io::gaussian_array(beta);
  Json elems = Json::array();
  for (const auto &e : box_of_fan(fan, beta)) {
    Json x;
    x["alpha"] = io::gaussian_array(e.alpha);
    x["n"] = io::integer_array(e.n);
    x["point"] = io::gaussian_array(e.point(fan));
    x["support"] = support_json(e.support);
    x["witness_cones"] = witness_json(e.witness);
    elems.push_back(x);
  }
  j["elements"] = elems;
  if (o.stabilize) {
    auto c = stabilize(fan, beta);
    j["delta"] = to_string(c.delta);
    j["beta_delta"] = io::rational_array(c.beta_delta);
    Json triples = Json::array();
    for (const auto &t : c.triples) {
      Json x;
      x["alpha"] = io::gaussian_array(t.alpha);
      x["alpha_delta"] = io::rational_array(t.alpha_delta);
      x["point"] = io::rational_array(t.point);
      x["support"] = support_json(t.support);
      triples.push_back(x);
    }
    j["triples"] = triples;
  }
  return j;
}

Json cmd_cohomology(const Options &o) {
  auto fan = io::fan_from_json(io::read_json(o.fan));
  auto beta = io::beta_from_json(io::read_json(o.beta));
  if (beta.size() != static_cast<std::size_t>(fan.rank()))
    throw Error(ErrorKind::InvalidArgument, "beta has wrong length");
  std::optional<QuotientAlgebra> Q;
  if (o.shadow.empty()) {
    Q = build_quotient(fan, beta, false);
  } else {
    auto xi = io::beta_from_json(io::read_json(o.shadow));
    if (!is_real(xi) || xi.size() != beta.size()) throw Error(ErrorKind::InvalidArgument, "xi must be real of length d");
    auto corr = stabilize(fan, beta);
    Q = build_quotient(fan, corr.beta_delta, real_part(xi));
    for (std::size_t a = 0; a < Q->box.size(); ++a)
      for (const auto &t : corr.triples)
        if (to_gaussian(t.alpha_delta) == Q->box[a].alpha) Q->tags[a] = t.alpha;
    Q->correspondence = corr;
  }
  Json j;
  j["dim"] = Q->dim();
  j["volume"] = normalized_volume(fan).get_si();
  if (Q->correspondence && !is_real(beta)) {
    j["delta"] = to_string(Q->correspondence->delta);
    j["beta_delta"] = io::rational_array(Q->correspondence->beta_delta);
  }
  Json summands = Json::array();
  for (std::size_t a = 0; a < Q->box.size(); ++a) {
    Json s;
    s["alpha"] = io::gaussian_array(Q->tags[a]);
    s["dim"] = Q->summand_dims[a];
    summands.push_back(s);
  }
  j["summands"] = summands;
  Json basis = Json::array();
  for (const auto &b : Q->basis) {
    Json e;
    e["summand"] = b.summand + 1;
    e["exponents"] = io::integer_array(b.p);
    e["point"] = io::rational_array(b.point);
    e["level"] = b.level;
    basis.push_back(e);
  }
  j["basis"] = basis;
  Json mult = Json::array();
  for (const auto &D : Q->D) {
    Json m = Json::array();
    for (std::size_t r = 0; r < D.rows(); ++r) m.push_back(io::rational_array(D.row(r)));
    mult.push_back(m);
  }
  j["multiplication"] = mult;
  return j;
}

Json cmd_kring(const Options &o) {
  auto fan = io::fan_from_json(io::read_json(o.fan));
  auto beta = io::beta_from_json(io::read_json(o.beta));
  if (beta.size() != static_cast<std::size_t>(fan.rank()))
    throw Error(ErrorKind::InvalidArgument, "beta has wrong length");
  auto pts = spectrum(fan, beta);
  Json j;
  Json points = Json::array();
  std::size_t total = 0;
  bool semisimple = true;
  for (const auto &p : pts) {
    Json x;
    x["exponents"] = io::gaussian_array(p.exponents);
    x["y"] = io::complex_array(p.y);
    x["multiplicity"] = p.multiplicity;
    Json labels = Json::array();
    for (const auto &l : p.labels) labels.push_back(label_json(l));
    x["labels"] = labels;
    points.push_back(x);
    total += p.multiplicity;
    semisimple = semisimple && p.multiplicity == 1;
  }
  j["points"] = points;
  j["total_multiplicity"] = total;
  j["semisimple"] = semisimple;
  Json walls = Json::array();
  for (const auto &w : wall_report(fan, beta)) {
    Json x;
    x["first"] = label_json(w.first);
    x["second"] = label_json(w.second);
    x["witness"] = io::gaussian_array(w.witness);
    Json conds = Json::array();
    for (const auto &c : w.conditions) {
      Json y;
      y["functional"] = io::rational_array(c.functional);
      y["constant"] = to_string(c.constant);
      conds.push_back(y);
    }
    x["conditions"] = conds;
    walls.push_back(x);
  }
  j["walls"] = walls;
  return j;
}

struct GkzSetup {
  GkzInstance inst;
  EvalPoint x;
};

GkzSetup gkz_setup(const Options &o) {
  auto fan = io::fan_from_json(io::read_json(o.fan));
  auto beta = io::beta_from_json(io::read_json(o.beta));
  if (beta.size() != static_cast<std::size_t>(fan.rank()))
    throw Error(ErrorKind::InvalidArgument, "beta has wrong length");
  if (o.bound < 0 || o.vcap < 0) throw Error(ErrorKind::InvalidArgument, "bound and vcap must be nonnegative");
  GkzSetup s{make_instance(fan, beta), {}};
  if (o.x.empty()) s.x.x = default_point(s.inst);
  else s.x = io::point_from_json(io::read_json(o.x));
  if (s.x.x.size() != fan.num_rays()) throw Error(ErrorKind::InvalidArgument, "x has wrong length");
  return s;
}

Json system_json(const SolutionSystem &sys) {
  Json j;
  j["rank"] = sys.rank;
  j["rank_deficient"] = sys.rank_deficient;
  j["singular_values"] = sys.singular_values;
  j["gap"] = sys.gap;
  j["tail_estimate"] = sys.tail_estimate;
  Json rows = Json::array();
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    Json row;
    row["v"] = io::integer_array(sys.rows[r]);
    row["value"] = io::complex_array(sys.matrix[r]);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json cmd_gkz_solve(const Options &o) {
  auto s = gkz_setup(o);
  auto sys = solution_system(s.inst, s.x, o.bound, o.vcap, o.rank_tol);
  Json j;
  j["dim"] = s.inst.quotient.dim();
  j["volume"] = normalized_volume(s.inst.fan).get_si();
  j["bound"] = o.bound;
  j["vcap"] = o.vcap;
  j["delta"] = to_string(s.inst.correspondence.delta);
  j["x"] = io::complex_array(s.x.x);
  Json system = system_json(sys);
  for (auto &[k, v] : system.items()) j[k] = v;
  return j;
}

Json cmd_gkz_verify(const Options &o) {
  auto s = gkz_setup(o);
  auto r = verify_instance(s.inst, s.x, o.bound, o.vcap, o.rank_tol);
  Json j;
  j["passed"] = r.passed();
  j["dim"] = s.inst.quotient.dim();
  j["bound"] = o.bound;
  j["vcap"] = o.vcap;
  j["x"] = io::complex_array(s.x.x);
  Json checks = Json::array();
  auto add = [&](const char *name, bool ok, Json detail) {
    Json c;
    c["name"] = name;
    c["passed"] = ok;
    for (auto &[k, v] : detail.items()) c[k] = v;
    checks.push_back(c);
  };
  add("euler", r.euler, Json::object());
  add("term_shift", r.term_shift, Json{{"checks", r.term_shift_checks}, {"boundary_terms", r.boundary_terms}});
  add("shadow_membership", r.shadow_violations == 0, Json{{"violations", r.shadow_violations}});
  Json dec{{"checked", r.decomposition.checked}};
  dec["failures"] = r.decomposition.failures;
  add("shadow_decomposition", r.decomposition.failures.empty(), dec);
  add("derivative_residual", r.residual_within_tail,
      Json{{"max_residual", r.max_residual},
           {"worst_residual", r.worst_residual},
           {"worst_allowance", r.worst_allowance},
           {"max_matched_residual", r.max_matched_residual}});
  add("rank", !r.system.rank_deficient,
      Json{{"rank", r.system.rank}, {"gap", r.system.gap}, {"singular_values", r.system.singular_values}});
  j["checks"] = checks;
  return j;
}

Json error_json(const std::string &kind, const std::string &message) {
  Json j;
  j["error"] = Json{{"kind", kind}, {"message", message}};
  return j;
}

} // namespace

void seed_examples(const std::string &dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create '" + dir + "': " + ec.message());
  auto put = [&](const std::string &name, const Json &j) { io::write_text((fs::path(dir) / name).string(), io::dump(j)); };
  auto ints = [](std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
  };
  StackyFan f1(2, {ints({1, 0}), ints({1, 1}), ints({1, 2})}, {{0, 1}, {1, 2}}, ints({1, 0}));
  StackyFan f2(2, {ints({1, 0}), ints({0, 1}), ints({-2, -1})}, {{0, 1}, {1, 2}, {0, 2}});
  StackyFan square(3, {ints({1, 0, 0}), ints({1, 1, 0}), ints({1, 0, 1}), ints({1, 1, 1})}, {{0, 1, 3}, {0, 2, 3}},
                   ints({1, 0, 0}));
  put("f1.json", io::fan_to_json(f1));
  put("f2.json", io::fan_to_json(f2));
  put("square.json", io::fan_to_json(square));
  auto beta = [](std::vector<std::string> xs) {
    Json j;
    j["beta"] = xs;
    return j;
  };
  put("beta_zero.json", beta({"0", "0"}));
  put("beta_f1_quarter.json", beta({"1/4", "0"}));
  put("beta_f1_complex.json", beta({"1/3+1/7i", "1/5"}));
  put("beta_f2_generic.json", beta({"1/3", "1/5"}));
  put("beta_f2_half.json", beta({"0", "1/2"}));
  put("beta_square.json", beta({"1/3", "1/7", "1/11"}));
  put("xi_f1_quarter.json", beta({"1/4", "0"}));
  Json x;
  x["x"] = Json::array({Json::array({1.0, 0.0}), Json::array({10.0, 0.0}), Json::array({1.0, 0.0})});
  put("x_f1.json", x);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Deformed Box sets, cohomology, K-ring spectra and Gamma-series for stacky fans", "bbgkz"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_option("--seed-examples", o.seed_dir, "Write example input files into a directory");
  app.add_option("-o,--output", o.output, "Write the JSON result to a file");

  auto fan_beta = [&](CLI::App *sub) {
    sub->add_option("--fan", o.fan, "Fan file")->required();
    sub->add_option("--beta", o.beta, "Parameter file")->required();
  };
  auto *validate_cmd = app.add_subcommand("validate", "Validate a fan");
  validate_cmd->add_option("--fan", o.fan, "Fan file")->required();
  auto *box_cmd = app.add_subcommand("box", "Box set of a fan");
  fan_beta(box_cmd);
  box_cmd->add_flag("--stabilize", o.stabilize, "Also report the delta-stabilized correspondence");
  auto *coh_cmd = app.add_subcommand("cohomology", "Quotient by the linear ideal");
  fan_beta(coh_cmd);
  coh_cmd->add_option("--shadow", o.shadow, "Shadow direction file");
  auto *kring_cmd = app.add_subcommand("kring", "K-ring spectrum and walls");
  fan_beta(kring_cmd);

  auto gkz_options = [&](CLI::App *sub) {
    fan_beta(sub);
    sub->add_option("--x", o.x, "Evaluation point file; default from regular heights");
    sub->add_option("--bound", o.bound, "Truncation bound B")->capture_default_str();
    sub->add_option("--vcap", o.vcap, "Largest degree of v")->capture_default_str();
    sub->add_option("--rank-tol", o.rank_tol, "Relative singular-value threshold")->capture_default_str();
  };
  auto *gkz_cmd = app.add_subcommand("gkz", "Gamma-series solutions");
  gkz_cmd->require_subcommand(1);
  auto *solve_cmd = gkz_cmd->add_subcommand("solve", "Solution matrix and rank");
  gkz_options(solve_cmd);
  auto *verify_cmd = gkz_cmd->add_subcommand("verify", "Invariant suite");
  gkz_options(verify_cmd);
  auto *solve_alias = app.add_subcommand("gkz-solve", "Same as gkz solve");
  gkz_options(solve_alias);
  auto *verify_alias = app.add_subcommand("gkz-verify", "Same as gkz verify");
  gkz_options(verify_alias);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    out << io::dump(error_json("UsageError", e.what()));
    return 2;
  }

  Json result;
  try {
    if (!o.seed_dir.empty()) {
      seed_examples(o.seed_dir);
      if (app.get_subcommands().empty()) {
        result = Json{{"seeded", o.seed_dir}};
      }
    } else if (app.get_subcommands().empty()) {
      out << io::dump(error_json("UsageError", "a command is required"));
      return 2;
    }
    if (validate_cmd->parsed()) result = cmd_validate(o);
    else if (box_cmd->parsed()) result = cmd_box(o);
    else if (coh_cmd->parsed()) result = cmd_cohomology(o);
    else if (kring_cmd->parsed()) result = cmd_kring(o);
    else if (solve_cmd->parsed() || solve_alias->parsed()) result = cmd_gkz_solve(o);
    else if (verify_cmd->parsed() || verify_alias->parsed()) result = cmd_gkz_verify(o);

    std::string text = io::dump(result);
    if (o.output.empty()) out << text;
    else io::write_text(o.output, text);
    return 0;
  } catch (const Error &e) {
    bool io_problem = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::IoError;
    out << io::dump(error_json(error_kind_name(e.kind()), e.what()));
    return io_problem ? 2 : 1;
  } catch (const nlohmann::json::exception &e) {
    out << io::dump(error_json("ParseError", e.what()));
    return 2;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    out << io::dump(error_json("Internal", e.what()));
    return 1;
  }
}

} // namespace bbgkz::cli
