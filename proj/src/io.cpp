#include "bbgkz/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bbgkz::io {

std::string to_string(const GaussianRational &z) {
  if (z.is_real()) return bbgkz::to_string(z.re);
  std::string im = bbgkz::to_string(abs(z.im)) + "i";
  if (sgn(z.re) == 0) return (sgn(z.im) < 0 ? "-" : "") + im;
  return bbgkz::to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + im;
}

Json gaussian_json(const GaussianRational &z) {
  Json j;
  j["re"] = bbgkz::to_string(z.re);
  j["im"] = bbgkz::to_string(z.im);
  return j;
}

GaussianRational parse_gaussian(const std::string &raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty Gaussian rational");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  s.pop_back();
  // split at the last sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  auto imag = [&](std::string t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return parse_rational(t);
  };
  if (split == std::string::npos) return GaussianRational(Rational(0), imag(s));
  return GaussianRational(parse_rational(s.substr(0, split)), imag(s.substr(split)));
}

Json read_json(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
  }
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for '" + path + "'");
}

namespace {

Integer integer_of(const Json &j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (!is_integral(q)) throw Error(ErrorKind::ParseError, "expected an integer");
    return q.get_num();
  }
  throw Error(ErrorKind::ParseError, "expected an integer");
}

IntVector integer_vector(const Json &j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of integers");
  IntVector out;
  for (const auto &x : j) out.push_back(integer_of(x));
  return out;
}

GaussianRational gaussian_of(const Json &j) {
  if (j.is_string()) return parse_gaussian(j.get<std::string>());
  if (j.is_number_integer()) return GaussianRational(Rational(j.get<long>()));
  if (j.is_object() && j.contains("re") && j.contains("im") && j.size() == 2 && j["re"].is_string() &&
      j["im"].is_string())
    return GaussianRational(parse_rational(j["re"].get<std::string>()), parse_rational(j["im"].get<std::string>()));
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return GaussianRational(parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()));
  throw Error(ErrorKind::ParseError, "expected a Gaussian-rational string");
}

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

void emit(const Json &j, std::string &out, int indent) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  switch (j.type()) {
  case Json::value_t::object: {
    if (j.empty()) {
      out += "{}";
      return;
    }
    bool flat = j.size() <= 2;
    for (const auto &x : j) flat = flat && !x.is_structured();
    if (flat) {
      out += "{";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ", ";
        first = false;
        out += Json(it.key()).dump() + ": ";
        emit(it.value(), out, indent);
      }
      out += "}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      emit(it.value(), out, indent + 2);
    }
    out += "\n" + pad + "}";
    return;
  }
  case Json::value_t::array: {
    if (j.empty()) {
      out += "[]";
      return;
    }
    bool scalar = true;
    for (const auto &x : j) scalar = scalar && !x.is_structured();
    if (scalar) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        emit(j[i], out, indent);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      emit(j[i], out, indent + 2);
    }
    out += "\n" + pad + "]";
    return;
  }
  case Json::value_t::number_float: {
    double x = j.get<double>();
    if (x == 0) x = 0.0;
    if (!std::isfinite(x)) {
      out += "null";
      return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s = buf;
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    out += s;
    return;
  }
  default:
    out += j.dump();
  }
}

} // namespace

StackyFan fan_from_json(const Json &j) {
  try {
    long rank = field(j, "rank").get<long>();
    if (rank < 1) throw Error(ErrorKind::ParseError, "rank must be positive");
    std::vector<IntVector> rays;
    for (const auto &r : field(j, "rays")) rays.push_back(integer_vector(r));
    std::vector<ConeRef> cones;
    for (const auto &c : field(j, "max_cones")) {
      ConeRef cone;
      for (const auto &x : c) {
        long idx = x.get<long>();
        if (idx < 1 || idx > static_cast<long>(rays.size()))
          throw Error(ErrorKind::InvalidFan, "cone index out of range: " + std::to_string(idx));
        cone.push_back(static_cast<int>(idx - 1));
      }
      cones.push_back(std::move(cone));
    }
    std::optional<IntVector> deg;
    if (j.contains("deg") && !j.at("deg").is_null()) deg = integer_vector(j.at("deg"));
    return StackyFan(static_cast<int>(rank), std::move(rays), std::move(cones), std::move(deg));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::ParseError, std::string("fan file: ") + e.what());
  }
}

Json fan_to_json(const StackyFan &fan) {
  Json j;
  j["rank"] = fan.rank();
  Json rays = Json::array();
  for (const auto &r : fan.rays()) rays.push_back(integer_array(r));
  j["rays"] = rays;
  Json cones = Json::array();
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    Json cone = Json::array();
    for (int i : fan.cone(c)) cone.push_back(i + 1);
    cones.push_back(cone);
  }
  j["max_cones"] = cones;
  if (fan.declared_deg()) j["deg"] = integer_array(*fan.declared_deg());
  return j;
}

GaussVector beta_from_json(const Json &j) {
  const Json &list = j.is_object() ? field(j, "beta") : j;
  if (!list.is_array()) throw Error(ErrorKind::ParseError, "beta must be an array");
  GaussVector out;
  for (const auto &x : list) out.push_back(gaussian_of(x));
  return out;
}

Json beta_to_json(const GaussVector &beta) {
  Json j;
  j["beta"] = gaussian_array(beta);
  return j;
}

EvalPoint point_from_json(const Json &j) {
  try {
    const Json &list = j.is_object() ? field(j, "x") : j;
    EvalPoint p;
    for (const auto &z : list) {
      if (z.is_number()) p.x.emplace_back(z.get<double>(), 0.0);
      else if (z.is_array() && z.size() == 2) p.x.emplace_back(z[0].get<double>(), z[1].get<double>());
      else throw Error(ErrorKind::ParseError, "x entries must be [re, im] pairs");
    }
    if (j.is_object() && j.contains("arg_offsets"))
      for (const auto &o : j.at("arg_offsets")) p.arg_offsets.push_back(o.get<double>());
    if (!p.arg_offsets.empty() && p.arg_offsets.size() != p.x.size())
      throw Error(ErrorKind::ParseError, "arg_offsets must match the length of x");
    return p;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::ParseError, std::string("x file: ") + e.what());
  }
}

Json rational_array(const RatVector &v) {
  Json j = Json::array();
  for (const auto &x : v) j.push_back(bbgkz::to_string(x));
  return j;
}

Json gaussian_array(const GaussVector &v) {
  Json j = Json::array();
  for (const auto &x : v) j.push_back(gaussian_json(x));
  return j;
}

Json integer_array(const IntVector &v) {
  Json j = Json::array();
  for (const auto &x : v) {
    if (x.fits_slong_p()) j.push_back(x.get_si());
    else j.push_back(x.get_str());
  }
  return j;
}

Json complex_array(const std::vector<Complex> &v) {
  Json j = Json::array();
  for (const auto &z : v) j.push_back(Json::array({z.real(), z.imag()}));
  return j;
}

std::string dump(const Json &j) {
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

} // namespace bbgkz::io
