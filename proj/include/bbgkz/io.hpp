/**
 * JSON file formats. Ray and cone indices in files are 1-based, rationals
 * are "p/q" strings, Gaussian rationals "a", "bi" or "a+bi" with rational
 * a, b, and complex floats two-element arrays [re, im].
 */
#pragma once

#include <string>

#include "bbgkz/gkz.hpp"
#include "bbgkz/kring.hpp"
#include "json.hpp"

namespace bbgkz::io {

using Json = nlohmann::ordered_json;

std::string to_string(const GaussianRational &z);
/// Throws ParseError.
GaussianRational parse_gaussian(const std::string &s);
/// {"re": "p/q", "im": "r/s"}
Json gaussian_json(const GaussianRational &z);

/// Reads and parses a JSON file. Throws IoError or ParseError.
Json read_json(const std::string &path);
void write_text(const std::string &path, const std::string &text);

/// {"rank", "rays", "max_cones", "deg"?}. Throws ParseError or InvalidFan.
StackyFan fan_from_json(const Json &j);
Json fan_to_json(const StackyFan &fan);

/// A list of Gaussian-rational strings, bare or under "beta".
GaussVector beta_from_json(const Json &j);
Json beta_to_json(const GaussVector &beta);

/// A list of [re, im] pairs, bare or under "x" with optional "arg_offsets".
EvalPoint point_from_json(const Json &j);

Json rational_array(const RatVector &v);
Json gaussian_array(const GaussVector &v);
Json integer_array(const IntVector &v);
Json complex_array(const std::vector<Complex> &v);

/// Serialization with keys in insertion order, two-space indentation and
/// doubles printed with 17 significant digits (non-finite values as null).
std::string dump(const Json &j);

} // namespace bbgkz::io
