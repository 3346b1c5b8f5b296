/**
 * Gamma-series solutions of the better-behaved GKZ system, valued in the
 * shadow quotient of the delta-stabilized module, and their verification.
 */
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bbgkz/gamma.hpp"
#include "bbgkz/quotient.hpp"

namespace bbgkz {

struct GkzInstance {
  StackyFan fan;
  GaussVector beta;
  DeltaCorrespondence correspondence;
  QuotientAlgebra quotient;            ///< shadow quotient at beta_delta with xi = Re beta
  std::vector<BoxElement> box;         ///< Bx(Sigma; beta)
  std::vector<std::size_t> summand_of; ///< box index -> quotient summand
  IntMatrix relations;                 ///< rows: Z-basis of the relation lattice of the rays
};

/// Throws InvalidFan when the fan is not GKZ-eligible.
GkzInstance make_instance(const StackyFan &fan, const GaussVector &beta);

struct LVector {
  GaussVector l;
  std::size_t alpha; ///< index into instance.box
  IntVector v;
  IntVector offset;  ///< l - alpha, integral
  long window() const;
};

/// L(alpha, v) restricted to sum_i |l_i - alpha_i| <= B, ordered by offset.
std::vector<LVector> enumerate_L(const GkzInstance &inst, std::size_t alpha, const IntVector &v, long B);

/// x with an argument offset per coordinate: x_i = |x_i| e^{i (arg x_i + offset_i)}.
struct EvalPoint {
  std::vector<Complex> x;
  std::vector<double> arg_offsets; ///< empty means zero offsets
};

struct SeriesValue {
  IntVector v;
  std::vector<Complex> x;
  std::vector<Complex> value; ///< coordinates in the quotient basis
  long truncation_bound = 0;
  double tail_estimate = 0;   ///< max-norm of the terms at window exactly B
  std::size_t terms = 0;
  std::size_t shadow_violations = 0; ///< nonzero monomials outside the shadow module
};

/// Sum of the given terms. With derivative = j, each term is replaced by
/// its x_j-derivative, computed from the jet of (l_j + D_j) / Gamma(l_j + D_j + 1).
std::vector<Complex> evaluate_terms(const GkzInstance &inst, const std::vector<LVector> &terms, const EvalPoint &x,
                                    std::optional<std::size_t> derivative = std::nullopt,
                                    std::size_t *shadow_violations = nullptr);

/// All of L(alpha, v) over Bx(Sigma; beta) within the window.
std::vector<LVector> series_terms(const GkzInstance &inst, const IntVector &v, long B);

SeriesValue gamma_series(const GkzInstance &inst, const IntVector &v, const EvalPoint &x, long B);

/// Term-analytic x_j-derivative of the truncated series.
SeriesValue gamma_series_derivative(const GkzInstance &inst, const IntVector &v, std::size_t j, const EvalPoint &x,
                                    long B);

struct TermShiftCheck {
  bool ok = true;
  std::size_t matched = 0;
  std::vector<LVector> boundary; ///< shifted terms of Phi_v outside the window of Phi_{v+v_j}, and conversely
};

/// Exact comparison of L(alpha, v) - e_j with L(alpha, v + v_j) on the window.
TermShiftCheck verify_term_shift(const GkzInstance &inst, const IntVector &v, std::size_t j, long B);

/// sum_i g_j(v_i) D_i == 0 for every coordinate functional g_j.
bool verify_euler(const GkzInstance &inst);

struct DecompositionCheck {
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

/// Every shadow point of level at most max_level is c(alpha_delta) plus the
/// rays with negative integral l_i plus a nonnegative combination, for
/// exactly one alpha in its cone.
DecompositionCheck verify_shadow_decomposition(const GkzInstance &inst, int max_level);

/// Lattice points of the support cone with deg at most cap.
std::vector<IntVector> cone_points(const GkzInstance &inst, long cap);

struct SolutionSystem {
  std::vector<IntVector> rows;              ///< v
  std::vector<std::vector<Complex>> matrix; ///< rows x dim
  std::vector<double> singular_values;
  int rank = 0;
  double gap = 0;  ///< s_dim over s_{dim+1}, the latter taken as the rounding floor when absent
  bool rank_deficient = false;
  double tail_estimate = 0;
};

SolutionSystem solution_system(const GkzInstance &inst, const EvalPoint &x, long B, long vcap,
                               double rank_tol = 1e-9);

struct GkzVerification {
  bool euler = false;
  bool term_shift = false;
  std::size_t term_shift_checks = 0;
  std::size_t boundary_terms = 0;
  std::size_t shadow_violations = 0;
  DecompositionCheck decomposition;
  double max_residual = 0;          ///< |d_j Phi_v - Phi_{v+v_j}| over rays and v
  double worst_residual = 0;        ///< residual with the largest ratio to its allowance
  double worst_allowance = 0;       ///< 10 * tail estimate for that residual
  bool residual_within_tail = false;
  double max_matched_residual = 0;  ///< same, with Phi_{v+v_j} summed over the shifted terms
  SolutionSystem system;
  bool passed() const;
};

/// Euler matrices, term shifts for every ray and every v of degree at most
/// vcap, shadow membership of all terms, the shadow decomposition up to
/// level 6, derivative residuals and the rank of the solution system.
GkzVerification verify_instance(const GkzInstance &inst, const EvalPoint &x, long B, long vcap,
                                double rank_tol = 1e-9);

/// x_i = rho^{h_i} from regular heights h, with rho making |x^m| <= 1e-2 for
/// each relation generator m oriented by h.
std::vector<Complex> default_point(const GkzInstance &inst);

/// Worker count from BBGKZ_THREADS, else the hardware concurrency.
unsigned worker_threads();

} // namespace bbgkz
