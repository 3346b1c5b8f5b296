/**
 * Spectrum of the deformed Grothendieck ring: one point per class of
 * Box labels with equal y = exp(2 pi i alpha), multiplicities from the
 * cohomology summands, and the walls where labels collide.
 */
#pragma once

#include <complex>
#include <vector>

#include "bbgkz/box.hpp"

namespace bbgkz {

struct KPoint {
  GaussVector exponents;                ///< reduced alpha shared by the class
  std::vector<BoxLabel> labels;         ///< per-cone labels mapping to this point
  std::vector<std::complex<double>> y;  ///< exp(2 pi i alpha_i); exactly 1 where alpha_i = 0
  std::size_t multiplicity = 0;
};

/// Points ordered by exponent vector. Multiplicities sum to the normalized
/// volume.
std::vector<KPoint> spectrum(const StackyFan &fan, const GaussVector &beta);

struct Coincidence {
  BoxLabel first, second;
  GaussVector witness;                  ///< raw alpha difference, integral and real
  std::vector<WallCondition> conditions;
};

/// Every colliding pair of labels at beta.
std::vector<Coincidence> wall_report(const StackyFan &fan, const GaussVector &beta);

bool is_semisimple(const StackyFan &fan, const GaussVector &beta);

/// Largest relative defect of prod_i y_i^{v_i[j]} = exp(2 pi i beta_j) over
/// points and coordinates j.
double monomial_relation_defect(const StackyFan &fan, const GaussVector &beta, const std::vector<KPoint> &points);

/// Whether every point has y_i = 1 exactly off some maximal cone (the
/// Stanley-Reisner relations).
bool satisfies_sr_relations(const StackyFan &fan, const std::vector<KPoint> &points);

} // namespace bbgkz
