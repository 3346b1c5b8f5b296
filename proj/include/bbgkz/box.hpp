/**
 * Box sets of a stacky fan for a real or complex parameter beta, the
 * delta-stabilization beta -> Re beta + delta Im beta, and collisions.
 */
#pragma once

#include <optional>
#include <vector>

#include "bbgkz/fan.hpp"

namespace bbgkz {

struct BoxElement {
  GaussVector alpha;                ///< length k, 0 <= Re alpha_i < 1
  IntVector n;                      ///< sum alpha_i v_i = n + beta
  ConeRef support;                  ///< {i : alpha_i != 0}
  std::vector<std::size_t> witness; ///< maximal cones whose rays contain the support

  /// c(alpha) = sum alpha_i v_i
  GaussVector point(const StackyFan &fan) const { return fan.combine(alpha); }
};

/// Bx(sigma; beta) for a full-dimensional maximal cone, ordered by residue
/// class: element j corresponds to sector(fan, cone)[j].
std::vector<BoxElement> box_of_cone(const StackyFan &fan, std::size_t cone, const GaussVector &beta);

/// Box(sigma; 0) as alpha vectors: one representative per class of
/// Z^d / <generators>, sorted lexicographically.
std::vector<RatVector> sectors(const StackyFan &fan, std::size_t cone);

/// Bx(Sigma; beta): union over maximal cones, deduplicated by exact alpha,
/// sorted lexicographically by alpha.
std::vector<BoxElement> box_of_fan(const StackyFan &fan, const GaussVector &beta);

/// Element of box_of_fan equal to the given alpha, if any.
std::optional<std::size_t> find_alpha(const std::vector<BoxElement> &box, const GaussVector &alpha);

struct DeltaTriple {
  GaussVector alpha;     ///< element of Bx(Sigma; beta)
  RatVector alpha_delta; ///< element of Bx(Sigma; beta_delta)
  RatVector point;       ///< c(alpha_delta)
  ConeRef support;       ///< common support cone
};

struct DeltaCorrespondence {
  Rational delta;
  RatVector beta_delta;
  std::vector<DeltaTriple> triples; ///< in the order of box_of_fan(beta)
  int halvings = 0;
};

/// Re beta + delta Im beta.
RatVector beta_at(const GaussVector &beta, const Rational &delta);

/// The map alpha -> {Re alpha + delta Im alpha} at a fixed delta, when it is
/// a support-preserving bijection Bx(beta) -> Bx(beta_delta) with matching
/// witness cones; nullopt otherwise.
std::optional<DeltaCorrespondence> correspondence_at(const StackyFan &fan, const GaussVector &beta,
                                                     const Rational &delta);

/// Halve delta from 1/16 until two consecutive levels carry the same
/// combinatorics. Throws NoStabilization after 40 halvings.
DeltaCorrespondence stabilize(const StackyFan &fan, const GaussVector &beta);

/// Largest delta0 such that every delta in (0, delta0) keeps all
/// Re alpha_i + delta Im alpha_i inside the same unit interval; nullopt when
/// no such constraint exists (beta real).
std::optional<Rational> stabilization_bound(const StackyFan &fan, const GaussVector &beta);

/// One element of the per-cone disjoint union of the sets Bx(sigma; beta).
struct BoxLabel {
  std::size_t cone;  ///< maximal cone index
  std::size_t index; ///< position in sectors(fan, cone)
  friend bool operator==(const BoxLabel &, const BoxLabel &) = default;
  friend auto operator<=>(const BoxLabel &, const BoxLabel &) = default;
};

/// alpha of a label before reduction: the sector plus V_sigma^{-1} beta,
/// affine in beta.
GaussVector raw_alpha(const StackyFan &fan, const BoxLabel &label, const GaussVector &beta);

struct CollisionClass {
  GaussVector alpha;            ///< common reduced alpha
  std::vector<BoxLabel> labels; ///< sorted
};

/// Partition of the labels by equality of reduced alpha (equivalently of
/// y = exp(2 pi i alpha)). Classes are ordered by their first label.
std::vector<CollisionClass> collisions(const StackyFan &fan, const GaussVector &beta);

/// Conditions l(beta) + c in Z describing where two labels collide; rows
/// are a canonical basis of the generated condition lattice.
struct WallCondition {
  RatVector functional; ///< length d
  Rational constant;
};
/// nullopt when the labels can never collide.
std::optional<std::vector<WallCondition>> wall_conditions(const StackyFan &fan, const BoxLabel &a,
                                                          const BoxLabel &b);

} // namespace bbgkz
