/**
 * Simplicial stacky fans: rays v_1..v_k in Z^d with marked lattice
 * generators, maximal cones given by ray index sets, and an optional degree
 * functional. Indices are 0-based in memory, 1-based in files.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bbgkz/exact.hpp"

namespace bbgkz {

/// Sorted ray indices I of the cone sigma(I).
using ConeRef = std::vector<int>;

class StackyFan {
public:
  StackyFan() = default;
  /// Throws InvalidFan on structural problems (index out of range, ray of
  /// wrong length, empty cone list). Geometric invariants are left to
  /// validate().
  StackyFan(int rank, std::vector<IntVector> rays, std::vector<ConeRef> max_cones,
            std::optional<IntVector> deg = std::nullopt);

  int rank() const { return rank_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<IntVector> &rays() const { return rays_; }
  const IntVector &ray(std::size_t i) const { return rays_[i]; }
  const std::vector<ConeRef> &max_cones() const { return cones_; }
  const ConeRef &cone(std::size_t c) const { return cones_[c]; }
  std::size_t num_cones() const { return cones_.size(); }

  /// Declared degree functional, if any.
  const std::optional<IntVector> &declared_deg() const { return deg_; }
  /// Declared functional, else the unique integral solution of deg(v_i) = 1.
  const std::optional<IntVector> &deg() const { return effective_deg_; }

  std::vector<IntVector> generators(const ConeRef &cone) const;
  /// Generators of the cone are linearly independent.
  bool is_simplicial(std::size_t cone) const { return simplicial_[cone]; }
  bool is_full_dimensional(std::size_t cone) const {
    return simplicial_[cone] && cones_[cone].size() == static_cast<std::size_t>(rank_);
  }
  bool all_full_dimensional() const;

  /// Coordinates of p in the generators of maximal cone c (ordered as the
  /// cone's indices); nullopt when p is outside their span.
  std::optional<RatVector> cone_coordinates(std::size_t c, const RatVector &p) const;
  bool cone_contains(std::size_t c, const RatVector &p) const;

  /// Indices of maximal cones whose ray set contains `face`.
  std::vector<std::size_t> cones_containing(const ConeRef &face) const;
  /// The rays of `face` span a cone of the fan.
  bool is_face(const ConeRef &face) const { return !cones_containing(face).empty(); }
  /// I(Sigma): rays used by some maximal cone.
  const ConeRef &used_rays() const { return used_; }
  bool is_used(std::size_t i) const { return used_mask_[i]; }

  /// sum_i c_i v_i for a coefficient vector over all k rays.
  RatVector combine(const RatVector &coeffs) const;
  GaussVector combine(const GaussVector &coeffs) const;

private:
  int rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<ConeRef> cones_;
  std::optional<IntVector> deg_;
  std::optional<IntVector> effective_deg_;
  std::vector<bool> simplicial_;
  std::vector<std::optional<RatMatrix>> inverses_; // full-dimensional cones only
  ConeRef used_;
  std::vector<bool> used_mask_;
};

struct ValidationReport {
  std::vector<std::string> violations; ///< empty means the fan is valid
  std::vector<std::string> gkz_issues; ///< reasons the fan is not GKZ-eligible
  std::optional<IntVector> deg;        ///< effective degree functional
  std::optional<Integer> volume;       ///< when all cones are full-dimensional
  bool valid() const { return violations.empty(); }
  bool gkz_eligible() const { return valid() && gkz_issues.empty(); }
};

ValidationReport validate(const StackyFan &fan);

/// Integral deg with deg(v_i) = 1 for all rays, when one exists and is unique.
std::optional<IntVector> infer_deg(const std::vector<IntVector> &rays, int rank);

/// The rays generate Z^d as a group.
bool rays_generate_lattice(const std::vector<IntVector> &rays, int rank);

/// Smallest cone of the fan containing p (real part, or p itself when real).
std::optional<ConeRef> minimal_cone(const StackyFan &fan, const RatVector &p);
std::optional<ConeRef> minimal_cone(const StackyFan &fan, const GaussVector &p, bool use_real_part);

/// p + eps * xi lies in the support for all small eps > 0. Throws
/// PointOutsideSupport when p itself is outside.
bool tangent_member(const StackyFan &fan, const RatVector &p, const RatVector &xi);

/// Sum over maximal cones of |det(generators)|. Throws NotFullDimensional.
Integer normalized_volume(const StackyFan &fan);

/// Fan over the lower hull of the points lifted by `heights`. Points must
/// lie on a common hyperplane deg = 1. Throws DegenerateHeights when a lower
/// face is not a simplex.
StackyFan triangulate_from_heights(const std::vector<IntVector> &points, const RatVector &heights);

/// Normalized volume of conv(points), computed from a generic regular
/// triangulation.
Integer hull_normalized_volume(const std::vector<IntVector> &points);

/// Heights inducing the fan as a regular triangulation of its rays, if any.
std::optional<RatVector> regular_heights(const StackyFan &fan);

} // namespace bbgkz
