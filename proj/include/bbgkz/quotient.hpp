/**
 * Deformed modules Z[Sigma; chi] (real chi), their shadow submodules, and the
 * finite-dimensional quotients by the ideal Z = (Z_1, ..., Z_d).
 *
 * A point w = n + chi of the module decomposes uniquely as
 * c(alpha) + sum p_i v_i with alpha in Box(Sigma; chi) and p >= 0 supported on
 * a cone containing supp(alpha). The quotient is computed per summand alpha
 * and per level |p|; Z_j raises the level by one.
 */
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bbgkz/box.hpp"

namespace bbgkz {

struct ModulePoint {
  std::size_t summand; ///< index into the Box set
  IntVector p;         ///< nonnegative exponents over all rays
};

/// Decomposition c(alpha) + sum p_i v_i of a point of the support; nullopt when w is
/// outside the support or not of the form n + chi.
std::optional<ModulePoint> decompose_point(const StackyFan &fan, const std::vector<BoxElement> &box,
                                           const RatVector &w);

/// Product in the real-parameter module: [n'] * [w]: n' + w when some cone contains both.
std::optional<RatVector> point_product(const StackyFan &fan, const IntVector &n_prime, const RatVector &w);

/// Basis element [n + beta, alpha] of the complex-parameter module.
struct Def2Element {
  IntVector n;
  GaussVector alpha;
  friend bool operator==(const Def2Element &, const Def2Element &) = default;
};

/// Product in the complex-parameter module: [n'] * [n + beta, alpha]; nullopt for zero.
std::optional<Def2Element> module_product(const StackyFan &fan, const GaussVector &beta, const IntVector &n_prime,
                                          const Def2Element &x);

/// Points n with n + chi in the support (and passing the shadow filter) and
/// deg(n) = m, sorted lexicographically. Throws UnboundedDegree when deg is
/// missing or not positive on the support.
std::vector<IntVector> graded_piece(const StackyFan &fan, const RatVector &chi, const std::optional<RatVector> &xi,
                                    long m);

struct QuotientOptions {
  int window = 3;                ///< zero levels required after reaching the volume
  std::optional<int> level_cap;  ///< default 10 d + 10
};

struct BasisElement {
  std::size_t summand;
  IntVector p;
  RatVector point;
  int level;
};

class QuotientAlgebra {
public:
  StackyFan fan;
  RatVector chi;
  std::optional<RatVector> xi;
  std::vector<BoxElement> box;          ///< Box(Sigma; chi), one summand each
  std::vector<GaussVector> tags;        ///< complex alpha per summand (equal to box alpha for real input)
  std::optional<DeltaCorrespondence> correspondence;
  std::vector<BasisElement> basis;      ///< ordered by (summand, level, point)
  std::vector<RatMatrix> D;             ///< multiplication by [v_i]; column b is the image of basis b
  std::vector<std::size_t> summand_dims;
  int levels = 0;                       ///< levels 0..levels-1 were computed

  std::size_t dim() const { return basis.size(); }

  /// Coordinates of the class of [w]. Throws PointOutsideSupport when w is not
  /// a point of the (shadow) module.
  RatVector coordinates(const RatVector &w) const;
  RatVector coordinates(const ModulePoint &mp) const;
  /// Whether the point-module product [v_i] * (alpha, p) is nonzero.
  bool multiplies(std::size_t i, const ModulePoint &mp) const;

  struct Level {
    std::vector<IntVector> columns;          ///< p vectors, sorted by point
    std::map<IntVector, std::size_t> index;  ///< p -> column
    std::vector<RatVector> rows;             ///< reduced row echelon image rows
    std::vector<std::size_t> pivots;
    std::vector<long> basis_of_column;       ///< basis index or -1 for pivots
  };
  std::vector<std::vector<Level>> tables;    ///< [summand][level]
};

QuotientAlgebra build_quotient(const StackyFan &fan, const RatVector &chi,
                               const std::optional<RatVector> &xi = std::nullopt,
                               const QuotientOptions &options = {});

/// Complex beta: computed on beta_delta from stabilize(), tags carry the
/// complex alpha. With shadow, xi = Re beta.
QuotientAlgebra build_quotient(const StackyFan &fan, const GaussVector &beta, bool shadow,
                               const QuotientOptions &options = {});

struct Def2Check {
  bool ok = true;
  std::size_t products = 0;
  std::string failure;
};

/// Exhaustive check that phi_delta commutes with multiplication by lattice
/// points, for n' and module elements of level at most max_offset.
Def2Check verify_def2_isomorphism(const StackyFan &fan, const GaussVector &beta,
                                  const DeltaCorrespondence &correspondence, int max_offset);

/// All p >= 0 with |p| = t and supp(p) inside the given cone.
std::vector<IntVector> compositions(const ConeRef &cone, std::size_t k, int t);

} // namespace bbgkz
