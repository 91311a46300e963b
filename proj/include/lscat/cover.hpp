#pragma once

#include "lscat/complex.hpp"

#include <vector>

namespace lscat {

/// K together with its first few barycentric subdivisions and their geometry.
/// Level 0 is K; level l+1 is sd of level l, with its last-vertex projection.
class Tower {
 public:
  Tower(ComplexPtr base, Geometry geometry);

  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const ComplexPtr& level(int l) const { return levels_[l]; }
  const Geometry& geometry(int l) const { return geometry_[l]; }
  /// Projection from level l to level l-1 (l >= 1).
  const SimplicialMap& projection(int l) const { return subdivisions_[l - 1].projection; }
  const Subdivision& subdivision(int l) const { return subdivisions_[l - 1]; }
  /// Builds levels up to `l`.
  void extend_to(int l);

 private:
  std::vector<ComplexPtr> levels_;
  std::vector<Geometry> geometry_;
  std::vector<Subdivision> subdivisions_;
};

struct CoverElement {
  std::size_t center = 0;  // global index of the simplex of K whose barycentre is the centre
  int color = 0;           // its dimension
  std::vector<int> core;   // vertices A of the fine level with element = open star of A
  UpSet set;               // on the fine level (sd^3 K)
  double diameter = 0;     // over the vertices of the closure
  Eigen::VectorXd barycenter;
};

/// Cover of |K| by open sets, in dim K + 1 colours, each colour a family with
/// pairwise disjoint closures.
///
/// For each vertex x of sd K (a simplex of K; colour = its dimension) let N(x) be
/// the subcomplex of sd^2 K spanned by the simplices of sd K that contain x; the
/// element is the open star of sd N(x) in sd^3 K.  Elements of one colour come
/// from non-adjacent vertices of sd K, so their closures are disjoint, and every
/// element lies in the open star of x in sd K.
struct ColoredCover {
  ComplexPtr base;   // K
  ComplexPtr owner;  // sd^3 K
  Geometry geometry;  // of sd^3 K
  int fine_level = 3;
  std::vector<std::vector<CoverElement>> families;  // by colour
  double mesh() const;
  std::size_t size() const;
};

ColoredCover colored_star_cover(const ComplexPtr& k, const Geometry& g);
/// The cover of tower level `base_level`, built on level base_level + 3 (extended if needed).
ColoredCover colored_star_cover(Tower& tower, int base_level);

struct CoverCheck {
  bool family_count = false;  // exactly dim + 1 colours
  bool coverage = false;      // union is every simplex of the fine level
  bool disjoint = false;      // all same-colour pairs have disjoint closures
  std::size_t pairs_checked = 0;
  bool ok() const { return family_count && coverage && disjoint; }
};

/// Exhaustive combinatorial check of the cover invariants.
CoverCheck check_cover(const ColoredCover& c);

}  // namespace lscat
