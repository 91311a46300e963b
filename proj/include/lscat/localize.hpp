#pragma once

#include "lscat/category.hpp"
#include "lscat/complex.hpp"
#include "lscat/cover.hpp"

#include <string>
#include <vector>

namespace lscat {

struct LocalizationRound {
  int round = 0;
  int base_level = 0;   // level of Y whose simplex barycentre is the centre (round - 1)
  int cover_level = 0;  // level carrying the star (round + 2)
  int color = 0;
  std::size_t center = 0;  // global index at base_level
  std::string center_name;
  std::vector<int> core;    // vertices A at cover_level; the star is the open star of A
  std::vector<std::size_t> star;  // its simplices, global indices at cover_level
  int kappa = 0;            // kappa of the preimage of the star
  std::vector<int> family_kappa;  // kappa of the preimage of each colour's union
  Eigen::VectorXd barycenter;
  double diameter = 0;
};

struct LocalizationCertificate {
  std::string kappa_label;
  int n = 0;
  int target_dim = 0;
  int kappa_total = 0;
  std::vector<LocalizationRound> rounds;
  Eigen::VectorXd c;
};

/// Finds a point c of Y all of whose small neighbourhoods V have kappa(f^-1 V) > n.
///
/// Round r covers sd^(r-1) Y by the coloured cover (stars on sd^(r+2) Y), takes
/// the first colour whose union has preimage kappa > n (one exists by
/// subadditivity), then the first star of that colour with preimage kappa > n
/// (one exists by disjoint-max).  Centres are visited in simplex order, which is
/// lexicographic within a colour.  kappa is transported along subdivisions of X.
/// Throws HypothesisViolation unless kappa(X) > n (dim Y + 1).
LocalizationCertificate localize(const SimplicialMap& f, const Geometry& target_geometry,
                                 const CategoryFunction& kappa, int n, int rounds);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Recomputes every recorded value from scratch and rechecks the certificate
/// invariants: each kappa > n, kappa(X) > n (d+1), diameters strictly decreasing,
/// stars equal to the cover elements they claim to be, c the last barycentre.
/// Throws Error if the certificate does not fit f.
VerifyResult verify_certificate(const LocalizationCertificate& cert, const SimplicialMap& f,
                                const Geometry& target_geometry, const CategoryFunction& kappa);

}  // namespace lscat
