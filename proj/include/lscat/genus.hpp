#pragma once

#include "lscat/category.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/complex.hpp"
#include "lscat/localize.hpp"

#include <string>
#include <vector>

namespace lscat {

/// A complex with a free simplicial involution (sigma and T sigma never meet).
struct Z2Complex {
  ComplexPtr space;
  std::vector<int> involution;
  int operator()(int v) const { return involution[v]; }
};

/// Validates: T is an involution, simplicial, and free.  The error names the
/// offending vertex or simplex.
Z2Complex build_z2(ComplexPtr space, std::vector<int> involution);

/// sd of the space with the induced involution.
Z2Complex subdivide(const Z2Complex& z);

struct QuotientData {
  Z2Complex cover;          // the free complex that was divided out (input or its sd)
  bool subdivided = false;  // true when the orbit complex of the input was not simplicial
  ComplexPtr quotient;
  SimplicialMap projection;  // cover.space -> quotient, 2-to-1 on simplices
  std::vector<int> lift;     // quotient vertex -> chosen preimage (spanning-forest lifts)
  CohomologyClass<GF2> w;    // classifying cocycle of the double cover
};

/// Orbit complex, vertices named after their smaller orbit member.  When the
/// orbit complex of `z` is not 2-to-1 on simplices, sd z is used instead (its
/// orbit complex always is); `force_subdivide` makes that unconditional.
QuotientData quotient(const Z2Complex& z, bool force_subdivide = false);

/// The double cover encoded by (quotient, w): vertices (v, s), s in {0, 1}.
Z2Complex reconstruct_cover(const QuotientData& q);
/// True iff (v, s) -> lift(v) or T lift(v) is an equivariant isomorphism from
/// reconstruct_cover(q) onto q.cover.
bool reconstruction_matches(const QuotientData& q);

/// max{k : (w|U)^k != 0}.
int w_height(const QuotientData& q, const UpSet& u);

struct GenusBounds {
  int lower = 1;
  int upper = 1;
  bool tight() const { return lower == upper; }
};

/// lower = height(w|U) + 1 (the cohomological index).  upper = 1 when w|U = 0
/// (the cover is trivial over U, so it has a section), else dim U + 1.
GenusBounds genus_bounds(const QuotientData& q, const UpSet& u);

/// kappa(U) = height(w|U) + 1 on up-sets of the quotient.
CategoryFunction genus_kappa(const QuotientData& q);

struct MonotonicityResult {
  bool subdivided = false;    // quotients were taken after one subdivision
  bool cohomologous = false;  // phi-bar^* w_target ~ w_source
  int source_height = 0;
  int target_height = 0;
  bool passed() const { return cohomologous && source_height <= target_height; }
};

/// For an equivariant simplicial map phi between free Z2-complexes, checks that
/// the induced quotient map pulls w back to w and that heights do not increase.
/// Throws Error if phi is not simplicial or not equivariant.
MonotonicityResult index_monotonicity_check(const Z2Complex& source, const Z2Complex& target,
                                            const std::vector<int>& phi);

enum class CheckStatus { pass, fail, inconclusive };
std::string to_string(CheckStatus s);

struct CoveringSumReport {
  CheckStatus status = CheckStatus::inconclusive;
  GenusBounds full;
  std::vector<GenusBounds> pieces;
  std::vector<std::size_t> witnesses;  // quotient simplices x with sum over pieces containing x >= genus
};

/// Searches every simplex x of the quotient for sum_{U_i containing x} g(U_i) >= g(Y).
/// Inconclusive unless all bounds (pieces and full space) are tight.  Throws if
/// the pieces do not cover the quotient.
CoveringSumReport covering_sum_check(const QuotientData& q, const std::vector<UpSet>& cover);

/// Localization with the index kappa on the quotient (an RP^n) of an n-sphere and
/// threshold k, for f into an l-dimensional target.  Throws HypothesisViolation
/// unless k (l + 1) <= n.
LocalizationCertificate borsuk_ulam_demo(const QuotientData& q, const SimplicialMap& f,
                                         const Geometry& target_geometry, int k, int rounds);

}  // namespace lscat
