#include "lscat/localize.hpp"

#include <cmath>
#include <sstream>

namespace lscat {

namespace {

// f, X and kappa carried down the subdivision tower of Y.
class Refinement {
 public:
  Refinement(const SimplicialMap& f, const Geometry& g, const CategoryFunction& kappa)
      : target_(f.target(), g), maps_{f}, kappas_{kappa} {}

  void extend_to(int l) {
    target_.extend_to(l);
    while (static_cast<int>(maps_.size()) <= l) {
      const int next = static_cast<int>(maps_.size());
      const auto& f = maps_.back();
      auto sd = barycentric_subdivide(f.source());
      maps_.push_back(subdivide_map(f, sd, target_.subdivision(next)));
      kappas_.push_back(kappas_.back().refine(sd.projection));
    }
  }

  Tower& target() { return target_; }
  const SimplicialMap& map(int l) const { return maps_[l]; }
  const CategoryFunction& kappa(int l) const { return kappas_[l]; }

  /// kappa of the preimage, with kappa of the empty set taken as 0.
  int preimage_kappa(int l, const UpSet& v) const {
    auto pre = preimage_upset(maps_[l], v);
    return pre.empty() ? 0 : kappas_[l](pre);
  }

 private:
  Tower target_;
  std::vector<SimplicialMap> maps_;
  std::vector<CategoryFunction> kappas_;
};

UpSet family_union(const ColoredCover& c, int color) {
  std::vector<int> core;
  for (const auto& e : c.families[color]) core.insert(core.end(), e.core.begin(), e.core.end());
  return open_star(c.owner, core);
}

std::string hypothesis_message(int kx, int bound) {
  return "hypothesis κ(X) > n(d+1) violated: " + std::to_string(kx) + " ≤ " + std::to_string(bound);
}

}  // namespace

LocalizationCertificate localize(const SimplicialMap& f, const Geometry& target_geometry,
                                 const CategoryFunction& kappa, int n, int rounds) {
  if (n < 1) throw Error("threshold n must be positive");
  if (rounds < 1) throw Error("rounds must be positive");
  if (kappa.owner() != f.source()) throw Error("category function is not defined on the source of f");
  validate_geometry(*f.target(), target_geometry, false);

  LocalizationCertificate cert;
  cert.kappa_label = kappa.label();
  cert.n = n;
  cert.target_dim = f.target()->dim();
  cert.kappa_total = kappa(UpSet::full(f.source()));
  const int bound = n * (cert.target_dim + 1);
  if (cert.kappa_total <= bound) throw HypothesisViolation(hypothesis_message(cert.kappa_total, bound));

  Refinement ref(f, target_geometry, kappa);
  for (int r = 1; r <= rounds; ++r) {
    const int base = r - 1, fine = r + 2;
    ref.extend_to(fine);
    auto cover = colored_star_cover(ref.target(), base);

    LocalizationRound rec;
    rec.round = r;
    rec.base_level = base;
    rec.cover_level = fine;
    int chosen = -1;
    for (int i = 0; i < static_cast<int>(cover.families.size()); ++i) {
      rec.family_kappa.push_back(ref.preimage_kappa(fine, family_union(cover, i)));
      if (chosen < 0 && rec.family_kappa.back() > n) chosen = i;
    }
    if (chosen < 0)
      throw Error("no colour has preimage κ > n although κ(X) > n(d+1): " + kappa.label() + " violates subadditivity");

    const CoverElement* pick = nullptr;
    for (const auto& e : cover.families[chosen]) {
      const int k = ref.preimage_kappa(fine, e.set);
      if (k > n) {
        pick = &e;
        rec.kappa = k;
        break;
      }
    }
    if (pick == nullptr)
      throw Error("no star of colour " + std::to_string(chosen) + " has preimage κ > n: " + kappa.label() +
                  " violates the disjoint-closure axiom");

    const Complex& base_complex = *ref.target().level(base);
    rec.color = chosen;
    rec.center = pick->center;
    rec.center_name = base_complex.simplex_name(base_complex.simplex(pick->center));
    rec.core = pick->core;
    rec.star = pick->set.members();
    rec.barycenter = pick->barycenter;
    rec.diameter = pick->diameter;
    cert.rounds.push_back(std::move(rec));
  }
  cert.c = cert.rounds.back().barycenter;
  return cert;
}

VerifyResult verify_certificate(const LocalizationCertificate& cert, const SimplicialMap& f,
                                const Geometry& target_geometry, const CategoryFunction& kappa) {
  if (kappa.owner() != f.source()) throw Error("category function is not defined on the source of f");
  if (cert.target_dim != f.target()->dim()) throw Error("certificate target dimension does not match the map");
  if (cert.rounds.empty()) throw Error("certificate has no rounds");
  validate_geometry(*f.target(), target_geometry, false);

  VerifyResult out;
  auto fail = [&](const std::string& what) {
    out.ok = false;
    out.problems.push_back(what);
  };
  const int bound = cert.n * (cert.target_dim + 1);
  const int kx = kappa(UpSet::full(f.source()));
  if (kx != cert.kappa_total) fail("κ(X) recomputes to " + std::to_string(kx));
  if (cert.kappa_total <= bound) fail(hypothesis_message(cert.kappa_total, bound));
  if (cert.n < 1) fail("threshold n is not positive");

  Refinement ref(f, target_geometry, kappa);
  for (std::size_t idx = 0; idx < cert.rounds.size(); ++idx) {
    const auto& rec = cert.rounds[idx];
    const std::string tag = "round " + std::to_string(rec.round) + ": ";
    if (rec.round != static_cast<int>(idx) + 1 || rec.base_level != rec.round - 1 || rec.cover_level != rec.round + 2) {
      fail(tag + "round numbering or levels are inconsistent");
      continue;
    }
    if (rec.kappa <= cert.n) fail(tag + "recorded κ " + std::to_string(rec.kappa) + " is not above n");
    ref.extend_to(rec.cover_level);
    auto cover = colored_star_cover(ref.target(), rec.base_level);
    if (rec.color < 0 || rec.color >= static_cast<int>(cover.families.size())) {
      fail(tag + "colour out of range");
      continue;
    }
    const CoverElement* elem = nullptr;
    for (const auto& e : cover.families[rec.color])
      if (e.center == rec.center) elem = &e;
    if (elem == nullptr) {
      fail(tag + "centre is not a vertex of the claimed colour");
      continue;
    }
    if (elem->core != rec.core || elem->set.members() != rec.star) fail(tag + "star does not match the cover element");
    const int k = ref.preimage_kappa(rec.cover_level, elem->set);
    if (k != rec.kappa) fail(tag + "κ recomputes to " + std::to_string(k) + ", recorded " + std::to_string(rec.kappa));
    if (std::abs(elem->diameter - rec.diameter) > 1e-9) fail(tag + "diameter does not recompute");
    if (rec.barycenter.size() != elem->barycenter.size() || (rec.barycenter - elem->barycenter).norm() > 1e-9)
      fail(tag + "barycentre does not recompute");
    if (idx > 0 && !(rec.diameter < cert.rounds[idx - 1].diameter)) fail(tag + "diameter does not decrease");
  }
  const auto& last = cert.rounds.back().barycenter;
  if (cert.c.size() != last.size() || (cert.c - last).norm() > 1e-9) fail("c is not the last barycentre");
  return out;
}

}  // namespace lscat
