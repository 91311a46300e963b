#include "lscat/cover.hpp"

#include <algorithm>

namespace lscat {

Tower::Tower(ComplexPtr base, Geometry geometry) {
  validate_geometry(*base, geometry, false);
  levels_.push_back(std::move(base));
  geometry_.push_back(std::move(geometry));
}

void Tower::extend_to(int l) {
  while (depth() < l) {
    auto sd = barycentric_subdivide(levels_.back(), geometry_.back());
    levels_.push_back(sd.complex);
    geometry_.push_back(std::move(sd.geometry));
    subdivisions_.push_back({sd.complex, std::move(sd.projection)});
  }
}

double ColoredCover::mesh() const {
  double m = 0;
  for (const auto& f : families)
    for (const auto& e : f) m = std::max(m, e.diameter);
  return m;
}

std::size_t ColoredCover::size() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.size();
  return n;
}

ColoredCover colored_star_cover(const ComplexPtr& k, const Geometry& g) {
  Tower t(k, g);
  return colored_star_cover(t, 0);
}

ColoredCover colored_star_cover(Tower& tower, int base_level) {
  tower.extend_to(base_level + 3);
  const Complex& k = *tower.level(base_level);
  const Complex& l = *tower.level(base_level + 1);
  const Complex& m = *tower.level(base_level + 2);
  const ComplexPtr& p = tower.level(base_level + 3);
  const Geometry& gp = tower.geometry(base_level + 3);

  ColoredCover c;
  c.base = tower.level(base_level);
  c.owner = p;
  c.geometry = gp;
  c.families.resize(k.dim() + 1);

  // An M-simplex is a chain of L-simplices; it lies in N(x) iff its smallest
  // element (its first vertex) contains x.
  std::vector<std::vector<int>> core(l.num_vertices());
  for (std::size_t s = 0; s < m.size(); ++s) {
    const int first = m.simplex(s).front();
    for (int x : l.simplex(static_cast<std::size_t>(first))) core[x].push_back(static_cast<int>(s));
  }
  for (int x = 0; x < l.num_vertices(); ++x) {
    auto set = open_star(p, core[x]);
    CoverElement e{static_cast<std::size_t>(x), k.dim_of(static_cast<std::size_t>(x)), std::move(core[x]),
                   std::move(set), 0.0, {}};
    auto cv = e.set.closure_vertices();
    e.diameter = diameter(cv, gp);
    e.barycenter = barycenter(k.simplex(e.center), tower.geometry(base_level));
    c.families[e.color].push_back(std::move(e));
  }
  return c;
}

CoverCheck check_cover(const ColoredCover& c) {
  CoverCheck r;
  r.family_count = static_cast<int>(c.families.size()) == c.base->dim() + 1 &&
                   std::all_of(c.families.begin(), c.families.end(), [](const auto& f) { return !f.empty(); });
  std::vector<bool> covered(c.owner->size(), false);
  for (const auto& f : c.families)
    for (const auto& e : f)
      for (std::size_t g = 0; g < covered.size(); ++g)
        if (e.set.contains(g)) covered[g] = true;
  r.coverage = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  r.disjoint = true;
  for (const auto& f : c.families)
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        ++r.pairs_checked;
        if (!closures_disjoint(f[i].set, f[j].set)) r.disjoint = false;
      }
  return r;
}

}  // namespace lscat
