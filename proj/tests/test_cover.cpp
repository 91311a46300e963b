#include <doctest.h>

#include "lscat/cover.hpp"
#include "lscat/models.hpp"

using namespace lscat;

namespace {

std::vector<std::size_t> family_sizes(const ColoredCover& c) {
  std::vector<std::size_t> out;
  for (const auto& f : c.families) out.push_back(f.size());
  return out;
}

}  // namespace

TEST_CASE("cover of a 1-simplex") {
  auto edge = build_complex({{"a", "b"}});
  auto c = colored_star_cover(edge, standard_geometry(*edge));
  CHECK(family_sizes(c) == std::vector<std::size_t>{2, 1});
  CHECK(closures_disjoint(c.families[0][0].set, c.families[0][1].set));
  CHECK(check_cover(c).ok());
}

TEST_CASE("cover of the triangle circle and the full triangle") {
  auto circle = models::triangle_circle();
  auto c = colored_star_cover(circle, standard_geometry(*circle));
  CHECK(family_sizes(c) == std::vector<std::size_t>{3, 3});
  CHECK(check_cover(c).ok());

  auto tri = models::full_simplex(3);
  auto t = colored_star_cover(tri, standard_geometry(*tri));
  CHECK(family_sizes(t) == std::vector<std::size_t>{3, 3, 1});
  CHECK(check_cover(t).ok());
}

TEST_CASE("cover invariants on the acceptance complexes") {
  for (auto k : {models::triangle_circle(), models::cross_polytope(2), models::torus(), models::rp2()}) {
    auto c = colored_star_cover(k, standard_geometry(*k));
    auto r = check_cover(c);
    CHECK(r.family_count);
    CHECK(r.coverage);
    CHECK(r.disjoint);
    CHECK(r.pairs_checked > 0);
    for (const auto& f : c.families)
      for (const auto& e : f) CHECK(e.diameter > 0);
  }
}

TEST_CASE("elements lie in the open star of their centre") {
  auto k = models::torus();
  Tower t(k, standard_geometry(*k));
  auto c = colored_star_cover(t, 0);
  // A fine simplex lies in the open star of x in sd K when one of its vertices
  // (an sd^2 K simplex) starts with an sd K simplex containing x.
  for (const auto& f : c.families)
    for (const auto& e : f) {
      for (std::size_t g = 0; g < c.owner->size(); ++g) {
        if (!e.set.contains(g)) continue;
        bool inside = false;
        for (int v : c.owner->simplex(g)) {
          const std::size_t msimplex = static_cast<std::size_t>(v);
          const int lsimplex_first = t.level(2)->simplex(msimplex).front();
          for (int y : t.level(1)->simplex(static_cast<std::size_t>(lsimplex_first)))
            if (y == static_cast<int>(e.center)) inside = true;
        }
        CHECK(inside);
      }
    }
}

TEST_CASE("mesh") {
  auto point = build_complex({{"p"}});
  CHECK(colored_star_cover(point, standard_geometry(*point)).mesh() == 0);

  // Cover mesh and simplex mesh both shrink across subdivision.
  auto tri = models::full_simplex(3);
  Geometry g{Eigen::MatrixXd(2, 3)};
  g.points << 0, 1, 0.5, 0, 0, std::sqrt(3.0) / 2;
  Tower t(tri, g);
  double previous_cover = colored_star_cover(t, 0).mesh();
  const double initial = mesh(*tri, g);
  for (int r = 1; r <= 2; ++r) {
    t.extend_to(r);
    CHECK(mesh(*t.level(r), t.geometry(r)) <= std::pow(2.0 / 3.0, r) * initial + 1e-12);
    const double cm = colored_star_cover(t, r).mesh();
    CHECK(cm < previous_cover);
    previous_cover = cm;
  }
}

TEST_CASE("unit edge mesh values") {
  auto edge = build_complex({{"a", "b"}});
  Geometry g{Eigen::MatrixXd(1, 2)};
  g.points << 0, 1;
  auto c = colored_star_cover(edge, g);
  // Endpoint elements reach from the end to 3/8 of the edge; the midpoint element spans [1/8, 7/8].
  CHECK(c.families[0][0].diameter == doctest::Approx(0.375));
  CHECK(c.families[1][0].diameter == doctest::Approx(0.75));
  CHECK(c.mesh() == doctest::Approx(0.75));
}
