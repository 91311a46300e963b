#include <doctest.h>

#include "lscat/complex.hpp"
#include "lscat/models.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace lscat;

namespace {

std::set<std::vector<int>> simplex_set(const Complex& k) {
  std::set<std::vector<int>> out;
  for (std::size_t g = 0; g < k.size(); ++g) {
    auto s = k.simplex(g);
    out.emplace(s.begin(), s.end());
  }
  return out;
}

bool face_closed(const Complex& k) {
  auto all = simplex_set(k);
  for (const auto& s : all)
    for (std::size_t j = 0; s.size() > 1 && j < s.size(); ++j) {
      auto f = s;
      f.erase(f.begin() + static_cast<long>(j));
      if (!all.count(f)) return false;
    }
  return true;
}

std::vector<bool> random_mask(std::size_t n, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<bool> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = coin(rng);
  return m;
}

}  // namespace

TEST_CASE("build_complex examples") {
  auto circle = models::triangle_circle();
  CHECK(circle->dim() == 1);
  CHECK(circle->size() == 6);

  auto tri = build_complex({{"a", "b", "c"}});
  CHECK(tri->dim() == 2);
  CHECK(tri->size() == 7);

  auto oct = models::cross_polytope(2);
  CHECK(oct->dim() == 2);
  CHECK(oct->count(0) == 6);
  CHECK(oct->count(1) == 12);
  CHECK(oct->count(2) == 8);
  CHECK(oct->size() == 26);

  CHECK_THROWS_AS(build_complex({}), Error);
  CHECK_THROWS_AS(build_complex({{"a"}, {}}), Error);
}

TEST_CASE("vertex order is the sorted identifier order") {
  auto k = build_complex({{"z", "b"}, {"m", "b"}});
  CHECK(k->name(0) == "b");
  CHECK(k->name(1) == "m");
  CHECK(k->name(2) == "z");
}

TEST_CASE("face closure and incidence tables") {
  for (auto k : {models::torus(), models::rp2(), models::cross_polytope(3), models::icosahedron()}) {
    CHECK(face_closed(*k));
    for (int d = 1; d <= k->dim(); ++d)
      for (std::size_t i = 0; i < k->count(d); ++i) {
        auto s = k->simplex(d, i);
        auto fac = k->facets(d, i);
        for (int j = 0; j <= d; ++j) {
          auto f = k->simplex(d - 1, fac[j]);
          std::vector<int> expect(s.begin(), s.end());
          expect.erase(expect.begin() + j);
          CHECK(std::equal(f.begin(), f.end(), expect.begin(), expect.end()));
          bool back = false;
          for (auto c : k->cofacets(d - 1, fac[j])) back |= c.index == i && static_cast<int>(c.omitted) == j;
          CHECK(back);
        }
      }
  }
}

TEST_CASE("barycentric subdivision examples") {
  auto edge = build_complex({{"a", "b"}});
  auto sd = barycentric_subdivide(edge);
  CHECK(sd.complex->count(0) == 3);
  CHECK(sd.complex->count(1) == 2);
  auto ab = *edge->find_global(std::vector<int>{0, 1});
  CHECK(sd.projection(static_cast<int>(ab)) == 1);
  CHECK(sd.complex->name(static_cast<int>(ab)) == "(a,b)");

  auto hex = barycentric_subdivide(models::triangle_circle()).complex;
  CHECK(hex->count(0) == 6);
  CHECK(hex->count(1) == 6);

  auto tri = build_complex({{"a", "b", "c"}});
  Geometry g{Eigen::MatrixXd(2, 3)};
  g.points << 0, 1, 0.5, 0, 0, std::sqrt(3.0) / 2;
  auto gsd = barycentric_subdivide(tri, g);
  CHECK(mesh(*gsd.complex, gsd.geometry) / mesh(*tri, g) <= 2.0 / 3.0 + 1e-12);

  Geometry missing{Eigen::MatrixXd::Zero(2, 2)};
  CHECK_THROWS_AS(barycentric_subdivide(tri, missing), Error);
}

TEST_CASE("mesh contraction under subdivision") {
  for (auto k : {models::triangle_circle(), models::torus(), models::cross_polytope(3), models::full_simplex(4)}) {
    auto g = standard_geometry(*k);
    const double ratio = static_cast<double>(k->dim()) / (k->dim() + 1);
    auto sd = barycentric_subdivide(k, g);
    CHECK(mesh(*sd.complex, sd.geometry) <= ratio * mesh(*k, g) + 1e-12);
  }
}

TEST_CASE("open_star examples") {
  auto circle = models::triangle_circle();
  auto st = open_star(circle, "a");
  CHECK(st.size() == 3);
  CHECK(st.contains(*circle->find_global(std::vector<int>{0, 1})));
  CHECK(st.contains(*circle->find_global(std::vector<int>{0, 2})));

  auto tri = build_complex({{"a", "b", "c"}});
  CHECK(open_star(tri, "a").size() == 4);

  auto point = build_complex({{"a"}});
  CHECK(open_star(point, "a").size() == 1);
  CHECK_THROWS_AS(open_star(point, "q"), Error);
}

TEST_CASE("union and closure disjointness") {
  auto circle = models::triangle_circle();
  std::vector<UpSet> ab = {open_star(circle, "a"), open_star(circle, "b")};
  auto u = upset_union(ab);
  CHECK(u.size() == 5);
  CHECK_FALSE(u.contains(2));
  CHECK_FALSE(closures_disjoint(ab[0], ab[1]));

  // On the path a-b-c both closed stars contain b.
  auto path = build_complex({{"a", "b"}, {"b", "c"}});
  CHECK_FALSE(closures_disjoint(open_star(path, "a"), open_star(path, "c")));
  auto longer = build_complex({{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(closures_disjoint(open_star(longer, "a"), open_star(longer, "d")));

  auto other = models::triangle_circle();
  CHECK_THROWS_AS(closures_disjoint(ab[0], open_star(other, "a")), Error);
  CHECK_THROWS_AS(UpSet(circle, std::vector<bool>{true, false, false, false, false, false}), Error);
}

TEST_CASE("order complex examples") {
  auto circle = models::triangle_circle();
  auto full = order_complex_model(UpSet::full(circle));
  auto sd = barycentric_subdivide(circle).complex;
  CHECK(simplex_set(*full.complex) == simplex_set(*sd));

  auto star = order_complex_model(open_star(circle, "a"));
  CHECK(star.complex->count(0) == 3);
  CHECK(star.complex->count(1) == 2);

  std::vector<bool> edges(circle->size(), false);
  for (std::size_t i = 0; i < circle->count(1); ++i) edges[circle->global(1, i)] = true;
  auto three = order_complex_model(UpSet(circle, edges));
  CHECK(three.complex->dim() == 0);
  CHECK(three.complex->count(0) == 3);

  CHECK_THROWS_AS(order_complex_model(UpSet(circle, std::vector<bool>(6, false))), Error);
}

TEST_CASE("preimage examples") {
  auto t2 = models::torus();
  auto s1 = models::cycle(3);
  auto f = models::torus_projection(t2, s1);
  CHECK(preimage_upset(f, UpSet::full(s1)).is_full());

  auto pre = preimage_upset(f, open_star(s1, 0));
  // Every simplex with a vertex over v0: the fibre circle t0_* and everything touching it.
  for (std::size_t g = 0; g < t2->size(); ++g) {
    auto s = t2->simplex(g);
    const bool over = std::any_of(s.begin(), s.end(), [](int v) { return v / 3 == 0; });
    CHECK(pre.contains(g) == over);
  }
  for (int j = 0; j < 3; ++j) CHECK(pre.contains(static_cast<std::size_t>(j)));

  auto point = build_complex({{"p"}});
  SimplicialMap constant(t2, point, std::vector<int>(9, 0));
  CHECK(preimage_upset(constant, UpSet::full(point)).is_full());
  CHECK_THROWS_AS(preimage_upset(f, UpSet::full(t2)), Error);
}

TEST_CASE("simplicial map validation") {
  auto circle = models::triangle_circle();
  auto path = build_complex({{"a", "b"}, {"b", "c"}});
  CHECK_THROWS_AS(SimplicialMap(path, circle, {0, 1}), Error);
  CHECK_THROWS_AS(SimplicialMap(circle, path, {0, 1, 2}), Error);  // edge a-c has no image
  CHECK_NOTHROW(SimplicialMap(circle, path, {0, 1, 1}));
}

TEST_CASE("subdivide_map examples") {
  auto t2 = models::torus();
  auto id = SimplicialMap::identity(t2);
  auto sid = subdivide_map(id);
  for (int v = 0; v < sid.map.source()->num_vertices(); ++v) CHECK(sid.map(v) == v);

  auto point = build_complex({{"p"}});
  auto sc = subdivide_map(SimplicialMap(t2, point, std::vector<int>(9, 0)));
  CHECK(sc.target.complex->num_vertices() == 1);

  auto s1 = models::cycle(3);
  auto sf = subdivide_map(models::torus_projection(t2, s1));
  CHECK(sf.map.source()->size() == sf.source.complex->size());
  // Contiguity of the two ways around the square: for each vertex v of sd T^2,
  // p(sd f(v)) and f(p(v)) both lie in the simplex f(sigma_v).
  auto f = models::torus_projection(t2, s1);
  for (int v = 0; v < sf.map.source()->num_vertices(); ++v) {
    auto img = s1->simplex(f.image(static_cast<std::size_t>(v)));
    const int a = sf.target.projection(sf.map(v));
    const int b = f(sf.source.projection(v));
    CHECK(std::find(img.begin(), img.end(), a) != img.end());
    CHECK(std::find(img.begin(), img.end(), b) != img.end());
  }
}

TEST_CASE("property: up-closure preserved and stars cover") {
  std::mt19937_64 rng(7);
  for (auto k : {models::torus(), models::rp2(), models::cross_polytope(3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto u = UpSet::up_closure(k, random_mask(k->size(), rng, 0.05));
      auto v = UpSet::up_closure(k, random_mask(k->size(), rng, 0.05));
      std::vector<UpSet> both = {u, v};
      CHECK_NOTHROW(upset_union(both));
    }
    std::vector<UpSet> stars;
    for (int v = 0; v < k->num_vertices(); ++v) stars.push_back(open_star(k, v));
    CHECK(upset_union(stars).is_full());
  }
}

TEST_CASE("property: preimages of disjoint-closure sets have disjoint closures") {
  std::mt19937_64 rng(11);
  auto target = models::cycle(9);
  auto source = models::torus(9);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // Either the fibre projection followed by a rotation or reflection of the
    // circle, or a map squeezing everything into one edge.
    std::vector<int> vm(source->num_vertices());
    const int shift = static_cast<int>(rng() % 9);
    const int mode = static_cast<int>(rng() % 3);
    for (int v = 0; v < source->num_vertices(); ++v) {
      const int i = v / 9;
      if (mode == 0) vm[v] = (i + shift) % 9;
      if (mode == 1) vm[v] = (9 - i + shift) % 9;
      if (mode == 2) vm[v] = (shift + static_cast<int>(rng() % 2)) % 9;
    }
    SimplicialMap map(source, target, vm);
    auto a = open_star(target, static_cast<int>(rng() % 9));
    auto b = open_star(target, static_cast<int>(rng() % 9));
    if (!closures_disjoint(a, b)) continue;
    ++checked;
    CHECK(closures_disjoint(preimage_upset(map, a), preimage_upset(map, b)));
  }
  CHECK(checked > 20);
}

TEST_CASE("cohomology models: full subcomplex and collapse") {
  auto t2 = models::torus();
  std::vector<int> row = {0, 1, 2};
  auto sub = full_subcomplex(t2, row);
  CHECK(sub.complex->count(0) == 3);
  CHECK(sub.complex->count(1) == 3);

  auto disk = models::full_simplex(4);
  std::vector<bool> live(disk->size(), true);
  collapse(*disk, live);
  CHECK(std::count(live.begin(), live.end(), true) == 1);
}
