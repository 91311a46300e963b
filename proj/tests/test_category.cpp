#include <doctest.h>

#include "lscat/category.hpp"
#include "lscat/models.hpp"

#include <random>

using namespace lscat;

TEST_CASE("kappa_hl examples") {
  auto t2 = models::torus();
  auto kt = kappa_hl<GF2>(t2);
  CHECK(kt(UpSet::full(t2)) == 3);
  for (int v = 0; v < t2->num_vertices(); ++v) CHECK(kt(open_star(t2, v)) == 1);
  auto rp2 = models::rp2();
  CHECK(kappa_hl<GF2>(rp2)(UpSet::full(rp2)) == 3);
  CHECK_THROWS_AS(kt(UpSet(t2, std::vector<bool>(t2->size(), false))), Error);
  CHECK_THROWS_AS(kt(UpSet::full(rp2)), Error);
}

TEST_CASE("check_axioms: kappa_hl on the triangle circle") {
  auto k = models::triangle_circle();
  auto report = check_axioms(kappa_hl<GF2>(k), 200, 1);
  CHECK(report.passed());
  for (const auto& a : report.axioms) CHECK(a.checked == 200);
}

TEST_CASE("check_axioms: constant function") {
  auto k = models::torus();
  CHECK(check_axioms(constant_kappa(k), 200, 2).passed());
}

TEST_CASE("check_axioms: simplex count breaks disjoint-max only") {
  auto k = models::cross_polytope(2);
  auto report = check_axioms(simplex_count_kappa(k), 200, 3);
  CHECK_FALSE(report.passed());
  CHECK(report.axioms[0].failed == 0);
  CHECK(report.axioms[1].failed == 0);
  REQUIRE(report.axioms[2].failed > 0);
  const auto& f = report.axioms[2].failures.front();
  CHECK(f.pieces.size() >= 2);
  CHECK(f.lhs_value > *std::max_element(f.piece_values.begin(), f.piece_values.end()));
}

TEST_CASE("check_axioms is deterministic given the seed") {
  auto k = models::torus();
  auto a = check_axioms(simplex_count_kappa(k), 100, 9);
  auto b = check_axioms(simplex_count_kappa(k), 100, 9);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.axioms[i].failed == b.axioms[i].failed);
    CHECK(a.axioms[i].nontrivial == b.axioms[i].nontrivial);
  }
}

TEST_CASE("kappa is at least one") {
  auto k = models::triangle_circle();
  CategoryFunction zero(k, "zero", [](const UpSet&) { return 0; });
  CHECK_THROWS_AS(zero(UpSet::full(k)), Error);
}

TEST_CASE("brute-force oracle examples") {
  CHECK(brute_force_hl_oracle<GF2>(UpSet::full(models::torus())) == 2);
  auto t2 = models::torus();
  CHECK(brute_force_hl_oracle<GF2>(open_star(t2, 4)) == 0);
  CHECK(brute_force_hl_oracle<GF2>(UpSet::full(models::rp2())) == 2);
  CHECK(brute_force_hl_oracle<GF2>(UpSet::full(models::triangle_circle())) == 1);
  CHECK(brute_force_hl_oracle<GF2>(UpSet::full(models::cross_polytope(2))) == 1);
}

TEST_CASE("property: oracle equals hl on sampled up-sets") {
  std::mt19937_64 rng(31);
  for (auto k : {models::torus(), models::rp2(), models::triangle_circle(), models::cross_polytope(2)}) {
    auto basis = cohomology_basis<GF2>(k);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<bool> seeds(k->size());
      const std::uint64_t inv = std::uint64_t{2} << (rng() % 4);
      for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = rng() % inv == 0;
      auto u = UpSet::up_closure(k, seeds);
      if (u.empty()) continue;
      CHECK(brute_force_hl_oracle<GF2>(u) == hl(u, basis));
    }
  }
}

TEST_CASE("oracle tractability bound") {
  auto t2 = models::torus();
  CHECK_THROWS_AS(brute_force_hl_oracle<GF2>(UpSet::full(t2), 1), Error);
}

TEST_CASE("refinement transports kappa_hl") {
  auto t2 = models::torus();
  auto sd = barycentric_subdivide(t2);
  auto fine = kappa_hl<GF2>(t2).refine(sd.projection);
  CHECK(fine.owner() == sd.complex);
  CHECK(fine(UpSet::full(sd.complex)) == 3);
  CHECK(fine(open_star(sd.complex, 0)) == 1);
}

TEST_CASE("property: segment bound on sampled covers") {
  for (auto k : {models::triangle_circle(), models::torus(), models::rp2(), models::cross_polytope(2)}) {
    auto r = check_segment_bound<GF2>(k, 200, 11);
    CHECK(r.covers == 200);
    CHECK(r.violations == 0);
    CHECK(r.max_pieces == 4);
  }
  // A superadditive function is caught.
  auto t2 = models::torus();
  auto r = check_segment_bound(t2, [](const UpSet& u) { return static_cast<int>(u.size() * u.size()); }, 50, 3);
  CHECK(r.violations > 0);
}
