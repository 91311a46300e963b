#include "lscat/genus.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace lscat {

namespace {

Simplex image_of(std::span<const int> s, const std::vector<int>& map) {
  Simplex out;
  out.reserve(s.size());
  for (int v : s) out.push_back(map[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Orbit complex of z, or nullopt when it is not 2-to-1 on simplices.
std::optional<QuotientData> try_quotient(const Z2Complex& z) {
  const Complex& k = *z.space;
  std::vector<int> reps, orbit(k.num_vertices());
  for (int v = 0; v < k.num_vertices(); ++v)
    if (v < z(v)) reps.push_back(v);
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) orbit[reps[i]] = orbit[z(reps[i])] = i;

  std::vector<Simplex> images;
  for (const auto& s : k.maximal_simplices()) images.push_back(image_of(s, orbit));
  std::vector<std::string> names;
  for (int r : reps) names.push_back(k.name(r));
  auto q = Complex::from_simplices(static_cast<int>(reps.size()), images, std::move(names));
  if (q->dim() != k.dim()) return std::nullopt;
  for (int d = 0; d <= k.dim(); ++d)
    if (2 * q->count(d) != k.count(d)) return std::nullopt;

  QuotientData out{z, false, q, SimplicialMap(z.space, q, orbit), {}, {q, 1, Vec<GF2>::Zero(static_cast<Eigen::Index>(q->count(1)))}};

  // Lift along a breadth-first spanning forest; w is 1 on the edges whose
  // endpoint lifts are not adjacent upstairs.
  auto adjacent = [&](int a, int b) {
    const int e[2] = {std::min(a, b), std::max(a, b)};
    return k.find(std::span<const int>(e, 2)).has_value();
  };
  out.lift.assign(reps.size(), -1);
  for (int root = 0; root < q->num_vertices(); ++root) {
    if (out.lift[root] >= 0) continue;
    out.lift[root] = reps[root];
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (auto c : q->cofacets(0, static_cast<std::size_t>(v))) {
        auto e = q->simplex(1, c.index);
        const int u = e[0] == v ? e[1] : e[0];
        if (out.lift[u] >= 0) continue;
        out.lift[u] = adjacent(out.lift[v], reps[u]) ? reps[u] : z(reps[u]);
        todo.push(u);
      }
    }
  }
  for (std::size_t i = 0; i < q->count(1); ++i) {
    auto e = q->simplex(1, i);
    if (!adjacent(out.lift[e[0]], out.lift[e[1]])) out.w.cocycle[static_cast<Eigen::Index>(i)] = GF2(1);
  }
  return out;
}

int max_member_dim(const UpSet& u) {
  int d = -1;
  for (auto g : u.members()) d = std::max(d, u.complex().dim_of(g));
  return d;
}

}  // namespace

Z2Complex build_z2(ComplexPtr space, std::vector<int> involution) {
  const Complex& k = *space;
  if (static_cast<int>(involution.size()) != k.num_vertices())
    throw Error("involution has " + std::to_string(involution.size()) + " entries for " +
                std::to_string(k.num_vertices()) + " vertices");
  for (int v = 0; v < k.num_vertices(); ++v) {
    const int t = involution[v];
    if (t < 0 || t >= k.num_vertices()) throw Error("involution sends " + k.name(v) + " outside the complex");
    if (involution[t] != v) throw Error("involution is not an involution at " + k.name(v));
    if (t == v) throw Error("involution fixes vertex " + k.name(v));
  }
  for (const auto& s : k.maximal_simplices()) {
    auto img = image_of(s, involution);
    if (!k.find(img)) throw Error("involution is not simplicial: image of " + k.simplex_name(s) + " is missing");
  }
  for (std::size_t i = 0; i < k.count(1); ++i) {
    auto e = k.simplex(1, i);
    if (involution[e[0]] == e[1]) throw Error("involution is not free: " + k.simplex_name(e) + " meets its image");
  }
  return {std::move(space), std::move(involution)};
}

Z2Complex subdivide(const Z2Complex& z) {
  auto sd = barycentric_subdivide(z.space);
  const Complex& k = *z.space;
  std::vector<int> t(k.size());
  for (std::size_t g = 0; g < k.size(); ++g) t[g] = static_cast<int>(*k.find_global(image_of(k.simplex(g), z.involution)));
  return build_z2(sd.complex, std::move(t));
}

QuotientData quotient(const Z2Complex& z, bool force_subdivide) {
  if (!force_subdivide)
    if (auto q = try_quotient(z)) return std::move(*q);
  auto q = try_quotient(subdivide(z));
  if (!q) throw Error("orbit complex of the subdivision is not simplicial");
  q->subdivided = true;
  return std::move(*q);
}

Z2Complex reconstruct_cover(const QuotientData& q) {
  const Complex& b = *q.quotient;
  std::vector<std::string> names;
  for (int v = 0; v < b.num_vertices(); ++v) {
    names.push_back(b.name(v) + "+");
    names.push_back(b.name(v) + "-");
  }
  std::vector<Simplex> tops;
  for (const auto& s : b.maximal_simplices())
    for (int s0 = 0; s0 < 2; ++s0) {
      Simplex up{2 * s[0] + s0};
      for (std::size_t j = 1; j < s.size(); ++j) {
        const int e[2] = {s[0], s[j]};
        const bool flip = !q.w.cocycle[static_cast<Eigen::Index>(*b.find(std::span<const int>(e, 2)))].is_zero();
        up.push_back(2 * s[j] + (s0 ^ static_cast<int>(flip)));
      }
      tops.push_back(std::move(up));
    }
  std::vector<int> t(2 * b.num_vertices());
  for (int v = 0; v < static_cast<int>(t.size()); ++v) t[v] = v ^ 1;
  return build_z2(Complex::from_simplices(2 * b.num_vertices(), tops, std::move(names)), std::move(t));
}

bool reconstruction_matches(const QuotientData& q) {
  const auto r = reconstruct_cover(q);
  const Complex& a = *r.space;
  const Complex& k = *q.cover.space;
  if (a.dim() != k.dim() || a.num_vertices() != k.num_vertices()) return false;
  std::vector<int> phi(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) phi[v] = v % 2 == 0 ? q.lift[v / 2] : q.cover(q.lift[v / 2]);
  if (std::set<int>(phi.begin(), phi.end()).size() != phi.size()) return false;
  for (int d = 0; d <= a.dim(); ++d)
    if (a.count(d) != k.count(d)) return false;
  for (const auto& s : a.maximal_simplices())
    if (!k.find(image_of(s, phi))) return false;
  return true;
}

int w_height(const QuotientData& q, const UpSet& u) {
  if (u.owner() != q.quotient) throw Error("up-set is not on the quotient");
  if (u.empty()) return 0;
  return cup_length_on(cohomology_model(u), std::vector<CohomologyClass<GF2>>{q.w});
}

GenusBounds genus_bounds(const QuotientData& q, const UpSet& u) {
  if (u.empty()) throw Error("genus of an empty up-set");
  GenusBounds b;
  b.lower = w_height(q, u) + 1;
  b.upper = b.lower == 1 ? 1 : max_member_dim(u) + 1;
  if (b.lower > b.upper) throw std::logic_error("index exceeds dimension bound");
  return b;
}

CategoryFunction genus_kappa(const QuotientData& q) {
  return cup_length_kappa<GF2>(q.quotient, "Z2 index (height of w)+1", {q.w});
}

MonotonicityResult index_monotonicity_check(const Z2Complex& source, const Z2Complex& target,
                                            const std::vector<int>& phi) {
  SimplicialMap f(source.space, target.space, phi);
  for (int v = 0; v < source.space->num_vertices(); ++v)
    if (target(phi[v]) != phi[source(v)])
      throw Error("map is not equivariant at " + source.space->name(v));

  MonotonicityResult out;
  auto qs = quotient(source), qt = quotient(target);
  std::vector<int> map = phi;
  if (qs.subdivided || qt.subdivided) {
    out.subdivided = true;
    qs = quotient(subdivide(source), false);
    qt = quotient(subdivide(target), false);
    if (qs.subdivided || qt.subdivided) throw Error("orbit complex of the subdivision is not simplicial");
    map.assign(source.space->size(), 0);
    for (std::size_t g = 0; g < source.space->size(); ++g) map[g] = static_cast<int>(f.image(g));
  }
  std::vector<int> bar(qs.quotient->num_vertices());
  for (int v = 0; v < qs.quotient->num_vertices(); ++v) bar[v] = qt.projection(map[qs.lift[v]]);
  SimplicialMap fbar(qs.quotient, qt.quotient, bar);

  Vec<GF2> diff = pullback(fbar, qt.w).cocycle + qs.w.cocycle;
  out.cohomologous = coboundary_echelon<GF2>(*qs.quotient, 1)->reduces_to_zero(to_sparse(diff));
  out.source_height = w_height(qs, UpSet::full(qs.quotient));
  out.target_height = w_height(qt, UpSet::full(qt.quotient));
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

CoveringSumReport covering_sum_check(const QuotientData& q, const std::vector<UpSet>& cover) {
  if (cover.empty()) throw Error("empty cover");
  for (const auto& u : cover)
    if (u.owner() != q.quotient) throw Error("cover piece is not on the quotient");
  if (!upset_union(cover).is_full()) throw Error("pieces do not cover the quotient");

  CoveringSumReport r;
  r.full = genus_bounds(q, UpSet::full(q.quotient));
  bool tight = r.full.tight();
  for (const auto& u : cover) {
    r.pieces.push_back(genus_bounds(q, u));
    tight = tight && r.pieces.back().tight();
  }
  if (!tight) return r;
  for (std::size_t x = 0; x < q.quotient->size(); ++x) {
    int sum = 0;
    for (std::size_t i = 0; i < cover.size(); ++i)
      if (cover[i].contains(x)) sum += r.pieces[i].lower;
    if (sum >= r.full.lower) r.witnesses.push_back(x);
  }
  r.status = r.witnesses.empty() ? CheckStatus::fail : CheckStatus::pass;
  return r;
}

LocalizationCertificate borsuk_ulam_demo(const QuotientData& q, const SimplicialMap& f,
                                         const Geometry& target_geometry, int k, int rounds) {
  if (f.source() != q.quotient) throw Error("map does not start at the quotient");
  if (k < 1) throw Error("threshold k must be positive");
  const int n = q.cover.space->dim(), l = f.target()->dim();
  if (k * (l + 1) > n)
    throw HypothesisViolation("hypothesis k(l+1) ≤ n violated: " + std::to_string(k) + "·" + std::to_string(l + 1) +
                              " > " + std::to_string(n));
  return localize(f, target_geometry, genus_kappa(q), k, rounds);
}

}  // namespace lscat
