#include "lscat/category.hpp"

#include <algorithm>
#include <random>

namespace lscat {

CategoryFunction::CategoryFunction(ComplexPtr owner, std::string label, Evaluator evaluator, Refiner refiner)
    : owner_(std::move(owner)),
      label_(std::move(label)),
      evaluator_(std::move(evaluator)),
      refiner_(std::move(refiner)),
      memo_(std::make_shared<std::unordered_map<std::vector<bool>, int>>()) {}

int CategoryFunction::operator()(const UpSet& u) const {
  if (u.owner() != owner_) throw Error("category function evaluated on a foreign complex");
  if (u.empty()) throw Error("category function evaluated on an empty up-set");
  auto it = memo_->find(u.mask());
  if (it != memo_->end()) return it->second;
  const int value = evaluator_(u);
  if (value < 1) throw Error(label_ + " returned " + std::to_string(value) + " < 1");
  memo_->emplace(u.mask(), value);
  return value;
}

CategoryFunction CategoryFunction::refine(const SimplicialMap& projection) const {
  if (!refiner_) throw Error(label_ + " cannot be transported to a subdivision");
  if (projection.target() != owner_) throw Error("projection does not end at this function's complex");
  return refiner_(projection);
}

CategoryFunction constant_kappa(const ComplexPtr& k, int value) {
  auto refiner = [value](const SimplicialMap& p) { return constant_kappa(p.source(), value); };
  return CategoryFunction(k, "constant " + std::to_string(value), [value](const UpSet&) { return value; }, refiner);
}

CategoryFunction simplex_count_kappa(const ComplexPtr& k) {
  return CategoryFunction(k, "simplex count", [](const UpSet& u) { return static_cast<int>(u.size()); });
}

bool AxiomReport::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.failed == 0; });
}

std::vector<std::vector<std::string>> upset_generators(const UpSet& u) {
  const Complex& k = u.complex();
  std::vector<std::vector<std::string>> out;
  for (int d = 0; d <= k.dim(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      if (!u.contains(d, i)) continue;
      auto fac = k.facets(d, i);
      if (std::any_of(fac.begin(), fac.end(), [&](std::uint32_t f) { return u.contains(d - 1, f); })) continue;
      std::vector<std::string> names;
      for (int v : k.simplex(d, i)) names.push_back(k.name(v));
      out.push_back(std::move(names));
    }
  return out;
}

namespace {

class Sampler {
 public:
  Sampler(ComplexPtr k, std::uint64_t seed) : k_(std::move(k)), rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  /// Up-closure of a Bernoulli(2^-j) simplex set, j uniform in 1..6; never empty.
  UpSet random_upset() {
    const double p = 1.0 / static_cast<double>(std::uint64_t{1} << (1 + below(6)));
    std::vector<bool> seeds(k_->size());
    bool any = false;
    for (std::size_t g = 0; g < seeds.size(); ++g) {
      seeds[g] = static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
      any = any || seeds[g];
    }
    if (!any) seeds[below(seeds.size())] = true;
    return UpSet::up_closure(k_, std::move(seeds));
  }

  /// m random up-sets; every other call they are enlarged to cover K.
  std::vector<UpSet> random_cover(std::size_t m) {
    std::vector<UpSet> pieces;
    for (std::size_t i = 0; i < m; ++i) pieces.push_back(random_upset());
    if (below(2) != 0) return pieces;
    std::vector<std::vector<bool>> masks;
    for (const auto& p : pieces) masks.push_back(p.mask());
    for (int v = 0; v < k_->num_vertices(); ++v) {
      const bool covered = std::any_of(masks.begin(), masks.end(), [v](const auto& mk) { return mk[v]; });
      if (!covered) masks[below(m)][v] = true;
    }
    pieces.clear();
    for (auto& mk : masks) pieces.push_back(UpSet::up_closure(k_, std::move(mk)));
    return pieces;
  }

  /// Up-closure of one or two random simplices.
  UpSet small_upset() {
    std::vector<bool> seeds(k_->size(), false);
    const std::size_t m = 1 + below(2);
    for (std::size_t i = 0; i < m; ++i) seeds[below(seeds.size())] = true;
    return UpSet::up_closure(k_, std::move(seeds));
  }

 private:
  ComplexPtr k_;
  std::mt19937_64 rng_;
};

UpSet union_of(const std::vector<UpSet>& pieces) { return upset_union(pieces); }

}  // namespace

AxiomReport check_axioms(const CategoryFunction& kappa, std::size_t samples, std::uint64_t seed,
                         std::size_t max_failures) {
  const ComplexPtr& k = kappa.owner();
  AxiomReport report;
  report.label = kappa.label();
  report.complex_summary = "dim " + std::to_string(k->dim()) + ", " + std::to_string(k->num_vertices()) +
                           " vertices, " + std::to_string(k->size()) + " simplices";
  report.samples = samples;
  report.seed = seed;
  for (const char* name : {"monotonicity", "subadditivity", "disjoint-max"}) {
    report.axioms.emplace_back();
    report.axioms.back().axiom = name;
  }
  auto& mono = report.axioms[0];
  auto& sub = report.axioms[1];
  auto& disj = report.axioms[2];

  Sampler rng(k, seed);
  auto record = [&](AxiomResult& r, std::size_t sample, const UpSet& lhs, int lhs_value,
                    const std::vector<UpSet>& pieces, const std::vector<int>& values) {
    ++r.failed;
    if (r.failures.size() >= max_failures) return;
    AxiomFailure f;
    f.sample = sample;
    f.lhs = upset_generators(lhs);
    f.lhs_value = lhs_value;
    for (const auto& p : pieces) f.pieces.push_back(upset_generators(p));
    f.piece_values = values;
    r.failures.push_back(std::move(f));
  };
  for (std::size_t s = 0; s < samples; ++s) {
    // Monotonicity: U inside U u W.
    {
      auto u = rng.random_upset();
      auto w = rng.random_upset();
      auto v = union_of({u, w});
      const int ku = kappa(u), kv = kappa(v);
      ++mono.checked;
      if (!(u == v)) ++mono.nontrivial;
      if (ku > kv) record(mono, s, v, kv, {u}, {ku});
    }
    // Subadditivity over 2 or 3 pieces; every other sample the pieces cover K.
    {
      auto pieces = rng.random_cover(2 + rng.below(2));
      auto u = union_of(pieces);
      std::vector<int> values;
      int total = 0;
      for (const auto& p : pieces) {
        values.push_back(kappa(p));
        total += values.back();
      }
      const int ku = kappa(u);
      ++sub.checked;
      if (std::none_of(pieces.begin(), pieces.end(), [&](const UpSet& p) { return p == u; })) ++sub.nontrivial;
      if (ku > total) record(sub, s, u, ku, pieces, values);
    }
    // Disjoint-max over pieces with pairwise disjoint closures.
    {
      const std::size_t want = 2 + rng.below(2);
      std::vector<UpSet> pieces;
      std::vector<std::vector<int>> closures;
      for (int attempt = 0; attempt < 20 && pieces.size() < want; ++attempt) {
        auto c = rng.small_upset();
        auto cv = c.closure_vertices();
        bool ok = true;
        for (const auto& other : closures) {
          std::vector<int> common;
          std::set_intersection(cv.begin(), cv.end(), other.begin(), other.end(), std::back_inserter(common));
          if (!common.empty()) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        pieces.push_back(std::move(c));
        closures.push_back(std::move(cv));
      }
      auto u = union_of(pieces);
      std::vector<int> values;
      int best = 0;
      for (const auto& p : pieces) {
        values.push_back(kappa(p));
        best = std::max(best, values.back());
      }
      const int ku = kappa(u);
      ++disj.checked;
      if (pieces.size() >= 2) ++disj.nontrivial;
      if (ku > best) record(disj, s, u, ku, pieces, values);
    }
  }
  return report;
}

SegmentBoundResult check_segment_bound(const ComplexPtr& k, const std::function<int(const UpSet&)>& hl,
                                       std::size_t covers, std::uint64_t seed) {
  SegmentBoundResult r;
  Sampler rng(k, seed);
  for (std::size_t s = 0; s < covers; ++s) {
    auto pieces = rng.random_cover(2 + rng.below(3));
    const int m = static_cast<int>(pieces.size());
    int total = m - 1;
    for (const auto& p : pieces) total += hl(p);
    const int whole = hl(upset_union(pieces));
    ++r.covers;
    r.max_pieces = std::max(r.max_pieces, pieces.size());
    if (whole > total) ++r.violations;
  }
  return r;
}

}  // namespace lscat
