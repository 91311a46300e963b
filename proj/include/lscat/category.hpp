#pragma once

#include "lscat/cohomology.hpp"
#include "lscat/complex.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace lscat {

/// A generalized relative category: positive integers on the nonempty up-sets of
/// one complex.  Values are memoised per up-set.  An optional refiner transports
/// the function to sd K along the last-vertex projection sd K -> K.
class CategoryFunction {
 public:
  using Evaluator = std::function<int(const UpSet&)>;
  using Refiner = std::function<CategoryFunction(const SimplicialMap& projection)>;

  CategoryFunction(ComplexPtr owner, std::string label, Evaluator evaluator, Refiner refiner = {});

  /// Throws on an empty up-set, a foreign owner, or a value below 1.
  int operator()(const UpSet& u) const;

  const ComplexPtr& owner() const { return owner_; }
  const std::string& label() const { return label_; }
  bool refinable() const { return static_cast<bool>(refiner_); }
  CategoryFunction refine(const SimplicialMap& projection) const;
  /// Number of evaluator calls so far (memo hits excluded).
  std::size_t evaluations() const { return memo_->size(); }

 private:
  ComplexPtr owner_;
  std::string label_;
  Evaluator evaluator_;
  Refiner refiner_;
  std::shared_ptr<std::unordered_map<std::vector<bool>, int>> memo_;
};

/// kappa(U) = (longest nonzero product of the generators restricted to U) + 1.
/// Refinement pulls the generators back along the projection.
template <class F>
CategoryFunction cup_length_kappa(ComplexPtr owner, std::string label, std::vector<CohomologyClass<F>> generators) {
  auto gens = std::make_shared<const std::vector<CohomologyClass<F>>>(std::move(generators));
  auto evaluator = [gens](const UpSet& u) { return cup_length_on(cohomology_model(u), *gens) + 1; };
  auto refiner = [gens, label](const SimplicialMap& projection) {
    std::vector<CohomologyClass<F>> pulled;
    for (const auto& g : *gens) pulled.push_back(pullback(projection, g));
    return cup_length_kappa<F>(projection.source(), label, std::move(pulled));
  };
  return CategoryFunction(std::move(owner), std::move(label), evaluator, refiner);
}

/// kappa(U) = hl(K, U, F) + 1.
template <class F>
CategoryFunction kappa_hl(const ComplexPtr& k) {
  return cup_length_kappa<F>(k, "hl+1 over " + field_name<F>(), positive_generators(cohomology_basis<F>(k)));
}

CategoryFunction constant_kappa(const ComplexPtr& k, int value = 1);
/// Number of simplices; satisfies monotonicity and subadditivity but not disjoint-max.
CategoryFunction simplex_count_kappa(const ComplexPtr& k);

struct AxiomFailure {
  std::size_t sample = 0;
  std::vector<std::vector<std::string>> lhs;               // generators of the compared union / superset
  std::vector<std::vector<std::vector<std::string>>> pieces;  // generators of each piece / the subset
  int lhs_value = 0;
  std::vector<int> piece_values;
};

struct AxiomResult {
  std::string axiom;
  std::size_t checked = 0;
  std::size_t nontrivial = 0;  // proper superset / no piece equal to the union / at least two pieces
  std::size_t failed = 0;
  std::vector<AxiomFailure> failures;  // the first few counterexamples
};

struct AxiomReport {
  std::string label;
  std::string complex_summary;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomResult> axioms;  // monotonicity, subadditivity, disjoint-max
  bool passed() const;
};

/// Samples random up-sets (up-closures of Bernoulli simplex sets with density
/// 2^-j, j = 1..6) and random covers, and checks the three axioms.  At most
/// `max_failures` counterexamples are kept per axiom.
AxiomReport check_axioms(const CategoryFunction& kappa, std::size_t samples, std::uint64_t seed,
                         std::size_t max_failures = 5);

struct SegmentBoundResult {
  std::size_t covers = 0;
  std::size_t violations = 0;
  std::size_t max_pieces = 0;
};

/// Samples covers U = U_1 u ... u U_m (m = 2..4, same sampler as check_axioms)
/// and counts violations of hl(U) <= sum hl(U_i) + (m - 1).
SegmentBoundResult check_segment_bound(const ComplexPtr& k, const std::function<int(const UpSet&)>& hl,
                                       std::size_t covers, std::uint64_t seed);

template <class F>
SegmentBoundResult check_segment_bound(const ComplexPtr& k, std::size_t covers, std::uint64_t seed) {
  auto gens = positive_generators(cohomology_basis<F>(k));
  return check_segment_bound(k, [&](const UpSet& u) { return cup_length_on(cohomology_model(u), gens); }, covers, seed);
}

/// Minimal simplices of an up-set, as vertex-name lists; they generate it.
std::vector<std::vector<std::string>> upset_generators(const UpSet& u);

namespace detail {

template <class F>
Mat<F> dense_coboundary(const Complex& k, int d) {
  Mat<F> m = Mat<F>::Zero(static_cast<Eigen::Index>(k.count(d + 1)), static_cast<Eigen::Index>(k.count(d)));
  for (std::size_t i = 0; i < k.count(d + 1); ++i) {
    auto fac = k.facets(d + 1, i);
    for (std::size_t j = 0; j < fac.size(); ++j) m(static_cast<Eigen::Index>(i), fac[j]) = j % 2 == 0 ? F(1) : F(-1);
  }
  return m;
}

/// Basis of the null space from the reduced row echelon form.
template <class F>
Mat<F> dense_kernel(Mat<F> m) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Mat<F> out = Mat<F>::Zero(m.cols(), m.cols() - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index col = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(free, col) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) out(pivots[r], col) = -m(static_cast<Eigen::Index>(r), free);
    ++col;
  }
  return out;
}

template <class F>
Mat<F> hcat(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> out(std::max(a.rows(), b.rows()), a.cols() + b.cols());
  if (a.cols()) out.leftCols(a.cols()) = a;
  if (b.cols()) out.rightCols(b.cols()) = b;
  return out;
}

}  // namespace detail

/// Independent check of hl: dense linear algebra only, the literal order complex
/// of U, and every nondecreasing tuple of positive-degree basis classes of K.
/// Throws if some degree has more than `max_classes` basis classes or the order
/// complex exceeds `max_model_size` simplices.
template <class F>
int brute_force_hl_oracle(const UpSet& u, int max_classes = 14, std::size_t max_model_size = 4000) {
  if (u.empty()) throw Error("hl of an empty up-set");
  const ComplexPtr& k = u.owner();
  const int top = k->dim();

  // Dense H^d(K): row-reduce [B^d | Z^d]; pivot columns in the Z^d block are
  // independent modulo coboundaries.
  std::vector<std::pair<int, Vec<F>>> basis;
  for (int d = 1; d <= top; ++d) {
    const Eigen::Index n = static_cast<Eigen::Index>(k->count(d));
    Mat<F> z = d < top ? detail::dense_kernel<F>(detail::dense_coboundary<F>(*k, d)) : Mat<F>::Identity(n, n);
    Mat<F> b = detail::dense_coboundary<F>(*k, d - 1);
    Mat<F> joint = detail::hcat<F>(b, z);
    int found = 0;
    for (auto p : row_reduce(joint)) {
      if (p < b.cols()) continue;
      basis.emplace_back(d, z.col(p - b.cols()));
      if (++found > max_classes) throw Error("oracle tractability bound exceeded");
    }
  }
  if (basis.empty()) return 0;

  ComplexPtr model;
  std::vector<int> vm;
  if (u.is_full()) {
    model = k;
    vm.resize(k->num_vertices());
    for (int v = 0; v < k->num_vertices(); ++v) vm[v] = v;
  } else {
    auto oc = order_complex_model(u);
    model = oc.complex;
    vm = oc.map.vertex_map();
  }
  if (model->size() > max_model_size) throw Error("oracle tractability bound exceeded");

  // Pull a K-cochain back to the model, evaluating on sorted images with sign.
  auto pull = [&](int d, const Vec<F>& c) {
    Vec<F> out = Vec<F>::Zero(static_cast<Eigen::Index>(model->count(d)));
    for (std::size_t i = 0; i < model->count(d); ++i) {
      auto s = model->simplex(d, i);
      std::vector<int> img;
      for (int v : s) img.push_back(vm[v]);
      int sign = 1;
      for (std::size_t a = 0; a < img.size(); ++a)
        for (std::size_t b = a + 1; b < img.size(); ++b) {
          if (img[a] == img[b]) sign = 0;
          if (img[a] > img[b]) sign = -sign;
        }
      if (sign == 0) continue;
      std::sort(img.begin(), img.end());
      auto idx = k->find(img);
      out[static_cast<Eigen::Index>(i)] = sign > 0 ? c[*idx] : -c[*idx];
    }
    return out;
  };
  auto cup = [&](int p, const Vec<F>& a, int q, const Vec<F>& b) {
    Vec<F> out = Vec<F>::Zero(static_cast<Eigen::Index>(model->count(p + q)));
    for (std::size_t i = 0; i < model->count(p + q); ++i) {
      auto s = model->simplex(p + q, i);
      std::vector<int> front(s.begin(), s.begin() + p + 1), back(s.begin() + p, s.end());
      out[static_cast<Eigen::Index>(i)] = a[*model->find(front)] * b[*model->find(back)];
    }
    return out;
  };
  std::vector<Mat<F>> boundary(model->dim() + 1);
  std::vector<Eigen::Index> boundary_rank(model->dim() + 1, -1);
  auto nonzero_class = [&](int d, const Vec<F>& c) {
    if (boundary_rank[d] < 0) {
      boundary[d] = d == 0 ? Mat<F>::Zero(static_cast<Eigen::Index>(model->count(0)), 0)
                           : detail::dense_coboundary<F>(*model, d - 1);
      boundary_rank[d] = rank(boundary[d]);
    }
    return rank(detail::hcat<F>(boundary[d], c)) > boundary_rank[d];
  };

  std::vector<std::pair<int, Vec<F>>> pulled;
  for (const auto& [d, c] : basis)
    if (d <= model->dim()) pulled.emplace_back(d, pull(d, c));

  int best = 0;
  std::vector<std::size_t> tuple;
  std::function<void(std::size_t, int, const Vec<F>*)> extend = [&](std::size_t from, int degree, const Vec<F>* prod) {
    for (std::size_t i = from; i < pulled.size(); ++i) {
      const int d = degree + pulled[i].first;
      if (d > model->dim() || static_cast<int>(tuple.size()) + 1 > top) continue;
      Vec<F> next = prod == nullptr ? pulled[i].second : cup(degree, *prod, pulled[i].first, pulled[i].second);
      tuple.push_back(i);
      // A coboundary times a cocycle is a coboundary, so zero products are not extended.
      if (nonzero_class(d, next)) {
        best = std::max(best, static_cast<int>(tuple.size()));
        extend(i, d, &next);
      }
      tuple.pop_back();
    }
  };
  extend(0, 0, nullptr);
  return best;
}

}  // namespace lscat
