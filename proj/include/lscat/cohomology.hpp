#pragma once

#include "lscat/complex.hpp"
#include "lscat/field.hpp"
#include "lscat/sparse.hpp"

#include <memory>
#include <vector>

namespace lscat {

/// A cochain of one degree, in the owner's simplex order.  Produced classes are cocycles.
template <class F>
struct CohomologyClass {
  ComplexPtr owner;
  int degree = 0;
  Vec<F> cocycle;
};

/// delta^d applied to a d-cochain.
template <class F>
Vec<F> coboundary(const Complex& k, int d, const Vec<F>& c) {
  Vec<F> out = Vec<F>::Zero(static_cast<Eigen::Index>(k.count(d + 1)));
  for (std::size_t i = 0; i < k.count(d + 1); ++i) {
    auto fac = k.facets(d + 1, i);
    F acc = 0;
    for (std::size_t j = 0; j < fac.size(); ++j) {
      if (c[fac[j]].is_zero()) continue;
      if (j % 2 == 0)
        acc += c[fac[j]];
      else
        acc -= c[fac[j]];
    }
    out[i] = acc;
  }
  return out;
}

/// Column of delta^d for the d-simplex i: its signed cofacets.
template <class F>
SparseColumn<F> coboundary_column(const Complex& k, int d, std::size_t i) {
  SparseColumn<F> col;
  for (auto c : k.cofacets(d, i)) col.emplace_back(c.index, c.omitted % 2 == 0 ? F(1) : F(-1));
  return col;
}

/// Echelon spanning B^d, the image of delta^(d-1).  Empty for d = 0.
template <class F>
std::unique_ptr<Echelon<F>> coboundary_echelon(const Complex& k, int d) {
  auto e = std::make_unique<Echelon<F>>();
  if (d <= 0) return e;
  for (std::size_t i = 0; i < k.count(d - 1); ++i) e->insert(coboundary_column<F>(k, d - 1, i));
  return e;
}

template <class F>
bool is_cocycle(const CohomologyClass<F>& c) {
  if (c.degree >= c.owner->dim()) return true;
  return is_zero(coboundary(*c.owner, c.degree, c.cocycle));
}

/// Basis of H^*(K; F) with the data to express cocycles in it.
template <class F>
class GradedBasis {
 public:
  const ComplexPtr& owner() const { return owner_; }
  int top_degree() const { return static_cast<int>(classes_.size()) - 1; }
  const std::vector<CohomologyClass<F>>& classes(int d) const { return classes_[d]; }
  int betti(int d) const { return d < 0 || d > top_degree() ? 0 : static_cast<int>(classes_[d].size()); }
  std::vector<int> betti_numbers() const {
    std::vector<int> b;
    for (int d = 0; d <= top_degree(); ++d) b.push_back(betti(d));
    return b;
  }

  /// Coordinates of a cocycle's class.  Throws if `c` is not a cocycle of the owner.
  Vec<F> coordinates(const CohomologyClass<F>& c) const {
    if (c.owner != owner_) throw Error("class lives on a different complex");
    if (c.degree > top_degree()) return Vec<F>();
    SparseColumn<F> v = to_sparse(c.cocycle);
    SparseColumn<F> tag;
    coords_[c.degree]->reduce(v, &tag);
    if (!v.empty()) throw Error("coordinates requested for a non-cocycle");
    return to_dense(tag, betti(c.degree));
  }

  bool is_coboundary(const CohomologyClass<F>& c) const {
    if (c.degree > top_degree()) return true;
    return boundaries_[c.degree]->reduces_to_zero(to_sparse(c.cocycle));
  }

  template <class G>
  friend GradedBasis<G> cohomology_basis(const ComplexPtr& k);

 private:
  ComplexPtr owner_;
  std::vector<std::vector<CohomologyClass<F>>> classes_;
  std::vector<std::unique_ptr<Echelon<F>>> boundaries_;  // B^d
  std::vector<std::unique_ptr<Echelon<F>>> coords_;      // B^d plus tagged representatives
};

/// Reduces delta^d column by column in simplex order.  Columns whose index is a
/// pivot row of delta^(d-1) are cleared (they reduce to coboundaries); the other
/// columns that reduce to zero yield cocycles whose leading simplex is not a
/// pivot of B^d, hence a basis of H^d.
template <class F>
GradedBasis<F> cohomology_basis(const ComplexPtr& k) {
  GradedBasis<F> b;
  b.owner_ = k;
  const int top = k->dim();
  b.classes_.resize(top + 1);
  b.boundaries_.push_back(std::make_unique<Echelon<F>>());
  for (int d = 0; d <= top; ++d) {
    const Echelon<F>& below = *b.boundaries_[d];
    auto next = std::make_unique<Echelon<F>>();
    next->enable_tags();
    for (std::size_t i = 0; i < k->count(d); ++i) {
      if (below.has_pivot(static_cast<std::uint32_t>(i))) continue;
      SparseColumn<F> tag{{static_cast<std::uint32_t>(i), F(1)}};
      if (next->insert(coboundary_column<F>(*k, d, i), tag)) continue;
      b.classes_[d].push_back({k, d, to_dense(next->last_residual_tag(), static_cast<Eigen::Index>(k->count(d)))});
    }
    b.boundaries_.push_back(std::move(next));
  }
  b.boundaries_.pop_back();
  for (int d = 0; d <= top; ++d) {
    auto e = std::make_unique<Echelon<F>>(b.boundaries_[d].get());
    for (std::size_t j = 0; j < b.classes_[d].size(); ++j)
      e->insert(to_sparse(b.classes_[d][j].cocycle), SparseColumn<F>{{static_cast<std::uint32_t>(j), F(1)}});
    b.coords_.push_back(std::move(e));
  }
  return b;
}

/// Alexander-Whitney product: a on the front p-face times b on the back q-face.
template <class F>
CohomologyClass<F> cup_product(const CohomologyClass<F>& a, const CohomologyClass<F>& b) {
  if (a.owner != b.owner) throw Error("cup product of classes on different complexes");
  const Complex& k = *a.owner;
  const int p = a.degree, q = b.degree;
  CohomologyClass<F> out{a.owner, p + q, Vec<F>::Zero(static_cast<Eigen::Index>(k.count(p + q)))};
  for (std::size_t i = 0; i < k.count(p + q); ++i) {
    auto s = k.simplex(p + q, i);
    const F x = a.cocycle[*k.find(s.first(p + 1))];
    if (x.is_zero()) continue;
    const F y = b.cocycle[*k.find(s.last(q + 1))];
    out.cocycle[i] = x * y;
  }
  return out;
}

/// The unit class: 1 on every vertex.
template <class F>
CohomologyClass<F> unit_class(const ComplexPtr& k) {
  return {k, 0, Vec<F>::Constant(static_cast<Eigen::Index>(k->count(0)), F(1))};
}

/// f^* on cochains; simplices with degenerate image get zero, others the sign of
/// the permutation sorting their image.
template <class F>
CohomologyClass<F> pullback(const SimplicialMap& f, const CohomologyClass<F>& c) {
  if (c.owner != f.target()) throw Error("pullback of a class not on the map's target");
  const Complex& s = *f.source();
  const Complex& t = *f.target();
  const int d = c.degree;
  CohomologyClass<F> out{f.source(), d, Vec<F>::Zero(static_cast<Eigen::Index>(s.count(d)))};
  if (d > t.dim()) return out;
  for (std::size_t i = 0; i < s.count(d); ++i) {
    const std::size_t g = f.image(s.global(d, i));
    if (t.dim_of(g) != d) continue;
    const F v = c.cocycle[g - t.offset(d)];
    if (v.is_zero()) continue;
    auto sv = s.simplex(d, i);
    int inversions = 0;
    for (int x = 0; x <= d; ++x)
      for (int y = x + 1; y <= d; ++y)
        if (f(sv[x]) > f(sv[y])) ++inversions;
    out.cocycle[i] = inversions % 2 == 0 ? v : -v;
  }
  return out;
}

/// f^* : H^d(target) -> H^d(source) in the given bases, one matrix per degree.
template <class F>
std::vector<Mat<F>> induced_map(const SimplicialMap& f, const GradedBasis<F>& source, const GradedBasis<F>& target) {
  if (source.owner() != f.source() || target.owner() != f.target()) throw Error("bases do not match the map");
  std::vector<Mat<F>> out;
  const int top = std::max(source.top_degree(), target.top_degree());
  for (int d = 0; d <= top; ++d) {
    Mat<F> m = Mat<F>::Zero(source.betti(d), target.betti(d));
    for (int j = 0; j < target.betti(d); ++j) {
      auto c = pullback(f, target.classes(d)[j]);
      if (d <= source.top_degree()) m.col(j) = source.coordinates(c);
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// Positive-degree basis classes.
template <class F>
std::vector<CohomologyClass<F>> positive_generators(const GradedBasis<F>& b) {
  std::vector<CohomologyClass<F>> out;
  for (int d = 1; d <= b.top_degree(); ++d)
    for (const auto& c : b.classes(d)) out.push_back(c);
  return out;
}

/// Longest nonzero product of the generators' pullbacks along `model.map`.
///
/// S_1 is a basis (mod coboundaries) of the span of the pulled-back generators,
/// S_(k+1) a basis of the products S_k * S_1; the answer is the largest k with
/// S_k nonzero.  Generators must live on model.map.target() in positive degree.
template <class F>
int cup_length_on(const ModelMap& model, const std::vector<CohomologyClass<F>>& generators) {
  const Complex& c = *model.complex;
  std::vector<std::unique_ptr<Echelon<F>>> bnd(c.dim() + 1);
  auto boundary = [&](int d) -> const Echelon<F>* {
    if (!bnd[d]) bnd[d] = coboundary_echelon<F>(c, d);
    return bnd[d].get();
  };
  using Level = std::vector<CohomologyClass<F>>;
  auto keep_independent = [&](std::vector<Echelon<F>>& span, Level& level, CohomologyClass<F> x) {
    if (x.degree > c.dim() || x.degree < 1) return;
    if (span[x.degree].insert(to_sparse(x.cocycle))) level.push_back(std::move(x));
  };
  auto fresh_span = [&] {
    std::vector<Echelon<F>> span;
    span.reserve(c.dim() + 1);
    for (int d = 0; d <= c.dim(); ++d) span.emplace_back(boundary(d));
    return span;
  };

  Level s1;
  {
    auto span = fresh_span();
    for (const auto& g : generators) {
      if (g.degree < 1) throw Error("cup length generators must have positive degree");
      if (g.degree > c.dim()) continue;
      keep_independent(span, s1, pullback(model.map, g));
    }
  }
  if (s1.empty()) return 0;
  int length = 1;
  Level sk = s1;
  while (true) {
    Level next;
    auto span = fresh_span();
    for (const auto& x : sk)
      for (const auto& y : s1)
        if (x.degree + y.degree <= c.dim()) keep_independent(span, next, cup_product(x, y));
    if (next.empty()) return length;
    ++length;
    sk = std::move(next);
  }
}

/// Relative cohomology length of the up-set u in its owner K.
template <class F>
int hl(const UpSet& u, const GradedBasis<F>& basis) {
  if (u.empty()) throw Error("hl of an empty up-set");
  if (basis.owner() != u.owner()) throw Error("basis is for a different complex");
  return cup_length_on(cohomology_model(u), positive_generators(basis));
}

template <class F>
int hl(const UpSet& u) {
  return hl(u, cohomology_basis<F>(u.owner()));
}

}  // namespace lscat
