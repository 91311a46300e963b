#pragma once

#include "lscat/field.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lscat {

/// Sparse column over F: (row, value) pairs, rows strictly increasing, values nonzero.
template <class F>
using SparseColumn = std::vector<std::pair<std::uint32_t, F>>;

template <class F>
SparseColumn<F> to_sparse(const Vec<F>& v) {
  SparseColumn<F> out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

template <class F>
Vec<F> to_dense(const SparseColumn<F>& c, Eigen::Index size) {
  Vec<F> v = Vec<F>::Zero(size);
  for (const auto& [row, value] : c) v[row] = value;
  return v;
}

/// a <- a + s * b.
template <class F>
void axpy(SparseColumn<F>& a, F s, const SparseColumn<F>& b, SparseColumn<F>& scratch) {
  scratch.clear();
  scratch.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      scratch.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      scratch.emplace_back(ib->first, s * ib->second);
      ++ib;
    } else {
      const F v = ia->second + s * ib->second;
      if (!v.is_zero()) scratch.emplace_back(ia->first, v);
      ++ia;
      ++ib;
    }
  }
  a.swap(scratch);
}

/// Incremental column echelon form keyed on the largest nonzero row ("low").
///
/// Every stored column has a distinct low with coefficient 1.  Optionally each
/// column carries a tag vector that is transformed alongside it; reducing a
/// vector then also reports which combination of tags it consumed, which is how
/// cocycles are expressed in a cohomology basis and how kernel vectors are
/// tracked during coboundary elimination.
///
/// An echelon may be layered on a read-only base echelon; lookups fall through
/// to the base, insertions stay local.  The base must outlive the overlay.
template <class F>
class Echelon {
 public:
  Echelon() = default;
  explicit Echelon(const Echelon* base) : base_(base) {}

  /// Reduces `v` in place until its low has no pivot.  If `tag` is non-null it
  /// accumulates sum(coef_m * tag_m) over the local columns subtracted; columns
  /// of the base contribute nothing.
  void reduce(SparseColumn<F>& v, SparseColumn<F>* tag = nullptr) const {
    SparseColumn<F> scratch;
    while (!v.empty()) {
      const auto [low, coef] = v.back();
      const Echelon* owner = nullptr;
      std::size_t slot = lookup(low, owner);
      if (owner == nullptr) return;
      axpy(v, -coef, owner->columns_[slot], scratch);
      if (tag != nullptr && owner == this && !tags_.empty()) axpy(*tag, coef, tags_[slot], scratch);
    }
  }

  /// Reduces `v` and stores it if it is independent of the stored columns.
  /// `tag` follows the same row operations.  Returns true iff stored.
  bool insert(SparseColumn<F> v, SparseColumn<F> tag = {}) {
    SparseColumn<F> consumed;
    reduce(v, tag.empty() && !tracks_tags() ? nullptr : &consumed);
    if (v.empty()) {
      last_residual_tag_.clear();
      if (tracks_tags() || !tag.empty()) {
        SparseColumn<F> scratch;
        axpy(tag, F(-1), consumed, scratch);
        last_residual_tag_ = std::move(tag);
      }
      return false;
    }
    if (tracks_tags() || !tag.empty()) {
      SparseColumn<F> scratch;
      axpy(tag, F(-1), consumed, scratch);
    }
    const F inv = v.back().second.inverse();
    for (auto& e : v) e.second *= inv;
    for (auto& e : tag) e.second *= inv;
    pivot_.emplace(v.back().first, columns_.size());
    columns_.push_back(std::move(v));
    if (!tag.empty() || !tags_.empty()) {
      tags_.resize(columns_.size() - 1);
      tags_.push_back(std::move(tag));
    }
    return true;
  }

  /// Tag of the last vector that `insert` reduced to zero: a kernel relation.
  const SparseColumn<F>& last_residual_tag() const { return last_residual_tag_; }

  bool reduces_to_zero(SparseColumn<F> v) const {
    reduce(v);
    return v.empty();
  }

  bool has_pivot(std::uint32_t row) const {
    const Echelon* owner = nullptr;
    lookup(row, owner);
    return owner != nullptr;
  }

  /// Number of stored columns, including the base.
  std::size_t rank() const { return columns_.size() + (base_ ? base_->rank() : 0); }

  void enable_tags() { tracks_tags_ = true; }

 private:
  bool tracks_tags() const { return tracks_tags_; }

  std::size_t lookup(std::uint32_t row, const Echelon*& owner) const {
    for (const Echelon* e = this; e != nullptr; e = e->base_) {
      auto it = e->pivot_.find(row);
      if (it != e->pivot_.end()) {
        owner = e;
        return it->second;
      }
    }
    owner = nullptr;
    return 0;
  }

  const Echelon* base_ = nullptr;
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
  std::vector<SparseColumn<F>> columns_;
  std::vector<SparseColumn<F>> tags_;
  SparseColumn<F> last_residual_tag_;
  bool tracks_tags_ = false;
};

}  // namespace lscat
