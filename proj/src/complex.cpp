#include "lscat/complex.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace lscat {

namespace {

// Sorts the rows (width w) of a flat array lexicographically and drops duplicates.
std::vector<int> sort_unique_rows(const std::vector<int>& flat, std::size_t w) {
  const std::size_t n = flat.size() / w;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  auto row = [&](std::uint32_t r) { return flat.data() + r * w; };
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(row(a), row(a) + w, row(b), row(b) + w);
  });
  std::vector<int> out;
  out.reserve(flat.size());
  for (std::size_t k = 0; k < n; ++k) {
    const int* r = row(order[k]);
    if (k > 0 && std::equal(r, r + w, row(order[k - 1]))) continue;
    out.insert(out.end(), r, r + w);
  }
  return out;
}

std::string join_names(const Complex& k, std::span<const int> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += k.name(s[i]);
  }
  return out + ")";
}

}  // namespace

ComplexPtr Complex::from_simplices(int num_vertices, const std::vector<Simplex>& simplices,
                                   std::vector<std::string> names, ComplexPtr name_parent) {
  if (simplices.empty()) throw Error("complex needs at least one simplex");
  if (!names.empty() && static_cast<int>(names.size()) != num_vertices)
    throw Error("vertex name count does not match vertex count");

  std::vector<std::vector<int>> buf;
  Simplex s;
  for (const auto& raw : simplices) {
    if (raw.empty()) throw Error("empty simplex");
    s = raw;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("repeated vertex in simplex");
    if (s.front() < 0 || s.back() >= num_vertices) throw Error("vertex index out of range");
    const std::size_t k = s.size();
    if (k > 20) throw Error("simplex dimension too large");
    if (buf.size() < k) buf.resize(k);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      auto& dst = buf[std::popcount(mask) - 1];
      for (std::size_t j = 0; j < k; ++j)
        if (mask >> j & 1u) dst.push_back(s[j]);
    }
  }

  auto c = std::shared_ptr<Complex>(new Complex());
  const int top = static_cast<int>(buf.size()) - 1;
  c->verts_.resize(top + 1);
  for (int d = 0; d <= top; ++d) c->verts_[d] = sort_unique_rows(buf[d], d + 1);
  buf.clear();
  if (static_cast<int>(c->verts_[0].size()) != num_vertices) throw Error("vertex does not occur in any simplex");

  c->offsets_.assign(top + 2, 0);
  for (int d = 0; d <= top; ++d) c->offsets_[d + 1] = c->offsets_[d] + c->count(d);

  c->facets_.resize(top + 1);
  int face[32];
  for (int d = 1; d <= top; ++d) {
    const std::size_t n = c->count(d);
    auto& fac = c->facets_[d];
    fac.resize(n * (d + 1));
    for (std::size_t i = 0; i < n; ++i) {
      auto v = c->simplex(d, i);
      for (int j = 0; j <= d; ++j) {
        int m = 0;
        for (int t = 0; t <= d; ++t)
          if (t != j) face[m++] = v[t];
        auto idx = c->find(std::span<const int>(face, d));
        fac[i * (d + 1) + j] = static_cast<std::uint32_t>(*idx);
      }
    }
  }

  c->coface_offsets_.resize(top);
  c->cofaces_.resize(top);
  for (int d = 0; d < top; ++d) {
    auto& off = c->coface_offsets_[d];
    off.assign(c->count(d) + 1, 0);
    const auto& fac = c->facets_[d + 1];
    for (auto f : fac) ++off[f + 1];
    std::partial_sum(off.begin(), off.end(), off.begin());
    auto& cof = c->cofaces_[d];
    cof.resize(fac.size());
    std::vector<std::size_t> fill(off.begin(), off.end() - 1);
    const std::size_t n = c->count(d + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (int j = 0; j <= d + 1; ++j) {
        const auto f = fac[i * (d + 2) + j];
        cof[fill[f]++] = Coface{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
      }
  }

  c->names_ = std::move(names);
  if (c->names_.empty()) c->parent_ = std::move(name_parent);
  return c;
}

int Complex::dim_of(std::size_t global) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), global);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::optional<std::size_t> Complex::find(std::span<const int> vertices) const {
  const int d = static_cast<int>(vertices.size()) - 1;
  if (d < 0 || d > dim()) return std::nullopt;
  const std::size_t w = d + 1;
  std::size_t lo = 0, hi = count(d);
  const int* base = verts_[d].data();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int* r = base + mid * w;
    if (std::lexicographical_compare(r, r + w, vertices.begin(), vertices.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count(d) && std::equal(vertices.begin(), vertices.end(), base + lo * w)) return lo;
  return std::nullopt;
}

std::optional<std::size_t> Complex::find_global(std::span<const int> vertices) const {
  auto i = find(vertices);
  if (!i) return std::nullopt;
  return offsets_[vertices.size() - 1] + *i;
}

std::vector<Simplex> Complex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dim(); ++d)
    for (std::size_t i = 0; i < count(d); ++i)
      if (is_maximal(d, i)) {
        auto s = simplex(d, i);
        out.emplace_back(s.begin(), s.end());
      }
  return out;
}

std::string Complex::name(int v) const {
  if (!names_.empty()) return names_[v];
  if (parent_) return join_names(*parent_, parent_->simplex(static_cast<std::size_t>(v)));
  return std::to_string(v);
}

std::string Complex::simplex_name(std::span<const int> s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += name(s[i]);
  }
  return out + "}";
}

std::unordered_map<std::string, int> Complex::vertex_lookup() const {
  std::unordered_map<std::string, int> out;
  for (int v = 0; v < num_vertices(); ++v) out.emplace(name(v), v);
  return out;
}

Geometry standard_geometry(const Complex& k) {
  return {Eigen::MatrixXd::Identity(k.num_vertices(), k.num_vertices())};
}

void validate_geometry(const Complex& k, const Geometry& g, bool check_nondegenerate) {
  if (g.points.cols() != k.num_vertices())
    throw Error("geometry has " + std::to_string(g.points.cols()) + " points for " +
                std::to_string(k.num_vertices()) + " vertices");
  if (!g.points.allFinite()) throw Error("geometry has non-finite coordinates");
  if (!check_nondegenerate) return;
  for (int d = 1; d <= k.dim(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      auto s = k.simplex(d, i);
      Eigen::MatrixXd e(g.ambient_dim(), d);
      for (int j = 1; j <= d; ++j) e.col(j - 1) = g.points.col(s[j]) - g.points.col(s[0]);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
      lu.setThreshold(1e-10);
      if (lu.rank() != d) throw Error("degenerate simplex " + k.simplex_name(s));
    }
}

Eigen::VectorXd barycenter(std::span<const int> simplex, const Geometry& g) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(g.ambient_dim());
  for (int v : simplex) p += g.points.col(v);
  return p / static_cast<double>(simplex.size());
}

Geometry barycenters(const Complex& k, const Geometry& g) {
  Geometry out{Eigen::MatrixXd(g.ambient_dim(), static_cast<Eigen::Index>(k.size()))};
  for (std::size_t s = 0; s < k.size(); ++s) out.points.col(s) = barycenter(k.simplex(s), g);
  return out;
}

double diameter(std::span<const int> vertices, const Geometry& g) {
  double best = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      best = std::max(best, (g.points.col(vertices[i]) - g.points.col(vertices[j])).norm());
  return best;
}

double mesh(const Complex& k, const Geometry& g) {
  double best = 0;
  for (std::size_t i = 0; i < k.count(1); ++i) best = std::max(best, diameter(k.simplex(1, i), g));
  return best;
}

UpSet::UpSet(ComplexPtr owner, std::vector<bool> members)
    : owner_(std::move(owner)), members_(std::move(members)) {
  const Complex& k = *owner_;
  if (members_.size() != k.size()) throw Error("up-set mask size does not match complex");
  for (int d = 0; d < k.dim(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      if (!members_[k.global(d, i)]) continue;
      for (auto c : k.cofacets(d, i))
        if (!members_[k.global(d + 1, c.index)])
          throw Error("not up-closed: " + k.simplex_name(k.simplex(d, i)) + " is a member but its coface " +
                      k.simplex_name(k.simplex(d + 1, c.index)) + " is not");
    }
  size_ = static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

UpSet UpSet::full(ComplexPtr owner) {
  const std::size_t n = owner->size();
  return UpSet(std::move(owner), std::vector<bool>(n, true));
}

UpSet UpSet::up_closure(ComplexPtr owner, std::vector<bool> seeds) {
  const Complex& k = *owner;
  if (seeds.size() != k.size()) throw Error("seed mask size does not match complex");
  for (int d = 0; d < k.dim(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i)
      if (seeds[k.global(d, i)])
        for (auto c : k.cofacets(d, i)) seeds[k.global(d + 1, c.index)] = true;
  return UpSet(std::move(owner), std::move(seeds));
}

UpSet UpSet::up_closure(ComplexPtr owner, const std::vector<Simplex>& seeds) {
  std::vector<bool> mask(owner->size(), false);
  for (auto s : seeds) {
    std::sort(s.begin(), s.end());
    auto g = owner->find_global(s);
    if (!g) throw Error("unknown simplex " + owner->simplex_name(s));
    mask[*g] = true;
  }
  return up_closure(std::move(owner), std::move(mask));
}

bool UpSet::subset_of(const UpSet& other) const {
  if (owner_ != other.owner_) throw Error("up-sets on different complexes");
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] && !other.members_[i]) return false;
  return true;
}

std::vector<std::size_t> UpSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i]) out.push_back(i);
  return out;
}

std::vector<int> UpSet::vertices() const {
  std::vector<int> out;
  for (int v = 0; v < owner_->num_vertices(); ++v)
    if (members_[v]) out.push_back(v);
  return out;
}

std::vector<int> UpSet::closure_vertices() const {
  std::vector<bool> seen(owner_->num_vertices(), false);
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i])
      for (int v : owner_->simplex(i)) seen[v] = true;
  std::vector<int> out;
  for (int v = 0; v < owner_->num_vertices(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
  const Complex& s = *source_;
  const Complex& t = *target_;
  if (static_cast<int>(vertex_map_.size()) != s.num_vertices()) throw Error("vertex map has wrong length");
  for (int v : vertex_map_)
    if (v < 0 || v >= t.num_vertices()) throw Error("vertex map value out of range");
  image_.resize(s.size());
  std::vector<int> img;
  for (std::size_t g = 0; g < s.size(); ++g) {
    img.clear();
    for (int v : s.simplex(g)) img.push_back(vertex_map_[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    auto found = t.find_global(img);
    if (!found)
      throw Error("not simplicial: image of " + s.simplex_name(s.simplex(g)) + " is " + t.simplex_name(img) +
                  ", not a simplex of the target");
    image_[g] = *found;
  }
}

SimplicialMap SimplicialMap::identity(ComplexPtr k) {
  std::vector<int> id(k->num_vertices());
  std::iota(id.begin(), id.end(), 0);
  return SimplicialMap(k, k, std::move(id));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target() != g.source()) throw Error("compose: target of f is not the source of g");
  std::vector<int> vm(f.vertex_map().size());
  for (std::size_t v = 0; v < vm.size(); ++v) vm[v] = g(f(static_cast<int>(v)));
  return SimplicialMap(f.source(), g.target(), std::move(vm));
}

ComplexPtr build_complex(const std::vector<std::vector<std::string>>& maximal_simplices) {
  if (maximal_simplices.empty()) throw Error("empty simplex list");
  std::vector<std::string> names;
  for (const auto& s : maximal_simplices) {
    if (s.empty()) throw Error("empty simplex in input");
    names.insert(names.end(), s.begin(), s.end());
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::vector<Simplex> simplices;
  simplices.reserve(maximal_simplices.size());
  for (const auto& s : maximal_simplices) {
    Simplex t;
    for (const auto& v : s) t.push_back(static_cast<int>(std::lower_bound(names.begin(), names.end(), v) - names.begin()));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    simplices.push_back(std::move(t));
  }
  const int n = static_cast<int>(names.size());
  return Complex::from_simplices(n, simplices, std::move(names));
}

Subdivision barycentric_subdivide(const ComplexPtr& k) {
  std::vector<Simplex> chains;
  std::vector<int> perm, prefix;
  for (int d = 0; d <= k->dim(); ++d)
    for (std::size_t i = 0; i < k->count(d); ++i) {
      if (!k->is_maximal(d, i)) continue;
      auto s = k->simplex(d, i);
      perm.assign(s.begin(), s.end());
      do {
        Simplex chain;
        prefix.clear();
        for (int v : perm) {
          prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
          chain.push_back(static_cast<int>(*k->find_global(prefix)));
        }
        chains.push_back(std::move(chain));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  auto sd = Complex::from_simplices(static_cast<int>(k->size()), chains, {}, k);
  std::vector<int> last(k->size());
  for (std::size_t g = 0; g < k->size(); ++g) last[g] = k->simplex(g).back();
  return {sd, SimplicialMap(sd, k, std::move(last))};
}

GeometricSubdivision barycentric_subdivide(const ComplexPtr& k, const Geometry& g) {
  validate_geometry(*k, g, false);
  auto sub = barycentric_subdivide(k);
  return {sub.complex, barycenters(*k, g), std::move(sub.projection)};
}

UpSet open_star(const ComplexPtr& k, int v) {
  if (v < 0 || v >= k->num_vertices()) throw Error("unknown vertex " + std::to_string(v));
  std::vector<bool> seeds(k->size(), false);
  seeds[v] = true;
  return UpSet::up_closure(k, std::move(seeds));
}

UpSet open_star(const ComplexPtr& k, std::string_view vertex_name) {
  auto lookup = k->vertex_lookup();
  auto it = lookup.find(std::string(vertex_name));
  if (it == lookup.end()) throw Error("unknown vertex " + std::string(vertex_name));
  return open_star(k, it->second);
}

UpSet open_star(const ComplexPtr& k, std::span<const int> vertices) {
  std::vector<bool> seeds(k->size(), false);
  for (int v : vertices) {
    if (v < 0 || v >= k->num_vertices()) throw Error("unknown vertex " + std::to_string(v));
    seeds[v] = true;
  }
  return UpSet::up_closure(k, std::move(seeds));
}

UpSet upset_union(std::span<const UpSet> sets) {
  if (sets.empty()) throw Error("union of no up-sets");
  std::vector<bool> mask = sets[0].mask();
  for (const auto& u : sets.subspan(1)) {
    if (u.owner() != sets[0].owner()) throw Error("up-sets on different complexes");
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (u.mask()[i]) mask[i] = true;
  }
  return UpSet(sets[0].owner(), std::move(mask));
}

bool closures_disjoint(const UpSet& u, const UpSet& v) {
  if (u.owner() != v.owner()) throw Error("up-sets on different complexes");
  auto a = u.closure_vertices();
  auto b = v.closure_vertices();
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

namespace {

// Maximal chains of a poset given by its cover relation, from its minimal elements.
std::vector<Simplex> maximal_chains(const std::vector<std::vector<int>>& covers, const std::vector<bool>& minimal) {
  std::vector<Simplex> chains;
  Simplex path;
  std::function<void(int)> walk = [&](int x) {
    path.push_back(x);
    if (covers[x].empty())
      chains.push_back(path);
    else
      for (int y : covers[x]) walk(y);
    path.pop_back();
  };
  for (std::size_t x = 0; x < covers.size(); ++x)
    if (minimal[x]) walk(static_cast<int>(x));
  return chains;
}

// Model vertices are the members of `alive` in global order; each maps to the
// last vertex of its simplex.
ModelMap poset_model(const ComplexPtr& owner, const std::vector<bool>& alive, bool cover_by_cofacets) {
  const Complex& k = *owner;
  std::vector<int> index(k.size(), -1);
  std::vector<std::size_t> elems;
  for (std::size_t g = 0; g < k.size(); ++g)
    if (alive[g]) {
      index[g] = static_cast<int>(elems.size());
      elems.push_back(g);
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<int>> covers(n);
  std::vector<bool> minimal(n, true);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> found;
  std::vector<bool> seen(k.size(), false);
  std::vector<std::size_t> touched;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t g = elems[x];
    const int d = k.dim_of(g);
    if (cover_by_cofacets) {
      for (auto c : k.cofacets(d, g - k.offset(d))) {
        const std::size_t h = k.global(d + 1, c.index);
        if (alive[h]) covers[x].push_back(index[h]);
      }
    } else {
      // Alive cofaces reachable through dead ones; keep the minimal ones.
      found.clear();
      touched.clear();
      stack.assign(1, g);
      while (!stack.empty()) {
        const std::size_t h = stack.back();
        stack.pop_back();
        const int dh = k.dim_of(h);
        for (auto c : k.cofacets(dh, h - k.offset(dh))) {
          const std::size_t t = k.global(dh + 1, c.index);
          if (seen[t]) continue;
          seen[t] = true;
          touched.push_back(t);
          if (alive[t])
            found.push_back(t);
          else
            stack.push_back(t);
        }
      }
      for (auto t : touched) seen[t] = false;
      for (auto t : found) {
        auto st = k.simplex(t);
        bool is_min = true;
        for (auto u : found) {
          if (u == t || k.dim_of(u) >= static_cast<int>(st.size()) - 1) continue;
          auto su = k.simplex(u);
          if (std::includes(st.begin(), st.end(), su.begin(), su.end())) {
            is_min = false;
            break;
          }
        }
        if (is_min) covers[x].push_back(index[t]);
      }
      std::sort(covers[x].begin(), covers[x].end());
      covers[x].erase(std::unique(covers[x].begin(), covers[x].end()), covers[x].end());
    }
    for (int y : covers[x]) minimal[y] = false;
  }
  auto chains = maximal_chains(covers, minimal);
  auto model = Complex::from_simplices(static_cast<int>(n), chains);
  std::vector<int> vm(n);
  for (std::size_t x = 0; x < n; ++x) vm[x] = k.simplex(elems[x]).back();
  return {model, SimplicialMap(model, owner, std::move(vm))};
}

// Removes beat points (Stong) from the face poset restricted to `alive`.
void beat_point_core(const Complex& k, std::vector<bool>& alive) {
  std::vector<std::size_t> below, above, stack, touched;
  std::vector<bool> seen(k.size(), false);
  std::vector<int> sub;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t g = 0; g < k.size(); ++g) {
      if (!alive[g]) continue;
      auto s = k.simplex(g);
      const std::uint32_t w = static_cast<std::uint32_t>(s.size());
      // Alive proper faces: a unique maximal one makes g an up beat point.
      below.clear();
      if (w > 1 && w <= 20) {
        for (std::uint32_t mask = 1; mask + 1 < (1u << w); ++mask) {
          sub.clear();
          for (std::uint32_t j = 0; j < w; ++j)
            if (mask >> j & 1u) sub.push_back(s[j]);
          const std::size_t f = *k.find_global(sub);
          if (alive[f]) below.push_back(f);
        }
      }
      auto covers_all = [&](const std::vector<std::size_t>& xs, bool want_max) {
        std::size_t best = xs[0];
        for (auto x : xs)
          if (want_max ? k.dim_of(x) > k.dim_of(best) : k.dim_of(x) < k.dim_of(best)) best = x;
        auto sb = k.simplex(best);
        for (auto x : xs) {
          auto sx = k.simplex(x);
          const bool ok = want_max ? std::includes(sb.begin(), sb.end(), sx.begin(), sx.end())
                                   : std::includes(sx.begin(), sx.end(), sb.begin(), sb.end());
          if (!ok) return false;
        }
        return true;
      };
      if (!below.empty() && covers_all(below, true)) {
        alive[g] = false;
        changed = true;
        continue;
      }
      above.clear();
      touched.clear();
      stack.assign(1, g);
      while (!stack.empty()) {
        const std::size_t h = stack.back();
        stack.pop_back();
        const int dh = k.dim_of(h);
        for (auto c : k.cofacets(dh, h - k.offset(dh))) {
          const std::size_t t = k.global(dh + 1, c.index);
          if (seen[t]) continue;
          seen[t] = true;
          touched.push_back(t);
          if (alive[t]) above.push_back(t);
          stack.push_back(t);
        }
      }
      for (auto t : touched) seen[t] = false;
      if (!above.empty() && covers_all(above, false)) {
        alive[g] = false;
        changed = true;
      }
    }
  }
}

// Subcomplex of `m.complex` on the face-closed mask `live`, composed with m.map.
ModelMap restrict_model(const ModelMap& m, const std::vector<bool>& live) {
  const Complex& c = *m.complex;
  std::vector<int> renum(c.num_vertices(), -1);
  std::vector<int> vm;
  for (int v = 0; v < c.num_vertices(); ++v)
    if (live[v]) {
      renum[v] = static_cast<int>(vm.size());
      vm.push_back(m.map(v));
    }
  std::vector<Simplex> simplices;
  for (int d = 0; d <= c.dim(); ++d)
    for (std::size_t i = 0; i < c.count(d); ++i) {
      if (!live[c.global(d, i)]) continue;
      bool maximal = true;
      for (auto cf : c.cofacets(d, i))
        if (live[c.global(d + 1, cf.index)]) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      Simplex s;
      for (int v : c.simplex(d, i)) s.push_back(renum[v]);
      simplices.push_back(std::move(s));
    }
  auto sub = Complex::from_simplices(static_cast<int>(vm.size()), simplices);
  return {sub, SimplicialMap(sub, m.map.target(), std::move(vm))};
}

}  // namespace

ModelMap order_complex_model(const UpSet& u) {
  if (u.empty()) throw Error("order complex of an empty up-set");
  return poset_model(u.owner(), u.mask(), true);
}

ModelMap full_subcomplex(const ComplexPtr& k, std::span<const int> vertices) {
  std::vector<bool> in(k->num_vertices(), false);
  for (int v : vertices) in[v] = true;
  std::vector<bool> live(k->size(), false);
  for (std::size_t g = 0; g < k->size(); ++g) {
    auto s = k->simplex(g);
    live[g] = std::all_of(s.begin(), s.end(), [&](int v) { return in[v]; });
  }
  return restrict_model({k, SimplicialMap::identity(k)}, live);
}

void collapse(const Complex& k, std::vector<bool>& live) {
  const std::size_t n = k.size();
  std::vector<int> cnt(n, 0);
  auto cofaces_of = [&](std::size_t g) {
    const int d = k.dim_of(g);
    return std::pair{d, k.cofacets(d, g - k.offset(d))};
  };
  for (std::size_t g = 0; g < n; ++g) {
    if (!live[g]) continue;
    auto [d, cf] = cofaces_of(g);
    for (auto c : cf)
      if (live[k.global(d + 1, c.index)]) ++cnt[g];
  }
  std::deque<std::size_t> queue;
  for (std::size_t g = 0; g < n; ++g)
    if (live[g] && cnt[g] == 1) queue.push_back(g);
  auto lose_coface = [&](std::size_t f) {
    if (!live[f]) return;
    --cnt[f];
    if (cnt[f] == 1) queue.push_back(f);
    if (cnt[f] == 0) {
      const int d = k.dim_of(f);
      for (auto ff : k.facets(d, f - k.offset(d))) queue.push_back(k.global(d - 1, ff));
    }
  };
  while (!queue.empty()) {
    const std::size_t tau = queue.front();
    queue.pop_front();
    if (!live[tau] || cnt[tau] != 1) continue;
    auto [d, cf] = cofaces_of(tau);
    std::size_t sigma = n;
    for (auto c : cf)
      if (live[k.global(d + 1, c.index)]) sigma = k.global(d + 1, c.index);
    if (cnt[sigma] != 0) continue;
    live[tau] = false;
    live[sigma] = false;
    for (auto f : k.facets(d + 1, sigma - k.offset(d + 1))) {
      const std::size_t fg = k.global(d, f);
      if (fg != tau) lose_coface(fg);
    }
    for (auto f : k.facets(d, tau - k.offset(d))) lose_coface(k.global(d - 1, f));
  }
}

ModelMap cohomology_model(const UpSet& u) {
  if (u.empty()) throw Error("model of an empty up-set");
  const ComplexPtr& k = u.owner();
  if (u.is_full()) return {k, SimplicialMap::identity(k)};

  std::vector<bool> in_a(k->num_vertices(), false);
  for (int v : u.vertices()) in_a[v] = true;
  bool star_form = true;
  for (std::size_t g = 0; g < k->size() && star_form; ++g) {
    if (!u.contains(g)) continue;
    auto s = k->simplex(g);
    star_form = std::any_of(s.begin(), s.end(), [&](int v) { return in_a[v]; });
  }
  if (star_form) {
    // |st(A)| deformation retracts onto the full subcomplex on A.
    std::vector<bool> live(k->size(), false);
    for (std::size_t g = 0; g < k->size(); ++g) {
      auto s = k->simplex(g);
      live[g] = std::all_of(s.begin(), s.end(), [&](int v) { return in_a[v]; });
    }
    collapse(*k, live);
    return restrict_model({k, SimplicialMap::identity(k)}, live);
  }

  std::vector<bool> alive = u.mask();
  beat_point_core(*k, alive);
  auto delta = poset_model(k, alive, false);
  std::vector<bool> live(delta.complex->size(), true);
  collapse(*delta.complex, live);
  return restrict_model(delta, live);
}

UpSet preimage_upset(const SimplicialMap& f, const UpSet& v) {
  if (v.owner() != f.target()) throw Error("up-set is not on the target of the map");
  const Complex& s = *f.source();
  std::vector<bool> mask(s.size());
  for (std::size_t g = 0; g < s.size(); ++g) mask[g] = v.contains(f.image(g));
  return UpSet(f.source(), std::move(mask));
}

SimplicialMap subdivide_map(const SimplicialMap& f, const Subdivision& source, const Subdivision& target) {
  if (source.projection.target() != f.source() || target.projection.target() != f.target())
    throw Error("subdivisions do not match the map");
  std::vector<int> vm(f.source()->size());
  for (std::size_t g = 0; g < vm.size(); ++g) vm[g] = static_cast<int>(f.image(g));
  return SimplicialMap(source.complex, target.complex, std::move(vm));
}

SubdividedMap subdivide_map(const SimplicialMap& f) {
  auto s = barycentric_subdivide(f.source());
  auto t = f.source() == f.target() ? s : barycentric_subdivide(f.target());
  auto m = subdivide_map(f, s, t);
  return {std::move(s), std::move(t), std::move(m)};
}

}  // namespace lscat
