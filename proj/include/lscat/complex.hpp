#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lscat {

/// Invalid input or violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A theorem's hypothesis does not hold for the supplied data.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class Complex;
using ComplexPtr = std::shared_ptr<const Complex>;

/// Vertex indices in increasing order.
using Simplex = std::vector<int>;

/// Finite abstract simplicial complex.
///
/// Vertices are 0..num_vertices()-1 and their index order is the vertex order
/// used for orientations, cup products and last-vertex maps.  Simplices of each
/// dimension are stored sorted lexicographically; the *global index* of a
/// simplex is its position in the concatenation dim 0, dim 1, ..., so faces
/// always precede cofaces.  Immutable after construction.
class Complex {
 public:
  struct Coface {
    std::uint32_t index;  // in dimension d+1
    std::uint32_t omitted;  // position of the vertex of the coface not in the face
  };

  /// Face closure of `simplices`.  Every vertex 0..num_vertices-1 must occur.
  /// With `name_parent`, vertex v is named after the parent's simplex with global
  /// index v (the naming of a barycentric subdivision).
  static ComplexPtr from_simplices(int num_vertices, const std::vector<Simplex>& simplices,
                                   std::vector<std::string> names = {},
                                   ComplexPtr name_parent = nullptr);

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  int num_vertices() const { return static_cast<int>(count(0)); }
  std::size_t count(int d) const {
    return d < 0 || d > dim() ? 0 : verts_[d].size() / static_cast<std::size_t>(d + 1);
  }
  std::size_t size() const { return offsets_.back(); }
  std::size_t offset(int d) const { return offsets_[d]; }
  std::size_t global(int d, std::size_t i) const { return offsets_[d] + i; }
  int dim_of(std::size_t global) const;

  std::span<const int> simplex(int d, std::size_t i) const {
    return {verts_[d].data() + i * (d + 1), static_cast<std::size_t>(d + 1)};
  }
  std::span<const int> simplex(std::size_t global) const {
    const int d = dim_of(global);
    return simplex(d, global - offsets_[d]);
  }

  /// Index within its dimension of the simplex with these (sorted) vertices.
  std::optional<std::size_t> find(std::span<const int> vertices) const;
  std::optional<std::size_t> find_global(std::span<const int> vertices) const;

  /// Facet j omits vertex j.  Empty for vertices.
  std::span<const std::uint32_t> facets(int d, std::size_t i) const {
    if (d == 0) return {};
    return {facets_[d].data() + i * (d + 1), static_cast<std::size_t>(d + 1)};
  }
  std::span<const Coface> cofacets(int d, std::size_t i) const {
    if (d >= dim()) return {};
    const auto& off = coface_offsets_[d];
    return {cofaces_[d].data() + off[i], off[i + 1] - off[i]};
  }

  bool is_maximal(int d, std::size_t i) const { return cofacets(d, i).empty(); }
  std::vector<Simplex> maximal_simplices() const;

  std::string name(int v) const;
  std::string simplex_name(std::span<const int> s) const;
  /// True if the vertices carry explicit or derived names (not bare indices).
  bool has_names() const { return !names_.empty() || parent_ != nullptr; }
  /// name -> vertex; built on each call.
  std::unordered_map<std::string, int> vertex_lookup() const;

 private:
  Complex() = default;

  std::vector<std::vector<int>> verts_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<std::uint32_t>> facets_;
  std::vector<std::vector<std::size_t>> coface_offsets_;
  std::vector<std::vector<Coface>> cofaces_;
  std::vector<std::string> names_;
  ComplexPtr parent_;
};

/// Vertex coordinates, one column per vertex.
struct Geometry {
  Eigen::MatrixXd points;
  Eigen::Index ambient_dim() const { return points.rows(); }
  Eigen::VectorXd point(int v) const { return points.col(v); }
};

/// Vertex i at the i-th standard basis vector.
Geometry standard_geometry(const Complex& k);
/// Throws unless every vertex has coordinates; with `check_nondegenerate`, also
/// unless every simplex is affinely independent.
void validate_geometry(const Complex& k, const Geometry& g, bool check_nondegenerate);
/// Barycentres of all simplices in global-index order: the geometry of sd K.
Geometry barycenters(const Complex& k, const Geometry& g);
Eigen::VectorXd barycenter(std::span<const int> simplex, const Geometry& g);
double diameter(std::span<const int> vertices, const Geometry& g);
/// Largest simplex diameter.
double mesh(const Complex& k, const Geometry& g);

/// Up-closed family of simplices: the open subset of |K| formed by their open cells.
class UpSet {
 public:
  /// Throws if `members` is not up-closed.
  UpSet(ComplexPtr owner, std::vector<bool> members);

  static UpSet full(ComplexPtr owner);
  static UpSet up_closure(ComplexPtr owner, std::vector<bool> seeds);
  static UpSet up_closure(ComplexPtr owner, const std::vector<Simplex>& seeds);

  const ComplexPtr& owner() const { return owner_; }
  const Complex& complex() const { return *owner_; }
  bool contains(std::size_t global) const { return members_[global]; }
  bool contains(int d, std::size_t i) const { return members_[owner_->global(d, i)]; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool is_full() const { return size_ == owner_->size(); }
  bool subset_of(const UpSet& other) const;
  const std::vector<bool>& mask() const { return members_; }
  std::vector<std::size_t> members() const;
  /// Vertices v with {v} in the set.
  std::vector<int> vertices() const;
  /// Vertices of the face closure.
  std::vector<int> closure_vertices() const;

  friend bool operator==(const UpSet& a, const UpSet& b) {
    return a.owner_ == b.owner_ && a.members_ == b.members_;
  }

 private:
  ComplexPtr owner_;
  std::vector<bool> members_;
  std::size_t size_ = 0;
};

/// Vertex map sending every simplex onto a simplex (collapses allowed).
class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<int> vertex_map);
  static SimplicialMap identity(ComplexPtr k);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  int operator()(int v) const { return vertex_map_[v]; }
  const std::vector<int>& vertex_map() const { return vertex_map_; }
  /// Global index in the target of the image of a source simplex.
  std::size_t image(std::size_t source_global) const { return image_[source_global]; }

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<int> vertex_map_;
  std::vector<std::size_t> image_;
};

/// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Face closure of named maximal simplices; vertices ordered by name.
ComplexPtr build_complex(const std::vector<std::vector<std::string>>& maximal_simplices);

struct Subdivision {
  ComplexPtr complex;      // sd K; vertex v is the barycentre of K's simplex with global index v
  SimplicialMap projection;  // last-vertex map sd K -> K
};

Subdivision barycentric_subdivide(const ComplexPtr& k);

struct GeometricSubdivision {
  ComplexPtr complex;
  Geometry geometry;
  SimplicialMap projection;
};

GeometricSubdivision barycentric_subdivide(const ComplexPtr& k, const Geometry& g);

UpSet open_star(const ComplexPtr& k, int v);
UpSet open_star(const ComplexPtr& k, std::string_view vertex_name);
/// Union of open stars of a vertex set.
UpSet open_star(const ComplexPtr& k, std::span<const int> vertices);

UpSet upset_union(std::span<const UpSet> sets);
bool closures_disjoint(const UpSet& u, const UpSet& v);

/// A complex together with a simplicial map into the complex that owns an up-set.
struct ModelMap {
  ComplexPtr complex;
  SimplicialMap map;
};

/// Order complex of the face poset of `u`, mapped to the owner by last vertex.
ModelMap order_complex_model(const UpSet& u);

/// Small complex homotopy equivalent to |u|, with a map into the owner that
/// induces the restriction on cohomology.  Chooses between the full subcomplex
/// on the vertices of `u` (when u is the open star of those vertices) and the
/// order complex of the beat-point core of u, then collapses.
ModelMap cohomology_model(const UpSet& u);

/// Full subcomplex spanned by `vertices`, with its inclusion.
ModelMap full_subcomplex(const ComplexPtr& k, std::span<const int> vertices);

/// Greedy elementary collapses of the subcomplex `live` (a face-closed mask).
void collapse(const Complex& k, std::vector<bool>& live);

UpSet preimage_upset(const SimplicialMap& f, const UpSet& v);

struct SubdividedMap {
  Subdivision source;
  Subdivision target;
  SimplicialMap map;
};

SubdividedMap subdivide_map(const SimplicialMap& f);
/// sd f between already-built subdivisions of f's source and target.
SimplicialMap subdivide_map(const SimplicialMap& f, const Subdivision& source, const Subdivision& target);

}  // namespace lscat
