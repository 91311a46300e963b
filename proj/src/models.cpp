#include "lscat/models.hpp"

#include <string>

namespace lscat::models {

namespace {

using Names = std::vector<std::vector<std::string>>;

std::vector<int> involution_by_name(const Complex& k, const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto lookup = k.vertex_lookup();
  std::vector<int> t(k.num_vertices(), -1);
  for (const auto& [a, b] : pairs) {
    t[lookup.at(a)] = lookup.at(b);
    t[lookup.at(b)] = lookup.at(a);
  }
  return t;
}

}  // namespace

ComplexPtr triangle_circle() { return build_complex({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

ComplexPtr cycle(int n) {
  if (n < 3) throw Error("a simplicial cycle needs at least 3 vertices");
  std::vector<Simplex> edges;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    names.push_back("v" + std::to_string(i));
  }
  // Indices are positional; names only label them.
  return Complex::from_simplices(n, edges, names);
}

ComplexPtr full_simplex(int n) {
  Simplex s;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    s.push_back(i);
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  return Complex::from_simplices(n, {s}, names);
}

ComplexPtr torus(int m) { return torus(m, m); }

ComplexPtr torus(int m, int n) {
  if (m < 3 || n < 3) throw Error("torus grid needs at least 3 x 3");
  auto id = [m, n](int i, int j) { return ((i % m + m) % m) * n + ((j % n + n) % n); };
  std::vector<Simplex> tri;
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      names.push_back("t" + std::to_string(i) + "_" + std::to_string(j));
      tri.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tri.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  return Complex::from_simplices(m * n, tri, names);
}

std::vector<int> torus_half_turn(int m, int n) {
  if (m % 2 != 0) throw Error("half turn needs an even number of rows");
  std::vector<int> t(m * n);
  for (int v = 0; v < m * n; ++v) t[v] = (v + (m / 2) * n) % (m * n);
  return t;
}

SimplicialMap torus_projection(const ComplexPtr& torus, const ComplexPtr& circle) {
  const int m = circle->num_vertices();
  if (torus->num_vertices() != m * m) throw Error("torus and circle sizes differ");
  std::vector<int> vm(m * m);
  for (int v = 0; v < m * m; ++v) vm[v] = v / m;
  return SimplicialMap(torus, circle, vm);
}

ComplexPtr rp2() {
  return build_complex({{"1", "2", "4"},
                        {"1", "2", "6"},
                        {"1", "3", "5"},
                        {"1", "3", "6"},
                        {"1", "4", "5"},
                        {"2", "3", "4"},
                        {"2", "3", "5"},
                        {"2", "5", "6"},
                        {"3", "4", "6"},
                        {"4", "5", "6"}});
}

ComplexPtr cross_polytope(int d) {
  if (d < 0) throw Error("negative sphere dimension");
  const int n = d + 1;
  Names facets;
  for (int signs = 0; signs < (1 << n); ++signs) {
    std::vector<std::string> f;
    for (int i = 0; i < n; ++i) f.push_back(std::string(signs >> i & 1 ? "m" : "p") + std::to_string(i));
    facets.push_back(f);
  }
  return build_complex(facets);
}

Geometry cross_polytope_geometry(const Complex& k) {
  const int n = k.num_vertices() / 2;
  Geometry g{Eigen::MatrixXd::Zero(n, k.num_vertices())};
  for (int v = 0; v < k.num_vertices(); ++v) {
    const std::string name = k.name(v);
    const int i = std::stoi(name.substr(1));
    g.points(i, v) = name[0] == 'p' ? 1.0 : -1.0;
  }
  return g;
}

std::vector<int> cross_polytope_antipode(const Complex& k) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < k.num_vertices() / 2; ++i) pairs.emplace_back("p" + std::to_string(i), "m" + std::to_string(i));
  return involution_by_name(k, pairs);
}

ComplexPtr icosahedron() {
  // North pole a, upper ring b..f, south pole g, lower ring k l h i j (l_i sits
  // between u_i and u_(i+1); antipode of u_i is l_(i+2)).
  const std::string n = "a", s = "g";
  const std::vector<std::string> up = {"b", "c", "d", "e", "f"};
  const std::vector<std::string> lo = {"k", "l", "h", "i", "j"};
  Names faces;
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 1) % 5;
    faces.push_back({n, up[i], up[j]});
    faces.push_back({up[i], up[j], lo[i]});
    faces.push_back({lo[i], lo[j], up[j]});
    faces.push_back({s, lo[i], lo[j]});
  }
  return build_complex(faces);
}

std::vector<int> icosahedron_antipode(const Complex& k) {
  return involution_by_name(k, {{"a", "g"}, {"b", "h"}, {"c", "i"}, {"d", "j"}, {"e", "k"}, {"f", "l"}});
}

}  // namespace lscat::models
