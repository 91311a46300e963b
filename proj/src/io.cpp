#include "lscat/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace lscat::io {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    Line l{number, {}};
    for (std::string tok; in >> tok;) l.tokens.push_back(std::move(tok));
    if (!l.tokens.empty()) out.push_back(std::move(l));
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
  throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
}

[[noreturn]] void fail(const std::string& origin, const std::string& what) { throw ParseError(origin + ": " + what); }

double parse_number(const std::string& s, const std::string& origin, int line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(origin, line, "not a number: '" + s + "'");
  return v;
}

int vertex(const std::unordered_map<std::string, int>& lookup, const std::string& name, const std::string& origin,
           int line) {
  auto it = lookup.find(name);
  if (it == lookup.end()) fail(origin, line, "unknown vertex '" + name + "'");
  return it->second;
}

template <class T>
T get(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("certificate: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("certificate: field '") + key + "' has the wrong type");
  }
}

Json vector_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Eigen::VectorXd vector_from(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

ComplexDocument parse_complex(std::string_view text, const std::string& origin) {
  auto lines = tokenize(text);
  std::vector<std::vector<std::string>> simplices;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() == 1 && l.tokens[0] == "geometry") break;
    std::set<std::string> seen;
    for (const auto& t : l.tokens)
      if (!seen.insert(t).second) fail(origin, l.number, "vertex '" + t + "' repeated in a simplex");
    simplices.push_back(l.tokens);
  }
  if (simplices.empty()) fail(origin, "no simplices");
  ComplexDocument doc;
  try {
    doc.complex = build_complex(simplices);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(origin, e.what());
  }
  if (i == lines.size()) return doc;

  const Complex& k = *doc.complex;
  const int header = lines[i].number;
  auto lookup = k.vertex_lookup();
  Geometry g;
  std::vector<bool> placed(k.num_vertices(), false);
  for (++i; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() < 2) fail(origin, l.number, "expected a vertex name and coordinates");
    const int v = vertex(lookup, l.tokens[0], origin, l.number);
    const auto m = static_cast<Eigen::Index>(l.tokens.size() - 1);
    if (g.points.size() == 0) g.points = Eigen::MatrixXd::Zero(m, k.num_vertices());
    if (m != g.points.rows())
      fail(origin, l.number, "expected " + std::to_string(g.points.rows()) + " coordinates, got " + std::to_string(m));
    if (placed[v]) fail(origin, l.number, "vertex '" + l.tokens[0] + "' placed twice");
    placed[v] = true;
    for (Eigen::Index c = 0; c < m; ++c) g.points(c, v) = parse_number(l.tokens[c + 1], origin, l.number);
  }
  for (int v = 0; v < k.num_vertices(); ++v)
    if (!placed[v]) fail(origin, header, "geometry has no coordinates for vertex '" + k.name(v) + "'");
  doc.geometry = std::move(g);
  return doc;
}

SimplicialMap parse_map(std::string_view text, ComplexPtr source, ComplexPtr target, const std::string& origin) {
  auto src = source->vertex_lookup(), tgt = target->vertex_lookup();
  std::vector<int> vm(source->num_vertices(), -1);
  for (const auto& l : tokenize(text)) {
    if (l.tokens.size() != 2) fail(origin, l.number, "expected 'source_vertex target_vertex'");
    const int a = vertex(src, l.tokens[0], origin, l.number);
    const int b = vertex(tgt, l.tokens[1], origin, l.number);
    if (vm[a] >= 0) fail(origin, l.number, "vertex '" + l.tokens[0] + "' mapped twice");
    vm[a] = b;
  }
  for (int v = 0; v < source->num_vertices(); ++v)
    if (vm[v] < 0) fail(origin, "no image for vertex '" + source->name(v) + "'");
  try {
    return SimplicialMap(std::move(source), std::move(target), std::move(vm));
  } catch (const Error& e) {
    fail(origin, e.what());
  }
}

Z2Complex parse_involution(std::string_view text, ComplexPtr space, const std::string& origin) {
  auto lookup = space->vertex_lookup();
  std::vector<int> t(space->num_vertices(), -1);
  for (const auto& l : tokenize(text)) {
    if (l.tokens.size() != 2) fail(origin, l.number, "expected 'v Tv'");
    const int a = vertex(lookup, l.tokens[0], origin, l.number);
    const int b = vertex(lookup, l.tokens[1], origin, l.number);
    if (t[a] >= 0 || t[b] >= 0) fail(origin, l.number, "vertex paired twice");
    t[a] = b;
    t[b] = a;
  }
  for (int v = 0; v < space->num_vertices(); ++v)
    if (t[v] < 0) fail(origin, "vertex '" + space->name(v) + "' is not paired");
  try {
    return build_z2(std::move(space), std::move(t));
  } catch (const Error& e) {
    fail(origin, e.what());
  }
}

std::vector<UpSet> parse_cover(std::string_view text, ComplexPtr k, const std::string& origin) {
  auto lookup = k->vertex_lookup();
  std::vector<UpSet> out;
  for (const auto& l : tokenize(text)) {
    std::vector<int> vs;
    for (const auto& t : l.tokens) vs.push_back(vertex(lookup, t, origin, l.number));
    out.push_back(open_star(k, vs));
  }
  if (out.empty()) fail(origin, "no pieces");
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ComplexDocument read_complex(const std::filesystem::path& path) { return parse_complex(read_text(path), path.string()); }

SimplicialMap read_map(const std::filesystem::path& path, ComplexPtr source, ComplexPtr target) {
  return parse_map(read_text(path), std::move(source), std::move(target), path.string());
}

Z2Complex read_involution(const std::filesystem::path& path, ComplexPtr space) {
  return parse_involution(read_text(path), std::move(space), path.string());
}

std::vector<UpSet> read_cover(const std::filesystem::path& path, ComplexPtr k) {
  return parse_cover(read_text(path), std::move(k), path.string());
}

std::string format_complex(const Complex& k, const Geometry* g) {
  std::string out;
  for (const auto& s : k.maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + k.name(s[i]);
    out += "\n";
  }
  if (g == nullptr) return out;
  validate_geometry(k, *g, false);
  out += "geometry\n";
  for (int v = 0; v < k.num_vertices(); ++v) {
    out += k.name(v);
    for (Eigen::Index c = 0; c < g->ambient_dim(); ++c) {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof buf, g->points(c, v));
      out += " " + std::string(buf, res.ptr);
    }
    out += "\n";
  }
  return out;
}

std::string format_map(const SimplicialMap& f) {
  std::string out;
  for (int v = 0; v < f.source()->num_vertices(); ++v)
    out += f.source()->name(v) + " " + f.target()->name(f(v)) + "\n";
  return out;
}

std::string format_involution(const Z2Complex& z) {
  std::string out;
  for (int v = 0; v < z.space->num_vertices(); ++v)
    if (v < z(v)) out += z.space->name(v) + " " + z.space->name(z(v)) + "\n";
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(tmp.string() + ": cannot write");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(tmp.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["kappa"] = r.label;
  j["complex"] = r.complex_summary;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  Json axioms = Json::array();
  for (const auto& a : r.axioms) {
    Json x;
    x["axiom"] = a.axiom;
    x["checked"] = a.checked;
    x["nontrivial"] = a.nontrivial;
    x["failed"] = a.failed;
    Json fs = Json::array();
    for (const auto& f : a.failures) {
      Json y;
      y["sample"] = f.sample;
      y["lhs"] = f.lhs;
      y["lhs_value"] = f.lhs_value;
      y["pieces"] = f.pieces;
      y["piece_values"] = f.piece_values;
      fs.push_back(std::move(y));
    }
    x["failures"] = std::move(fs);
    axioms.push_back(std::move(x));
  }
  j["axioms"] = std::move(axioms);
  return j;
}

Json to_json(const LocalizationCertificate& c) {
  Json j;
  j["kappa"] = c.kappa_label;
  j["n"] = c.n;
  j["target_dim"] = c.target_dim;
  j["kappa_total"] = c.kappa_total;
  Json rounds = Json::array();
  for (const auto& r : c.rounds) {
    Json x;
    x["round"] = r.round;
    x["base_level"] = r.base_level;
    x["cover_level"] = r.cover_level;
    x["color"] = r.color;
    x["center"] = r.center;
    x["center_name"] = r.center_name;
    x["core"] = r.core;
    x["star"] = r.star;
    x["kappa"] = r.kappa;
    x["family_kappa"] = r.family_kappa;
    x["barycenter"] = vector_json(r.barycenter);
    x["diameter"] = r.diameter;
    rounds.push_back(std::move(x));
  }
  j["rounds"] = std::move(rounds);
  j["c"] = vector_json(c.c);
  return j;
}

Json to_json(const GenusBounds& b) {
  Json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["tight"] = b.tight();
  return j;
}

LocalizationCertificate certificate_from_json(const nlohmann::json& j) {
  LocalizationCertificate c;
  c.kappa_label = get<std::string>(j, "kappa");
  c.n = get<int>(j, "n");
  c.target_dim = get<int>(j, "target_dim");
  c.kappa_total = get<int>(j, "kappa_total");
  const auto rounds = get<nlohmann::json>(j, "rounds");
  if (!rounds.is_array()) throw ParseError("certificate: 'rounds' is not a list");
  for (const auto& x : rounds) {
    LocalizationRound r;
    r.round = get<int>(x, "round");
    r.base_level = get<int>(x, "base_level");
    r.cover_level = get<int>(x, "cover_level");
    r.color = get<int>(x, "color");
    r.center = get<std::size_t>(x, "center");
    r.center_name = get<std::string>(x, "center_name");
    r.core = get<std::vector<int>>(x, "core");
    r.star = get<std::vector<std::size_t>>(x, "star");
    r.kappa = get<int>(x, "kappa");
    r.family_kappa = get<std::vector<int>>(x, "family_kappa");
    r.barycenter = vector_from(get<std::vector<double>>(x, "barycenter"));
    r.diameter = get<double>(x, "diameter");
    c.rounds.push_back(std::move(r));
  }
  c.c = vector_from(get<std::vector<double>>(j, "c"));
  return c;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lscat::io
