// lscat: batch front end.  Every command prints (or writes with --out) one JSON
// report naming the statement it instantiates, echoing its inputs, and carrying
// the version.  Exit status: 0 success, 1 hypothesis violation or failed
// verification, 2 unreadable or invalid input.

#include "lscat/category.hpp"
#include "lscat/cover.hpp"
#include "lscat/genus.hpp"
#include "lscat/io.hpp"
#include "lscat/localize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>

using namespace lscat;
using io::Json;

namespace {

constexpr const char* version = LSCAT_VERSION;
constexpr double simplex_budget = 2e6;

struct Options {
  int field = 2;
  int n = 1;
  int k = 1;
  int rounds = 1;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t covers = 200;
  std::string out;
  std::string complex, source, target, map, involution, cover, certificate;
  std::vector<std::string> vertices;
};

template <class Fn>
decltype(auto) with_field(int p, Fn&& fn) {
  switch (p) {
    case 2: return fn(Zp<2>{});
    case 3: return fn(Zp<3>{});
    case 5: return fn(Zp<5>{});
    case 7: return fn(Zp<7>{});
    default: throw Error("unsupported field characteristic " + std::to_string(p) + " (use 2, 3, 5 or 7)");
  }
}

struct Command {
  CLI::App* app;
  const char* statement;
  Json (*inputs)(const Options&);
  Json (*run)(const Options&, int& status);
};

Json header(const Command& c, const Options& o) {
  Json j;
  j["statement"] = c.statement;
  j["command"] = c.app->get_name();
  j["version"] = version;
  j["inputs"] = c.inputs(o);
  return j;
}

Json f_vector(const Complex& k) {
  Json a = Json::array();
  for (int d = 0; d <= k.dim(); ++d) a.push_back(k.count(d));
  return a;
}

Geometry geometry_of(const io::ComplexDocument& doc) {
  return doc.geometry ? *doc.geometry : standard_geometry(*doc.complex);
}

void warn_budget(const Complex& source, int levels) {
  const double top = static_cast<double>(source.count(source.dim()));
  const double grow = std::tgamma(source.dim() + 2.0);
  const double estimate = top * std::pow(grow, levels);
  if (estimate > simplex_budget)
    std::cerr << "lscat: warning: about " << static_cast<long long>(estimate) << " top simplices after " << levels
              << " subdivisions of the source; this may exhaust memory\n";
}

Json cmd_info(const Options& o, int&) {
  auto doc = io::read_complex(o.complex);
  const Complex& k = *doc.complex;
  Json res;
  res["dim"] = k.dim();
  res["f_vector"] = f_vector(k);
  res["maximal_simplices"] = k.maximal_simplices().size();
  res["geometry"] = doc.geometry.has_value();
  res["betti"] = with_field(o.field, [&](auto tag) {
    using F = decltype(tag);
    return cohomology_basis<F>(doc.complex).betti_numbers();
  });
  return res;
}

Json cmd_hl(const Options& o, int&) {
  auto doc = io::read_complex(o.complex);
  std::string line;
  for (const auto& v : o.vertices) line += v + " ";
  auto u = o.vertices.empty() ? UpSet::full(doc.complex) : io::parse_cover(line, doc.complex, "--vertices").front();
  const int h = with_field(o.field, [&](auto tag) {
    using F = decltype(tag);
    return hl<F>(u);
  });
  Json res;
  res["upset"] = o.vertices.empty() ? "full" : "union of vertex stars";
  res["simplices"] = u.size();
  res["hl"] = h;
  res["kappa"] = h + 1;
  return res;
}

Json cmd_axioms(const Options& o, int& status) {
  auto doc = io::read_complex(o.complex);
  Json res;
  if (!o.involution.empty()) {
    auto q = quotient(io::read_involution(o.involution, doc.complex));
    res["quotient_f_vector"] = f_vector(*q.quotient);
    res["report"] = io::to_json(check_axioms(genus_kappa(q), o.samples, o.seed));
  } else {
    with_field(o.field, [&](auto tag) {
      using F = decltype(tag);
      res["report"] = io::to_json(check_axioms(kappa_hl<F>(doc.complex), o.samples, o.seed));
      auto seg = check_segment_bound<F>(doc.complex, o.covers, o.seed);
      res["segment_bound"] = {{"covers", seg.covers}, {"violations", seg.violations}, {"max_pieces", seg.max_pieces}};
      return 0;
    });
  }
  const bool passed = res["report"]["passed"].get<bool>() &&
                      (!res.contains("segment_bound") || res["segment_bound"]["violations"].get<std::size_t>() == 0);
  res["passed"] = passed;
  status = passed ? 0 : 1;
  return res;
}

Json cmd_cover(const Options& o, int& status) {
  auto doc = io::read_complex(o.complex);
  auto g = geometry_of(doc);
  Tower t(doc.complex, g);
  auto c = colored_star_cover(t, 0);
  auto check = check_cover(c);
  Json res;
  Json fams = Json::array();
  for (const auto& f : c.families) fams.push_back(f.size());
  res["colors"] = c.families.size();
  res["family_sizes"] = std::move(fams);
  res["fine_level"] = c.fine_level;
  res["fine_simplices"] = c.owner->size();
  res["coverage"] = check.coverage;
  res["disjoint_closures"] = check.disjoint;
  res["pairs_checked"] = check.pairs_checked;
  res["cover_mesh"] = c.mesh();
  t.extend_to(1);
  const int d = doc.complex->dim();
  const double m0 = mesh(*t.level(0), t.geometry(0)), m1 = mesh(*t.level(1), t.geometry(1));
  res["mesh"] = m0;
  res["mesh_after_subdivision"] = m1;
  res["mesh_contracts"] = m1 <= static_cast<double>(d) / (d + 1) * m0 + 1e-9;
  res["ok"] = check.ok();
  status = check.ok() ? 0 : 1;
  return res;
}

Json certificate_result(const LocalizationCertificate& cert, const SimplicialMap& f, const Geometry& g,
                        const CategoryFunction& kappa) {
  Json res;
  res["certificate"] = io::to_json(cert);
  res["verified"] = verify_certificate(cert, f, g, kappa).ok;
  return res;
}

Json cmd_localize(const Options& o, int&) {
  auto src = io::read_complex(o.source);
  auto tgt = io::read_complex(o.target);
  auto f = io::read_map(o.map, src.complex, tgt.complex);
  auto g = geometry_of(tgt);
  warn_budget(*src.complex, o.rounds + 2);
  return with_field(o.field, [&](auto tag) {
    using F = decltype(tag);
    auto kappa = kappa_hl<F>(src.complex);
    return certificate_result(localize(f, g, kappa, o.n, o.rounds), f, g, kappa);
  });
}

Json cmd_genus(const Options& o, int& status) {
  auto doc = io::read_complex(o.complex);
  auto q = quotient(io::read_involution(o.involution, doc.complex));
  Json res;
  res["sphere_dim"] = doc.complex->dim();
  res["subdivided"] = q.subdivided;
  res["quotient_f_vector"] = f_vector(*q.quotient);
  res["cover_reconstructed"] = reconstruction_matches(q);
  res["w_is_coboundary"] = cohomology_basis<GF2>(q.quotient).is_coboundary(q.w);
  res["full"] = io::to_json(genus_bounds(q, UpSet::full(q.quotient)));
  if (!o.cover.empty()) {
    auto pieces = io::read_cover(o.cover, q.quotient);
    auto rep = covering_sum_check(q, pieces);
    Json c;
    c["status"] = to_string(rep.status);
    Json ps = Json::array();
    for (const auto& b : rep.pieces) ps.push_back(io::to_json(b));
    c["pieces"] = std::move(ps);
    Json ws = Json::array();
    for (auto x : rep.witnesses) ws.push_back(q.quotient->simplex_name(q.quotient->simplex(x)));
    c["witnesses"] = std::move(ws);
    res["covering_sum"] = std::move(c);
    if (rep.status == CheckStatus::fail) status = 1;
  }
  return res;
}

Json cmd_bu_demo(const Options& o, int&) {
  auto doc = io::read_complex(o.complex);
  auto q = quotient(io::read_involution(o.involution, doc.complex));
  auto tgt = io::read_complex(o.target);
  auto f = io::read_map(o.map, q.quotient, tgt.complex);
  auto g = geometry_of(tgt);
  warn_budget(*q.quotient, o.rounds + 2);
  return certificate_result(borsuk_ulam_demo(q, f, g, o.k, o.rounds), f, g, genus_kappa(q));
}

Json cmd_verify(const Options& o, int& status) {
  auto src = io::read_complex(o.source);
  auto tgt = io::read_complex(o.target);
  auto g = geometry_of(tgt);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(io::read_text(o.certificate));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(o.certificate + ": " + e.what());
  }
  const nlohmann::json* body = &doc;
  if (doc.contains("result") && doc["result"].contains("certificate")) body = &doc["result"]["certificate"];
  auto cert = io::certificate_from_json(*body);
  VerifyResult v;
  std::string label;
  if (!o.involution.empty()) {
    auto q = quotient(io::read_involution(o.involution, src.complex));
    auto f = io::read_map(o.map, q.quotient, tgt.complex);
    auto kappa = genus_kappa(q);
    label = kappa.label();
    v = verify_certificate(cert, f, g, kappa);
  } else {
    auto f = io::read_map(o.map, src.complex, tgt.complex);
    v = with_field(o.field, [&](auto tag) {
      using F = decltype(tag);
      auto kappa = kappa_hl<F>(src.complex);
      label = kappa.label();
      return verify_certificate(cert, f, g, kappa);
    });
  }
  if (cert.kappa_label != label) {
    v.ok = false;
    v.problems.push_back("certificate is for '" + cert.kappa_label + "', recomputed with '" + label + "'");
  }
  Json res;
  res["ok"] = v.ok;
  res["problems"] = v.problems;
  status = v.ok ? 0 : 1;
  return res;
}

void emit(const Json& j, const std::string& out) {
  const std::string text = io::dump(j);
  if (out.empty())
    std::cout << text;
  else
    io::write_atomic(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative cohomology length, category axioms, localization certificates and Z2 genus bounds"};
  app.set_version_flag("--version", version);
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "Write the report here (atomically) instead of stdout");
  };
  auto field = [&](CLI::App* s) {
    s->add_option("--field", o.field, "Coefficient field characteristic (2, 3, 5, 7)")->capture_default_str();
  };

  auto* info = app.add_subcommand("info", "Dimensions, f-vector and Betti numbers");
  info->add_option("complex", o.complex, "Complex file")->required();
  field(info);
  common(info);

  auto* hlc = app.add_subcommand("hl", "Relative cohomology length of the full complex or a union of vertex stars");
  hlc->add_option("complex", o.complex, "Complex file")->required();
  hlc->add_option("--vertices", o.vertices, "Vertices whose open stars form the up-set (default: everything)");
  field(hlc);
  common(hlc);

  auto* ax = app.add_subcommand("axioms", "Check monotonicity, subadditivity and disjoint-max on sampled up-sets");
  ax->add_option("complex", o.complex, "Complex file")->required();
  ax->add_option("--involution", o.involution, "Check the Z2 index on the quotient instead of hl");
  ax->add_option("--samples", o.samples, "Samples per axiom")->capture_default_str();
  ax->add_option("--covers", o.covers, "Sampled covers for the segment bound")->capture_default_str();
  ax->add_option("--seed", o.seed, "Sampler seed")->capture_default_str();
  field(ax);
  common(ax);

  auto* cov = app.add_subcommand("cover", "Build and check the colored star cover");
  cov->add_option("complex", o.complex, "Complex file (geometry optional)")->required();
  common(cov);

  auto* loc = app.add_subcommand("localize", "Localization certificate for a simplicial map with kappa = hl + 1");
  loc->add_option("source", o.source, "Source complex file")->required();
  loc->add_option("target", o.target, "Target complex file (geometry optional)")->required();
  loc->add_option("map", o.map, "Map file")->required();
  loc->add_option("--n", o.n, "Threshold n")->capture_default_str();
  loc->add_option("--rounds", o.rounds, "Localization rounds")->capture_default_str()->check(CLI::PositiveNumber);
  field(loc);
  common(loc);

  auto* gen = app.add_subcommand("genus", "Genus bounds of the quotient by a free involution");
  gen->add_option("complex", o.complex, "Complex file")->required();
  gen->add_option("involution", o.involution, "Involution file")->required();
  gen->add_option("--cover", o.cover, "Cover of the quotient for the covering-sum check");
  common(gen);

  auto* bu = app.add_subcommand("bu-demo", "Localization for an even map with the Z2 index");
  bu->add_option("complex", o.complex, "Sphere complex file")->required();
  bu->add_option("involution", o.involution, "Antipodal involution file")->required();
  bu->add_option("map", o.map, "Map file from the quotient to the target")->required();
  bu->add_option("target", o.target, "Target complex file (geometry optional)")->required();
  bu->add_option("--k", o.k, "Threshold k")->capture_default_str();
  bu->add_option("--rounds", o.rounds, "Localization rounds")->capture_default_str()->check(CLI::PositiveNumber);
  common(bu);

  auto* ver = app.add_subcommand("verify", "Recheck a localization certificate from scratch");
  ver->add_option("source", o.source, "Source complex file (the sphere with --involution)")->required();
  ver->add_option("target", o.target, "Target complex file")->required();
  ver->add_option("map", o.map, "Map file")->required();
  ver->add_option("certificate", o.certificate, "Certificate or report file")->required();
  ver->add_option("--involution", o.involution, "Certificate uses the Z2 index on this quotient");
  field(ver);
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::vector<Command> commands{
      {info, "simplicial complex summary", [](const Options& o) -> Json {
         return {{"complex", o.complex}, {"field", o.field}};
       }, cmd_info},
      {hlc, "relative cohomology length", [](const Options& o) -> Json {
         return {{"complex", o.complex}, {"vertices", o.vertices}, {"field", o.field}};
       }, cmd_hl},
      {ax, "generalized relative category axioms", [](const Options& o) -> Json {
         return {{"complex", o.complex}, {"involution", o.involution}, {"field", o.field},
                 {"samples", o.samples}, {"covers", o.covers}, {"seed", o.seed}};
       }, cmd_axioms},
      {cov, "colored star cover of bounded multiplicity", [](const Options& o) -> Json {
         return {{"complex", o.complex}};
       }, cmd_cover},
      {loc, "preimage localization theorem certificate", [](const Options& o) -> Json {
         return {{"source", o.source}, {"target", o.target}, {"map", o.map}, {"field", o.field},
                 {"n", o.n}, {"rounds", o.rounds}};
       }, cmd_localize},
      {gen, "Z2 genus bounds of a free involution (sphere law, covering-sum theorem)", [](const Options& o) -> Json {
         return {{"complex", o.complex}, {"involution", o.involution}, {"cover", o.cover}};
       }, cmd_genus},
      {bu, "Borsuk-Ulam corollary for even functions", [](const Options& o) -> Json {
         return {{"complex", o.complex}, {"involution", o.involution}, {"map", o.map}, {"target", o.target},
                 {"k", o.k}, {"rounds", o.rounds}};
       }, cmd_bu_demo},
      {ver, "preimage localization certificate check", [](const Options& o) -> Json {
         return {{"source", o.source}, {"target", o.target}, {"map", o.map}, {"certificate", o.certificate},
                 {"involution", o.involution}, {"field", o.field}};
       }, cmd_verify},
  };
  const Command* chosen = nullptr;
  for (const auto& c : commands)
    if (c.app->parsed()) chosen = &c;
  if (chosen == nullptr) return 2;

  Json report = header(*chosen, o);
  try {
    int status = 0;
    report["result"] = chosen->run(o, status);
    emit(report, o.out);
    return status;
  } catch (const HypothesisViolation& e) {
    report["error"] = "hypothesis violation";
    report["message"] = e.what();
    emit(report, o.out);
    std::cerr << "lscat: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "lscat: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "lscat: internal error: " << e.what() << "\n";
    return 2;
  }
}
