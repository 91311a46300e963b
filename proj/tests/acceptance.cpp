// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "lscat/category.hpp"
#include "lscat/cover.hpp"
#include "lscat/genus.hpp"
#include "lscat/io.hpp"
#include "lscat/localize.hpp"
#include "lscat/models.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace lscat;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir = LSCAT_DATA_DIR;
const std::string cli = LSCAT_CLI;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Z2Complex antipodal_sphere(int d) {
  auto k = models::cross_polytope(d);
  return build_z2(k, models::cross_polytope_antipode(*k));
}

// Two copies of K exchanged: a free involution whose quotient is K with w = 0.
Z2Complex doubled(const ComplexPtr& k) {
  const int n = k->num_vertices();
  std::vector<Simplex> tops;
  std::vector<std::string> names;
  for (int copy = 0; copy < 2; ++copy) {
    for (int v = 0; v < n; ++v) names.push_back(k->name(v) + (copy ? "'" : ""));
    for (auto s : k->maximal_simplices()) {
      for (int& v : s) v += copy * n;
      tops.push_back(s);
    }
  }
  std::vector<int> t(2 * n);
  for (int v = 0; v < 2 * n; ++v) t[v] = v < n ? v + n : v - n;
  return build_z2(Complex::from_simplices(2 * n, tops, names), t);
}

struct Named {
  std::string name;
  ComplexPtr k;
};

struct Acceptance {
  int failures = 0;

  void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << " (" << detail << ")" << std::endl;
    if (!ok) ++failures;
  }

  void run(int id, const std::string& what, const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    report(id, ok, what, detail.str());
  }
};

int run_cli(const std::string& args) {
  const int raw = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

int main() {
  Acceptance acc;
  const auto rp3 = quotient(antipodal_sphere(3));
  const auto rp2_ico = [] {
    auto k = models::icosahedron();
    return quotient(build_z2(k, models::icosahedron_antipode(*k)));
  }();
  const std::vector<Named> spaces{{"S1", models::triangle_circle()},
                                  {"T2", models::torus()},
                                  {"RP2", models::rp2()},
                                  {"RP3", rp3.quotient},
                                  {"S2", models::cross_polytope(2)}};

  acc.run(1, "category axioms for kappa_hl and the Z2 index, 1000 samples each", [&](std::ostringstream& d) {
    const auto t0 = Clock::now();
    auto hexagon = build_z2(models::cycle(6), {3, 4, 5, 0, 1, 2});
    auto torus = build_z2(models::torus(6, 3), models::torus_half_turn(6, 3));
    const std::vector<std::pair<std::string, QuotientData>> z2{{"S1", quotient(hexagon)},
                                                               {"T2", quotient(torus)},
                                                               {"RP2", rp2_ico},
                                                               {"RP3", rp3},
                                                               {"S2", quotient(doubled(models::cross_polytope(2)))}};
    bool ok = true;
    std::size_t failed = 0;
    for (const auto& s : spaces) {
      auto r = check_axioms(kappa_hl<GF2>(s.k), 1000, 2024);
      for (const auto& a : r.axioms) failed += a.failed;
      ok = ok && r.passed();
    }
    for (const auto& [name, q] : z2) {
      auto r = check_axioms(genus_kappa(q), 1000, 2024);
      for (const auto& a : r.axioms) failed += a.failed;
      ok = ok && r.passed();
    }
    const double t = seconds_since(t0);
    d << failed << " failures over 10 x 1000 samples x 3 axioms, " << t << " s";
    return ok && failed == 0 && t < 120;
  });

  acc.run(2, "cup-length constants equal the brute-force oracle", [&](std::ostringstream& d) {
    const std::vector<int> expected{1, 2, 2, 3, 1};
    bool ok = true;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      auto full = UpSet::full(spaces[i].k);
      const int h = hl<GF2>(full), oracle = brute_force_hl_oracle<GF2>(full);
      d << spaces[i].name << " " << h << "/" << oracle << " ";
      ok = ok && h == expected[i] && oracle == expected[i];
    }
    return ok;
  });

  acc.run(3, "segment bound hl(U) <= sum hl(U_i) + (n-1) on 200 covers per complex", [&](std::ostringstream& d) {
    std::size_t violations = 0, covers = 0;
    for (const auto& s : spaces) {
      auto r = check_segment_bound<GF2>(s.k, 200, 7);
      violations += r.violations;
      covers += r.covers;
    }
    d << violations << " violations in " << covers << " covers";
    return violations == 0 && covers == 200 * spaces.size();
  });

  acc.run(4, "colored star cover: dim+1 families, coverage, disjoint closures, mesh contraction", [&](std::ostringstream& d) {
    bool ok = true;
    for (const auto& s : {spaces[0], spaces[4], spaces[1], spaces[2]}) {
      Tower t(s.k, standard_geometry(*s.k));
      auto c = colored_star_cover(t, 0);
      auto check = check_cover(c);
      const int dim = s.k->dim();
      const double m0 = mesh(*t.level(0), t.geometry(0)), m1 = mesh(*t.level(1), t.geometry(1));
      const bool contracts = m1 <= static_cast<double>(dim) / (dim + 1) * m0 + 1e-9;
      d << s.name << " " << c.families.size() << " families/" << check.pairs_checked << " pairs ";
      ok = ok && check.ok() && contracts;
    }
    return ok;
  });

  acc.run(5, "localization T2 -> S1, n = 1, 3 rounds, verified", [&](std::ostringstream& d) {
    const auto t0 = Clock::now();
    auto t2 = io::read_complex(data_dir / "t2.cx").complex;
    auto s1 = io::read_complex(data_dir / "s1.cx");
    auto f = io::read_map(data_dir / "t2_to_s1.map", t2, s1.complex);
    auto kappa = kappa_hl<GF2>(t2);
    auto cert = localize(f, *s1.geometry, kappa, 1, 3);
    bool ok = cert.rounds.size() == 3;
    for (std::size_t i = 0; i < cert.rounds.size(); ++i) {
      ok = ok && cert.rounds[i].kappa >= 2;
      if (i > 0) ok = ok && cert.rounds[i].diameter < cert.rounds[i - 1].diameter;
      d << "kappa " << cert.rounds[i].kappa << " diam " << cert.rounds[i].diameter << "; ";
    }
    const bool verified = verify_certificate(cert, f, *s1.geometry, kappa).ok;
    const double t = seconds_since(t0);
    d << "verified " << verified << ", " << t << " s";
    return ok && verified && t < 300;
  });

  acc.run(6, "localization guard with n = 2 exits 1 with the violation message", [&](std::ostringstream& d) {
    auto out = fs::temp_directory_path() / "lscat_acceptance_guard.json";
    const int code = run_cli("localize " + (data_dir / "t2.cx").string() + " " + (data_dir / "s1.cx").string() + " " +
                             (data_dir / "t2_to_s1.map").string() + " --n 2 --out " + out.string());
    auto j = nlohmann::json::parse(io::read_text(out));
    const std::string msg = j.value("message", "");
    fs::remove(out);
    d << "exit " << code << ", \"" << msg << "\"";
    return code == 1 && msg == "hypothesis κ(X) > n(d+1) violated: 3 ≤ 4";
  });

  acc.run(7, "sphere law: genus bounds of antipodal S^d are (d+1, d+1), d = 1..4", [&](std::ostringstream& d) {
    bool ok = true;
    for (int dim = 1; dim <= 4; ++dim) {
      auto q = quotient(antipodal_sphere(dim));
      auto b = genus_bounds(q, UpSet::full(q.quotient));
      d << "S" << dim << " (" << b.lower << "," << b.upper << ") ";
      ok = ok && b.lower == dim + 1 && b.upper == dim + 1;
    }
    return ok;
  });

  acc.run(8, "index monotonicity for S1 -> S2 -> S3", [&](std::ostringstream& d) {
    bool ok = true;
    for (int dim = 1; dim <= 2; ++dim) {
      auto a = antipodal_sphere(dim), b = antipodal_sphere(dim + 1);
      auto lookup = b.space->vertex_lookup();
      std::vector<int> phi;
      for (int v = 0; v < a.space->num_vertices(); ++v) phi.push_back(lookup.at(a.space->name(v)));
      auto r = index_monotonicity_check(a, b, phi);
      d << "S" << dim << "->S" << dim + 1 << " heights " << r.source_height << "<=" << r.target_height
        << " cohomologous " << r.cohomologous << "; ";
      ok = ok && r.passed();
    }
    return ok;
  });

  acc.run(9, "covering-sum check on the 6-vertex RP2", [&](std::ostringstream& d) {
    auto ico = io::read_complex(data_dir / "icosahedron.cx").complex;
    auto q = quotient(io::read_involution(data_dir / "icosahedron.inv", ico));
    auto three = covering_sum_check(q, io::read_cover(data_dir / "rp2_cover3.cover", q.quotient));
    auto one = covering_sum_check(q, io::read_cover(data_dir / "rp2_cover1.cover", q.quotient));
    d << "3 pieces: " << to_string(three.status) << ", " << three.witnesses.size() << " witnesses; 1 piece: "
      << one.witnesses.size() << "/" << q.quotient->size() << " witnesses";
    return q.quotient->num_vertices() == 6 && three.status == CheckStatus::pass && !three.witnesses.empty() &&
           one.status == CheckStatus::pass && one.witnesses.size() == q.quotient->size();
  });

  acc.run(10, "Borsuk-Ulam demo on RP2 (n=2, l=1, k=1) and its guard", [&](std::ostringstream& d) {
    auto ico = io::read_complex(data_dir / "icosahedron.cx").complex;
    auto q = quotient(io::read_involution(data_dir / "icosahedron.inv", ico));
    auto interval = io::read_complex(data_dir / "interval.cx");
    auto f = io::read_map(data_dir / "rp2_even.map", q.quotient, interval.complex);
    auto cert = borsuk_ulam_demo(q, f, *interval.geometry, 1, 3);
    bool ok = !cert.rounds.empty();
    for (const auto& r : cert.rounds) ok = ok && r.kappa >= 2;
    const bool verified = verify_certificate(cert, f, *interval.geometry, genus_kappa(q)).ok;
    auto tri = io::read_complex(data_dir / "triangle.cx");
    auto g = io::read_map(data_dir / "rp2_to_triangle.map", q.quotient, tri.complex);
    bool guarded = false;
    try {
      borsuk_ulam_demo(q, g, *tri.geometry, 1, 1);
    } catch (const HypothesisViolation& e) {
      guarded = true;
      d << "guard: " << e.what() << "; ";
    }
    d << cert.rounds.size() << " rounds, verified " << verified;
    return ok && verified && guarded;
  });

  acc.run(11, "CLI reports are byte-identical across two runs", [&](std::ostringstream& d) {
    const auto dir = fs::temp_directory_path() / "lscat_acceptance_determinism";
    fs::create_directories(dir);
    auto p = [&](const char* f) { return (data_dir / f).string(); };
    const std::vector<std::pair<std::string, std::string>> runs{
        {"info", "info " + p("rp2.cx")},
        {"hl", "hl " + p("t2.cx")},
        {"axioms", "axioms " + p("t2.cx") + " --samples 100 --covers 50 --seed 5"},
        {"axioms-z2", "axioms " + p("icosahedron.cx") + " --involution " + p("icosahedron.inv") + " --samples 100"},
        {"cover", "cover " + p("octahedron.cx")},
        {"localize", "localize " + p("t2.cx") + " " + p("s1.cx") + " " + p("t2_to_s1.map") + " --n 1 --rounds 2"},
        {"genus", "genus " + p("icosahedron.cx") + " " + p("icosahedron.inv") + " --cover " + p("rp2_cover3.cover")},
        {"bu-demo", "bu-demo " + p("icosahedron.cx") + " " + p("icosahedron.inv") + " " + p("rp2_even.map") + " " +
                        p("interval.cx") + " --k 1 --rounds 2"},
    };
    bool ok = true;
    for (const auto& [name, args] : runs) {
      const auto a = dir / (name + ".1.json"), b = dir / (name + ".2.json");
      const int ca = run_cli(args + " --out " + a.string());
      const int cb = run_cli(args + " --out " + b.string());
      const bool same = ca == 0 && cb == 0 && io::read_text(a) == io::read_text(b);
      if (!same) d << name << " differs (exit " << ca << "/" << cb << ") ";
      ok = ok && same;
    }
    const auto cert = dir / "localize.1.json";
    const int cv = run_cli("verify " + p("t2.cx") + " " + p("s1.cx") + " " + p("t2_to_s1.map") + " " + cert.string());
    fs::remove_all(dir);
    d << runs.size() << " commands compared, verify exit " << cv;
    return ok && cv == 0;
  });

  std::cout << (acc.failures == 0 ? "all criteria passed" : std::to_string(acc.failures) + " criteria failed")
            << std::endl;
  return acc.failures == 0 ? 0 : 1;
}
