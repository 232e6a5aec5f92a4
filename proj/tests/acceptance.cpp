#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "tkklab/commands.hpp"
#include "tkklab/geometry.hpp"

using namespace tkk;

namespace {

unsigned threads = 2;
std::string workdir = ".";

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
  void require(const Report& r, const std::string& what) {
    if (!r.pass()) require(false, what + ": " + r.first_failure()->name + " [" + r.first_failure()->witness + "]");
  }
  void require(const Check& c, const std::string& what) {
    if (!c.pass) require(false, what + ": " + c.name + " [" + c.witness + "]");
  }
};

std::shared_ptr<const FiniteField> fp(std::uint32_t p) { return std::make_shared<const FiniteField>(p); }
std::shared_ptr<const RationalField> qq() { return std::make_shared<const RationalField>(); }

Algebra<FiniteField> exchange(std::uint32_t p) { return build_exchange(build_field_algebra(fp(p))); }
Algebra<FiniteField> hexagon_algebra() {
  auto k = fp(5);
  return build_matrix_structurable(build_cubic_rank1(k), k->one());
}
Algebra<FiniteField> jordan25() {
  auto k = fp(5);
  return build_jordan_extension<FiniteField>(k, {k->from_int(-2), 0, 1});
}
Algebra<RationalField> quaternions() {
  auto k = qq();
  return build_hurwitz<RationalField>(k, {k->from_int(-1), k->from_int(-1)}, true);
}

template <class F>
void each_instance(F&& f) {
  f("exchange(F_5)", exchange(5));
  f("exchange(F_7)", exchange(7));
  f("M(rank-1 J, 1)/F_5", hexagon_algebra());
  f("jordan(F_25)", jordan25());
  f("quaternions/Q", quaternions());
}

Outcome c1() {
  Outcome o;
  each_instance([&](const std::string& name, const auto& A) {
    auto c = check_structurable(A);
    o.require(c, name);
    o.require(c.evaluated == A.dim() * A.dim() * A.dim() * A.dim(), name + ": not every basis quadruple evaluated");
  });
  return o;
}

Outcome c2() {
  Outcome o;
  std::vector<std::size_t> want{8, 8, 14, 6, 21}, got;
  each_instance([&](const std::string& name, const auto& A) {
    using K = std::decay_t<decltype(A.field())>;
    TKK<K> L(A, false);
    got.push_back(L.dim());
    o.require(L.check_jacobi(), name);
    o.require(L.check_grading(), name);
    o.require(L.check_l0_generated(), name);
  });
  std::ostringstream ds;
  for (auto d : got) ds << d << " ";
  o.require(got == want, "dimensions " + ds.str());
  if (o.pass) o.detail = "dims " + ds.str();
  return o;
}

Outcome c3() {
  Outcome o;
  each_instance([&](const std::string& name, const auto& A) {
    using K = std::decay_t<decltype(A.field())>;
    TKK<K> L(A, false);
    o.require(check_eps_delta_consistency(L), name);
    o.require(check_operator_identities(A, 50, 0), name);
  });
  for (auto A : {exchange(5), hexagon_algebra()}) {
    LieFF L(A, false);
    std::size_t n = 0;
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (const auto& s : L.skew_basis())
        for (const auto& t : L.skew_basis()) {
          o.require(check_image_closed_form(L, A.basis(i), s, t), A.tag());
          ++n;
        }
    o.require(n == A.dim(), A.tag() + ": closed form not evaluated");
  }
  return o;
}

Outcome c4() {
  Outcome o;
  LieFF L(jordan25());
  auto r = moufang_set_jordan(L);
  o.require(r.points.size() == 26, std::to_string(r.points.size()) + " points");
  o.require(r.report, "jordan");
  if (o.pass) o.detail = "26 inner ideals, E+ sharply transitive on 25";
  return o;
}

Outcome c5() {
  Outcome o;
  TKK<RationalField> L(quaternions());
  auto r = moufang_set_skew(L, 50, 0);
  o.require(r, "quaternions");
  for (const auto& c : r.checks) o.require(c.evaluated >= 49, c.name + " evaluated " + std::to_string(c.evaluated));
  return o;
}

Outcome c6() {
  Outcome o;
  LieFF L(exchange(5));
  auto g = build_triangle_geometry(L, 1u << 20, threads);
  auto ps = polygon_stats(g, threads);
  o.require(g.points.size() == 186 && g.lines.size() == 62, "counts " + std::to_string(g.points.size()) + "/" + std::to_string(g.lines.size()));
  o.require(ps.graph.girth == 12 && ps.graph.diameter == 6, "girth/diameter");
  o.require(ps.point_degree_min == 2 && ps.point_degree_max == 2 && ps.line_degree_min == 6 && ps.line_degree_max == 6, "degrees");
  o.require(ps.thin && ps.generalized, ps.verdict);
  auto ws = graph_stats(omega_graph(g), threads);
  o.require(ws.vertices == 62 && ws.girth == 6 && ws.diameter == 3 && ws.min_degree == 6 && ws.max_degree == 6, "omega");
  auto plane = dual_double_extract(g, threads);
  auto oracle = projective_plane_oracle(L.field());
  o.require(plane.axioms, "extracted plane");
  o.require(oracle.axioms, "PG(2,5) oracle");
  o.require(plane.points == 31 && plane.lines == 31 && oracle.points == 31 && oracle.lines == 31, "plane counts");
  o.require(check_triangle_distances(L, g), "distances");
  o.require(check_triangle_root_groups(L, g), "root groups");
  return o;
}

Outcome c7() {
  Outcome o;
  auto k = fp(5);
  auto J = build_cubic_rank1(k);
  LieFF L(build_matrix_structurable(J, k->one()));
  auto g = build_hexagon_geometry(L, 1, 10000000, threads);
  add_hexagon_labels(g, L, J);
  auto ps = polygon_stats(g, threads);
  o.require(g.points.size() == 3906 && g.lines.size() == 3906, "counts " + std::to_string(g.points.size()) + "/" + std::to_string(g.lines.size()));
  o.require(g.stats["anomalies"] == 0 && g.stats["orbit_complete"] == 1, "orbit");
  o.require(ps.graph.girth == 12 && ps.graph.diameter == 6, "girth/diameter");
  o.require(ps.point_degree_min == 6 && ps.point_degree_max == 6 && ps.line_degree_min == 6 && ps.line_degree_max == 6, "biregular (6,6)");
  o.require(check_hexagon_invariants(L, J, g), "invariants");
  o.require(check_hexagon_root_groups(L, J, g), "root groups");
  o.require(check_commutator_relations(L, J), "relations");
  return o;
}

Outcome c8() {
  Outcome o;
  NormalizeOptions no;
  no.threads = threads;
  for (auto A : {exchange(5), hexagon_algebra()}) {
    LieFF L(A);
    auto c = check_normalize_roundtrip(L, 100, 0, no);
    o.require(c, A.tag());
    o.require(c.evaluated == 101, A.tag() + ": evaluated " + std::to_string(c.evaluated));
  }
  return o;
}

Outcome c9() {
  Outcome o;
  auto A = exchange(5);
  const auto& k = A.field();
  const std::size_t n = A.dim();
  std::size_t caught = 0, total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        ++total;
        auto bad = A.corrupted(i, j, l, k.one());
        auto s = check_structurable(bad);
        bool hit = !s.pass && !s.witness.empty();
        if (!hit) {
          LieFF L(bad, false);
          auto jc = L.check_jacobi();
          hit = !jc.pass && !jc.witness.empty();
        }
        if (hit) ++caught;
        o.require(hit, "constant (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ") not caught");
      }
  auto cfg = parse_config("[field]\ntype = \"Fp\"\np = 5\n[algebra]\nfamily = \"matrix\"\n");
  CommandOverrides ov;
  ov.debug_corrupt = true;
  std::ostringstream out, err;
  int rc = dispatch("relations", cfg, ov, out, err);
  o.require(rc == exit_check_failed, "relations exit code " + std::to_string(rc));
  o.require(out.str().find("witness: parameters") != std::string::npos, "relations witness missing");
  if (o.pass) o.detail = std::to_string(caught) + "/" + std::to_string(total) + " corruptions caught, relations exit 1";
  return o;
}

Outcome c10() {
  Outcome o;
  auto cfg = parse_config("[field]\ntype = \"Fp\"\np = 5\n[algebra]\nfamily = \"matrix\"\n[run]\nseed = 0\n");
  std::vector<std::string> texts;
  for (unsigned t : {1u, threads}) {
    CommandOverrides ov;
    ov.threads = t;
    auto path = (std::filesystem::path(workdir) / ("acceptance_geometry_" + std::to_string(texts.size()) + ".json")).string();
    ov.out = path;
    std::ostringstream out, err;
    o.require(dispatch("geometry", cfg, ov, out, err) == exit_pass, "geometry run failed: " + err.str());
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    texts.push_back(ss.str());
  }
  o.require(texts[0].size() > 0 && texts[0] == texts[1], "exports differ");
  if (o.pass) o.detail = std::to_string(texts[0].size()) + " bytes, identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  app.add_option("--threads", threads);
  app.add_option("--workdir", workdir);
  CLI11_PARSE(app, argc, argv);
  struct Criterion {
    int id;
    std::string title;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "structurable axioms on every basis quadruple", 10, c1},
      {2, "TKK Jacobi, grading, L0 and dimensions", 30, c2},
      {3, "eps/delta formulas and e_sigma closed form", 30, c3},
      {4, "Jordan Moufang set over F_25", 60, c4},
      {5, "skew Moufang set over the rational quaternions", 60, c5},
      {6, "triangle: thin hexagon, plane, distances, root groups", 120, c6},
      {7, "hexagon: orbit, polygon, invariants, root groups, relations", 600, c7},
      {8, "normalize_to_Splus round trip", 120, c8},
      {9, "negative controls", 60, c9},
      {10, "byte-identical geometry export", 120, c10},
  };
  bool ok = true;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.limit;
    if (!in_time && o.pass) o.detail = "over the time limit";
    bool pass = o.pass && in_time;
    ok = ok && pass;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << std::fixed
              << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit << " s)";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << std::endl;
  }
  return ok ? 0 : 1;
}
