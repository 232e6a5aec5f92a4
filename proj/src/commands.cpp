#include "tkklab/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "tkklab/geometry.hpp"

namespace tkk {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K>
Scalar<K> parse_scalar(const K& k, std::string s) {
  std::erase(s, ' ');
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if constexpr (K::is_finite) {
    auto slash = s.find('/');
    long long num = std::stoll(s.substr(0, slash));
    long long den = slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1));
    return k.from_rational(num, den);
  } else {
    return k.from_string(s);
  }
}

template <class K>
std::vector<Scalar<K>> parse_scalars(const K& k, const std::vector<std::string>& v) {
  std::vector<Scalar<K>> out;
  for (const auto& s : v) out.push_back(parse_scalar(k, s));
  return out;
}

template <class K>
struct Instance {
  std::shared_ptr<const K> k;
  std::optional<Algebra<K>> A;
  std::optional<CubicNorm<K>> J;
};

template <class K>
Instance<K> build_instance(std::shared_ptr<const K> kp, const RunConfig& cfg, const CommandOverrides& o) {
  const K& k = *kp;
  const auto& a = cfg.algebra;
  Instance<K> in{kp, std::nullopt, std::nullopt};
  if (a.family == "exchange") {
    if (a.base == "field") {
      in.A = build_exchange(build_field_algebra(kp));
    } else {
      in.A = build_exchange(build_hurwitz(kp, parse_scalars(k, a.params), false));
    }
  } else if (a.family == "matrix") {
    if (a.cubic == "field") {
      if constexpr (std::is_same_v<K, FiniteField>) {
        in.J = build_cubic_field(kp, a.cubic_modulus);
      }
    } else {
      in.J = build_cubic_rank1(kp);
    }
    auto eta = parse_scalar(k, o.debug_eta ? *o.debug_eta : a.eta);
    in.A = build_matrix_structurable(*in.J, eta);
  } else if (a.family == "jordan") {
    if (a.kind == "extension") {
      in.A = build_jordan_extension(kp, parse_scalars(k, a.modulus));
    } else {
      const std::size_t n = a.gram.size();
      Matrix<K> g(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) g(r, c) = parse_scalar(k, a.gram[r][c]);
      in.A = build_jordan_quadratic(kp, g, parse_scalars(k, a.basepoint));
    }
  } else {
    in.A = build_hurwitz(kp, parse_scalars(k, a.params), a.division);
  }
  return in;
}

template <class K>
void print_header(const Instance<K>& in, std::ostream& out) {
  out << "instance: " << in.A->tag() << " over " << in.k->describe() << ", dim " << in.A->dim() << "\n";
}

bool is_plain_exchange(const RunConfig& cfg) { return cfg.algebra.family == "exchange" && cfg.algebra.base == "field"; }

template <class K>
Report verify_algebra(const Instance<K>& in, const RunConfig& cfg, std::ostream& out) {
  const auto& A = *in.A;
  const auto& r = cfg.run;
  Report rep = validate_algebra(A);
  StructurableMode mode;
  mode.sampled = A.dim() > 24;
  mode.samples = r.samples;
  mode.seed = r.seed;
  auto s = check_structurable(A, mode);
  if (!mode.sampled) s.note = "all basis quadruples";
  rep.add(s);
  if (cfg.algebra.family == "hurwitz") rep.merge(check_alternative(A, r.samples, r.seed));
  rep.merge(check_operator_identities(A, r.samples, r.seed));
  if (in.J) rep.merge(check_cubic(*in.J, r.samples, r.seed));
  out << "skew dimension " << A.skew().dim() << ", psi rank " << psi_gram_rank(A) << "\n";
  return rep;
}

template <class K>
Report build_tkk(const TKK<K>& L, std::ostream& out) {
  const auto& A = L.algebra();
  auto d = L.grade_dims();
  out << "dim L = " << d[0] << " + " << d[1] << " + " << d[2] << " + " << d[3] << " + " << d[4] << " = " << L.dim() << "\n";
  Report rep;
  rep.add(L.check_jacobi());
  rep.add(L.check_grading());
  rep.add(L.check_l0_generated());
  rep.add(check_eps_delta_consistency(L));
  if (!L.skew_basis().empty()) {
    Check cf("closed form of e_sigma images on basis (a,s,t)");
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (const auto& s : L.skew_basis())
        for (const auto& t : L.skew_basis()) {
          auto c = check_image_closed_form(L, A.basis(i), s, t);
          cf.evaluated += c.evaluated;
          if (!c.pass) cf.fail(c.witness);
        }
    rep.add(cf);
  }
  return rep;
}

int finish(const Report& rep, std::ostream& out) {
  out << rep.format();
  out << (rep.pass() ? "overall: PASS" : "overall: FAIL") << "\n";
  return rep.pass() ? exit_pass : exit_check_failed;
}

IncidenceGeometry make_geometry_ff(const LieFF& L, const Instance<FF>& in, const RunConfig& cfg, Report& rep) {
  const auto& fam = cfg.algebra.family;
  const auto& r = cfg.run;
  IncidenceGeometry g;
  if (is_plain_exchange(cfg)) {
    g = build_triangle_geometry(L, r.budget, r.threads);
    add_triangle_labels(g, L);
  } else if (fam == "matrix") {
    if (cfg.algebra.cubic == "field" && !r.large)
      throw UsageError("the cubic-field hexagon is large; pass --large to enumerate its points");
    if (r.large) {
      g = build_point_orbit(L, in.J->dim(), r.budget, r.threads);
    } else {
      g = build_hexagon_geometry(L, in.J->dim(), r.budget, r.threads);
      add_hexagon_labels(g, L, *in.J);
    }
  } else if (fam == "jordan") {
    auto ms = moufang_set_jordan(L);
    rep.merge(ms.report);
    g = make_geometry(L.field().describe(), "moufang-set", ms.points, {}, {});
    g.stats["points"] = std::int64_t(g.points.size());
  } else {
    throw UsageError("geometry is defined for exchange (field base), matrix and jordan families");
  }
  Check orbit("orbit enumeration within budget");
  orbit.require(g.stats.count("orbit_complete") == 0 || g.stats["orbit_complete"] == 1, "budget " + std::to_string(r.budget) + " exhausted");
  rep.add(orbit);
  if (g.stats.count("anomalies")) {
    Check an("no extremal points outside the orbit on commuting spans");
    an.require(g.stats["anomalies"] == 0, std::to_string(g.stats["anomalies"]) + " anomalies");
    rep.add(an);
  }
  if (!g.lines.empty()) {
    auto ps = polygon_stats(g, r.threads);
    g.stats["girth"] = ps.graph.girth;
    g.stats["diameter"] = ps.graph.diameter;
    Check poly("incidence graph is a generalized polygon");
    poly.require(ps.generalized, ps.verdict);
    poly.note = ps.verdict + ": girth " + std::to_string(ps.graph.girth) + ", diameter " + std::to_string(ps.graph.diameter);
    rep.add(poly);
  }
  return g;
}

template <class K>
int run_typed(const std::string& cmd, const Instance<K>& in, const RunConfig& cfg, const CommandOverrides& o, std::ostream& out,
              std::ostream& err) {
  const auto& fam = cfg.algebra.family;
  const auto& r = cfg.run;
  constexpr bool finite = std::is_same_v<K, FF>;
  if (cmd == "verify-algebra") {
    print_header(in, out);
    return finish(verify_algebra(in, cfg, out), out);
  }
  TKK<K> L(*in.A, false);
  if (cmd == "build-tkk") {
    print_header(in, out);
    return finish(build_tkk(L, out), out);
  }
  if (cmd == "geometry") {
    if constexpr (!finite) {
      throw UsageError("geometry needs a finite field");
    } else {
      Report rep;
      auto g = make_geometry_ff(L, in, cfg, rep);
      auto text = geometry_to_json(g, L.field()).dump(1) + "\n";
      std::ostream& log = r.out.empty() ? err : out;
      if (r.out.empty()) {
        out << text;
      } else {
        std::ofstream f(r.out, std::ios::binary);
        if (!f) throw UsageError("cannot write " + r.out);
        f << text;
      }
      print_header(in, log);
      log << g.family << ": " << g.points.size() << " points, " << g.lines.size() << " lines\n";
      return finish(rep, log);
    }
  }
  if (cmd == "moufang") {
    print_header(in, out);
    Report rep;
    if (fam == "hurwitz") {
      rep.merge(moufang_set_skew(L, r.samples, r.seed));
      return finish(rep, out);
    }
    if constexpr (!finite) {
      throw UsageError("moufang over Q is defined for the hurwitz family only");
    } else {
      if (fam == "jordan") {
        auto ms = moufang_set_jordan(L);
        out << "moufang set: " << ms.points.size() << " points\n";
        rep.merge(ms.report);
      } else if (is_plain_exchange(cfg)) {
        auto g = make_geometry_ff(L, in, cfg, rep);
        auto plane = dual_double_extract(g, r.threads);
        auto oracle = projective_plane_oracle(L.field());
        rep.add(plane.axioms);
        Check cmp("extracted plane matches PG(2,q) counts");
        cmp.require(plane.points == oracle.points && plane.lines == oracle.lines && oracle.axioms.pass,
                    std::to_string(plane.points) + " points, " + std::to_string(plane.lines) + " lines");
        rep.add(cmp);
        rep.merge(check_triangle_distances(L, g));
        rep.merge(check_triangle_root_groups(L, g));
      } else if (fam == "matrix") {
        if (cfg.algebra.cubic == "field")
          throw UsageError("moufang needs the full incidence structure, which is out of reach for the cubic-field hexagon; use geometry --large");
        auto g = make_geometry_ff(L, in, cfg, rep);
        rep.merge(check_hexagon_root_groups(L, *in.J, g));
        HexagonInvariantOptions ho;
        ho.seed = r.seed;
        ho.nondegenerate_samples = r.samples;
        rep.merge(check_hexagon_invariants(L, *in.J, g, ho));
        rep.merge(check_cycle_transitivity(L, *in.J, g, r.cycles, r.seed));
        rep.merge(check_algebra_inner_ideals(L.algebra(), 3));
      } else {
        throw UsageError("moufang is not defined for this family");
      }
      return finish(rep, out);
    }
  }
  if (cmd == "relations") {
    if constexpr (!finite) {
      throw UsageError("relations needs a finite field");
    } else {
      if (fam != "matrix") throw UsageError("relations is defined for the matrix family");
      print_header(in, out);
      RelationOptions ro;
      ro.samples = r.samples;
      ro.seed = r.seed;
      ro.corrupt = o.debug_corrupt;
      if (o.debug_eta) out << "debug: eta = " << *o.debug_eta << "\n";
      if (o.debug_corrupt) out << "debug: one right-hand-side parameter shifted\n";
      return finish(check_commutator_relations(L, *in.J, ro), out);
    }
  }
  if (cmd == "report") {
    print_header(in, out);
    Report all;
    auto section = [&](const std::string& name, auto&& run) {
      out << "== " << name << "\n";
      Report rep = run();
      out << rep.format();
      all.merge(rep);
    };
    section("algebra", [&] { return verify_algebra(in, cfg, out); });
    section("tkk", [&] { return build_tkk(L, out); });
    if (fam == "exchange" || fam == "matrix")
      section("reduction to S+", [&] {
        NormalizeOptions no;
        no.seed = r.seed;
        no.max_word = r.word_length;
        no.threads = r.threads;
        Report red;
        red.add(check_normalize_roundtrip(L, r.cycles, r.seed, no));
        return red;
      });
    if (fam == "hurwitz") section("moufang set", [&] { return moufang_set_skew(L, r.samples, r.seed); });
    if constexpr (finite) {
      if (fam == "jordan") section("moufang set", [&] { return moufang_set_jordan(L).report; });
      if (fam == "matrix")
        section("commutator relations", [&] {
          RelationOptions ro;
          ro.samples = r.samples;
          ro.seed = r.seed;
          return check_commutator_relations(L, *in.J, ro);
        });
    }
    out << "checks: " << all.checks.size() << "\n";
    out << (all.pass() ? "overall: PASS" : "overall: FAIL") << "\n";
    return all.pass() ? exit_pass : exit_check_failed;
  }
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify-algebra", "build-tkk", "geometry", "polygon", "moufang", "relations", "report"};
  return names;
}

void apply_overrides(RunConfig& cfg, const CommandOverrides& o) {
  if (o.seed) cfg.run.seed = *o.seed;
  if (o.samples) cfg.run.samples = *o.samples;
  if (o.threads) cfg.run.threads = std::max(1u, *o.threads);
  if (o.large) cfg.run.large = true;
  if (o.out) cfg.run.out = *o.out;
}

int dispatch(const std::string& cmd, const RunConfig& cfg0, const CommandOverrides& o, std::ostream& out, std::ostream& err) {
  RunConfig cfg = cfg0;
  apply_overrides(cfg, o);
  try {
    if (std::find(command_names().begin(), command_names().end(), cmd) == command_names().end())
      throw UsageError("unknown command '" + cmd + "'");
    if (cmd == "polygon") throw UsageError("polygon takes an exported geometry JSON, not a config");
    if (o.debug_eta && cfg.algebra.family != "matrix") throw UsageError("--debug-eta applies to the matrix family only");
    if (cfg.field.type == "Q") {
      auto kp = std::make_shared<const RationalField>();
      return run_typed(cmd, build_instance(kp, cfg, o), cfg, o, out, err);
    }
    auto kp = std::make_shared<const FiniteField>(cfg.field.p, cfg.field.modulus);
    return run_typed(cmd, build_instance(kp, cfg, o), cfg, o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return exit_check_failed;
  }
}

int polygon_command(const std::string& json_path, unsigned threads, std::ostream& out, std::ostream& err) {
  nlohmann::json j;
  try {
    std::ifstream in(json_path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + json_path);
    j = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  try {
    auto k = field_from_json(j);
    auto g = geometry_from_json(j, k);
    if (g.lines.empty()) throw UsageError("geometry has no lines");
    auto ps = polygon_stats(g, threads);
    out << ps.verdict << ": girth " << ps.graph.girth << ", diameter " << ps.graph.diameter << "\n";
    out << ps.points << " points, " << ps.lines << " lines, point degree " << ps.point_degree_min << ".." << ps.point_degree_max
        << ", line degree " << ps.line_degree_min << ".." << ps.line_degree_max << "\n";
    return ps.generalized ? exit_pass : exit_check_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

int run_command(const std::string& cmd, const std::string& target, const CommandOverrides& o, std::ostream& out, std::ostream& err) {
  if (cmd == "polygon") return polygon_command(target, o.threads.value_or(1), out, err);
  RunConfig cfg;
  try {
    cfg = load_config(target);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return exit_usage;
  }
  return dispatch(cmd, cfg, o, out, err);
}

}  // namespace tkk
