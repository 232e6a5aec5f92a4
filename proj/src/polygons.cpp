#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "tkklab/geometry.hpp"

namespace tkk {

namespace {

Subspace<FF> span_of(const LieFF& L, const std::vector<Vec<FF>>& v) { return Subspace<FF>(L.field(), L.dim(), v); }

std::uint32_t vertex_of(const IncidenceGeometry& g, const Subspace<FF>& S) {
  if (auto p = g.find_point(S)) return *p;
  if (auto l = g.find_line(S)) return std::uint32_t(g.points.size() + *l);
  throw std::invalid_argument("subspace is not a vertex of the geometry");
}

CycleAction incidence_action(const IncidenceGeometry& g, const Graph& G) {
  CycleAction act;
  act.graph = &G;
  act.spaces = g.points;
  act.spaces.insert(act.spaces.end(), g.lines.begin(), g.lines.end());
  for (std::size_t i = 0; i < act.spaces.size(); ++i) act.index.emplace(subspace_key(act.spaces[i]), std::uint32_t(i));
  return act;
}

std::vector<Vec<FF>> all_vectors(const FF& k, std::size_t n) {
  std::vector<Vec<FF>> out;
  enumerate_vectors<FF>(k, n, [&](const Vec<FF>& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

}  // namespace

std::optional<std::uint32_t> CycleAction::act(const FF& k, const Automorphism<FF>& f, std::uint32_t v) const {
  auto it = index.find(subspace_key(f.apply(k, spaces[v])));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Report check_root_groups(const FF& k, const CycleAction& act, const std::vector<std::uint32_t>& cycle, std::size_t n,
                         const std::vector<RootGroup>& groups) {
  const Graph& G = *act.graph;
  const std::size_t len = 2 * n;
  Report rep;
  for (const auto& grp : groups) {
    Check fix(grp.name + " fixes the neighbourhoods of the interior root vertices");
    Check sharp(grp.name + " sharply transitive on the end neighbourhood");
    std::set<std::uint32_t> fixed;
    for (std::size_t t = 1; t < n; ++t) {
      auto c = cycle[(grp.position + t) % len];
      fixed.insert(c);
      fixed.insert(G[c].begin(), G[c].end());
    }
    auto end = cycle[grp.position % len], next = cycle[(grp.position + 1) % len];
    std::vector<std::uint32_t> targets;
    for (auto w : G[end])
      if (w != next) targets.push_back(w);
    std::set<std::uint32_t> images;
    for (const auto& u : grp.elements) {
      for (auto v : fixed) {
        auto img = act.act(k, u, v);
        fix.require(img && *img == v, u.label() + " moves vertex " + std::to_string(v));
        if (!fix.pass) break;
      }
      if (targets.empty()) continue;
      auto img = act.act(k, u, targets[0]);
      sharp.require(img && std::find(targets.begin(), targets.end(), *img) != targets.end(), u.label() + " leaves the end neighbourhood");
      if (img) images.insert(*img);
    }
    sharp.require(images.size() == targets.size() && grp.elements.size() == targets.size(),
                  std::to_string(grp.elements.size()) + " elements, " + std::to_string(images.size()) + " images, " +
                      std::to_string(targets.size()) + " targets");
    fix.note = sharp.note = "exhaustive, |U| = " + std::to_string(grp.elements.size());
    rep.add(fix);
    rep.add(sharp);
  }
  return rep;
}

std::vector<Subspace<FF>> triangle_cycle(const LieFF& L) {
  const FF& k = L.field();
  auto e1 = Vec<FF>{k.one(), k.zero()}, e2 = Vec<FF>{k.zero(), k.one()};
  auto sp = s_plus_space(L).basis_vector(0), sm = s_minus_space(L).basis_vector(0);
  auto p1 = L.a_plus(e1), p2 = L.a_plus(e2), m1 = L.a_minus(e1), m2 = L.a_minus(e2);
  return {span_of(L, {p2, sp}), span_of(L, {sp, p1}), span_of(L, {p1, m1}), span_of(L, {m1, sm}), span_of(L, {sm, m2}), span_of(L, {m2, p2})};
}

std::vector<RootGroup> triangle_root_groups(const LieFF& L) {
  const FF& k = L.field();
  std::vector<RootGroup> out(3);
  Vec<FF> z2{k.zero(), k.zero()};
  const auto& s = L.skew_basis()[0];
  for (std::uint32_t i = 0; i < k.order(); ++i) {
    auto f = k.element(i);
    out[0].elements.push_back(e_sigma(L, Vec<FF>{f, k.zero()}, z2, -1));
    out[1].elements.push_back(e_sigma(L, z2, vscale(k, f, s), -1));
    out[2].elements.push_back(e_sigma(L, Vec<FF>{k.zero(), f}, z2, -1));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    out[i].name = "U" + std::to_string(i + 1);
    out[i].position = i + 1;
  }
  return out;
}

Report check_triangle_root_groups(const LieFF& L, const IncidenceGeometry& gamma) {
  auto W = omega_graph(gamma);
  CycleAction act;
  act.graph = &W;
  act.spaces = gamma.lines;
  for (std::size_t i = 0; i < act.spaces.size(); ++i) act.index.emplace(subspace_key(act.spaces[i]), std::uint32_t(i));
  std::vector<std::uint32_t> cycle;
  for (const auto& S : triangle_cycle(L)) {
    auto l = gamma.find_line(S);
    if (!l) throw std::invalid_argument("reference cycle vertex is not a line of the geometry");
    cycle.push_back(*l);
  }
  Report rep;
  Check cyc("reference 6-cycle in the line graph");
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& adj = W[cycle[i]];
    cyc.require(std::binary_search(adj.begin(), adj.end(), cycle[(i + 1) % 6]), "x" + std::to_string(i) + " not adjacent to its successor");
  }
  rep.add(cyc);
  rep.merge(check_root_groups(L.field(), act, cycle, 3, triangle_root_groups(L)));
  return rep;
}

void add_triangle_labels(IncidenceGeometry& g, const LieFF& L) {
  if (auto p = g.find_point(s_plus_space(L))) g.labels.push_back({"S+", true, *p});
  if (auto p = g.find_point(s_minus_space(L))) g.labels.push_back({"S-", true, *p});
  auto cyc = triangle_cycle(L);
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (auto l = g.find_line(cyc[i])) g.labels.push_back({"x" + std::to_string(i), false, *l});
}

namespace {

Vec<FF> mat_el(const FF& k, std::size_t d, Scalar<FF> a, const Vec<FF>& l, const Vec<FF>& j, Scalar<FF> b) {
  return matrix_element(k, d, a, l, j, b);
}

}  // namespace

std::vector<Subspace<FF>> hexagon_cycle(const LieFF& L, const CubicNorm<FF>& J) {
  const FF& k = L.field();
  const std::size_t d = J.dim();
  Vec<FF> z(d, k.zero());
  auto E11 = mat_el(k, d, k.one(), z, z, k.zero()), E22 = mat_el(k, d, k.zero(), z, z, k.one());
  std::vector<Vec<FF>> odd = {s_plus_space(L).basis_vector(0), L.a_plus(E11), L.a_minus(E11),
                              s_minus_space(L).basis_vector(0), L.a_minus(E22), L.a_plus(E22)};
  std::vector<Subspace<FF>> c(12);
  for (std::size_t i = 0; i < 6; ++i) c[2 * i + 1] = span_of(L, {odd[i]});
  for (std::size_t i = 0; i < 6; ++i) c[2 * i] = span_of(L, {odd[(i + 5) % 6], odd[i]});
  return c;
}

Automorphism<FF> hexagon_root_element(const LieFF& L, const CubicNorm<FF>& J, int i, const Vec<FF>& param) {
  const FF& k = L.field();
  const auto& A = L.algebra();
  const std::size_t d = J.dim();
  Vec<FF> z(d, k.zero()), zA(A.dim(), k.zero());
  auto s = mat_el(k, d, k.one(), z, z, k.neg(k.one()));
  auto neg = [&](const Vec<FF>& v) { return vscale(k, k.neg(k.one()), v); };
  const std::string tag = "x" + std::to_string(i) + "(" + format_vector(k, param) + ")";
  Automorphism<FF> f;
  switch (i) {
    case 1: f = exp_ad(L, L.inst(A.T(mat_el(k, d, k.zero(), neg(param), z, k.zero()))), tag, false); break;
    case 2: f = e_sigma(L, mat_el(k, d, param[0], z, z, k.zero()), zA, -1, false); break;
    case 3: f = e_sigma(L, mat_el(k, d, k.zero(), z, param, k.zero()), zA, -1, false); break;
    case 4: f = e_sigma(L, zA, vscale(k, k.neg(param[0]), s), -1, false); break;
    case 5: f = e_sigma(L, mat_el(k, d, k.zero(), param, z, k.zero()), zA, -1, false); break;
    case 6: f = e_sigma(L, mat_el(k, d, k.zero(), z, z, k.neg(param[0])), zA, -1, false); break;
    default: throw std::invalid_argument("root position must be 1..6");
  }
  f.word = {tag};
  return f;
}

std::vector<RootGroup> hexagon_root_groups(const LieFF& L, const CubicNorm<FF>& J) {
  const FF& k = L.field();
  std::vector<RootGroup> out;
  for (int i = 1; i <= 6; ++i) {
    RootGroup g;
    g.name = "U" + std::to_string(i);
    g.position = std::size_t(i);
    for (const auto& p : all_vectors(k, i % 2 ? J.dim() : 1)) g.elements.push_back(hexagon_root_element(L, J, i, p));
    auto c = check_bracket_preserved(L, g.elements.back().mat);
    if (!c.pass) throw AutomorphismError(g.name + " element is not an automorphism: " + c.witness);
    out.push_back(std::move(g));
  }
  return out;
}

Report check_hexagon_root_groups(const LieFF& L, const CubicNorm<FF>& J, const IncidenceGeometry& gamma) {
  auto G = incidence_graph(gamma);
  auto act = incidence_action(gamma, G);
  std::vector<std::uint32_t> cycle;
  for (const auto& S : hexagon_cycle(L, J)) cycle.push_back(vertex_of(gamma, S));
  Report rep;
  Check cyc("reference 12-cycle in the incidence graph");
  for (std::size_t i = 0; i < 12; ++i) {
    const auto& adj = G[cycle[i]];
    cyc.require(std::binary_search(adj.begin(), adj.end(), cycle[(i + 1) % 12]), "x" + std::to_string(i) + " not incident with its successor");
  }
  rep.add(cyc);
  rep.merge(check_root_groups(L.field(), act, cycle, 6, hexagon_root_groups(L, J)));
  return rep;
}

void add_hexagon_labels(IncidenceGeometry& g, const LieFF& L, const CubicNorm<FF>& J) {
  auto cyc = hexagon_cycle(L, J);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (auto p = g.find_point(cyc[i])) g.labels.push_back({"x" + std::to_string(i), true, *p});
    if (auto l = g.find_line(cyc[i])) g.labels.push_back({"x" + std::to_string(i), false, *l});
  }
}

Report check_commutator_relations(const LieFF& L, const CubicNorm<FF>& J, const RelationOptions& opt) {
  const FF& k = L.field();
  const auto& A = L.algebra();
  const std::size_t d = J.dim(), n = L.dim();
  auto I = identity(k, n);
  auto x = [&](int i, const Vec<FF>& p) { return hexagon_root_element(L, J, i, p); };
  auto sc = [&](Scalar<FF> t) { return Vec<FF>{t}; };
  auto mm = [&](const Matrix<FF>& a, const Matrix<FF>& b) { return mat_mul(k, a, b); };
  // [f,g] = f^-1 g^-1 f g as matrices; right-hand sides are products in the written order.
  auto comm = [&](const Automorphism<FF>& f, const Automorphism<FF>& g) { return mm(mm(f.inv, g.inv), mm(f.mat, g.mat)); };
  auto neg = [&](const Vec<FF>& v) { return vscale(k, k.neg(k.one()), v); };
  const auto bump = opt.corrupt ? k.one() : k.zero();
  auto rhs = [&](int i, int j, const Vec<FF>& p, const Vec<FF>& q) -> Matrix<FF> {
    if (i == 1 && j == 3) return x(2, sc(k.add(J.T(p, q), bump))).mat;
    if (i == 1 && j == 5)
      return mm(mm(x(2, sc(k.neg(J.T(J.sharp(p), q)))).mat, x(3, J.cross(p, q)).mat), x(4, sc(J.T(p, J.sharp(q)))).mat);
    if (i == 1 && j == 6) {
      auto t = q[0];
      auto N = J.N(p);
      return mm(mm(mm(x(2, sc(k.neg(k.mul(t, N)))).mat, x(3, vscale(k, t, J.sharp(p))).mat), x(4, sc(k.mul(k.mul(t, t), N))).mat),
                x(5, neg(vscale(k, t, p))).mat);
    }
    if (i == 3 && j == 5) return x(4, sc(J.T(p, q))).mat;
    if (i == 2 && j == 6) return x(4, sc(k.mul(p[0], q[0]))).mat;
    return I;
  };
  auto name = [](int i, int j) {
    static const std::map<std::pair<int, int>, std::string> names = {
        {{1, 3}, "[x1(a),x3(b)] = x2(T(a,b))"},
        {{1, 5}, "[x1(a),x5(b)] = x2(-T(a#,b)) x3(a x b) x4(T(a,b#))"},
        {{1, 6}, "[x1(a),x6(t)] = x2(-tN(a)) x3(t a#) x4(t^2 N(a)) x5(-t a)"},
        {{3, 5}, "[x3(a),x5(b)] = x4(T(a,b))"},
        {{2, 6}, "[x2(t),x6(u)] = x4(tu)"}};
    auto it = names.find({i, j});
    if (it != names.end()) return it->second;
    return "[x" + std::to_string(i) + ",x" + std::to_string(j) + "] = 1";
  };
  Report rep;
  Rng rng(opt.seed);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      const std::size_t di = i % 2 ? d : 1, dj = j % 2 ? d : 1;
      Check c(name(i, j));
      auto test = [&](const Vec<FF>& p, const Vec<FF>& q) {
        c.require(comm(x(i, p), x(j, q)) == rhs(i, j, p, q), "parameters " + format_vector(k, p) + ", " + format_vector(k, q));
      };
      double size = 1;
      for (std::size_t t = 0; t < di + dj; ++t) size *= k.order();
      if (size <= double(opt.exhaustive_limit)) {
        enumerate_vectors<FF>(k, di + dj, [&](const Vec<FF>& v) {
          test(Vec<FF>(v.begin(), v.begin() + di), Vec<FF>(v.begin() + di, v.end()));
          return true;
        });
        c.note = "exhaustive";
      } else {
        for (std::size_t t = 0; t < opt.samples; ++t) test(random_vector(k, di, rng), random_vector(k, dj, rng));
        c.note = "sampled";
      }
      rep.add(c);
    }
  Check law("E- group law e(a,s) o e(b,t) = e(a+b, s+t+psi(a,b)/2)");
  auto half = k.inv(k.from_int(2));
  const auto& s = L.skew_basis()[0];
  for (std::size_t t = 0; t < opt.samples; ++t) {
    auto a = random_vector(k, A.dim(), rng), b = random_vector(k, A.dim(), rng);
    auto u = vscale(k, random_scalar(k, rng), s), w = vscale(k, random_scalar(k, rng), s);
    auto lhs = mm(e_sigma(L, a, u, -1, false).mat, e_sigma(L, b, w, -1, false).mat);
    auto r = e_sigma(L, vadd(k, a, b), vadd(k, vadd(k, u, w), vscale(k, half, A.psi(a, b))), -1, false).mat;
    law.require(lhs == r, "a=" + format_vector(k, a) + " b=" + format_vector(k, b));
  }
  law.note = "sampled";
  rep.add(law);
  return rep;
}

std::vector<Vec<FF>> hexagon_extremal_set(const CubicNorm<FF>& J) {
  const FF& k = J.field();
  const std::size_t d = J.dim();
  std::vector<Vec<FF>> out;
  for (const auto& x : all_vectors(k, d)) out.push_back(mat_el(k, d, J.N(x), x, J.sharp(x), k.one()));
  Vec<FF> z(d, k.zero());
  out.push_back(mat_el(k, d, k.one(), z, z, k.zero()));
  return out;
}

Report check_hexagon_invariants(const LieFF& L, const CubicNorm<FF>& J, const IncidenceGeometry& gamma, const HexagonInvariantOptions& opt) {
  const FF& k = L.field();
  const auto& A = L.algebra();
  const std::size_t P = gamma.points.size();
  Report rep;

  Check maximal("lines are maximal singular subspaces");
  std::vector<std::set<std::uint32_t>> collinear(P);
  for (const auto& l : gamma.line_points)
    for (auto a : l)
      for (auto b : l)
        if (a != b) collinear[a].insert(b);
  for (std::size_t l = 0; l < gamma.line_points.size(); ++l) {
    const auto& pts = gamma.line_points[l];
    std::set<std::uint32_t> on(pts.begin(), pts.end());
    for (auto r : collinear[pts[0]]) {
      if (on.count(r)) continue;
      bool all = true;
      for (auto p : pts) all = all && collinear[r].count(p);
      maximal.require(!all, "point " + std::to_string(r) + " extends line " + std::to_string(l));
    }
  }
  maximal.note = "exhaustive";
  rep.add(maximal);

  // Extremal points of A_+ against the explicit set.
  std::set<SubspaceKey> found, explicit_set;
  enumerate_points<FF>(k, A.dim(), [&](const Vec<FF>& a) {
    if (is_extremal(L, L.a_plus(a))) found.insert(subspace_key(Subspace<FF>(k, A.dim(), {a})));
    return true;
  });
  auto B = hexagon_extremal_set(J);
  for (const auto& b : B) explicit_set.insert(subspace_key(Subspace<FF>(k, A.dim(), {b})));
  Check bset("extremal points of A+ equal the explicit set");
  bset.require(found == explicit_set, std::to_string(found.size()) + " extremal points, explicit set has " + std::to_string(explicit_set.size()));
  bset.note = "exhaustive, " + std::to_string(found.size()) + " points";
  rep.add(bset);

  Check psi_ind("psi(a,b) = 0 on the explicit set forces dependence");
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (!is_zero(k, A.psi(B[i], B[j]))) continue;
      psi_ind.require(Subspace<FF>(k, A.dim(), {B[i], B[j]}).dim() == 1, format_vector(k, B[i]) + ", " + format_vector(k, B[j]));
    }
  rep.add(psi_ind);

  Check through("lines through S+ are <a+, s+> with a+ extremal");
  auto Sp = s_plus_space(L);
  auto sp = gamma.find_point(Sp);
  through.require(sp.has_value(), "S+ is not a point");
  if (sp) {
    std::set<SubspaceKey> expected;
    for (const auto& b : B) expected.insert(subspace_key(Sp.sum(k, span_of(L, {L.a_plus(b)}))));
    std::set<SubspaceKey> got;
    for (auto l : gamma.point_lines[*sp]) got.insert(subspace_key(gamma.lines[l]));
    through.require(got == expected, std::to_string(got.size()) + " lines, " + std::to_string(expected.size()) + " expected");
  }
  rep.add(through);

  Check five("five-way extremality characterization");
  {
    std::vector<Vec<FF>> elems;
    enumerate_vectors<FF>(k, A.dim(), [&](const Vec<FF>& a) {
      if (!is_zero(k, a)) elems.push_back(a);
      return true;
    });
    five = check_extremal_characterization(L, elems);
    five.note = "exhaustive over A";
  }
  rep.add(five);

  Check root1("exp(ad x) fixes the lines through <y> for collinear x,y");
  std::size_t budget = opt.root_pair_budget, done = 0;
  for (std::size_t x = 0; x < P && done < budget; ++x) {
    auto f = exp_ad(L, gamma.points[x].basis_vector(0), "exp ad x", false);
    for (auto y : collinear[x]) {
      if (done++ >= budget) break;
      for (auto l : gamma.point_lines[y])
        root1.require(f.apply(k, gamma.lines[l]) == gamma.lines[l], "x=" + std::to_string(x) + " y=" + std::to_string(y) + " line " + std::to_string(l));
    }
  }
  root1.note = std::to_string(done) + " ordered pairs" + (done >= budget ? " (budget reached)" : "");
  rep.add(root1);

  auto nd = check_nondegenerate(L, opt.nondegenerate_samples, opt.seed);
  rep.add(nd);
  return rep;
}

Report check_cycle_transitivity(const LieFF& L, const CubicNorm<FF>& J, const IncidenceGeometry& gamma, std::size_t cycles, std::uint64_t seed) {
  const FF& k = L.field();
  const auto& A = L.algebra();
  const std::size_t d = J.dim();
  auto G = incidence_graph(gamma);
  auto act = incidence_action(gamma, G);
  std::vector<std::uint32_t> ref;
  for (const auto& S : hexagon_cycle(L, J)) ref.push_back(vertex_of(gamma, S));
  // Grade-zero unipotents: they fix S+ and S-.
  std::vector<Automorphism<FF>> torus;
  Vec<FF> z(d, k.zero());
  for (std::size_t i = 0; i < d; ++i) {
    auto e = unit_vector(k, d, i);
    torus.push_back(exp_ad(L, L.inst(A.T(mat_el(k, d, k.zero(), e, z, k.zero()))), "expT(u" + std::to_string(i) + ")", false));
    torus.push_back(exp_ad(L, L.inst(A.T(mat_el(k, d, k.zero(), z, e, k.zero()))), "expT(l" + std::to_string(i) + ")", false));
  }
  Check c("E(A) maps random 12-cycles onto the reference cycle");
  Rng rng(seed);
  const std::uint32_t P = std::uint32_t(gamma.points.size());
  auto path_to = [&](std::uint32_t from, const std::vector<int>& dist) {
    std::vector<std::uint32_t> path{from};
    while (dist[path.back()] > 0) {
      std::optional<std::uint32_t> nxt;
      for (auto w : G[path.back()])
        if (dist[w] == dist[path.back()] - 1) {
          if (nxt) return std::vector<std::uint32_t>{};
          nxt = w;
        }
      path.push_back(*nxt);
    }
    return path;
  };
  NormalizeOptions nopt;
  nopt.seed = seed;
  for (std::size_t t = 0; t < cycles; ++t) {
    std::uint32_t y1 = std::uint32_t(rng() % P);
    auto d1 = bfs_distances(G, y1);
    std::vector<std::uint32_t> opp;
    for (std::uint32_t v = 0; v < P; ++v)
      if (d1[v] == 6) opp.push_back(v);
    if (opp.empty() || G[y1].size() < 2) {
      c.fail("point " + std::to_string(y1) + " has no opposite point");
      break;
    }
    auto y7 = opp[rng() % opp.size()];
    auto d7 = bfs_distances(G, y7);
    std::size_t ia = rng() % G[y1].size(), ib = rng() % (G[y1].size() - 1);
    if (ib >= ia) ++ib;
    auto pa = path_to(G[y1][ia], d7), pb = path_to(G[y1][ib], d7);
    if (pa.size() != 6 || pb.size() != 6) {
      c.fail("no unique path to the opposite point in trial " + std::to_string(t));
      break;
    }
    // cyc[1] = y1, cyc[2..7] along pa, cyc[7..11], cyc[0] back along pb.
    std::vector<std::uint32_t> cyc(12);
    cyc[1] = y1;
    for (std::size_t i = 0; i < 6; ++i) cyc[2 + i] = pa[i];
    for (std::size_t i = 0; i < 5; ++i) cyc[(12 - i) % 12] = pb[i];
    auto where = [&](const Automorphism<FF>& f, std::uint32_t v) { return act.act(k, f, v); };
    std::string stage;
    try {
      stage = "normalize";
      auto phi = normalize_to_Splus(L, act.spaces[y1], nopt);
      auto g = inverse(phi);
      stage = "opposite";
      auto o = where(g, y7);
      if (!o) throw std::runtime_error("image of y7 is not a point");
      auto rec = recover_sigma_parameters(L, act.spaces[*o], 1);
      if (!rec) throw std::runtime_error("image of y7 is not e+(a,s)(S-)");
      g = product(L, g, inverse(e_sigma(L, rec->a, rec->s, 1, false)));
      stage = "torus";
      auto c6 = where(g, cyc[6]), c8 = where(g, cyc[8]);
      if (!c6 || !c8) throw std::runtime_error("cycle image leaves the geometry");
      std::map<std::pair<std::uint32_t, std::uint32_t>, Automorphism<FF>> seen;
      std::deque<std::pair<std::uint32_t, std::uint32_t>> q;
      seen.emplace(std::make_pair(*c6, *c8), identity_automorphism(L));
      q.push_back({*c6, *c8});
      std::optional<Automorphism<FF>> h;
      while (!q.empty() && !h) {
        auto st = q.front();
        q.pop_front();
        const auto& cur = seen.at(st);
        if (st.first == ref[6] && st.second == ref[8]) {
          h = cur;
          break;
        }
        for (const auto& gen : torus) {
          auto a6 = where(gen, st.first), a8 = where(gen, st.second);
          if (!a6 || !a8) continue;
          std::pair<std::uint32_t, std::uint32_t> ns{*a6, *a8};
          if (seen.count(ns)) continue;
          seen.emplace(ns, product(L, cur, gen));
          q.push_back(ns);
        }
      }
      if (!h) throw std::runtime_error("lines through S- not reached");
      g = product(L, g, *h);
      stage = "verify";
      for (std::size_t i = 0; i < 12; ++i) {
        auto img = where(g, cyc[i]);
        if (!img || *img != ref[i]) throw std::runtime_error("vertex " + std::to_string(i) + " not mapped onto x" + std::to_string(i));
      }
      c.require(true, "");
    } catch (const std::exception& e) {
      c.require(false, "trial " + std::to_string(t) + " (" + stage + "): " + e.what());
    }
  }
  c.note = std::to_string(cycles) + " seeded cycles";
  Report rep;
  rep.add(c);
  return rep;
}

Report check_algebra_inner_ideals(const Algebra<FF>& A, std::size_t max_dim) {
  const FF& k = A.field();
  const std::size_t n = A.dim();
  Check c("proper inner ideals of the algebra are one-dimensional");
  std::map<std::size_t, std::size_t> by_dim;
  for (std::size_t d = 1; d <= max_dim && d < n; ++d)
    enumerate_subspaces<FF>(k, n, d, [&](const Subspace<FF>& S) {
      auto b = S.basis_vectors();
      std::vector<Matrix<FF>> ops;
      for (std::size_t i = 0; i < b.size(); ++i) {
        ops.push_back(A.U(b[i]));
        for (std::size_t j = i + 1; j < b.size(); ++j)
          ops.push_back(mat_sub(k, mat_sub(k, A.U(vadd(k, b[i], b[j])), A.U(b[i])), A.U(b[j])));
      }
      for (const auto& U : ops)
        for (std::size_t e = 0; e < n; ++e)
          if (!S.contains(k, U.col(e))) return true;
      ++by_dim[d];
      c.require(d == 1, "inner ideal of dimension " + std::to_string(d) + ": " + format_matrix(k, S.basis()));
      return true;
    });
  c.note = "exhaustive up to dimension " + std::to_string(max_dim) + ";";
  for (auto [d, m] : by_dim) c.note += " dim " + std::to_string(d) + ": " + std::to_string(m);
  Report rep;
  rep.add(c);
  return rep;
}

}  // namespace tkk
