#include "tkklab/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace tkk {

namespace {

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& fn) {
  unsigned nt = std::max(1u, std::min<unsigned>(threads, unsigned(std::max<std::size_t>(n, 1))));
  if (nt == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(0u, i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += nt) fn(t, i);
    });
  for (auto& th : pool) th.join();
}

Subspace<FF> line_of(const FF& k, const Vec<FF>& v) { return Subspace<FF>(k, v.size(), {v}); }

}  // namespace

SubspaceKey subspace_key(const Subspace<FF>& S) {
  SubspaceKey key;
  key.reserve(1 + S.basis().a.size());
  key.push_back(std::uint32_t(S.dim()));
  key.insert(key.end(), S.basis().a.begin(), S.basis().a.end());
  return key;
}

std::size_t SubspaceKeyHash::operator()(const SubspaceKey& k) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : k) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return std::size_t(h);
}

std::pair<std::uint32_t, bool> SubspaceIndex::insert(const Subspace<FF>& S) {
  auto [it, ins] = map_.emplace(subspace_key(S), std::uint32_t(items_.size()));
  if (ins) items_.push_back(S);
  return {it->second, ins};
}

std::optional<std::uint32_t> SubspaceIndex::find(const Subspace<FF>& S) const {
  auto it = map_.find(subspace_key(S));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

OrbitResult enumerate_orbit(const std::vector<Subspace<FF>>& seeds, const std::vector<Automorphism<FF>>& gens, const FF& k,
                            std::size_t budget, unsigned threads) {
  SubspaceIndex idx;
  std::vector<std::uint32_t> frontier;
  for (const auto& s : seeds) {
    auto [i, ins] = idx.insert(s);
    if (ins) frontier.push_back(i);
  }
  OrbitResult res;
  while (!frontier.empty()) {
    const std::size_t m = frontier.size() * gens.size();
    std::vector<Subspace<FF>> images(m);
    parallel_for(m, threads, [&](unsigned, std::size_t t) {
      images[t] = gens[t % gens.size()].apply(k, idx.items()[frontier[t / gens.size()]]);
    });
    std::vector<std::uint32_t> next;
    for (auto& img : images) {
      if (idx.size() >= budget) {
        res.complete = false;
        break;
      }
      auto [i, ins] = idx.insert(img);
      if (ins) next.push_back(i);
    }
    if (!res.complete) break;
    frontier = std::move(next);
  }
  res.items = idx.items();
  return res;
}

std::vector<Automorphism<FF>> orbit_generators(const LieFF& L, std::size_t jdim) {
  const FF& k = L.field();
  const auto& A = L.algebra();
  auto gens = basis_generators(L);
  Vec<FF> zj(jdim, k.zero());
  for (std::size_t i = 0; i < jdim; ++i) {
    auto x = matrix_element(k, jdim, k.zero(), unit_vector(k, jdim, i), zj, k.zero());
    gens.push_back(exp_ad(L, L.inst(A.T(x)), "expT(e" + std::to_string(i) + ")"));
  }
  return gens;
}

LineBuild build_lines(const LieFF& L, const std::vector<Subspace<FF>>& points, LineMode mode, unsigned threads) {
  const FF& k = L.field();
  const std::size_t n = L.dim(), P = points.size();
  LineBuild out;
  SubspaceIndex idx;
  std::vector<Vec<FF>> vecs(P);
  for (std::size_t i = 0; i < P; ++i) {
    if (points[i].dim() != 1) throw std::invalid_argument("build_lines expects one-dimensional points");
    idx.insert(points[i]);
    vecs[i] = points[i].basis_vector(0);
  }
  std::vector<Matrix<FF>> ads(P);
  parallel_for(P, threads, [&](unsigned, std::size_t i) { ads[i] = L.ad(vecs[i]); });
  const bool prime = k.is_prime();
  const std::uint64_t p = k.characteristic();
  auto commutes = [&](std::size_t i, std::size_t j) {
    const auto& M = ads[i];
    const auto& v = vecs[j];
    for (std::size_t r = 0; r < n; ++r) {
      if (prime) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < n; ++c) acc += std::uint64_t(M.a[r * n + c]) * v[c];
        if (acc % p) return false;
      } else {
        auto acc = k.zero();
        for (std::size_t c = 0; c < n; ++c) acc = k.add(acc, k.mul(M.a[r * n + c], v[c]));
        if (!k.is_zero(acc)) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<std::uint32_t>> partners(P);
  parallel_for(P, threads, [&](unsigned, std::size_t i) {
    for (std::size_t j = i + 1; j < P; ++j)
      if (commutes(i, j)) partners[i].push_back(std::uint32_t(j));
  });
  std::unordered_set<SubspaceKey, SubspaceKeyHash> seen;
  for (std::size_t i = 0; i < P; ++i)
    for (auto j : partners[i]) {
      ++out.commuting_pairs;
      Subspace<FF> span(k, n, {vecs[i], vecs[j]});
      if (!seen.insert(subspace_key(span)).second) continue;
      std::vector<std::uint32_t> on;
      std::vector<Vec<FF>> missing;
      enumerate_points<FF>(k, 2, [&](const Vec<FF>& c) {
        auto v = vadd(k, vscale(k, c[0], vecs[i]), vscale(k, c[1], vecs[j]));
        if (auto f = idx.find(line_of(k, v))) {
          on.push_back(*f);
        } else {
          missing.push_back(v);
        }
        return true;
      });
      bool accept = missing.empty();
      if (mode == LineMode::extremal) {
        for (const auto& v : missing)
          if (is_extremal(L, v)) {
            ++out.anomalies;
            if (out.anomaly_witness.empty()) out.anomaly_witness = format_vector(k, v);
          }
      } else {
        accept = is_inner_ideal(L, span).pass;
      }
      if (!accept) continue;
      std::sort(on.begin(), on.end());
      out.lines.push_back(std::move(span));
      out.line_points.push_back(std::move(on));
    }
  return out;
}

std::optional<std::uint32_t> IncidenceGeometry::find_point(const Subspace<FF>& S) const {
  auto it = pidx_.find(subspace_key(S));
  if (it == pidx_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> IncidenceGeometry::find_line(const Subspace<FF>& S) const {
  auto it = lidx_.find(subspace_key(S));
  if (it == lidx_.end()) return std::nullopt;
  return it->second;
}

void IncidenceGeometry::index_all() {
  pidx_.clear();
  lidx_.clear();
  for (std::size_t i = 0; i < points.size(); ++i) pidx_.emplace(subspace_key(points[i]), std::uint32_t(i));
  for (std::size_t i = 0; i < lines.size(); ++i) lidx_.emplace(subspace_key(lines[i]), std::uint32_t(i));
  point_lines.assign(points.size(), {});
  for (std::size_t l = 0; l < line_points.size(); ++l)
    for (auto p : line_points[l]) point_lines[p].push_back(std::uint32_t(l));
}

IncidenceGeometry make_geometry(std::string field, std::string family, std::vector<Subspace<FF>> points, std::vector<Subspace<FF>> lines,
                                const std::vector<std::vector<std::uint32_t>>& line_points) {
  auto order_of = [](const std::vector<Subspace<FF>>& v) {
    std::vector<SubspaceKey> keys;
    for (const auto& s : v) keys.push_back(subspace_key(s));
    std::vector<std::uint32_t> ord(v.size());
    std::iota(ord.begin(), ord.end(), 0u);
    std::sort(ord.begin(), ord.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
    return ord;
  };
  auto pord = order_of(points), lord = order_of(lines);
  std::vector<std::uint32_t> prank(points.size());
  for (std::size_t i = 0; i < pord.size(); ++i) prank[pord[i]] = std::uint32_t(i);
  IncidenceGeometry g;
  g.field = std::move(field);
  g.family = std::move(family);
  for (auto i : pord) g.points.push_back(std::move(points[i]));
  for (auto i : lord) {
    g.lines.push_back(std::move(lines[i]));
    std::vector<std::uint32_t> lp;
    for (auto p : line_points[i]) lp.push_back(prank[p]);
    std::sort(lp.begin(), lp.end());
    g.line_points.push_back(std::move(lp));
  }
  g.index_all();
  g.stats["points"] = std::int64_t(g.points.size());
  g.stats["lines"] = std::int64_t(g.lines.size());
  return g;
}

IncidenceGeometry build_point_orbit(const LieFF& L, std::size_t jdim, std::size_t budget, unsigned threads) {
  auto orbit = enumerate_orbit({s_plus_space(L)}, orbit_generators(L, jdim), L.field(), budget, threads);
  auto g = make_geometry(L.field().describe(), L.algebra().tag(), std::move(orbit.items), {}, {});
  g.stats["orbit_complete"] = orbit.complete;
  return g;
}

IncidenceGeometry build_hexagon_geometry(const LieFF& L, std::size_t jdim, std::size_t budget, unsigned threads) {
  auto orbit = enumerate_orbit({s_plus_space(L)}, orbit_generators(L, jdim), L.field(), budget, threads);
  auto lines = build_lines(L, orbit.items, LineMode::extremal, threads);
  auto g = make_geometry(L.field().describe(), L.algebra().tag(), std::move(orbit.items), std::move(lines.lines), lines.line_points);
  g.stats["orbit_complete"] = orbit.complete;
  g.stats["commuting_pairs"] = std::int64_t(lines.commuting_pairs);
  g.stats["anomalies"] = std::int64_t(lines.anomalies);
  return g;
}

IncidenceGeometry build_triangle_geometry(const LieFF& L, std::size_t budget, unsigned threads) {
  auto orbit = enumerate_orbit({s_plus_space(L)}, orbit_generators(L, 0), L.field(), budget, threads);
  auto lines = build_lines(L, orbit.items, LineMode::inner_ideal, threads);
  auto g = make_geometry(L.field().describe(), L.algebra().tag(), std::move(orbit.items), std::move(lines.lines), lines.line_points);
  g.stats["orbit_complete"] = orbit.complete;
  g.stats["commuting_pairs"] = std::int64_t(lines.commuting_pairs);
  return g;
}

std::vector<int> bfs_distances(const Graph& G, std::uint32_t src) {
  std::vector<int> d(G.size(), -1);
  std::deque<std::uint32_t> q{src};
  d[src] = 0;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (auto w : G[u])
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        q.push_back(w);
      }
  }
  return d;
}

GraphStats graph_stats(const Graph& G, unsigned threads) {
  GraphStats st;
  st.vertices = G.size();
  if (G.empty()) return st;
  std::size_t deg_sum = 0;
  st.min_degree = G[0].size();
  for (const auto& adj : G) {
    deg_sum += adj.size();
    st.min_degree = std::min(st.min_degree, adj.size());
    st.max_degree = std::max(st.max_degree, adj.size());
  }
  st.edges = deg_sum / 2;
  unsigned nt = std::max(1u, threads);
  std::vector<int> girth(nt, -1), ecc(nt, 0);
  std::vector<char> disconnected(nt, 0);
  parallel_for(G.size(), nt, [&](unsigned t, std::size_t s) {
    std::vector<int> d(G.size(), -1);
    std::vector<std::uint32_t> parent(G.size(), std::uint32_t(-1));
    std::deque<std::uint32_t> q{std::uint32_t(s)};
    d[s] = 0;
    int far = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      far = std::max(far, d[u]);
      for (auto w : G[u]) {
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          parent[w] = u;
          q.push_back(w);
        } else if (parent[u] != w) {
          int c = d[u] + d[w] + 1;
          if (girth[t] < 0 || c < girth[t]) girth[t] = c;
        }
      }
    }
    for (auto x : d)
      if (x < 0) disconnected[t] = 1;
    ecc[t] = std::max(ecc[t], far);
  });
  st.connected = std::none_of(disconnected.begin(), disconnected.end(), [](char c) { return c; });
  for (unsigned t = 0; t < nt; ++t)
    if (girth[t] >= 0 && (st.girth < 0 || girth[t] < st.girth)) st.girth = girth[t];
  if (st.connected) st.diameter = *std::max_element(ecc.begin(), ecc.end());
  return st;
}

Graph incidence_graph(const IncidenceGeometry& g) {
  const std::size_t P = g.points.size();
  Graph G(P + g.line_points.size());
  for (std::size_t l = 0; l < g.line_points.size(); ++l)
    for (auto p : g.line_points[l]) {
      G[p].push_back(std::uint32_t(P + l));
      G[P + l].push_back(p);
    }
  for (auto& adj : G) std::sort(adj.begin(), adj.end());
  return G;
}

std::string polygon_name(int n) {
  switch (n) {
    case 3: return "triangle";
    case 4: return "quadrangle";
    case 6: return "hexagon";
    case 8: return "octagon";
    default: return std::to_string(n) + "-gon";
  }
}

PolygonStats polygon_stats(const IncidenceGeometry& g, unsigned threads) {
  PolygonStats ps;
  ps.points = g.points.size();
  ps.lines = g.line_points.size();
  auto G = incidence_graph(g);
  ps.graph = graph_stats(G, threads);
  auto range = [&](std::size_t from, std::size_t to, std::size_t& lo, std::size_t& hi) {
    if (from == to) return;
    lo = hi = G[from].size();
    for (std::size_t i = from; i < to; ++i) {
      lo = std::min(lo, G[i].size());
      hi = std::max(hi, G[i].size());
    }
  };
  range(0, ps.points, ps.point_degree_min, ps.point_degree_max);
  range(ps.points, G.size(), ps.line_degree_min, ps.line_degree_max);
  if (!ps.graph.connected) {
    ps.verdict = "disconnected";
    return ps;
  }
  ps.n = ps.graph.diameter;
  ps.generalized = ps.graph.girth == 2 * ps.graph.diameter && ps.graph.min_degree >= 2 && ps.n >= 2;
  ps.thin = ps.graph.min_degree == 2;
  if (!ps.generalized) {
    ps.verdict = "not a generalized polygon";
  } else {
    ps.verdict = std::string(ps.thin ? "thin " : "") + "generalized " + polygon_name(ps.n);
  }
  return ps;
}

Graph omega_graph(const IncidenceGeometry& gamma) {
  Graph G(gamma.line_points.size());
  for (const auto& ls : gamma.point_lines)
    for (std::size_t a = 0; a < ls.size(); ++a)
      for (std::size_t b = a + 1; b < ls.size(); ++b) {
        G[ls[a]].push_back(ls[b]);
        G[ls[b]].push_back(ls[a]);
      }
  for (auto& adj : G) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return G;
}

PlaneCheck check_projective_plane(std::size_t npoints, const std::vector<std::vector<std::uint32_t>>& line_points) {
  PlaneCheck pc;
  pc.points = npoints;
  pc.lines = line_points.size();
  pc.line_points = line_points;
  for (const auto& l : line_points) pc.flags += l.size();
  if (line_points.empty()) {
    pc.axioms.fail("no lines");
    return pc;
  }
  pc.order = int(line_points[0].size()) - 1;
  const std::size_t q = std::size_t(std::max(pc.order, 0));
  for (std::size_t l = 0; l < line_points.size(); ++l)
    pc.axioms.require(line_points[l].size() == q + 1, "line " + std::to_string(l) + " has " + std::to_string(line_points[l].size()) + " points");
  pc.axioms.require(pc.order >= 2 && npoints == q * q + q + 1 && pc.lines == npoints,
                    "counts: " + std::to_string(npoints) + " points, " + std::to_string(pc.lines) + " lines, order " + std::to_string(pc.order));
  std::vector<std::uint32_t> cover(npoints * npoints, 0);
  for (const auto& l : line_points)
    for (auto a : l)
      for (auto b : l)
        if (a != b) ++cover[std::size_t(a) * npoints + b];
  for (std::size_t a = 0; a < npoints && pc.axioms.pass; ++a)
    for (std::size_t b = a + 1; b < npoints; ++b)
      pc.axioms.require(cover[a * npoints + b] == 1,
                        "points " + std::to_string(a) + "," + std::to_string(b) + " on " + std::to_string(cover[a * npoints + b]) + " lines");
  std::vector<std::vector<char>> member(line_points.size(), std::vector<char>(npoints, 0));
  for (std::size_t l = 0; l < line_points.size(); ++l)
    for (auto p : line_points[l]) member[l][p] = 1;
  for (std::size_t l = 0; l < line_points.size() && pc.axioms.pass; ++l)
    for (std::size_t m = l + 1; m < line_points.size(); ++m) {
      std::size_t c = 0;
      for (auto p : line_points[m]) c += member[l][p];
      pc.axioms.require(c == 1, "lines " + std::to_string(l) + "," + std::to_string(m) + " meet in " + std::to_string(c) + " points");
    }
  return pc;
}

PlaneCheck dual_double_extract(const IncidenceGeometry& gamma, unsigned threads) {
  auto ps = polygon_stats(gamma, threads);
  if (!(ps.generalized && ps.thin && ps.n == 6)) throw std::invalid_argument("dual double extraction needs a thin generalized hexagon, got: " + ps.verdict);
  auto W = omega_graph(gamma);
  std::vector<int> colour(W.size(), -1);
  bool bipartite = true;
  for (std::uint32_t s = 0; s < W.size(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<std::uint32_t> q{s};
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (auto w : W[u]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          q.push_back(w);
        } else if (colour[w] == colour[u]) {
          bipartite = false;
        }
      }
    }
  }
  if (!bipartite) {
    PlaneCheck pc;
    pc.axioms.fail("line graph is not bipartite");
    return pc;
  }
  std::vector<std::uint32_t> renum(W.size());
  std::size_t np = 0, nl = 0;
  for (std::size_t v = 0; v < W.size(); ++v) renum[v] = std::uint32_t(colour[v] == colour[0] ? np++ : nl++);
  std::vector<std::vector<std::uint32_t>> lp(nl);
  for (std::size_t v = 0; v < W.size(); ++v) {
    if (colour[v] == colour[0]) continue;
    for (auto w : W[v]) lp[renum[v]].push_back(renum[w]);
    std::sort(lp[renum[v]].begin(), lp[renum[v]].end());
  }
  return check_projective_plane(np, lp);
}

PlaneCheck projective_plane_oracle(const FF& k) {
  std::vector<Subspace<FF>> pts;
  enumerate_points<FF>(k, 3, [&](const Vec<FF>& v) {
    pts.push_back(line_of(k, v));
    return true;
  });
  std::vector<std::vector<std::uint32_t>> lp;
  enumerate_subspaces<FF>(k, 3, 2, [&](const Subspace<FF>& S) {
    std::vector<std::uint32_t> on;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (S.contains(k, pts[i])) on.push_back(std::uint32_t(i));
    lp.push_back(std::move(on));
    return true;
  });
  return check_projective_plane(pts.size(), lp);
}

int predicted_triangle_distance(const LieFF& L, const Vec<FF>& x, const Vec<FF>& y) {
  const FF& k = L.field();
  auto xy = L.bracket(x, y);
  if (is_zero(k, xy)) return 1;
  if (is_zero(k, L.bracket(x, xy))) return 2;
  return 3;
}

Report check_triangle_distances(const LieFF& L, const IncidenceGeometry& gamma) {
  const std::size_t P = gamma.points.size();
  Graph C(P);
  for (const auto& l : gamma.line_points)
    for (auto a : l)
      for (auto b : l)
        if (a != b) C[a].push_back(b);
  for (auto& adj : C) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  Check two("two lines through every point");
  for (std::size_t p = 0; p < P; ++p) two.require(gamma.point_lines[p].size() == 2, "point " + std::to_string(p));
  Check dict("bracket distance dictionary agrees with collinearity distance");
  Check uniq("distance 2 pairs have a unique common neighbour");
  std::vector<std::vector<char>> adj(P, std::vector<char>(P, 0));
  for (std::size_t p = 0; p < P; ++p)
    for (auto w : C[p]) adj[p][w] = 1;
  for (std::uint32_t i = 0; i < P; ++i) {
    auto d = bfs_distances(C, i);
    auto x = gamma.points[i].basis_vector(0);
    for (std::uint32_t j = i + 1; j < P; ++j) {
      int pred = predicted_triangle_distance(L, x, gamma.points[j].basis_vector(0));
      dict.require(pred == d[j], "points " + std::to_string(i) + "," + std::to_string(j) + ": predicted " + std::to_string(pred) +
                                     ", graph " + std::to_string(d[j]));
      if (d[j] == 2) {
        std::size_t common = 0;
        for (auto w : C[i]) common += adj[j][w];
        uniq.require(common == 1, "points " + std::to_string(i) + "," + std::to_string(j) + ": " + std::to_string(common) + " common neighbours");
      }
    }
  }
  Report rep;
  rep.add(two);
  rep.add(dict);
  rep.add(uniq);
  return rep;
}

MoufangSetResult moufang_set_jordan(const LieFF& L, std::size_t exhaustive_dim) {
  const FF& k = L.field();
  const auto& A = L.algebra();
  const std::size_t n = A.dim();
  if (!L.skew_basis().empty()) throw std::invalid_argument("Jordan Moufang set needs trivial involution");
  MoufangSetResult res;
  auto space = [&](int g) {
    std::vector<Vec<FF>> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(g > 0 ? L.a_plus(A.basis(i)) : L.a_minus(A.basis(i)));
    return Subspace<FF>(k, L.dim(), v);
  };
  auto Jp = space(1), Jm = space(-1);
  auto orbit = enumerate_orbit({Jp}, basis_generators(L), k, 1u << 20, 1);
  res.points = orbit.items;
  Vec<FF> zero(n, k.zero());
  auto half = k.inv(k.from_int(2));
  // J_+ together with one ideal per x in J.
  SubspaceIndex oracle;
  oracle.insert(Jp);
  Check param("e+(x)(J-) matches the parametrised ideal");
  std::vector<Automorphism<FF>> Eplus, Eminus;
  enumerate_vectors<FF>(k, n, [&](const Vec<FF>& x) {
    std::vector<Vec<FF>> gens;
    for (std::size_t i = 0; i < n; ++i) {
      auto b = A.basis(i);
      auto V = A.V(x, b);
      auto v = vadd(k, L.a_minus(b), L.inst(V));
      v = vsub(k, v, vscale(k, half, L.a_plus(mat_vec(k, V, x))));
      gens.push_back(v);
    }
    Subspace<FF> I(k, L.dim(), gens);
    oracle.insert(I);
    Eplus.push_back(e_sigma(L, x, zero, 1, false));
    Eminus.push_back(e_sigma(L, x, zero, -1, false));
    param.require(Eplus.back().apply(k, Jm) == I, "x=" + format_vector(k, x));
    return true;
  });
  Check count("orbit equals the parametrised set");
  count.require(orbit.complete && oracle.size() == orbit.items.size(),
                "orbit " + std::to_string(orbit.items.size()) + ", parametrised " + std::to_string(oracle.size()));
  for (const auto& S : orbit.items) count.require(oracle.find(S).has_value(), format_matrix(k, S.basis()));
  Check inner("every point is an abelian inner ideal");
  for (const auto& S : orbit.items) inner.require(is_inner_ideal(L, S).pass && is_abelian(L, S), format_matrix(k, S.basis()));
  Check scan("exhaustive scan: proper nonzero inner ideals of small dimension are points");
  std::size_t found = 0;
  for (std::size_t d = 1; d <= exhaustive_dim && d < L.dim(); ++d)
    enumerate_subspaces<FF>(k, L.dim(), d, [&](const Subspace<FF>& S) {
      if (!is_inner_ideal(L, S).pass) return true;
      ++found;
      scan.require(oracle.find(S).has_value(), "extra inner ideal " + format_matrix(k, S.basis()));
      return true;
    });
  std::size_t expected = 0;
  for (const auto& S : orbit.items)
    if (S.dim() <= exhaustive_dim) ++expected;
  scan.require(found == expected, "found " + std::to_string(found) + ", expected " + std::to_string(expected));
  scan.note = "dimensions 1.." + std::to_string(exhaustive_dim) + ", " + std::to_string(found) + " found";
  auto sharp = [&](const std::vector<Automorphism<FF>>& grp, const Subspace<FF>& fixed, const Subspace<FF>& base, const std::string& name) {
    Check c(name);
    std::set<SubspaceKey> imgs;
    for (const auto& g : grp) {
      c.require(g.apply(k, fixed) == fixed, "does not fix: " + g.label());
      auto img = g.apply(k, base);
      c.require(oracle.find(img).has_value() && img != fixed, "image outside the set: " + g.label());
      imgs.insert(subspace_key(img));
    }
    c.require(imgs.size() == grp.size() && grp.size() + 1 == oracle.size(),
              std::to_string(imgs.size()) + " distinct images of " + std::to_string(grp.size()) + " elements");
    return c;
  };
  res.report.add(param);
  res.report.add(count);
  res.report.add(inner);
  res.report.add(scan);
  res.report.add(sharp(Eplus, Jp, Jm, "E+ sharply transitive on points other than J+"));
  res.report.add(sharp(Eminus, Jm, Jp, "E- sharply transitive on points other than J-"));
  return res;
}

nlohmann::json geometry_to_json(const IncidenceGeometry& g, const FF& k) {
  nlohmann::json j;
  j["field"] = {{"name", g.field}, {"p", k.characteristic()}, {"modulus", k.modulus()}};
  j["family"] = g.family;
  auto rows = [](const Subspace<FF>& S) {
    nlohmann::json m = nlohmann::json::array();
    for (std::size_t r = 0; r < S.dim(); ++r) m.push_back(S.basis_vector(r));
    return m;
  };
  j["points"] = nlohmann::json::array();
  for (const auto& p : g.points) j["points"].push_back(rows(p));
  j["lines"] = g.line_points;
  j["stats"] = g.stats;
  j["labels"] = nlohmann::json::array();
  for (const auto& l : g.labels) j["labels"].push_back({{"name", l.name}, {"kind", l.is_point ? "point" : "line"}, {"index", l.index}});
  return j;
}

FF field_from_json(const nlohmann::json& j) {
  const auto& f = j.at("field");
  return FF(f.at("p").get<std::uint32_t>(), f.value("modulus", std::vector<std::uint32_t>{}));
}

IncidenceGeometry geometry_from_json(const nlohmann::json& j, const FF& k) {
  std::vector<Subspace<FF>> pts;
  for (const auto& m : j.at("points")) {
    std::vector<Vec<FF>> rows;
    for (const auto& r : m) rows.push_back(r.get<Vec<FF>>());
    if (rows.empty()) throw std::invalid_argument("point with empty basis");
    for (const auto& r : rows)
      for (auto x : r)
        if (x >= k.order()) throw std::invalid_argument("entry outside the field");
    pts.push_back(Subspace<FF>(k, rows[0].size(), rows));
  }
  auto lp = j.at("lines").get<std::vector<std::vector<std::uint32_t>>>();
  std::vector<Subspace<FF>> lines;
  for (const auto& l : lp) {
    if (l.empty()) throw std::invalid_argument("line without points");
    auto S = pts.at(l[0]);
    for (auto p : l) S = S.sum(k, pts.at(p));
    lines.push_back(std::move(S));
  }
  auto g = make_geometry(j.at("field").value("name", k.describe()), j.value("family", ""), std::move(pts), std::move(lines), lp);
  if (j.contains("labels"))
    for (const auto& l : j["labels"]) g.labels.push_back({l.at("name").get<std::string>(), l.at("kind").get<std::string>() == "point", l.at("index").get<std::uint32_t>()});
  if (j.contains("stats"))
    for (auto& [key, v] : j["stats"].items()) g.stats[key] = v.get<std::int64_t>();
  return g;
}

}  // namespace tkk
