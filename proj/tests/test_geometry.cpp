#include "doctest.h"

#include "fixtures.hpp"

using namespace tkk;
using fx::vec;

TEST_CASE("pair classification") {
  const auto& L = fx::hexagon_lie();
  const auto& k = L.field();
  auto s = L.skew_basis()[0];
  auto sp = L.s_plus(s);
  CHECK(classify_pair(L, sp, vscale(k, 3u, sp)) == PairClass::identical);
  CHECK(classify_pair(L, sp, L.a_plus(vec(k, {3, 2, 4, 1}))) == PairClass::strongly_commuting);
  auto sh = *L.algebra().conjugate_inverse(s);
  CHECK(classify_pair(L, sp, L.s_minus(sh)) == PairClass::hyperbolic);
  CHECK_THROWS(classify_pair(L, sp, L.a_plus(L.algebra().unit())));
}

TEST_CASE("triangle: counts against an independent PG(2,5) flag count") {
  const auto& g = fx::triangle_geometry();
  auto oracle = projective_plane_oracle(*fx::f5());
  CHECK(oracle.axioms.pass);
  CHECK(g.points.size() == oracle.flags);
  CHECK(g.points.size() == 186);
  CHECK(g.lines.size() == 62);
  auto ps = polygon_stats(g);
  CHECK(ps.graph.girth == 12);
  CHECK(ps.graph.diameter == 6);
  CHECK(ps.point_degree_min == 2);
  CHECK(ps.point_degree_max == 2);
  CHECK(ps.line_degree_min == 6);
  CHECK(ps.line_degree_max == 6);
  CHECK(ps.thin);
  auto ws = graph_stats(omega_graph(g));
  CHECK(ws.vertices == 62);
  CHECK(ws.girth == 6);
  CHECK(ws.diameter == 3);
  CHECK(ws.min_degree == 6);
  CHECK(ws.max_degree == 6);
  auto plane = dual_double_extract(g);
  CHECK(plane.points == 31);
  CHECK(plane.lines == 31);
  CHECK(plane.axioms.pass);
}

TEST_CASE("triangle distance dictionary and root groups") {
  const auto& L = fx::exchange_lie();
  const auto& g = fx::triangle_geometry();
  auto Sp = s_plus_space(L);
  auto Sm = s_minus_space(L);
  const auto& k = L.field();
  CHECK(predicted_triangle_distance(L, Sp.basis_vector(0), Sm.basis_vector(0)) == 3);
  CHECK(predicted_triangle_distance(L, Sp.basis_vector(0), L.a_plus(vec(k, {1, 0}))) == 1);
  CHECK(check_triangle_distances(L, g).pass());
  CHECK(check_triangle_root_groups(L, g).pass());
}

TEST_CASE("triangle over F_7 gives PG(2,7)") {
  LieFF L(fx::exchange(fx::fp(7)));
  auto g = build_triangle_geometry(L, 1u << 20, 2);
  auto plane = dual_double_extract(g);
  CHECK(plane.points == 57);
  CHECK(plane.lines == 57);
  CHECK(plane.axioms.pass);
}

TEST_CASE("dual double needs a thin hexagon") { CHECK_THROWS(dual_double_extract(fx::hexagon_geometry())); }

TEST_CASE("jordan Moufang set") {
  LieFF L(fx::jordan25());
  auto r = moufang_set_jordan(L);
  CHECK(r.points.size() == 26);
  CHECK(r.report.pass());
}

TEST_CASE("skew Moufang set over the rationals") {
  TKK<RationalField> L(fx::quaternions());
  auto r = moufang_set_skew(L, 20, 0);
  CHECK(r.pass());
}

TEST_CASE("hexagon geometry") {
  const auto& g = fx::hexagon_geometry();
  CHECK(g.points.size() == 3906);
  CHECK(g.lines.size() == 3906);
  CHECK(g.stats.at("anomalies") == 0);
  for (const auto& lp : g.line_points) CHECK(lp.size() == 6);
  auto ps = polygon_stats(g, 2);
  CHECK(ps.verdict == "generalized hexagon");
  CHECK(ps.graph.girth == 12);
  CHECK(ps.graph.diameter == 6);
  CHECK(ps.point_degree_min == 6);
  CHECK(ps.line_degree_max == 6);
}

TEST_CASE("hexagon root groups, relations and invariants") {
  const auto& L = fx::hexagon_lie();
  const auto& J = fx::rank1_f5();
  const auto& g = fx::hexagon_geometry();
  CHECK(check_hexagon_root_groups(L, J, g).pass());
  CHECK(check_commutator_relations(L, J).pass());
  RelationOptions bad;
  bad.corrupt = true;
  auto r = check_commutator_relations(L, J, bad);
  CHECK_FALSE(r.pass());
  CHECK(r.first_failure()->witness.find("parameters") != std::string::npos);
  CHECK(check_hexagon_invariants(L, J, g).pass());
  CHECK(check_cycle_transitivity(L, J, g, 20, 1).pass());
}

TEST_CASE("commutator relation spot values") {
  const auto& L = fx::hexagon_lie();
  const auto& J = fx::rank1_f5();
  const auto& k = L.field();
  auto x = [&](int i, long long p) { return hexagon_root_element(L, J, i, vec(k, {p})); };
  // [f,g] = f^-1 g^-1 f g as composed matrices
  auto comm = [&](const Automorphism<FiniteField>& f, const Automorphism<FiniteField>& g) {
    return mat_mul(k, mat_mul(k, f.inv, g.inv), mat_mul(k, f.mat, g.mat));
  };
  // [x1(1), x3(1)] = x2(T(1,1)) = e_-(diag(3,0), 0)
  auto lhs = comm(x(1, 1), x(3, 1));
  auto rhs = e_sigma(L, matrix_element(k, 1, k.from_int(3), vec(k, {0}), vec(k, {0}), k.zero()),
                     L.skew_from_coords(vec(k, {0})), -1);
  CHECK(lhs == rhs.mat);
  auto id = identity(k, L.dim());
  CHECK(comm(x(1, 0), x(2, 3)) == id);
  CHECK(comm(x(1, 2), x(3, 0)) == id);
}

TEST_CASE("single point has no lines") {
  const auto& L = fx::hexagon_lie();
  auto lb = build_lines(L, {s_plus_space(L)}, LineMode::extremal);
  CHECK(lb.lines.empty());
}

TEST_CASE("inner ideals of M(J,1) are one-dimensional") {
  auto r = check_algebra_inner_ideals(fx::hexagon_algebra(), 2);
  CHECK(r.pass());
}

TEST_CASE("property: orbit output independent of thread count") {
  const auto& L = fx::exchange_lie();
  auto g1 = build_triangle_geometry(L, 1u << 20, 1);
  auto g3 = build_triangle_geometry(L, 1u << 20, 3);
  CHECK(geometry_to_json(g1, L.field()).dump() == geometry_to_json(g3, L.field()).dump());
}

TEST_CASE("geometry JSON round trip") {
  const auto& g = fx::hexagon_geometry();
  const auto& k = fx::hexagon_lie().field();
  auto j = geometry_to_json(g, k);
  auto k2 = field_from_json(j);
  CHECK(k2.order() == 5);
  auto h = geometry_from_json(j, k2);
  CHECK(h.points.size() == g.points.size());
  CHECK(h.line_points == g.line_points);
  CHECK(geometry_to_json(h, k2).dump() == j.dump());
}

TEST_CASE("every enumerated point is an abelian inner ideal") {
  const auto& L = fx::exchange_lie();
  const auto& g = fx::triangle_geometry();
  for (const auto& p : g.points) {
    CHECK(is_inner_ideal(L, p).pass);
    CHECK(is_abelian(L, p));
  }
  for (const auto& l : g.lines) CHECK(is_abelian(L, l));
}
