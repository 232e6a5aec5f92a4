#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "tkklab/innerauto.hpp"

namespace tkk {

using FF = FiniteField;
using LieFF = TKK<FiniteField>;

enum class PairClass { identical = -2, strongly_commuting = -1, commuting = 0, special = 1, hyperbolic = 2 };

inline std::string pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::identical: return "E-2 identical";
    case PairClass::strongly_commuting: return "E-1 strongly commuting";
    case PairClass::commuting: return "E0 commuting";
    case PairClass::special: return "E1 special";
    case PairClass::hyperbolic: return "E2 hyperbolic";
  }
  return "?";
}

template <class K>
PairClass classify_pair(const TKK<K>& L, const Vec<K>& x, const Vec<K>& y) {
  const K& k = L.field();
  if (is_zero(k, x) || is_zero(k, y) || !is_extremal(L, x) || !is_extremal(L, y))
    throw std::invalid_argument("classify_pair needs nonzero extremal elements");
  if (Subspace<K>(k, L.dim(), {x}) == Subspace<K>(k, L.dim(), {y})) return PairClass::identical;
  auto xy = L.bracket(x, y);
  if (is_zero(k, xy)) return strongly_commuting(L, x, y) ? PairClass::strongly_commuting : PairClass::commuting;
  return is_zero(k, L.bracket(x, xy)) ? PairClass::special : PairClass::hyperbolic;
}

// Canonical key of a subspace: dimension followed by the RREF entries.
using SubspaceKey = std::vector<std::uint32_t>;
SubspaceKey subspace_key(const Subspace<FF>& S);

struct SubspaceKeyHash {
  std::size_t operator()(const SubspaceKey& k) const noexcept;
};

class SubspaceIndex {
 public:
  // (index, inserted)
  std::pair<std::uint32_t, bool> insert(const Subspace<FF>& S);
  std::optional<std::uint32_t> find(const Subspace<FF>& S) const;
  const std::vector<Subspace<FF>>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::unordered_map<SubspaceKey, std::uint32_t, SubspaceKeyHash> map_;
  std::vector<Subspace<FF>> items_;
};

struct OrbitResult {
  std::vector<Subspace<FF>> items;  // BFS discovery order
  bool complete = true;
};

OrbitResult enumerate_orbit(const std::vector<Subspace<FF>>& seeds, const std::vector<Automorphism<FF>>& gens, const FF& k,
                            std::size_t budget, unsigned threads = 1);

// e_+-(e_j,0), e_+-(0,s_k), and for jdim > 0 also exp(ad T_{[[0,e_i],[0,0]]}).
std::vector<Automorphism<FF>> orbit_generators(const LieFF& L, std::size_t jdim);

enum class LineMode { extremal, inner_ideal };

struct LineBuild {
  std::vector<Subspace<FF>> lines;
  std::vector<std::vector<std::uint32_t>> line_points;
  std::size_t commuting_pairs = 0;
  std::size_t anomalies = 0;  // extremal points outside the orbit met on a commuting span
  std::string anomaly_witness;
};

// Extremal mode: spans of strongly commuting pairs. Inner-ideal mode: spans of commuting pairs that are inner ideals.
LineBuild build_lines(const LieFF& L, const std::vector<Subspace<FF>>& points, LineMode mode, unsigned threads = 1);

struct Label {
  std::string name;
  bool is_point = true;
  std::uint32_t index = 0;
};

struct IncidenceGeometry {
  std::string field;
  std::string family;
  std::vector<Subspace<FF>> points, lines;
  std::vector<std::vector<std::uint32_t>> line_points;
  std::vector<std::vector<std::uint32_t>> point_lines;
  std::vector<Label> labels;
  std::map<std::string, std::int64_t> stats;

  std::optional<std::uint32_t> find_point(const Subspace<FF>& S) const;
  std::optional<std::uint32_t> find_line(const Subspace<FF>& S) const;
  void index_all();

 private:
  std::unordered_map<SubspaceKey, std::uint32_t, SubspaceKeyHash> pidx_, lidx_;
};

// Sorts points and lines into canonical key order and derives the point-line incidence.
IncidenceGeometry make_geometry(std::string field, std::string family, std::vector<Subspace<FF>> points, std::vector<Subspace<FF>> lines,
                                const std::vector<std::vector<std::uint32_t>>& line_points);

using Graph = std::vector<std::vector<std::uint32_t>>;

// Points: orbit of S_+ under orbit_generators; lines: strongly commuting spans.
IncidenceGeometry build_hexagon_geometry(const LieFF& L, std::size_t jdim, std::size_t budget, unsigned threads = 1);
// Points: orbit of S_+ (minimal inner ideals); lines: proper non-minimal inner ideals spanned by two points.
IncidenceGeometry build_triangle_geometry(const LieFF& L, std::size_t budget, unsigned threads = 1);
// Points only (large instances).
IncidenceGeometry build_point_orbit(const LieFF& L, std::size_t jdim, std::size_t budget, unsigned threads = 1);
void add_hexagon_labels(IncidenceGeometry& g, const LieFF& L, const CubicNorm<FF>& J);
void add_triangle_labels(IncidenceGeometry& g, const LieFF& L);

struct GraphStats {
  std::size_t vertices = 0, edges = 0;
  bool connected = false;
  int girth = -1;     // -1: acyclic
  int diameter = -1;  // -1: disconnected
  std::size_t min_degree = 0, max_degree = 0;
};

std::vector<int> bfs_distances(const Graph& G, std::uint32_t src);
GraphStats graph_stats(const Graph& G, unsigned threads = 1);

// Points are vertices 0..P-1, lines P..P+L-1.
Graph incidence_graph(const IncidenceGeometry& g);

struct PolygonStats {
  GraphStats graph;
  std::size_t points = 0, lines = 0;
  std::size_t point_degree_min = 0, point_degree_max = 0, line_degree_min = 0, line_degree_max = 0;
  int n = 0;
  bool generalized = false;
  bool thin = false;
  std::string verdict;
};

PolygonStats polygon_stats(const IncidenceGeometry& g, unsigned threads = 1);
std::string polygon_name(int n);

// Vertices: the lines of gamma; edges: two lines through a common point.
Graph omega_graph(const IncidenceGeometry& gamma);

struct PlaneCheck {
  std::size_t points = 0, lines = 0, flags = 0;
  int order = 0;
  Check axioms{"projective plane axioms"};
  std::vector<std::vector<std::uint32_t>> line_points;
};

PlaneCheck check_projective_plane(std::size_t npoints, const std::vector<std::vector<std::uint32_t>>& line_points);
// Requires a thin generalized hexagon; 2-colours the line graph and reads off the plane.
PlaneCheck dual_double_extract(const IncidenceGeometry& gamma, unsigned threads = 1);
// PG(2,q) built directly from F_q^3.
PlaneCheck projective_plane_oracle(const FF& k);

int predicted_triangle_distance(const LieFF& L, const Vec<FF>& x, const Vec<FF>& y);
Report check_triangle_distances(const LieFF& L, const IncidenceGeometry& gamma);

struct MoufangSetResult {
  std::vector<Subspace<FF>> points;
  Report report;
};

MoufangSetResult moufang_set_jordan(const LieFF& L, std::size_t exhaustive_dim = 2);

// Root groups: for U_i with end vertex x_i, every element fixes all neighbours of x_{i+1},...,x_{i+n-1}
// and acts sharply transitively on the neighbours of x_i other than x_{i+1}.
struct RootGroup {
  std::string name;
  std::size_t position = 1;  // i
  std::vector<Automorphism<FF>> elements;
};

struct CycleAction {
  const Graph* graph = nullptr;
  std::vector<Subspace<FF>> spaces;  // vertex -> subspace
  std::unordered_map<SubspaceKey, std::uint32_t, SubspaceKeyHash> index;
  std::optional<std::uint32_t> act(const FF& k, const Automorphism<FF>& f, std::uint32_t v) const;
};

Report check_root_groups(const FF& k, const CycleAction& act, const std::vector<std::uint32_t>& cycle, std::size_t n,
                         const std::vector<RootGroup>& groups);

// Exchange algebra: Omega 6-cycle and U_1..U_3.
std::vector<Subspace<FF>> triangle_cycle(const LieFF& L);
std::vector<RootGroup> triangle_root_groups(const LieFF& L);
Report check_triangle_root_groups(const LieFF& L, const IncidenceGeometry& gamma);

// Hexagon M(J,1): 12-cycle x_0..x_11 and the parametrised root groups x_1(.)..x_6(.).
std::vector<Subspace<FF>> hexagon_cycle(const LieFF& L, const CubicNorm<FF>& J);
Automorphism<FF> hexagon_root_element(const LieFF& L, const CubicNorm<FF>& J, int i, const Vec<FF>& param);
std::vector<RootGroup> hexagon_root_groups(const LieFF& L, const CubicNorm<FF>& J);
Report check_hexagon_root_groups(const LieFF& L, const CubicNorm<FF>& J, const IncidenceGeometry& gamma);

struct RelationOptions {
  std::uint64_t exhaustive_limit = 4096;  // parameter pairs
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  bool corrupt = false;  // shifts one right-hand-side parameter; negative control
};
Report check_commutator_relations(const LieFF& L, const CubicNorm<FF>& J, const RelationOptions& opt = {});

struct HexagonInvariantOptions {
  std::size_t root_pair_budget = 200000;
  std::size_t nondegenerate_samples = 200;
  std::uint64_t seed = 0;
};
Report check_hexagon_invariants(const LieFF& L, const CubicNorm<FF>& J, const IncidenceGeometry& gamma, const HexagonInvariantOptions& opt = {});

// The explicit extremal set in A_+, as projective representatives.
std::vector<Vec<FF>> hexagon_extremal_set(const CubicNorm<FF>& J);

Report check_cycle_transitivity(const LieFF& L, const CubicNorm<FF>& J, const IncidenceGeometry& gamma, std::size_t cycles, std::uint64_t seed);

// Inner ideals of the structurable algebra itself (U_x(A) in I for all x in I), exhaustive up to max_dim.
Report check_algebra_inner_ideals(const Algebra<FF>& A, std::size_t max_dim);

nlohmann::json geometry_to_json(const IncidenceGeometry& g, const FF& k);
FF field_from_json(const nlohmann::json& j);
// Points from the stored RREF rows, lines as spans of their points.
IncidenceGeometry geometry_from_json(const nlohmann::json& j, const FF& k);

// Moufang set of a skew structurable division algebra, sampled: e_+(a,s)(S_-) is an inner ideal,
// (a,s) is recovered uniquely, and the unique E_+ element carrying one sample to another works.
template <class K>
Report moufang_set_skew(const TKK<K>& L, std::size_t samples, std::uint64_t seed) {
  const K& k = L.field();
  const auto& A = L.algebra();
  Report rep;
  if (L.skew_basis().empty()) throw std::invalid_argument("skew Moufang set needs S != 0");
  Check inner("e+(a,s)(S-) is a proper inner ideal");
  Check uniq("(a,s) recovered uniquely");
  Check trans("E+ element carrying one sample to another (fixes S+)");
  Rng rng(seed);
  auto Sm = s_minus_space(L);
  auto Sp = s_plus_space(L);
  auto half = k.inv(k.from_int(2));
  std::vector<std::pair<Vec<K>, Vec<K>>> params;
  std::vector<Subspace<K>> ideals;
  for (std::size_t t = 0; t < samples; ++t) {
    auto a = random_vector(k, A.dim(), rng);
    auto s = L.skew_from_coords(random_vector(k, L.skew_basis().size(), rng));
    auto I = e_sigma(L, a, s, 1, false).apply(k, Sm);
    auto ii = is_inner_ideal(L, I);
    inner.require(ii.pass && I != Sp && is_abelian(L, I), "a=" + format_vector(k, a) + " s=" + format_vector(k, s) + " " + ii.witness);
    auto rec = recover_sigma_parameters(L, I, 1);
    uniq.require(rec && rec->unique && rec->a == a && rec->s == s, "a=" + format_vector(k, a) + " s=" + format_vector(k, s));
    params.emplace_back(a, s);
    ideals.push_back(std::move(I));
  }
  for (std::size_t t = 0; t + 1 < ideals.size(); ++t) {
    const auto& [a, s] = params[t];
    const auto& [b, u] = params[t + 1];
    // e(b,u) o e(-a,-s) = e(b-a, u-s+1/2 psi(b,-a))
    auto c = vsub(k, b, a);
    auto w = vadd(k, vsub(k, u, s), vscale(k, half, A.psi(b, vscale(k, k.neg(k.one()), a))));
    auto g = e_sigma(L, c, w, 1, false);
    bool ok = g.apply(k, ideals[t]) == ideals[t + 1] && g.apply(k, Sp) == Sp;
    auto rec = recover_sigma_parameters(L, g.apply(k, ideals[t]), 1);
    ok = ok && rec && rec->a == b && rec->s == u;
    trans.require(ok, "pair " + std::to_string(t));
  }
  for (auto* c : {&inner, &uniq, &trans}) c->note = "sampled";
  rep.add(inner);
  rep.add(uniq);
  rep.add(trans);
  return rep;
}

}  // namespace tkk
