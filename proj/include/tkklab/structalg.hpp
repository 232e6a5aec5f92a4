#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "tkklab/cubic.hpp"
#include "tkklab/exactlin.hpp"
#include "tkklab/report.hpp"

namespace tkk {

template <class K>
using Operator = Matrix<K>;

struct AlgebraError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Unital algebra with involution given by structure constants e_i e_j = sum_l c[i][j][l] e_l.
template <class K>
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::shared_ptr<const K> k, std::size_t dim, std::vector<Scalar<K>> table, Matrix<K> involution, Vec<K> unit,
          std::string tag)
      : k_(std::move(k)), n_(dim), c_(std::move(table)), inv_(std::move(involution)), unit_(std::move(unit)), tag_(std::move(tag)) {
    if (c_.size() != n_ * n_ * n_) throw DimensionError("structure constant table has wrong size");
    if (inv_.rows != n_ || inv_.cols != n_ || unit_.size() != n_) throw DimensionError("involution or unit has wrong size");
    refresh();
  }

  const K& field() const { return *k_; }
  std::shared_ptr<const K> field_ptr() const { return k_; }
  std::size_t dim() const { return n_; }
  const std::string& tag() const { return tag_; }
  const Vec<K>& unit() const { return unit_; }
  const Matrix<K>& involution() const { return inv_; }
  const Scalar<K>& c(std::size_t i, std::size_t j, std::size_t l) const { return c_[(i * n_ + j) * n_ + l]; }
  const std::vector<Scalar<K>>& table() const { return c_; }
  bool division_declared() const { return division_; }
  void set_division_declared(bool d) { division_ = d; }
  void set_tag(std::string t) { tag_ = std::move(t); }

  // Copy with one structure constant shifted by delta (negative controls).
  Algebra corrupted(std::size_t i, std::size_t j, std::size_t l, const Scalar<K>& delta) const {
    auto t = c_;
    auto& x = t[(i * n_ + j) * n_ + l];
    x = k_->add(x, delta);
    return Algebra(k_, n_, std::move(t), inv_, unit_, tag_ + "+corrupted");
  }

  Vec<K> basis(std::size_t i) const { return unit_vector(*k_, n_, i); }

  Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    check(x);
    check(y);
    const K& k = *k_;
    Vec<K> r(n_, k.zero());
    for (std::size_t i = 0; i < n_; ++i) {
      if (k.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (k.is_zero(y[j])) continue;
        auto xy = k.mul(x[i], y[j]);
        const auto* row = &c_[(i * n_ + j) * n_];
        for (std::size_t l = 0; l < n_; ++l)
          if (!k.is_zero(row[l])) r[l] = k.add(r[l], k.mul(xy, row[l]));
      }
    }
    return r;
  }
  Vec<K> involute(const Vec<K>& x) const {
    check(x);
    return mat_vec(*k_, inv_, x);
  }
  std::pair<Vec<K>, Vec<K>> split_hs(const Vec<K>& x) const {
    const K& k = *k_;
    auto half = k.inv(k.from_int(2));
    auto xb = involute(x);
    return {vscale(k, half, vadd(k, x, xb)), vscale(k, half, vsub(k, x, xb))};
  }
  Vec<K> psi(const Vec<K>& x, const Vec<K>& y) const {
    return vsub(*k_, multiply(x, involute(y)), multiply(y, involute(x)));
  }

  Operator<K> L(const Vec<K>& x) const { return combine(Lb_, x); }
  Operator<K> R(const Vec<K>& x) const { return combine(Rb_, x); }
  Operator<K> V(const Vec<K>& x, const Vec<K>& y) const {
    const K& k = *k_;
    auto yb = involute(y), xb = involute(x);
    auto op = L(multiply(x, yb));
    op = mat_add(k, op, mat_mul(k, R(x), R(yb)));
    op = mat_sub(k, op, mat_mul(k, R(y), R(xb)));
    return op;
  }
  Operator<K> T(const Vec<K>& x) const { return V(x, unit_); }
  Operator<K> U(const Vec<K>& x) const {
    Operator<K> op(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) op.set_col(j, mat_vec(*k_, V(x, basis(j)), x));
    return op;
  }

  // A^eps = A - L_{A(1) + bar(A(1))}
  Operator<K> eps(const Operator<K>& A) const {
    auto a1 = mat_vec(*k_, A, unit_);
    return mat_sub(*k_, A, L(vadd(*k_, a1, involute(a1))));
  }
  // A^delta = A + R_{bar(A(1))}; meaningful on the skew part.
  Operator<K> delta(const Operator<K>& A) const {
    auto a1 = mat_vec(*k_, A, unit_);
    return mat_add(*k_, A, R(involute(a1)));
  }

  const Subspace<K>& skew() const { return skew_; }
  const Subspace<K>& hermitian() const { return herm_; }

  std::optional<Vec<K>> conjugate_inverse(const Vec<K>& u) const {
    const K& k = *k_;
    Matrix<K> sys(n_ * n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      auto v = V(u, basis(j));
      for (std::size_t t = 0; t < n_ * n_; ++t) sys(t, j) = v.a[t];
    }
    auto id = identity(k, n_);
    auto w = solve_linear(k, sys, id.a);
    if (!w) return std::nullopt;
    if (!(V(*w, u) == id)) throw std::logic_error("conjugate inverse is not two-sided");
    return w;
  }

 private:
  std::shared_ptr<const K> k_;
  std::size_t n_ = 0;
  std::vector<Scalar<K>> c_;
  Matrix<K> inv_;
  Vec<K> unit_;
  std::string tag_;
  bool division_ = false;
  std::vector<Operator<K>> Lb_, Rb_;
  Subspace<K> skew_, herm_;

  void check(const Vec<K>& x) const {
    if (x.size() != n_) throw DimensionError("algebra element has wrong length");
  }
  Operator<K> combine(const std::vector<Operator<K>>& ops, const Vec<K>& x) const {
    check(x);
    const K& k = *k_;
    Operator<K> r(n_, n_);
    for (auto& e : r.a) e = k.zero();
    for (std::size_t i = 0; i < n_; ++i) {
      if (k.is_zero(x[i])) continue;
      for (std::size_t t = 0; t < n_ * n_; ++t)
        if (!k.is_zero(ops[i].a[t])) r.a[t] = k.add(r.a[t], k.mul(x[i], ops[i].a[t]));
    }
    return r;
  }
  void refresh() {
    const K& k = *k_;
    Lb_.assign(n_, Operator<K>(n_, n_));
    Rb_.assign(n_, Operator<K>(n_, n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t l = 0; l < n_; ++l) {
          Lb_[i](l, j) = c(i, j, l);
          Rb_[j](l, i) = c(i, j, l);
        }
    auto id = identity(k, n_);
    skew_ = Subspace<K>(k, n_, kernel_basis(k, mat_add(k, inv_, id)));
    herm_ = Subspace<K>(k, n_, kernel_basis(k, mat_sub(k, inv_, id)));
  }
};

// Basic axioms of a unital algebra with involution.
template <class K>
Report validate_algebra(const Algebra<K>& A) {
  const K& k = A.field();
  const std::size_t n = A.dim();
  Check unit("unit is a two-sided identity");
  Check anti("involution is an involutive anti-automorphism");
  Check split("A = H + S");
  for (std::size_t i = 0; i < n; ++i) {
    auto e = A.basis(i);
    unit.require(A.multiply(A.unit(), e) == e && A.multiply(e, A.unit()) == e, "e" + std::to_string(i));
    anti.require(A.involute(A.involute(e)) == e, "bar(bar(e" + std::to_string(i) + "))");
    for (std::size_t j = 0; j < n; ++j) {
      auto f = A.basis(j);
      anti.require(A.involute(A.multiply(e, f)) == A.multiply(A.involute(f), A.involute(e)),
                   "(e" + std::to_string(i) + ",e" + std::to_string(j) + ")");
    }
  }
  split.require(A.skew().dim() + A.hermitian().dim() == n && A.skew().sum(k, A.hermitian()).dim() == n,
                "dim S + dim H != dim A");
  Report r;
  r.add(unit);
  r.add(anti);
  r.add(split);
  return r;
}

struct StructurableMode {
  bool sampled = false;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
};

// [V_{x,y}, V_{z,w}] = V_{V_{x,y}z, w} - V_{z, V_{y,x}w}
template <class K>
Check check_structurable(const Algebra<K>& A, StructurableMode mode = {}) {
  const K& k = A.field();
  const std::size_t n = A.dim();
  Check chk("structurable identity");
  auto rhs = [&](const Vec<K>& x, const Vec<K>& y, const Vec<K>& z, const Vec<K>& w) {
    return mat_sub(k, A.V(mat_vec(k, A.V(x, y), z), w), A.V(z, mat_vec(k, A.V(y, x), w)));
  };
  auto lhs = [&](const Operator<K>& Vxy, const Operator<K>& Vzw) { return mat_sub(k, mat_mul(k, Vxy, Vzw), mat_mul(k, Vzw, Vxy)); };
  if (mode.sampled) {
    Rng rng(mode.seed);
    for (std::size_t t = 0; t < mode.samples; ++t) {
      auto x = random_vector(k, n, rng), y = random_vector(k, n, rng), z = random_vector(k, n, rng), w = random_vector(k, n, rng);
      chk.require(lhs(A.V(x, y), A.V(z, w)) == rhs(x, y, z, w),
                  "x=" + format_vector(k, x) + " y=" + format_vector(k, y) + " z=" + format_vector(k, z) + " w=" + format_vector(k, w));
    }
    chk.note = "sampled";
    return chk;
  }
  std::vector<Operator<K>> Vb(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Vb[i * n + j] = A.V(A.basis(i), A.basis(j));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          const auto& Vxy = Vb[x * n + y];
          const auto& Vzw = Vb[z * n + w];
          auto l = lhs(Vxy, Vzw);
          Operator<K> r(n, n);
          for (auto& e : r.a) e = k.zero();
          auto vz = Vxy.col(z);
          auto vw = Vb[y * n + x].col(w);
          for (std::size_t m = 0; m < n; ++m) {
            if (!k.is_zero(vz[m]))
              for (std::size_t t = 0; t < n * n; ++t) r.a[t] = k.add(r.a[t], k.mul(vz[m], Vb[m * n + w].a[t]));
            if (!k.is_zero(vw[m]))
              for (std::size_t t = 0; t < n * n; ++t) r.a[t] = k.sub(r.a[t], k.mul(vw[m], Vb[z * n + m].a[t]));
          }
          chk.require(l == r, "basis quadruple (e" + std::to_string(x) + ",e" + std::to_string(y) + ",e" + std::to_string(z) +
                                  ",e" + std::to_string(w) + ")");
          if (!chk.pass) return chk;
        }
  return chk;
}

// Alternativity of the algebra F feeding the exchange construction.
template <class K>
Report check_alternative(const Algebra<K>& F, std::size_t samples = 50, std::uint64_t seed = 0) {
  const K& k = F.field();
  const std::size_t n = F.dim();
  auto assoc = [&](const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) {
    return vsub(k, F.multiply(F.multiply(x, y), z), F.multiply(x, F.multiply(y, z)));
  };
  Check alt("associator alternates on basis triples");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        auto x = F.basis(i), y = F.basis(j), z = F.basis(l);
        auto a = assoc(x, y, z);
        std::string w = "(e" + std::to_string(i) + ",e" + std::to_string(j) + ",e" + std::to_string(l) + ")";
        alt.require(is_zero(k, vadd(k, a, assoc(y, x, z))) && is_zero(k, vadd(k, a, assoc(x, z, y))), w);
      }
  Check inv("e^-1(ef) = f = (fe)e^-1 on sampled invertible e");
  Check mou("(fef)g = f(e(fg)) on samples");
  Rng rng(seed);
  std::size_t found = 0;
  for (std::size_t t = 0; t < samples * 10 && found < samples; ++t) {
    auto e = random_vector(k, n, rng), f = random_vector(k, n, rng), g = random_vector(k, n, rng);
    mou.require(F.multiply(F.multiply(F.multiply(f, e), f), g) == F.multiply(f, F.multiply(e, F.multiply(f, g))),
                "e=" + format_vector(k, e) + " f=" + format_vector(k, f) + " g=" + format_vector(k, g));
    auto einv = solve_linear(k, F.L(e), F.unit());
    if (!einv || F.multiply(*einv, e) != F.unit()) continue;
    ++found;
    inv.require(F.multiply(*einv, F.multiply(e, f)) == f && F.multiply(F.multiply(f, e), *einv) == f,
                "e=" + format_vector(k, e) + " f=" + format_vector(k, f));
  }
  Report r;
  r.add(alt);
  r.add(inv);
  r.add(mou);
  return r;
}

// Rank of x -> psi(x, .) as a map A -> Hom(A, S).
template <class K>
std::size_t psi_gram_rank(const Algebra<K>& A) {
  const K& k = A.field();
  const std::size_t n = A.dim();
  Matrix<K> m(n * n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto p = A.psi(A.basis(x), A.basis(y));
      for (std::size_t l = 0; l < n; ++l) m(y * n + l, x) = p[l];
    }
  return rank(k, m);
}

// Operator identities on basis tuples (and the quadratic ones on samples).
template <class K>
Report check_operator_identities(const Algebra<K>& A, std::size_t samples = 50, std::uint64_t seed = 0) {
  const K& k = A.field();
  const std::size_t n = A.dim();
  const auto S = A.skew().basis_vectors();
  auto e = [&](std::size_t i) { return A.basis(i); };
  auto nm = [](std::initializer_list<std::size_t> ids) {
    std::string s = "(";
    bool first = true;
    for (auto i : ids) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(i);
    }
    return s + ")";
  };
  Check vsym("V_{a,b}(c) = V_{c,b}(a) + psi(a,c) b");
  Check veps("V_{x,y}^eps = -V_{y,x}");
  Check vdel("V_{x,y}^delta(s) = -psi(x, s y)");
  Check leps("(L_r L_t)^eps = -L_t L_r");
  Check ldel("(L_r L_t)^delta(s) = s(tr) + r(ts)");
  Check pskew("psi lands in S");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto Vab = A.V(e(a), e(b));
      veps.require(A.eps(Vab) == mat_scale(k, k.neg(k.one()), A.V(e(b), e(a))), nm({a, b}));
      pskew.require(A.skew().contains(k, A.psi(e(a), e(b))), nm({a, b}));
      auto Vd = A.delta(Vab);
      for (std::size_t si = 0; si < S.size(); ++si) {
        auto lhs = mat_vec(k, Vd, S[si]);
        auto rhs = vscale(k, k.neg(k.one()), A.psi(e(a), A.multiply(S[si], e(b))));
        vdel.require(lhs == rhs, "x=e" + std::to_string(a) + " y=e" + std::to_string(b) + " s=S" + std::to_string(si));
      }
      for (std::size_t c = 0; c < n; ++c) {
        auto lhs = mat_vec(k, Vab, e(c));
        auto rhs = vadd(k, mat_vec(k, A.V(e(c), e(b)), e(a)), A.multiply(A.psi(e(a), e(c)), e(b)));
        vsym.require(lhs == rhs, nm({a, b, c}));
      }
    }
  for (std::size_t r = 0; r < S.size(); ++r)
    for (std::size_t t = 0; t < S.size(); ++t) {
      auto LrLt = mat_mul(k, A.L(S[r]), A.L(S[t]));
      leps.require(A.eps(LrLt) == mat_scale(k, k.neg(k.one()), mat_mul(k, A.L(S[t]), A.L(S[r]))), "S" + nm({r, t}));
      auto D = A.delta(LrLt);
      for (std::size_t s = 0; s < S.size(); ++s) {
        auto rhs = vadd(k, A.multiply(S[s], A.multiply(S[t], S[r])), A.multiply(S[r], A.multiply(S[t], S[s])));
        ldel.require(mat_vec(k, D, S[s]) == rhs, "S" + nm({r, t, s}));
      }
    }
  Check vaa("V_{a,a} = L_{a abar} on samples");
  Check ci("conjugate inverse round trip on samples");
  Rng rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    auto a = random_vector(k, n, rng);
    vaa.require(A.V(a, a) == A.L(A.multiply(a, A.involute(a))), "a=" + format_vector(k, a));
    auto w = A.conjugate_inverse(a);
    if (w) {
      auto back = A.conjugate_inverse(*w);
      ci.require(back && *back == a, "a=" + format_vector(k, a));
    }
  }
  Report rep;
  for (auto* c : {&vsym, &veps, &vdel, &leps, &ldel, &pskew, &vaa, &ci}) rep.add(*c);
  return rep;
}

// ---- instances ----

template <class K>
Algebra<K> build_field_algebra(std::shared_ptr<const K> kp) {
  const K& k = *kp;
  Matrix<K> inv(1, 1);
  inv(0, 0) = k.one();
  Algebra<K> A(kp, 1, {k.one()}, inv, {k.one()}, "field");
  A.set_division_declared(true);
  return A;
}

// (a,b)(c,d) = (ac, db), involution the swap.
template <class K>
Algebra<K> build_exchange(const Algebra<K>& F) {
  const K& k = F.field();
  const std::size_t m = F.dim(), n = 2 * m;
  std::vector<Scalar<K>> t(n * n * n, k.zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        t[(i * n + j) * n + l] = F.c(i, j, l);
        t[((m + i) * n + (m + j)) * n + (m + l)] = F.c(j, i, l);
      }
  Matrix<K> inv(n, n);
  for (auto& x : inv.a) x = k.zero();
  for (std::size_t i = 0; i < m; ++i) {
    inv(i, m + i) = k.one();
    inv(m + i, i) = k.one();
  }
  Vec<K> unit(n, k.zero());
  for (std::size_t i = 0; i < m; ++i) {
    unit[i] = F.unit()[i];
    unit[m + i] = F.unit()[i];
  }
  return Algebra<K>(F.field_ptr(), n, std::move(t), inv, unit, "exchange(" + F.tag() + ")");
}

// Cayley-Dickson doubling of B with parameter g:
// (x1,y1)(x2,y2) = (x1 x2 + g bar(y2) y1, y2 x1 + y1 bar(x2)), bar(x,y) = (bar x, -y).
template <class K>
Algebra<K> cayley_dickson_double(const Algebra<K>& B, const Scalar<K>& g) {
  const K& k = B.field();
  const std::size_t m = B.dim(), n = 2 * m;
  std::vector<Scalar<K>> t(n * n * n, k.zero());
  auto put = [&](std::size_t i, std::size_t j, std::size_t off, const Vec<K>& v, const Scalar<K>& scale) {
    for (std::size_t l = 0; l < m; ++l)
      if (!k.is_zero(v[l])) t[(i * n + j) * n + off + l] = k.add(t[(i * n + j) * n + off + l], k.mul(scale, v[l]));
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto ei = B.basis(i), ej = B.basis(j);
      put(i, j, 0, B.multiply(ei, ej), k.one());                       // (x1,0)(x2,0)
      put(m + i, m + j, 0, B.multiply(B.involute(ej), ei), g);         // (0,y1)(0,y2) first
      put(i, m + j, m, B.multiply(ej, ei), k.one());                   // (x1,0)(0,y2) = (0, y2 x1)
      put(m + i, j, m, B.multiply(ei, B.involute(ej)), k.one());       // (0,y1)(x2,0) = (0, y1 bar x2)
    }
  Matrix<K> inv(n, n);
  for (auto& x : inv.a) x = k.zero();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      inv(i, j) = B.involution()(i, j);
      inv(m + i, m + j) = i == j ? k.neg(k.one()) : k.zero();
    }
  Vec<K> unit(n, k.zero());
  for (std::size_t i = 0; i < m; ++i) unit[i] = B.unit()[i];
  return Algebra<K>(B.field_ptr(), n, std::move(t), inv, unit, "cd");
}

// Norm form n(x) = x bar(x) read off the unit coordinate.
template <class K>
Scalar<K> composition_norm(const Algebra<K>& C, const Vec<K>& x) {
  return C.multiply(x, C.involute(x))[0];
}

template <class K>
Algebra<K> build_hurwitz(std::shared_ptr<const K> kp, const std::vector<Scalar<K>>& params, bool require_division) {
  if (params.size() != 2 && params.size() != 3) throw AlgebraError("Cayley-Dickson parameters must be (a,b) or (a,b,c)");
  const K& k = *kp;
  Algebra<K> C = build_field_algebra(kp);
  for (const auto& g : params) {
    if (k.is_zero(g)) throw AlgebraError("Cayley-Dickson parameter must be nonzero");
    C = cayley_dickson_double(C, g);
  }
  C.set_tag(params.size() == 2 ? "quaternion" : "octonion");
  if (require_division) {
    bool isotropic = false;
    std::string note;
    if constexpr (K::is_finite) {
      enumerate_vectors<K>(k, C.dim(), [&](const Vec<K>& x) {
        if (!is_zero(k, x) && k.is_zero(composition_norm(C, x))) {
          isotropic = true;
          note = format_vector(k, x);
          return false;
        }
        return true;
      });
    } else {
      // small integer box search for an isotropic vector
      const int B = 3;
      std::vector<int> idx(C.dim(), -B);
      while (!isotropic) {
        Vec<K> x(C.dim());
        bool nz = false;
        for (std::size_t i = 0; i < C.dim(); ++i) {
          x[i] = k.from_int(idx[i]);
          nz = nz || idx[i] != 0;
        }
        if (nz && k.is_zero(composition_norm(C, x))) {
          isotropic = true;
          note = format_vector(k, x);
        }
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] > B) idx[i++] = -B;
        if (i == idx.size()) break;
      }
    }
    if (isotropic) throw AlgebraError("Cayley-Dickson parameters give an isotropic norm (zero divisor " + note + ")");
    C.set_division_declared(true);
  }
  return C;
}

// M(J, eta): basis order k1, j1[0..d), j2[0..d), k2.
template <class K>
Algebra<K> build_matrix_structurable(const CubicNorm<K>& J, const Scalar<K>& eta) {
  const K& k = J.field();
  const std::size_t d = J.dim();
  if (d == 0) throw AlgebraError("J = 0 is not a division instance");
  if (k.is_zero(eta)) throw AlgebraError("eta must be nonzero");
  const std::size_t n = 2 * d + 2;
  const std::size_t K1 = 0, J1 = 1, J2 = 1 + d, K2 = 1 + 2 * d;
  auto mult = [&](const Vec<K>& x, const Vec<K>& y) {
    Vec<K> j1(x.begin() + J1, x.begin() + J2), j2(x.begin() + J2, x.begin() + K2);
    Vec<K> j1p(y.begin() + J1, y.begin() + J2), j2p(y.begin() + J2, y.begin() + K2);
    const auto &k1 = x[K1], &k2 = x[K2], &k1p = y[K1], &k2p = y[K2];
    Vec<K> r(n, k.zero());
    r[K1] = k.add(k.mul(k1, k1p), k.mul(eta, J.T(j1, j2p)));
    auto a = vadd(k, vadd(k, vscale(k, k1, j1p), vscale(k, k2p, j1)), vscale(k, eta, J.cross(j2, j2p)));
    auto b = vadd(k, vadd(k, vscale(k, k1p, j2), vscale(k, k2, j2p)), J.cross(j1, j1p));
    for (std::size_t i = 0; i < d; ++i) {
      r[J1 + i] = a[i];
      r[J2 + i] = b[i];
    }
    r[K2] = k.add(k.mul(k2, k2p), k.mul(eta, J.T(j2, j1p)));
    return r;
  };
  std::vector<Scalar<K>> t(n * n * n, k.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto v = mult(unit_vector(k, n, i), unit_vector(k, n, j));
      for (std::size_t l = 0; l < n; ++l) t[(i * n + j) * n + l] = v[l];
    }
  Matrix<K> inv = identity(k, n);
  inv(K1, K1) = k.zero();
  inv(K2, K2) = k.zero();
  inv(K1, K2) = k.one();
  inv(K2, K1) = k.one();
  Vec<K> unit(n, k.zero());
  unit[K1] = k.one();
  unit[K2] = k.one();
  return Algebra<K>(J.field_ptr(), n, std::move(t), inv, unit, "matrix(" + J.tag() + ")");
}

// The element [[a, l], [j, b]] of M(J, eta).
template <class K>
Vec<K> matrix_element(const K& k, std::size_t d, const Scalar<K>& a, const Vec<K>& l, const Vec<K>& j, const Scalar<K>& b) {
  if (l.size() != d || j.size() != d) throw DimensionError("off-diagonal entries must lie in J");
  Vec<K> v(2 * d + 2, k.zero());
  v[0] = a;
  for (std::size_t i = 0; i < d; ++i) {
    v[1 + i] = l[i];
    v[1 + d + i] = j[i];
  }
  v[2 * d + 1] = b;
  return v;
}

// Commutative associative K[t]/(f) with trivial involution; f monic, coefficients low->high.
template <class K>
Algebra<K> build_jordan_extension(std::shared_ptr<const K> kp, const std::vector<Scalar<K>>& modulus) {
  const K& k = *kp;
  if (modulus.size() < 2 || !k.eq(modulus.back(), k.one())) throw AlgebraError("jordan modulus must be monic of degree >= 1");
  const std::size_t n = modulus.size() - 1;
  // t^e mod f for e < 2n-1
  std::vector<Vec<K>> pw;
  Vec<K> cur(n, k.zero());
  cur[0] = k.one();
  for (std::size_t e = 0; e + 1 < 2 * n; ++e) {
    pw.push_back(cur);
    Vec<K> nxt(n, k.zero());
    for (std::size_t i = 0; i + 1 < n; ++i) nxt[i + 1] = cur[i];
    auto top = cur[n - 1];
    for (std::size_t i = 0; i < n; ++i) nxt[i] = k.sub(nxt[i], k.mul(top, modulus[i]));
    cur = nxt;
  }
  std::vector<Scalar<K>> t(n * n * n, k.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) t[(i * n + j) * n + l] = pw[i + j][l];
  Algebra<K> A(kp, n, std::move(t), identity(k, n), unit_vector(k, n, 0), "jordan(extension)");
  return A;
}

// Jordan algebra of a quadratic form with basepoint c: x.y = 1/2 (T(x) y + T(y) x - Q(x,y) c), T(x) = Q(x,c).
template <class K>
Algebra<K> build_jordan_quadratic(std::shared_ptr<const K> kp, const Matrix<K>& gram, const Vec<K>& basepoint) {
  const K& k = *kp;
  const std::size_t n = gram.rows;
  if (gram.cols != n || basepoint.size() != n) throw DimensionError("Gram matrix and basepoint sizes disagree");
  if (!(gram == transpose(gram))) throw AlgebraError("Gram matrix must be symmetric");
  auto Q = [&](const Vec<K>& x, const Vec<K>& y) {
    auto gy = mat_vec(k, gram, y);
    auto r = k.zero();
    for (std::size_t i = 0; i < n; ++i) r = k.add(r, k.mul(x[i], gy[i]));
    return r;
  };
  if (!k.eq(Q(basepoint, basepoint), k.from_int(2))) throw AlgebraError("basepoint must satisfy q(c) = 1");
  if (rank(k, gram) != n) throw AlgebraError("quadratic form must be non-degenerate");
  auto half = k.inv(k.from_int(2));
  std::vector<Scalar<K>> t(n * n * n, k.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto x = unit_vector(k, n, i), y = unit_vector(k, n, j);
      auto v = vadd(k, vscale(k, Q(x, basepoint), y), vscale(k, Q(y, basepoint), x));
      v = vsub(k, v, vscale(k, Q(x, y), basepoint));
      v = vscale(k, half, v);
      for (std::size_t l = 0; l < n; ++l) t[(i * n + j) * n + l] = v[l];
    }
  return Algebra<K>(kp, n, std::move(t), identity(k, n), basepoint, "jordan(quadratic)");
}

}  // namespace tkk
