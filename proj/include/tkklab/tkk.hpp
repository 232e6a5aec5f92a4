#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>

#include "tkklab/structalg.hpp"

namespace tkk {

struct TKKError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// K(A) = S- + A- + Inst(A) + A+ + S+ with basis in that order.
template <class K>
class TKK {
 public:
  using Entry = std::pair<std::uint32_t, Scalar<K>>;

  explicit TKK(Algebra<K> A, bool verify = true) : A_(std::move(A)) {
    const K& k = A_.field();
    const std::size_t n = A_.dim();
    std::vector<Vec<K>> vs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) vs.push_back(A_.V(A_.basis(i), A_.basis(j)).a);
    inst_ = Subspace<K>(k, n * n, vs);
    for (std::size_t r = 0; r < inst_.dim(); ++r) {
      Operator<K> op(n, n);
      op.a = inst_.basis_vector(r);
      inst_ops_.push_back(std::move(op));
    }
    for (std::size_t r = 0; r < A_.skew().dim(); ++r) skew_basis_.push_back(A_.skew().basis_vector(r));
    nS_ = skew_basis_.size();
    nA_ = n;
    nI_ = inst_ops_.size();
    off_ = {0, nS_, nS_ + nA_, nS_ + nA_ + nI_, nS_ + 2 * nA_ + nI_};
    total_ = 2 * nS_ + 2 * nA_ + nI_;
    grade_.resize(total_);
    for (std::size_t i = 0; i < total_; ++i) grade_[i] = block_of(i) - 2;
    build_table();
    if (verify) {
      auto j = check_jacobi();
      if (!j.pass) throw TKKError("Jacobi identity fails: " + j.witness);
      auto g = check_grading();
      if (!g.pass) throw TKKError("grading fails: " + g.witness);
    }
  }

  const Algebra<K>& algebra() const { return A_; }
  const K& field() const { return A_.field(); }
  std::size_t dim() const { return total_; }
  std::array<std::size_t, 5> grade_dims() const { return {nS_, nA_, nI_, nA_, nS_}; }
  int grade(std::size_t i) const { return grade_[i]; }
  // First index of the block of grade g.
  std::size_t offset(int g) const { return off_[g + 2]; }
  std::size_t block_dim(int g) const { return grade_dims()[g + 2]; }
  const std::vector<Operator<K>>& inst_basis() const { return inst_ops_; }
  const std::vector<Vec<K>>& skew_basis() const { return skew_basis_; }
  const std::vector<Entry>& table_entry(std::size_t i, std::size_t j) const { return table_[i * total_ + j]; }

  Vec<K> zero() const { return Vec<K>(total_, field().zero()); }
  Vec<K> basis(std::size_t i) const { return unit_vector(field(), total_, i); }

  // S element (as an A-vector) to skew coordinates.
  Vec<K> skew_coords(const Vec<K>& s) const {
    auto c = A_.skew().coordinates(field(), s);
    if (!c) throw TKKError("element is not skew: " + format_vector(field(), s));
    return *c;
  }
  Vec<K> skew_from_coords(const Vec<K>& c) const { return A_.skew().combine(field(), c); }
  Vec<K> inst_coords(const Operator<K>& V) const {
    auto c = inst_.coordinates(field(), V.a);
    if (!c) throw TKKError("operator is not in Inst(A)");
    return *c;
  }
  bool in_inst(const Operator<K>& V) const { return inst_.contains(field(), V.a); }
  Operator<K> inst_from_coords(const Vec<K>& c) const {
    Operator<K> op(nA_, nA_);
    op.a = inst_.combine(field(), c);
    return op;
  }

  Vec<K> s_minus(const Vec<K>& s) const { return place(0, skew_coords(s)); }
  Vec<K> a_minus(const Vec<K>& a) const { return place(1, a); }
  Vec<K> inst(const Operator<K>& V) const { return place(2, inst_coords(V)); }
  Vec<K> a_plus(const Vec<K>& a) const { return place(3, a); }
  Vec<K> s_plus(const Vec<K>& s) const { return place(4, skew_coords(s)); }

  Vec<K> part(const Vec<K>& x, int g) const {
    return Vec<K>(x.begin() + offset(g), x.begin() + offset(g) + block_dim(g));
  }
  Vec<K> skew_part(const Vec<K>& x, int g) const { return skew_from_coords(part(x, g)); }
  Operator<K> inst_part(const Vec<K>& x) const { return inst_from_coords(part(x, 0)); }

  Vec<K> grade_project(const Vec<K>& x, int g) const {
    if (g < -2 || g > 2) throw std::invalid_argument("grade out of range");
    Vec<K> r = zero();
    for (std::size_t i = offset(g); i < offset(g) + block_dim(g); ++i) r[i] = x[i];
    return r;
  }

  Vec<K> bracket(const Vec<K>& u, const Vec<K>& v) const {
    if (u.size() != total_ || v.size() != total_) throw DimensionError("Lie element has wrong length");
    const K& k = field();
    Vec<K> r = zero();
    for (std::size_t i = 0; i < total_; ++i) {
      if (k.is_zero(u[i])) continue;
      for (std::size_t j = 0; j < total_; ++j) {
        if (k.is_zero(v[j])) continue;
        const auto& e = table_[i * total_ + j];
        if (e.empty()) continue;
        auto c = k.mul(u[i], v[j]);
        for (const auto& [l, x] : e) r[l] = k.add(r[l], k.mul(c, x));
      }
    }
    return r;
  }

  // Matrix of ad(u) acting on column vectors.
  Matrix<K> ad(const Vec<K>& u) const {
    const K& k = field();
    Matrix<K> M(total_, total_);
    for (auto& e : M.a) e = k.zero();
    for (std::size_t i = 0; i < total_; ++i) {
      if (k.is_zero(u[i])) continue;
      for (std::size_t j = 0; j < total_; ++j)
        for (const auto& [l, x] : table_[i * total_ + j]) M(l, j) = k.add(M(l, j), k.mul(u[i], x));
    }
    return M;
  }

  // Antisymmetry on pairs, then the Jacobiator on i < j < l (it is alternating).
  Check check_jacobi() const {
    const K& k = field();
    Check c("Jacobi identity on basis triples");
    std::vector<Vec<K>> e(total_);
    for (std::size_t i = 0; i < total_; ++i) e[i] = basis(i);
    for (std::size_t i = 0; i < total_; ++i)
      for (std::size_t j = i; j < total_; ++j)
        c.require(is_zero(k, vadd(k, bracket(e[i], e[j]), bracket(e[j], e[i]))),
                  "antisymmetry (e" + std::to_string(i) + ",e" + std::to_string(j) + ")");
    if (!c.pass) return c;
    for (std::size_t i = 0; i < total_; ++i)
      for (std::size_t j = i + 1; j < total_; ++j) {
        auto bij = bracket(e[i], e[j]);
        for (std::size_t l = j + 1; l < total_; ++l) {
          auto s = bracket(e[i], bracket(e[j], e[l]));
          s = vadd(k, s, bracket(e[j], bracket(e[l], e[i])));
          s = vadd(k, s, bracket(e[l], bij));
          c.require(is_zero(k, s), "basis triple (e" + std::to_string(i) + ",e" + std::to_string(j) + ",e" + std::to_string(l) + ")");
          if (!c.pass) return c;
        }
      }
    return c;
  }

  Check check_grading() const {
    Check c("grading [L_i, L_j] in L_{i+j}");
    for (std::size_t i = 0; i < total_; ++i)
      for (std::size_t j = 0; j < total_; ++j) {
        int g = grade_[i] + grade_[j];
        bool ok = true;
        for (const auto& [l, x] : table_[i * total_ + j]) ok = ok && grade_[l] == g;
        c.require(ok, "basis pair (e" + std::to_string(i) + ",e" + std::to_string(j) + ")");
      }
    return c;
  }

  // L_0 = [L_1, L_-1] as subspaces.
  Check check_l0_generated() const {
    const K& k = field();
    Check c("L_0 = [L_1, L_-1]");
    std::vector<Vec<K>> vs;
    for (std::size_t i = 0; i < nA_; ++i)
      for (std::size_t j = 0; j < nA_; ++j) vs.push_back(bracket(basis(offset(1) + i), basis(offset(-1) + j)));
    Subspace<K> got(k, total_, vs);
    std::vector<Vec<K>> l0;
    for (std::size_t i = 0; i < nI_; ++i) l0.push_back(basis(offset(0) + i));
    c.require(got == Subspace<K>(k, total_, l0), "dim [L1,L-1] = " + std::to_string(got.dim()) + ", dim L0 = " + std::to_string(nI_));
    return c;
  }

 private:
  Algebra<K> A_;
  Subspace<K> inst_;
  std::vector<Operator<K>> inst_ops_;
  std::vector<Vec<K>> skew_basis_;
  std::size_t nS_ = 0, nA_ = 0, nI_ = 0, total_ = 0;
  std::array<std::size_t, 5> off_{};
  std::vector<int> grade_;
  std::vector<std::vector<Entry>> table_;

  int block_of(std::size_t i) const {
    int b = 0;
    for (int t = 1; t < 5; ++t)
      if (i >= off_[t]) b = t;
    return b;
  }

  Vec<K> place(int block, const Vec<K>& c) const {
    Vec<K> r = zero();
    for (std::size_t i = 0; i < c.size(); ++i) r[off_[block] + i] = c[i];
    return r;
  }

  // Basis element i as (block, payload): skew blocks carry A-vectors, the Inst block an operator.
  Vec<K> payload(std::size_t i) const {
    int b = block_of(i);
    std::size_t r = i - off_[b];
    if (b == 0 || b == 4) return skew_basis_[r];
    if (b == 1 || b == 3) return A_.basis(r);
    return {};
  }

  Vec<K> bracket_basis(std::size_t i, std::size_t j) const {
    const K& k = field();
    int bi = block_of(i), bj = block_of(j);
    enum { Sm = 0, Am = 1, In = 2, Ap = 3, Sp = 4 };
    auto neg = [&](Vec<K> v) {
      for (auto& x : v) x = k.neg(x);
      return v;
    };
    auto op_of = [&](std::size_t t) -> const Operator<K>& { return inst_ops_[t - off_[In]]; };
    auto apply = [&](const Operator<K>& V, const Vec<K>& v) { return mat_vec(k, V, v); };
    switch (bi * 5 + bj) {
      case In * 5 + In: {
        const auto &V = op_of(i), &W = op_of(j);
        return inst(mat_sub(k, mat_mul(k, V, W), mat_mul(k, W, V)));
      }
      case In * 5 + Ap: return a_plus(apply(op_of(i), payload(j)));
      case In * 5 + Am: return a_minus(apply(A_.eps(op_of(i)), payload(j)));
      case In * 5 + Sp: return s_plus(apply(A_.delta(op_of(i)), payload(j)));
      case In * 5 + Sm: return s_minus(apply(A_.delta(A_.eps(op_of(i))), payload(j)));
      case Sp * 5 + Ap:
      case Sm * 5 + Am:
      case Sp * 5 + Sp:
      case Sm * 5 + Sm: return zero();
      case Sp * 5 + Am: return a_plus(A_.multiply(payload(i), payload(j)));
      case Sm * 5 + Ap: return a_minus(A_.multiply(payload(i), payload(j)));
      case Ap * 5 + Am: return inst(A_.V(payload(i), payload(j)));
      case Ap * 5 + Ap: return s_plus(A_.psi(payload(i), payload(j)));
      case Am * 5 + Am: return s_minus(A_.psi(payload(i), payload(j)));
      case Sp * 5 + Sm: return inst(mat_mul(k, A_.L(payload(i)), A_.L(payload(j))));
      default: return neg(bracket_basis(j, i));
    }
  }

  void build_table() {
    const K& k = field();
    table_.assign(total_ * total_, {});
    for (std::size_t i = 0; i < total_; ++i)
      for (std::size_t j = 0; j < total_; ++j) {
        auto v = bracket_basis(i, j);
        for (std::size_t l = 0; l < total_; ++l)
          if (!k.is_zero(v[l])) table_[i * total_ + j].emplace_back(std::uint32_t(l), v[l]);
      }
  }
};

// e/d consistency of the table against the operator transforms.
template <class K>
Check check_eps_delta_consistency(const TKK<K>& L) {
  const K& k = L.field();
  const auto& A = L.algebra();
  Check c("bracket rows [V,.] agree with V, V^eps, V^delta");
  for (std::size_t r = 0; r < L.inst_basis().size(); ++r) {
    const auto& V = L.inst_basis()[r];
    auto Ve = L.basis(L.offset(0) + r);
    for (std::size_t i = 0; i < A.dim(); ++i) {
      auto a = A.basis(i);
      c.require(L.bracket(Ve, L.a_plus(a)) == L.a_plus(mat_vec(k, V, a)), "V" + std::to_string(r) + " on a+" + std::to_string(i));
      c.require(L.bracket(Ve, L.a_minus(a)) == L.a_minus(mat_vec(k, A.eps(V), a)), "V" + std::to_string(r) + " on a-" + std::to_string(i));
    }
    for (std::size_t s = 0; s < L.skew_basis().size(); ++s) {
      const auto& sv = L.skew_basis()[s];
      c.require(L.bracket(Ve, L.s_plus(sv)) == L.s_plus(mat_vec(k, A.delta(V), sv)), "V" + std::to_string(r) + " on s+" + std::to_string(s));
    }
  }
  return c;
}

}  // namespace tkk
