#pragma once

#include <memory>
#include <string>

#include "tkklab/exactlin.hpp"
#include "tkklab/report.hpp"

namespace tkk {

// Cubic norm structure (N, T, sharp, cross, basepoint) stored as coefficient tables.
template <class K>
class CubicNorm {
 public:
  CubicNorm() = default;
  CubicNorm(std::shared_ptr<const K> k, std::size_t dim, std::string tag)
      : k_(std::move(k)), dim_(dim), tag_(std::move(tag)), norm_(dim * dim * dim), trace_(dim, dim) {
    sharp_.assign(dim, Matrix<K>(dim, dim));
    base_.assign(dim, k_->zero());
  }

  const K& field() const { return *k_; }
  std::shared_ptr<const K> field_ptr() const { return k_; }
  std::size_t dim() const { return dim_; }
  const std::string& tag() const { return tag_; }
  const Vec<K>& basepoint() const { return base_; }

  // Coefficient of x_i x_j x_k (i <= j <= k) in N.
  Scalar<K>& norm_coeff(std::size_t i, std::size_t j, std::size_t l) { return norm_[(i * dim_ + j) * dim_ + l]; }
  Matrix<K>& trace_gram() { return trace_; }
  const Matrix<K>& trace_gram() const { return trace_; }
  // (x#)_l = x^T Q_l x with Q_l symmetric.
  Matrix<K>& sharp_form(std::size_t l) { return sharp_[l]; }
  void set_basepoint(Vec<K> b) { base_ = std::move(b); }

  Scalar<K> N(const Vec<K>& x) const {
    const K& k = *k_;
    check_dim(x);
    auto r = k.zero();
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        for (std::size_t l = j; l < dim_; ++l) {
          const auto& c = norm_[(i * dim_ + j) * dim_ + l];
          if (!k.is_zero(c)) r = k.add(r, k.mul(c, k.mul(x[i], k.mul(x[j], x[l]))));
        }
    return r;
  }
  Scalar<K> T(const Vec<K>& x, const Vec<K>& y) const {
    check_dim(x);
    check_dim(y);
    const K& k = *k_;
    auto r = k.zero();
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r = k.add(r, k.mul(x[i], k.mul(trace_(i, j), y[j])));
    return r;
  }
  Vec<K> sharp(const Vec<K>& x) const {
    check_dim(x);
    const K& k = *k_;
    Vec<K> out(dim_, k.zero());
    for (std::size_t l = 0; l < dim_; ++l) {
      auto r = k.zero();
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r = k.add(r, k.mul(x[i], k.mul(sharp_[l](i, j), x[j])));
      out[l] = r;
    }
    return out;
  }
  // Linearization of sharp.
  Vec<K> cross(const Vec<K>& x, const Vec<K>& y) const {
    const K& k = *k_;
    return vsub(k, vsub(k, sharp(vadd(k, x, y)), sharp(x)), sharp(y));
  }

 private:
  std::shared_ptr<const K> k_;
  std::size_t dim_ = 0;
  std::string tag_;
  std::vector<Scalar<K>> norm_;
  Matrix<K> trace_;
  std::vector<Matrix<K>> sharp_;
  Vec<K> base_;

  void check_dim(const Vec<K>& x) const {
    if (x.size() != dim_) throw DimensionError("cubic norm structure argument has wrong length");
  }
};

// J = k with N(x) = x^3, x# = x^2, T(x,y) = 3xy.
template <class K>
CubicNorm<K> build_cubic_rank1(std::shared_ptr<const K> kp) {
  const K& k = *kp;
  CubicNorm<K> J(kp, 1, "rank1");
  J.norm_coeff(0, 0, 0) = k.one();
  J.trace_gram()(0, 0) = k.from_int(3);
  J.sharp_form(0)(0, 0) = k.one();
  J.set_basepoint({k.one()});
  return J;
}

// J = F_p[t]/(f) with f cubic irreducible: N the field norm, T(x,y) = Tr(xy), x# the adjoint.
CubicNorm<FiniteField> build_cubic_field(std::shared_ptr<const FiniteField> base, const std::vector<std::uint32_t>& modulus);

// Build-time invariants: exhaustive when |J| <= exhaustive_limit, sampled otherwise.
template <class K>
Report check_cubic(const CubicNorm<K>& J, std::size_t samples, std::uint64_t seed, std::uint64_t exhaustive_limit = 125) {
  const K& k = J.field();
  Report rep;
  Check base("cubic basepoint N(1)=1 and 1#=1");
  base.require(k.eq(J.N(J.basepoint()), k.one()), "N(basepoint) != 1");
  base.require(J.sharp(J.basepoint()) == J.basepoint(), "basepoint# != basepoint");
  Check adj("cubic x## = N(x) x");
  Check lin("cubic cross is linearization, x x x = 2 x#");
  Check tr("cubic T(x#, x) = 3 N(x)");
  Check aniso("cubic anisotropy N(x)=0 iff x=0");
  auto visit = [&](const Vec<K>& x) {
    auto s = J.sharp(x);
    auto n = J.N(x);
    adj.require(J.sharp(s) == vscale(k, n, x), "x=" + format_vector(k, x));
    lin.require(J.cross(x, x) == vscale(k, k.from_int(2), s), "x=" + format_vector(k, x));
    tr.require(k.eq(J.T(s, x), k.mul(k.from_int(3), n)), "x=" + format_vector(k, x));
    aniso.require(k.is_zero(n) == is_zero(k, x), "x=" + format_vector(k, x));
    return true;
  };
  bool exhaustive = false;
  if constexpr (K::is_finite) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < J.dim(); ++i) size *= k.order();
    if (size <= exhaustive_limit) {
      exhaustive = true;
      enumerate_vectors<K>(k, J.dim(), visit);
    }
  }
  if (!exhaustive) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) visit(random_vector(k, J.dim(), rng));
    aniso.note = "sampled";
  }
  for (auto* c : {&base, &adj, &lin, &tr, &aniso}) rep.add(*c);
  return rep;
}

}  // namespace tkk
