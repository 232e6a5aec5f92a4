#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tkklab/field.hpp"

namespace tkk {

template <class K>
using Scalar = typename K::value_type;
template <class K>
using Vec = std::vector<Scalar<K>>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class K>
struct Matrix {
  using value_type = Scalar<K>;
  std::size_t rows = 0, cols = 0;
  std::vector<value_type> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  value_type& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  Vec<K> row(std::size_t i) const { return Vec<K>(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
  Vec<K> col(std::size_t j) const {
    Vec<K> v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(std::size_t j, const Vec<K>& v) {
    for (std::size_t i = 0; i < rows; ++i) (*this)(i, j) = v[i];
  }
  void set_row(std::size_t i, const Vec<K>& v) { std::copy(v.begin(), v.end(), a.begin() + i * cols); }
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <class K>
Matrix<K> identity(const K& k, std::size_t n) {
  Matrix<K> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

template <class K>
Matrix<K> from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
  Matrix<K> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row length mismatch");
    m.set_row(i, rows[i]);
  }
  return m;
}

template <class K>
bool is_zero(const K& k, const Vec<K>& v) {
  for (const auto& x : v)
    if (!k.is_zero(x)) return false;
  return true;
}

template <class K>
bool is_zero(const K& k, const Matrix<K>& m) {
  for (const auto& x : m.a)
    if (!k.is_zero(x)) return false;
  return true;
}

template <class K>
Vec<K> vadd(const K& k, const Vec<K>& x, const Vec<K>& y) {
  Vec<K> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = k.add(x[i], y[i]);
  return r;
}

template <class K>
Vec<K> vsub(const K& k, const Vec<K>& x, const Vec<K>& y) {
  Vec<K> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = k.sub(x[i], y[i]);
  return r;
}

template <class K>
Vec<K> vscale(const K& k, const Scalar<K>& c, const Vec<K>& x) {
  Vec<K> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = k.mul(c, x[i]);
  return r;
}

// y += c x
template <class K>
void vaxpy(const K& k, const Scalar<K>& c, const Vec<K>& x, Vec<K>& y) {
  if (k.is_zero(c)) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!k.is_zero(x[i])) y[i] = k.add(y[i], k.mul(c, x[i]));
}

template <class K>
Vec<K> unit_vector(const K& k, std::size_t n, std::size_t i) {
  Vec<K> v(n, k.zero());
  v[i] = k.one();
  return v;
}

template <class K>
Matrix<K> mat_mul(const K& k, const Matrix<K>& A, const Matrix<K>& B) {
  if (A.cols != B.rows) throw DimensionError("matrix product shape mismatch");
  Matrix<K> C(A.rows, B.cols);
  for (auto& x : C.a) x = k.zero();
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t l = 0; l < A.cols; ++l) {
      const auto& a = A(i, l);
      if (k.is_zero(a)) continue;
      for (std::size_t j = 0; j < B.cols; ++j) {
        const auto& b = B(l, j);
        if (!k.is_zero(b)) C(i, j) = k.add(C(i, j), k.mul(a, b));
      }
    }
  return C;
}

template <class K>
Vec<K> mat_vec(const K& k, const Matrix<K>& A, const Vec<K>& v) {
  if (A.cols != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vec<K> r(A.rows, k.zero());
  for (std::size_t j = 0; j < A.cols; ++j) {
    if (k.is_zero(v[j])) continue;
    for (std::size_t i = 0; i < A.rows; ++i) {
      const auto& a = A(i, j);
      if (!k.is_zero(a)) r[i] = k.add(r[i], k.mul(a, v[j]));
    }
  }
  return r;
}

template <class K>
Matrix<K> mat_add(const K& k, const Matrix<K>& A, const Matrix<K>& B) {
  Matrix<K> C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = k.add(A.a[i], B.a[i]);
  return C;
}

template <class K>
Matrix<K> mat_sub(const K& k, const Matrix<K>& A, const Matrix<K>& B) {
  Matrix<K> C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = k.sub(A.a[i], B.a[i]);
  return C;
}

template <class K>
Matrix<K> mat_scale(const K& k, const Scalar<K>& c, const Matrix<K>& A) {
  Matrix<K> C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = k.mul(c, A.a[i]);
  return C;
}

template <class K>
Matrix<K> transpose(const Matrix<K>& A) {
  Matrix<K> T(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

// In-place reduced row echelon form. Returns the pivot columns.
template <class K>
std::vector<std::size_t> rref(const K& k, Matrix<K>& M, std::size_t col_limit = std::size_t(-1)) {
  std::vector<std::size_t> piv;
  std::size_t ncols = std::min(M.cols, col_limit);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < M.rows; ++c) {
    std::size_t sel = r;
    while (sel < M.rows && k.is_zero(M(sel, c))) ++sel;
    if (sel == M.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < M.cols; ++j) std::swap(M(sel, j), M(r, j));
    auto inv = k.inv(M(r, c));
    for (std::size_t j = c; j < M.cols; ++j) M(r, j) = k.mul(M(r, j), inv);
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == r || k.is_zero(M(i, c))) continue;
      auto f = M(i, c);
      for (std::size_t j = c; j < M.cols; ++j)
        if (!k.is_zero(M(r, j))) M(i, j) = k.sub(M(i, j), k.mul(f, M(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class K>
std::size_t rank(const K& k, Matrix<K> M) {
  return rref(k, M).size();
}

// Pivot-only solution of A x = b (free variables zero); nullopt if inconsistent.
template <class K>
std::optional<Vec<K>> solve_linear(const K& k, const Matrix<K>& A, const Vec<K>& b) {
  if (b.size() != A.rows) throw DimensionError("right-hand side length mismatch");
  Matrix<K> aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
    aug(i, A.cols) = b[i];
  }
  auto piv = rref(k, aug);
  if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
  Vec<K> x(A.cols, k.zero());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, A.cols);
  return x;
}

// Basis of the right kernel {x : A x = 0}, one vector per free column.
template <class K>
std::vector<Vec<K>> kernel_basis(const K& k, Matrix<K> A) {
  auto piv = rref(k, A);
  std::vector<bool> is_piv(A.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec<K>> out;
  for (std::size_t f = 0; f < A.cols; ++f) {
    if (is_piv[f]) continue;
    Vec<K> x(A.cols, k.zero());
    x[f] = k.one();
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = k.neg(A(r, f));
    out.push_back(std::move(x));
  }
  return out;
}

template <class K>
std::optional<Matrix<K>> inverse(const K& k, const Matrix<K>& A) {
  if (A.rows != A.cols) throw DimensionError("inverse of non-square matrix");
  std::size_t n = A.rows;
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    for (std::size_t j = 0; j < n; ++j) aug(i, n + j) = i == j ? k.one() : k.zero();
  }
  auto piv = rref(k, aug, n);
  if (piv.size() < n) return std::nullopt;
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Subspace of K^n stored as a canonical RREF basis; equality is identity of bases.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  Subspace(const K& k, std::size_t ambient, const std::vector<Vec<K>>& spanning) : n_(ambient) {
    Matrix<K> m(spanning.size(), ambient);
    for (std::size_t i = 0; i < spanning.size(); ++i) {
      if (spanning[i].size() != ambient) throw DimensionError("vector length does not match ambient dimension");
      m.set_row(i, spanning[i]);
    }
    init(k, std::move(m));
  }
  Subspace(const K& k, Matrix<K> rows) : n_(rows.cols) { init(k, std::move(rows)); }

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.n_ = ambient;
    s.basis_ = Matrix<K>(0, ambient);
    return s;
  }
  static Subspace whole(const K& k, std::size_t ambient) { return Subspace(k, identity(k, ambient)); }

  std::size_t dim() const { return basis_.rows; }
  std::size_t ambient() const { return n_; }
  const Matrix<K>& basis() const { return basis_; }
  Vec<K> basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec<K>> basis_vectors() const {
    std::vector<Vec<K>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  // v minus its projection along the pivot coordinates; zero iff v lies in the span.
  Vec<K> reduce(const K& k, Vec<K> v) const {
    if (v.size() != n_) throw DimensionError("vector length does not match ambient dimension");
    for (std::size_t r = 0; r < piv_.size(); ++r) {
      auto c = v[piv_[r]];
      if (k.is_zero(c)) continue;
      for (std::size_t j = piv_[r]; j < n_; ++j)
        if (!k.is_zero(basis_(r, j))) v[j] = k.sub(v[j], k.mul(c, basis_(r, j)));
    }
    return v;
  }
  bool contains(const K& k, const Vec<K>& v) const { return is_zero(k, reduce(k, v)); }
  bool contains(const K& k, const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(k, o.basis_.row(i))) return false;
    return true;
  }
  // Coordinates relative to the RREF basis, or nullopt when v is outside.
  std::optional<Vec<K>> coordinates(const K& k, const Vec<K>& v) const {
    if (!contains(k, v)) return std::nullopt;
    Vec<K> c(dim());
    for (std::size_t r = 0; r < piv_.size(); ++r) c[r] = v[piv_[r]];
    return c;
  }
  Vec<K> combine(const K& k, const Vec<K>& coeffs) const {
    Vec<K> v(n_, k.zero());
    for (std::size_t r = 0; r < dim(); ++r) vaxpy(k, coeffs[r], basis_.row(r), v);
    return v;
  }

  Subspace sum(const K& k, const Subspace& o) const {
    Matrix<K> m(dim() + o.dim(), n_);
    for (std::size_t i = 0; i < dim(); ++i) m.set_row(i, basis_.row(i));
    for (std::size_t i = 0; i < o.dim(); ++i) m.set_row(dim() + i, o.basis_.row(i));
    return Subspace(k, std::move(m));
  }
  Subspace intersect(const K& k, const Subspace& o) const {
    std::size_t a = dim(), b = o.dim();
    Matrix<K> m(n_, a + b);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(j, i) = basis_(i, j);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(j, a + i) = k.neg(o.basis_(i, j));
    std::vector<Vec<K>> vecs;
    for (auto& ker : kernel_basis(k, m)) {
      Vec<K> v(n_, k.zero());
      for (std::size_t i = 0; i < a; ++i) vaxpy(k, ker[i], basis_.row(i), v);
      vecs.push_back(std::move(v));
    }
    return Subspace(k, n_, vecs);
  }

  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t n_ = 0;
  Matrix<K> basis_;
  std::vector<std::size_t> piv_;

  void init(const K& k, Matrix<K> m) {
    piv_ = rref(k, m);
    Matrix<K> b(piv_.size(), m.cols);
    for (std::size_t i = 0; i < piv_.size(); ++i)
      for (std::size_t j = 0; j < m.cols; ++j) b(i, j) = m(i, j);
    basis_ = std::move(b);
  }
};

template <class K>
Subspace<K> image(const K& k, const Matrix<K>& A, const Subspace<K>& S) {
  std::vector<Vec<K>> vecs;
  for (std::size_t i = 0; i < S.dim(); ++i) vecs.push_back(mat_vec(k, A, S.basis_vector(i)));
  return Subspace<K>(k, A.rows, vecs);
}

// Lexicographic walk over F_q^n (last coordinate varies fastest).
template <class K>
void enumerate_vectors(const K& k, std::size_t n, const std::function<bool(const Vec<K>&)>& visit) {
  if constexpr (!K::is_finite) {
    (void)k;
    (void)n;
    (void)visit;
    throw std::invalid_argument("enumeration requires a finite field");
  } else {
    std::vector<std::uint32_t> idx(n, 0);
    Vec<K> v(n, k.zero());
    std::uint32_t q = k.order();
    while (true) {
      if (!visit(v)) return;
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++idx[i] < q) {
          v[i] = k.element(idx[i]);
          break;
        }
        idx[i] = 0;
        v[i] = k.zero();
        if (i == 0) return;
      }
      if (n == 0) return;
    }
  }
}

// All vectors of a subspace, lexicographic in the RREF coordinates.
template <class K>
void enumerate_subspace(const K& k, const Subspace<K>& S, const std::function<bool(const Vec<K>&)>& visit) {
  enumerate_vectors<K>(k, S.dim(), [&](const Vec<K>& c) { return visit(S.combine(k, c)); });
}

// One normalized representative (first nonzero entry 1) per 1-dimensional subspace.
template <class K>
void enumerate_points(const K& k, std::size_t n, const std::function<bool(const Vec<K>&)>& visit) {
  enumerate_vectors<K>(k, n, [&](const Vec<K>& v) {
    for (const auto& x : v) {
      if (k.is_zero(x)) continue;
      if (!k.eq(x, k.one())) return true;
      return visit(v);
    }
    return true;
  });
}

// Every d-dimensional subspace of F_q^n exactly once, as an RREF basis (pivot sets in lexicographic order).
template <class K>
void enumerate_subspaces(const K& k, std::size_t n, std::size_t d, const std::function<bool(const Subspace<K>&)>& visit) {
  if (d > n) return;
  std::vector<std::size_t> piv(d);
  for (std::size_t i = 0; i < d; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
    bool go = true;
    enumerate_vectors<K>(k, free.size(), [&](const Vec<K>& vals) {
      Matrix<K> m(d, n);
      for (auto& e : m.a) e = k.zero();
      for (std::size_t r = 0; r < d; ++r) m(r, piv[r]) = k.one();
      for (std::size_t f = 0; f < free.size(); ++f) m(free[f].first, free[f].second) = vals[f];
      go = visit(Subspace<K>(k, std::move(m)));
      return go;
    });
    if (!go) return;
    std::size_t i = d;
    while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

template <class K>
std::string format_vector(const K& k, const Vec<K>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += k.to_string(v[i]);
  }
  return s + "]";
}

template <class K>
std::string format_matrix(const K& k, const Matrix<K>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i) s += ",";
    s += format_vector(k, m.row(i));
  }
  return s + "]";
}

}  // namespace tkk
