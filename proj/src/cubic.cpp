#include "tkklab/cubic.hpp"

namespace tkk {

CubicNorm<FiniteField> build_cubic_field(std::shared_ptr<const FiniteField> base, const std::vector<std::uint32_t>& modulus) {
  const FiniteField& k = *base;
  if (!k.is_prime()) throw FieldError("cubic_field requires a prime base field");
  if (modulus.size() != 4) throw FieldError("cubic_field modulus must have degree 3");
  FiniteField ext(k.characteristic(), modulus);  // throws on reducible modulus
  const std::uint64_t p = k.characteristic();
  const std::size_t d = 3;

  auto to_ext = [&](const Vec<FiniteField>& x) {
    std::vector<long long> dg(x.begin(), x.end());
    return ext.from_digits(dg);
  };
  auto from_ext = [&](FiniteField::value_type e) {
    auto dg = ext.digits(e);
    return Vec<FiniteField>(dg.begin(), dg.end());
  };
  auto in_base = [&](FiniteField::value_type e) {
    auto dg = ext.digits(e);
    if (dg[1] != 0 || dg[2] != 0) throw FieldError("norm/trace left the base field");
    return FiniteField::value_type(dg[0]);
  };
  auto fnorm = [&](const Vec<FiniteField>& x) {
    auto e = to_ext(x);
    return in_base(ext.mul(e, ext.mul(ext.pow(e, p), ext.pow(e, p * p))));
  };
  auto fsharp = [&](const Vec<FiniteField>& x) {
    auto e = to_ext(x);
    return from_ext(ext.mul(ext.pow(e, p), ext.pow(e, p * p)));
  };
  auto ftrace = [&](FiniteField::value_type e) { return in_base(ext.add(e, ext.add(ext.pow(e, p), ext.pow(e, p * p)))); };

  CubicNorm<FiniteField> J(base, d, "cubic_field");
  std::vector<Vec<FiniteField>> e;
  for (std::size_t i = 0; i < d; ++i) e.push_back(unit_vector(k, d, i));

  auto trilinear = [&](const Vec<FiniteField>& a, const Vec<FiniteField>& b, const Vec<FiniteField>& c) {
    auto r = k.zero();
    r = k.add(r, fnorm(vadd(k, vadd(k, a, b), c)));
    r = k.sub(r, fnorm(vadd(k, a, b)));
    r = k.sub(r, fnorm(vadd(k, a, c)));
    r = k.sub(r, fnorm(vadd(k, b, c)));
    r = k.add(r, fnorm(a));
    r = k.add(r, fnorm(b));
    r = k.add(r, fnorm(c));
    return k.div(r, k.from_int(6));
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t l = j; l < d; ++l) {
        long long mult = (i == j && j == l) ? 1 : ((i == j || j == l) ? 3 : 6);
        J.norm_coeff(i, j, l) = k.mul(k.from_int(mult), trilinear(e[i], e[j], e[l]));
      }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) J.trace_gram()(i, j) = ftrace(ext.mul(to_ext(e[i]), to_ext(e[j])));
  auto half = k.inv(k.from_int(2));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec<FiniteField> v;
      if (i == j) {
        v = fsharp(e[i]);
      } else {
        v = vsub(k, vsub(k, fsharp(vadd(k, e[i], e[j])), fsharp(e[i])), fsharp(e[j]));
        v = vscale(k, half, v);
      }
      for (std::size_t l = 0; l < d; ++l) J.sharp_form(l)(i, j) = v[l];
    }
  J.set_basepoint(e[0]);
  return J;
}

}  // namespace tkk
