#pragma once

#include <memory>

#include "tkklab/geometry.hpp"

namespace fx {

using namespace tkk;

inline std::shared_ptr<const FiniteField> fp(std::uint32_t p) { return std::make_shared<const FiniteField>(p); }
inline std::shared_ptr<const FiniteField> f5() {
  static auto k = fp(5);
  return k;
}
inline std::shared_ptr<const RationalField> qq() {
  static auto k = std::make_shared<const RationalField>();
  return k;
}

inline Algebra<FiniteField> exchange(std::shared_ptr<const FiniteField> k) { return build_exchange(build_field_algebra(k)); }
inline const CubicNorm<FiniteField>& rank1_f5() {
  static auto J = build_cubic_rank1(f5());
  return J;
}
inline Algebra<FiniteField> hexagon_algebra() { return build_matrix_structurable(rank1_f5(), f5()->one()); }
// F_25 = F_5[t]/(t^2 - 2)
inline Algebra<FiniteField> jordan25() { return build_jordan_extension<FiniteField>(f5(), {f5()->from_int(-2), 0, 1}); }
inline Algebra<RationalField> quaternions() {
  const auto& k = *qq();
  return build_hurwitz<RationalField>(qq(), {k.from_int(-1), k.from_int(-1)}, true);
}

inline const LieFF& exchange_lie() {
  static LieFF L(exchange(f5()));
  return L;
}
inline const LieFF& hexagon_lie() {
  static LieFF L(hexagon_algebra());
  return L;
}
inline const IncidenceGeometry& hexagon_geometry() {
  static IncidenceGeometry g = [] {
    auto g = build_hexagon_geometry(hexagon_lie(), 1, 1u << 24, 2);
    add_hexagon_labels(g, hexagon_lie(), rank1_f5());
    return g;
  }();
  return g;
}
inline const IncidenceGeometry& triangle_geometry() {
  static IncidenceGeometry g = [] {
    auto g = build_triangle_geometry(exchange_lie(), 1u << 20, 2);
    add_triangle_labels(g, exchange_lie());
    return g;
  }();
  return g;
}

template <class K>
Vec<K> vec(const K& k, std::initializer_list<long long> xs) {
  Vec<K> v;
  for (auto x : xs) v.push_back(k.from_int(x));
  return v;
}

}  // namespace fx
