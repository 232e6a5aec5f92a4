#include "doctest.h"

#include "fixtures.hpp"

using namespace tkk;
using fx::vec;

TEST_CASE("rref of a rank-one matrix over F_5") {
  const auto& k = *fx::f5();
  auto M = from_rows<FiniteField>({vec(k, {2, 4}), vec(k, {1, 2})}, 2);
  auto piv = rref(k, M);
  CHECK(piv == std::vector<std::size_t>{0});
  CHECK(M == from_rows<FiniteField>({vec(k, {1, 2}), vec(k, {0, 0})}, 2));
}

TEST_CASE("rref fixes identity and zero matrices") {
  const auto& k = *fx::f5();
  auto I = identity(k, 3);
  auto J = I;
  rref(k, J);
  CHECK(J == I);
  Matrix<FiniteField> Z(2, 3), Z2 = Z;
  for (auto& x : Z.a) x = 0;
  Z2 = Z;
  CHECK(rref(k, Z2).empty());
  CHECK(Z2 == Z);
}

TEST_CASE("solve_linear") {
  const auto& k = *fx::f5();
  auto v = vec(k, {3, 1, 4});
  CHECK(*solve_linear(k, identity(k, 3), v) == v);
  auto one_row = from_rows<FiniteField>({vec(k, {1, 1})}, 2);
  CHECK(*solve_linear(k, one_row, vec(k, {0})) == vec(k, {0, 0}));
  auto zero_row = from_rows<FiniteField>({vec(k, {0, 0})}, 2);
  CHECK_FALSE(solve_linear(k, zero_row, vec(k, {1})).has_value());
}

TEST_CASE("subspace sum, intersection and membership") {
  const auto& k = *fx::f5();
  auto e = [&](std::size_t i) { return unit_vector(k, 3, i); };
  Subspace<FiniteField> U(k, 3, {e(0), e(1)}), V(k, 3, {e(1), e(2)});
  CHECK(U.intersect(k, V) == Subspace<FiniteField>(k, 3, {e(1)}));
  CHECK(U.sum(k, U) == U);
  CHECK_FALSE(Subspace<FiniteField>(k, 3, {e(0)}).contains(k, e(1)));
}

TEST_CASE("enumerate_vectors order and size") {
  const auto& k = *fx::f5();
  std::vector<Vec<FiniteField>> seen;
  enumerate_vectors<FiniteField>(k, 1, [&](const Vec<FiniteField>& v) {
    seen.push_back(v);
    return true;
  });
  REQUIRE(seen.size() == 5);
  for (std::uint32_t i = 0; i < 5; ++i) CHECK(seen[i] == Vec<FiniteField>{i});
  seen.clear();
  enumerate_vectors<FiniteField>(k, 2, [&](const Vec<FiniteField>& v) {
    seen.push_back(v);
    return true;
  });
  CHECK(seen.size() == 25);
  CHECK(seen.front() == vec(k, {0, 0}));
  CHECK(seen.back() == vec(k, {4, 4}));
  CHECK_THROWS_AS(enumerate_vectors<RationalField>(*fx::qq(), 1, [](const auto&) { return true; }), std::invalid_argument);
}

TEST_CASE("property: rref idempotent, dimension formula, span round trip") {
  for (std::uint32_t p : {5u, 7u}) {
    auto kp = fx::fp(p);
    const auto& k = *kp;
    Rng rng(p);
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 2 + rng() % 5;
      auto random_space = [&] {
        std::vector<Vec<FiniteField>> vs;
        std::size_t m = rng() % (n + 1);
        for (std::size_t i = 0; i < m; ++i) vs.push_back(random_vector(k, n, rng));
        return Subspace<FiniteField>(k, n, vs);
      };
      Matrix<FiniteField> M(1 + rng() % 4, n);
      for (auto& x : M.a) x = random_scalar(k, rng);
      auto R = M;
      rref(k, R);
      auto R2 = R;
      rref(k, R2);
      CHECK(R2 == R);
      auto U = random_space(), V = random_space();
      CHECK(U.sum(k, V).dim() + U.intersect(k, V).dim() == U.dim() + V.dim());
      CHECK(Subspace<FiniteField>(k, n, U.basis_vectors()) == U);
    }
  }
}

TEST_CASE("finite field constraints and arithmetic") {
  CHECK_THROWS_AS(FiniteField(3), FieldError);
  CHECK_THROWS_AS(FiniteField(2), FieldError);
  CHECK_THROWS_AS(FiniteField(6), FieldError);
  CHECK_THROWS_AS(FiniteField(5, {3, 0, 0, 1}), FieldError);  // t^3 - 2 = (t - 3)(...) over F_5
  FiniteField f25(5, {3, 0, 1});
  CHECK(f25.order() == 25);
  for (std::uint32_t a = 1; a < 25; ++a) CHECK(f25.mul(a, f25.inv(a)) == f25.one());
  FiniteField f125(5, {1, 1, 0, 1});
  CHECK(f125.order() == 125);
  for (std::uint32_t a = 1; a < 125; ++a) CHECK(f125.mul(a, f125.inv(a)) == f125.one());
  const auto& k = *fx::f5();
  CHECK(k.from_rational(1, 2) == 3);
  CHECK(k.from_int(-1) == 4);
}

TEST_CASE("rational arithmetic is exact") {
  const auto& q = *fx::qq();
  auto x = q.from_rational(1, 24);
  CHECK(q.mul(x, q.from_int(24)) == q.one());
  CHECK(q.from_string("-6/4") == q.from_rational(-3, 2));
  auto big = q.one();
  for (int i = 0; i < 40; ++i) big = q.mul(big, q.from_int(1000));
  CHECK(q.to_string(big).size() == 121);
}
