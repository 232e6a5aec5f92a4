#include "doctest.h"

#include "fixtures.hpp"

using namespace tkk;
using fx::vec;

TEST_CASE("rank-one cubic norm values over F_5") {
  const auto& J = fx::rank1_f5();
  const auto& k = J.field();
  CHECK(J.N(vec(k, {2})) == 3);
  CHECK(J.sharp(vec(k, {2})) == vec(k, {4}));
  CHECK(J.T(vec(k, {2}), vec(k, {3})) == 3);
  CHECK(J.N(vec(k, {1})) == 1);
  CHECK(J.sharp(vec(k, {1})) == vec(k, {1}));
  CHECK(J.cross(vec(k, {2}), vec(k, {3})) == vec(k, {2}));
  CHECK(J.N(vec(k, {0})) == 0);
  CHECK(J.sharp(vec(k, {0})) == vec(k, {0}));
  for (long long x = 0; x < 5; ++x) CHECK(J.cross(vec(k, {x}), vec(k, {x})) == vscale(k, k.from_int(2), J.sharp(vec(k, {x}))));
}

TEST_CASE("cubic field extension over F_5") {
  auto J = build_cubic_field(fx::f5(), {1, 1, 0, 1});
  const auto& k = J.field();
  CHECK(J.dim() == 3);
  CHECK(J.N(J.basepoint()) == k.one());
  CHECK(J.sharp(J.basepoint()) == J.basepoint());
  CHECK(check_cubic(J, 50, 0).pass());
  CHECK_THROWS(build_cubic_field(fx::f5(), {3, 0, 0, 1}));  // t^3 - 2 has the root 3
}

TEST_CASE("property: cubic invariants exhaustively") {
  CHECK(check_cubic(fx::rank1_f5(), 50, 0).pass());
  auto J = build_cubic_field(fx::f5(), {1, 1, 0, 1});
  const auto& k = J.field();
  std::size_t zeros = 0;
  enumerate_vectors<FiniteField>(k, 3, [&](const Vec<FiniteField>& x) {
    if (k.is_zero(J.N(x))) ++zeros;
    CHECK(J.sharp(J.sharp(x)) == vscale(k, J.N(x), x));
    return true;
  });
  CHECK(zeros == 1);
}
