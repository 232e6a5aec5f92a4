#include "doctest.h"

#include "fixtures.hpp"

using namespace tkk;
using fx::vec;

TEST_CASE("exchange algebra product and involution") {
  auto A = fx::exchange(fx::f5());
  const auto& k = A.field();
  CHECK(A.multiply(vec(k, {1, 2}), vec(k, {3, 4})) == vec(k, {3, 3}));
  CHECK(A.multiply(vec(k, {1, 0}), vec(k, {0, 1})) == vec(k, {0, 0}));
  CHECK(A.involute(vec(k, {1, 2})) == vec(k, {2, 1}));
  auto [h, s] = A.split_hs(vec(k, {1, 0}));
  auto half = k.from_rational(1, 2);
  CHECK(h == Vec<FiniteField>{half, half});
  CHECK(s == Vec<FiniteField>{half, k.neg(half)});
  CHECK(A.psi(vec(k, {1, 0}), vec(k, {0, 1})) == vec(k, {1, 4}));
}

TEST_CASE("M(J,1) skew element squares to the unit") {
  auto A = fx::hexagon_algebra();
  const auto& k = A.field();
  auto s = matrix_element(k, 1, k.one(), vec(k, {0}), vec(k, {0}), k.from_int(-1));
  CHECK(A.skew().contains(k, s));
  CHECK(A.multiply(s, s) == A.unit());
}

TEST_CASE("psi on two explicit extremal matrices") {
  // [[N(x), x], [x#, 1]] for x = 1, 2 over rank-one J: psi = N(1 - 2) s
  auto A = fx::hexagon_algebra();
  const auto& k = A.field();
  const auto& J = fx::rank1_f5();
  auto B = [&](long long x) {
    auto v = vec(k, {x});
    return matrix_element(k, 1, J.N(v), v, J.sharp(v), k.one());
  };
  CHECK(B(2) == vec(k, {3, 2, 4, 1}));
  auto s = matrix_element(k, 1, k.one(), vec(k, {0}), vec(k, {0}), k.from_int(-1));
  auto p = A.psi(B(1), B(2));
  CHECK((p == vscale(k, k.from_int(4), s) || p == vscale(k, k.from_int(1), s)));
  CHECK(A.psi(B(1), B(1)) == vec(k, {0, 0, 0, 0}));
}

TEST_CASE("jordan extension has trivial involution") {
  auto A = fx::jordan25();
  CHECK(A.involution() == identity(A.field(), 2));
  CHECK(A.skew().dim() == 0);
  CHECK(psi_gram_rank(A) == 0);
}

TEST_CASE("operator identities") {
  auto A = fx::exchange(fx::f5());
  const auto& k = A.field();
  CHECK(A.V(A.unit(), A.unit()).a == identity(k, 2).a);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    auto a = random_vector(k, 2, rng), b = random_vector(k, 2, rng);
    CHECK(A.V(a, a).a == A.L(A.multiply(a, A.involute(a))).a);
    CHECK(mat_vec(k, A.U(A.unit()), b) == vsub(k, vscale(k, k.from_int(2), A.involute(b)), b));
  }
}

TEST_CASE("conjugate inverse in the exchange algebra") {
  auto A = fx::exchange(fx::f5());
  const auto& k = A.field();
  for (std::uint32_t e = 1; e < 5; ++e)
    for (std::uint32_t f = 1; f < 5; ++f) {
      auto u = Vec<FiniteField>{e, f};
      auto w = A.conjugate_inverse(u);
      REQUIRE(w);
      CHECK(*w == Vec<FiniteField>{k.inv(f), k.inv(e)});
      CHECK(*A.conjugate_inverse(*w) == u);
    }
  CHECK(*A.conjugate_inverse(A.unit()) == A.unit());
  for (std::uint32_t e = 0; e < 5; ++e) {
    CHECK_FALSE(A.conjugate_inverse(Vec<FiniteField>{e, 0}).has_value());
    CHECK_FALSE(A.conjugate_inverse(Vec<FiniteField>{0, e}).has_value());
  }
}

TEST_CASE("structurable identity on basis quadruples") {
  CHECK(check_structurable(fx::exchange(fx::f5())).pass);
  CHECK(check_structurable(fx::exchange(fx::fp(7))).pass);
  CHECK(check_structurable(fx::hexagon_algebra()).pass);
  CHECK(check_structurable(fx::jordan25()).pass);
  CHECK(check_structurable(fx::quaternions()).pass);
}

TEST_CASE("corrupted exchange constant is caught with a witness") {
  auto A = fx::exchange(fx::f5());
  auto bad = A.corrupted(0, 1, 1, A.field().one());
  bool caught = false;
  std::string witness;
  auto r = validate_algebra(bad);
  auto s = check_structurable(bad);
  if (!s.pass) {
    caught = true;
    witness = s.witness;
  } else if (!r.pass()) {
    caught = true;
    witness = r.first_failure()->witness;
  }
  CHECK(caught);
  CHECK_FALSE(witness.empty());
}

TEST_CASE("alternative laws") {
  CHECK(check_alternative(build_field_algebra(fx::f5())).pass());
  CHECK(check_alternative(fx::quaternions()).pass());
  const auto& q = *fx::qq();
  auto O = build_hurwitz<RationalField>(fx::qq(), {q.from_int(-1), q.from_int(-1), q.from_int(-1)}, false);
  CHECK(check_alternative(O).pass());
  // flip the sign of one nonzero product coefficient
  bool flipped = false;
  for (std::size_t l = 0; l < O.dim() && !flipped; ++l)
    if (!q.is_zero(O.c(3, 5, l))) {
      auto bad = O.corrupted(3, 5, l, q.mul(q.from_int(-2), O.c(3, 5, l)));
      CHECK_FALSE(check_alternative(bad).pass());
      flipped = true;
    }
  CHECK(flipped);
}

TEST_CASE("psi pairing rank") {
  CHECK(psi_gram_rank(fx::exchange(fx::f5())) == 2);
  CHECK(psi_gram_rank(fx::hexagon_algebra()) == 4);
  CHECK(psi_gram_rank(fx::quaternions()) == 4);
}

TEST_CASE("property: operator identities on every instance") {
  CHECK(check_operator_identities(fx::exchange(fx::f5())).pass());
  CHECK(check_operator_identities(fx::exchange(fx::fp(7))).pass());
  CHECK(check_operator_identities(fx::hexagon_algebra()).pass());
  CHECK(check_operator_identities(fx::jordan25()).pass());
  CHECK(check_operator_identities(fx::quaternions()).pass());
}

TEST_CASE("psi lands in the skew part") {
  auto A = fx::hexagon_algebra();
  const auto& k = A.field();
  Rng rng(3);
  for (int t = 0; t < 100; ++t) CHECK(A.skew().contains(k, A.psi(random_vector(k, 4, rng), random_vector(k, 4, rng))));
}

TEST_CASE("builder preconditions") {
  const auto& k = *fx::f5();
  CHECK_THROWS_AS(build_matrix_structurable(fx::rank1_f5(), k.zero()), AlgebraError);
  CHECK_THROWS_AS(build_hurwitz<FiniteField>(fx::f5(), {k.one(), k.one()}, true), AlgebraError);  // split over F_5
  CHECK_THROWS_AS(build_hurwitz<FiniteField>(fx::f5(), {k.one()}, false), AlgebraError);
}
