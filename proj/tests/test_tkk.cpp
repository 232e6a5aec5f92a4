#include "doctest.h"

#include "fixtures.hpp"

using namespace tkk;
using fx::vec;

template <class K>
void check_integrity(const TKK<K>& L, std::array<std::size_t, 5> dims) {
  CHECK(L.grade_dims() == dims);
  CHECK(L.check_jacobi().pass);
  CHECK(L.check_grading().pass);
  CHECK(L.check_l0_generated().pass);
  CHECK(check_eps_delta_consistency(L).pass);
}

TEST_CASE("TKK dimensions and integrity") {
  check_integrity(fx::exchange_lie(), {1, 2, 2, 2, 1});
  check_integrity(LieFF(fx::exchange(fx::fp(7))), {1, 2, 2, 2, 1});
  check_integrity(fx::hexagon_lie(), {1, 4, 4, 4, 1});
  check_integrity(LieFF(fx::jordan25()), {0, 2, 2, 2, 0});
  check_integrity(TKK<RationalField>(fx::quaternions()), {3, 4, 7, 4, 3});
  CHECK(fx::exchange_lie().dim() == 8);
  CHECK(fx::hexagon_lie().dim() == 14);
}

TEST_CASE("bracket table entries from the definition") {
  const auto& L = fx::hexagon_lie();
  const auto& A = L.algebra();
  const auto& k = L.field();
  for (const auto& s : L.skew_basis())
    for (const auto& t : L.skew_basis()) CHECK(is_zero(k, L.bracket(L.s_plus(s), L.s_plus(t))));
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      CHECK(L.bracket(L.a_plus(A.basis(i)), L.a_minus(A.basis(j))) == L.inst(A.V(A.basis(i), A.basis(j))));
}

TEST_CASE("grade projection splits an element") {
  const auto& L = fx::hexagon_lie();
  const auto& k = L.field();
  Rng rng(1);
  auto x = random_vector(k, L.dim(), rng);
  auto sum = L.zero();
  for (int g = -2; g <= 2; ++g) sum = vadd(k, sum, L.grade_project(x, g));
  CHECK(sum == x);
}

TEST_CASE("corrupted structure constants break the Lie algebra") {
  auto A = fx::exchange(fx::f5());
  auto bad = A.corrupted(1, 1, 0, A.field().one());
  CHECK_THROWS_AS(LieFF(bad, true), TKKError);
}

TEST_CASE("V_{a,sa} is nonzero for conjugate invertible a") {
  for (auto* Lp : {&fx::exchange_lie(), &fx::hexagon_lie()}) {
    const auto& L = *Lp;
    const auto& A = L.algebra();
    const auto& k = L.field();
    enumerate_vectors<FiniteField>(k, A.dim(), [&](const Vec<FiniteField>& a) {
      if (!A.conjugate_inverse(a)) return true;
      for (const auto& s : L.skew_basis())
        for (std::uint32_t c = 1; c < 5; ++c) CHECK_FALSE(is_zero(k, A.V(a, A.multiply(vscale(k, c, s), a)).a));
      return true;
    });
  }
}

TEST_CASE("no absolute zero divisors") {
  CHECK(check_nondegenerate(fx::exchange_lie(), 200, 0).pass);
  CHECK(check_nondegenerate(fx::hexagon_lie(), 200, 0).pass);
  CHECK(check_nondegenerate(TKK<RationalField>(fx::quaternions()), 50, 0).pass);
}
