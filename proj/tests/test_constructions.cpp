#include <doctest.h>

#include "folcan/constructions.hpp"
#include "folcan/error.hpp"
#include "support/random.hpp"

using namespace folcan;

TEST_CASE("ruled_double_cover examples") {
  ConstructionReport r = ruled_double_cover({2, 2, 2});
  CHECK(r.kf2 == Rational(8));
  CHECK(r.fiber_genus == 2);
  CHECK(r.kf_dot_kx == Rational(12));

  r = ruled_double_cover({2, 2, 5});
  CHECK(r.kf2 == Rational(8));
  CHECK(r.kf_dot_kx == Rational(24));
}

TEST_CASE("ruled_double_cover grid against the closed forms") {
  for (long k : {2, 4, 6}) {
    for (long g : {2, 3, 4}) {
      for (long q : {0, 2, 5}) {
        CAPTURE(k);
        CAPTURE(g);
        CAPTURE(q);
        const ConstructionReport r = ruled_double_cover({k, g, q});
        CHECK(r.kf2 == Rational(2 * k * g * (g - 1)));
        CHECK(r.kf_dot_kx - r.kf2 == Rational(4 * (g - 1) * (q - 1)));
        CHECK(r.fiber_genus == g);
        CHECK(r.auxiliary.at("R.F") == Rational(2 * g + 2));
        CHECK(r.auxiliary.at("K_P^2") == Rational(8 * (1 - q)));
        CHECK(r.kf2 == ruled_double_cover({k, g, 0}).kf2);
      }
    }
  }
}

TEST_CASE("ruled_double_cover rejects bad input") {
  for (RuledCoverInput bad : {RuledCoverInput{3, 2, 0}, RuledCoverInput{0, 2, 0}, RuledCoverInput{2, 1, 0},
                              RuledCoverInput{2, 2, -1}, RuledCoverInput{-2, 2, 0}}) {
    try {
      ruled_double_cover(bad);
      FAIL("accepted invalid input");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidInput);
    }
  }
}

TEST_CASE("abelian_double_cover examples") {
  ConstructionReport r = abelian_double_cover({2, 1});
  CHECK(r.fiber_genus == 5);
  CHECK(r.auxiliary.at("A.F") == Rational(8));
  CHECK(r.auxiliary.at("A^2") == Rational(32));
  CHECK(r.kf2 == Rational(16));

  r = abelian_double_cover({2, 3});
  CHECK(r.fiber_genus == 21);
  CHECK(r.kf2 == Rational(16));

  r = abelian_double_cover({2, 0});
  CHECK(r.auxiliary.at("A.F") == Rational(4));
  CHECK(r.fiber_genus == 3);

  CHECK_THROWS_AS(abelian_double_cover({1, 1}), Error);
  CHECK_THROWS_AS(abelian_double_cover({2, -1}), Error);
}

TEST_CASE("abelian_double_cover: K_F^2 = K_F.K_S = A^2/2, independent of n") {
  for (long d = 2; d <= 6; ++d) {
    for (long n = 0; n <= 7; ++n) {
      const ConstructionReport r = abelian_double_cover({d, n});
      CHECK(r.kf2 == r.kf_dot_kx);
      CHECK(r.kf2 == r.auxiliary.at("A^2") / Rational(2));
      CHECK(r.kf2 == Rational(4 * d * d));
      CHECK(r.fiber_genus == d * (n * n + 1) + 1);
    }
  }
}

TEST_CASE("riemann_hurwitz examples") {
  CHECK(riemann_hurwitz(0, 2, 6) == 2);
  CHECK(riemann_hurwitz(1, 2, 2 * 1 * (4 + 1)) == 6);
  for (long g = 0; g < 10; ++g) CHECK(riemann_hurwitz(0, 2, 2 * g + 2) == g);
  CHECK(riemann_hurwitz(1, 1, 0) == 1);

  auto code_of = [](long gb, long deg, long ram) {
    try {
      riemann_hurwitz(gb, deg, ram);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInconsistency;
  };
  CHECK(code_of(0, 2, 5) == ErrorCode::NonIntegralGenus);
  CHECK(code_of(0, 3, 0) == ErrorCode::NegativeGenus);
}

TEST_CASE("fibration_identities examples") {
  FibrationIdentities f = fibration_identities(16, 2, 2);
  CHECK(f.kxc2 == Rational(8));
  CHECK(f.kf_dot_kx == Rational(12));
  CHECK(f.kx2_back == Rational(16));

  f = fibration_identities(Rational(7, 3), 5, 1);
  CHECK(f.kxc2 == Rational(7, 3));
  CHECK(f.kf_dot_kx == Rational(7, 3));

  f = fibration_identities(0, 3, 0);
  CHECK(f.kxc2 == Rational(16));
  CHECK(f.kf_dot_kx == Rational(8));
}

TEST_CASE("fibration_identities round-trip on random rationals") {
  testing::Generator gen(4);
  for (int i = 0; i < 200; ++i) {
    const Rational kx2 = gen.rational(1000, 97);
    const long gf = gen.integer(2, 30);
    const long gc = gen.integer(0, 30);
    REQUIRE(fibration_identities(kx2, gf, gc).kx2_back == kx2);
  }
}

TEST_CASE("construction reports convert to integral numerics") {
  for (long k : {2, 4}) {
    for (long g : {2, 3}) {
      for (long q : {0, 3}) {
        for (long chi : {-3, 0, 4}) {
          const ModelNumerics num = to_model_numerics(ruled_double_cover({k, g, q}), chi);
          CHECK(num.basket.empty());
          CHECK(num.chi == chi);
          CHECK(num.kx2.has_value());
          CHECK(integrality_check(num));
        }
      }
    }
  }
  const ModelNumerics ab = to_model_numerics(abelian_double_cover({3, 2}), 1);
  CHECK(*ab.kx2 == Rational(36));
  CHECK(integrality_check(ab));
}

TEST_CASE("double cover pairing doubles the base pairing") {
  const SurfaceModel p = ruled_surface_lattice(4, 1);
  const RationalVector w{Rational(1), Rational(3)};
  const RationalVector v{Rational(2), Rational(-1)};
  CHECK(double_cover_pair(p, w, v) == Rational(2) * p.intersect(w, v));
}
