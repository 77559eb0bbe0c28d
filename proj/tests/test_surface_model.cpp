#include <doctest.h>

#include "folcan/error.hpp"
#include "folcan/surface_model.hpp"
#include "support/random.hpp"

using namespace folcan;

namespace {

// Basis (S, E_1, ..., E_k): a strict transform S plus exceptional curves.
SurfaceModel with_strict(const SymmetricPairing& exceptional, const RationalVector& s_dot_e, const Rational& s2) {
  const std::size_t k = exceptional.dimension();
  RationalMatrix g(k + 1, k + 1);
  g(0, 0) = s2;
  for (std::size_t i = 0; i < k; ++i) {
    g(0, i + 1) = g(i + 1, 0) = s_dot_e[i];
    for (std::size_t j = 0; j < k; ++j) g(i + 1, j + 1) = exceptional(i, j);
  }
  std::vector<std::string> labels{"S"};
  for (std::size_t i = 0; i < k; ++i) labels.push_back("E" + std::to_string(i + 1));
  return SurfaceModel(labels, SymmetricPairing(std::move(g)));
}

std::vector<std::size_t> tail_indices(std::size_t k) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i <= k; ++i) idx.push_back(i);
  return idx;
}

RationalVector unit(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v[i] = 1;
  return v;
}

SurfaceModel ruled_lattice() {
  return SurfaceModel({"C0", "F"}, SymmetricPairing::from_rows({{Rational(-2), Rational(1)}, {Rational(1), Rational(0)}}));
}

}  // namespace

TEST_CASE("validate_resolution examples") {
  const SurfaceModel one_minus_two({"E"}, SymmetricPairing::diagonal({Rational(-2)}));
  CHECK_NOTHROW(validate_resolution(one_minus_two.pairing(), {0}));

  const auto chain = SymmetricPairing::from_rows({{Rational(-2), Rational(1)}, {Rational(1), Rational(-2)}});
  CHECK_NOTHROW(validate_resolution(chain, {0, 1}));

  try {
    validate_resolution(SymmetricPairing::diagonal({Rational(0)}), {0});
    FAIL("expected NotNegativeDefinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNegativeDefinite);
    CHECK(e.context() == "signature (0,0,1)");
  }
  CHECK_THROWS_AS(ResolutionData(SurfaceModel({"E"}, SymmetricPairing::diagonal({Rational(0)})), {0}), Error);
}

TEST_CASE("mumford_pullback examples") {
  SUBCASE("A1 point, strict.E = 1 gives f*D = S + E/2") {
    const SurfaceModel y = with_strict(SymmetricPairing::diagonal({Rational(-2)}), {Rational(1)}, 0);
    const ResolutionData res(y, {1});
    CHECK(mumford_pullback(res, unit(2, 0)) == RationalVector{Rational(1), Rational(1, 2)});
  }
  SUBCASE("already orthogonal strict transform is unchanged") {
    const SurfaceModel y = with_strict(SymmetricPairing::diagonal({Rational(-2)}), {Rational(0)}, 3);
    const ResolutionData res(y, {1});
    CHECK(mumford_pullback(res, unit(2, 0)) == unit(2, 0));
  }
  SUBCASE("A2 chain, strict meets the first curve") {
    const auto chain = SymmetricPairing::from_rows({{Rational(-2), Rational(1)}, {Rational(1), Rational(-2)}});
    const SurfaceModel y = with_strict(chain, {Rational(1), Rational(0)}, 0);
    const ResolutionData res(y, {1, 2});
    CHECK(mumford_coefficients(res, unit(3, 0)) == RationalVector{Rational(2, 3), Rational(1, 3)});
  }
}

TEST_CASE("weil_intersect examples") {
  const SurfaceModel y = with_strict(SymmetricPairing::diagonal({Rational(-2)}), {Rational(1)}, 0);
  const ResolutionData res(y, {1});
  // (S + E/2)^2 = 0 + 2 * 1/2 + (1/4)(-2) = 1/2
  CHECK(weil_intersect(res, unit(2, 0), unit(2, 0)) == Rational(1, 2));

  // basis (S, T, E): T is orthogonal to E
  const auto g = SymmetricPairing::from_rows({{Rational(0), Rational(3), Rational(1)},
                                              {Rational(3), Rational(1), Rational(0)},
                                              {Rational(1), Rational(0), Rational(-2)}});
  const ResolutionData res2(SurfaceModel({"S", "T", "E"}, g), {2});
  const RationalVector t = unit(3, 1);
  CHECK(weil_intersect(res2, t, t) == Rational(1));
  CHECK(weil_intersect(res2, t, unit(3, 0)) == Rational(3));
}

TEST_CASE("pullback orthogonality and Cartier compatibility on random exceptional Grams") {
  testing::Generator gen(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, 5));
    const SymmetricPairing ex = gen.negative_definite(k);
    const SurfaceModel y = with_strict(ex, gen.vector(k, 5), Rational(gen.integer(-5, 5)));
    const ResolutionData res(y, tail_indices(k));
    const RationalVector strict = gen.vector(k + 1, 5);
    const RationalVector pb = mumford_pullback(res, strict);
    for (std::size_t j = 1; j <= k; ++j) REQUIRE(y.intersect(pb, unit(k + 1, j)).is_zero());
    // f*D is orthogonal to every E_j, so pulling it back again changes nothing
    REQUIRE(mumford_pullback(res, pb) == pb);
  }
}

TEST_CASE("weil_intersect is symmetric and bilinear") {
  testing::Generator gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, 4));
    const SurfaceModel y = with_strict(gen.negative_definite(k), gen.vector(k, 4), Rational(gen.integer(-4, 4)));
    const ResolutionData res(y, tail_indices(k));
    const RationalVector a = gen.vector(k + 1, 4);
    const RationalVector b = gen.vector(k + 1, 4);
    const RationalVector c = gen.vector(k + 1, 4);
    const Rational s = gen.rational();
    const Rational t = gen.rational();
    REQUIRE(weil_intersect(res, a, b) == weil_intersect(res, b, a));
    REQUIRE(weil_intersect(res, s * a + t * c, b) == s * weil_intersect(res, a, b) + t * weil_intersect(res, c, b));
    REQUIRE(weil_intersect(res, a, s * b + t * c) == s * weil_intersect(res, a, b) + t * weil_intersect(res, a, c));
  }
}

TEST_CASE("numerical_amplitude_check") {
  const SurfaceModel line({"H"}, SymmetricPairing::diagonal({Rational(1)}));
  auto v = numerical_amplitude_check(line, {Rational(1)}, {{Rational(1)}});
  CHECK(v.big);
  CHECK(v.strictly_positive_on_curves);

  const SurfaceModel ruled = ruled_lattice();
  const RationalVector c0{Rational(1), Rational(0)};
  const RationalVector f{Rational(0), Rational(1)};
  v = numerical_amplitude_check(ruled, {Rational(1), Rational(2)}, {c0, f});
  CHECK(v.big);
  CHECK_FALSE(v.strictly_positive_on_curves);
  CHECK(ruled.intersect({Rational(1), Rational(2)}, {Rational(1), Rational(2)}) == Rational(2));

  v = numerical_amplitude_check(ruled, {Rational(1), Rational(3)}, {c0, f});
  CHECK(v.big);
  CHECK(v.strictly_positive_on_curves);

  CHECK_THROWS_AS(numerical_amplitude_check(ruled, {Rational(1)}, {c0}), Error);
}

TEST_CASE("nef_check") {
  const SurfaceModel ruled = ruled_lattice();
  const RationalVector c0{Rational(1), Rational(0)};
  const RationalVector f{Rational(0), Rational(1)};
  CHECK(nef_check(ruled, {Rational(0), Rational(0)}, {c0, f}));
  CHECK(nef_check(ruled, {Rational(1), Rational(2)}, {c0, f}));
  CHECK_FALSE(nef_check(ruled, {Rational(1), Rational(1)}, {c0, f}));
  try {
    nef_check(ruled, {Rational(1), Rational(1)}, {{Rational(1)}});
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("model construction validates lengths") {
  const auto g = SymmetricPairing::diagonal({Rational(1), Rational(-1)});
  CHECK_THROWS_AS(SurfaceModel({"a"}, g), Error);
  CHECK_THROWS_AS(SurfaceModel({"a", "a"}, g), Error);
  CHECK_THROWS_AS(SurfaceModel({"a", "b"}, g, RationalVector{Rational(1)}), Error);
  CHECK_THROWS_AS(SurfaceModel({"a", "b"}, g, std::nullopt, {{"K_F", {Rational(1)}}}), Error);
  const SurfaceModel ok({"a", "b"}, g, RationalVector{Rational(1), Rational(2)}, {{"K_F", {Rational(3), Rational(4)}}});
  CHECK(ok.class_of("K_F") == RationalVector{Rational(3), Rational(4)});
  CHECK(ok.class_of("K_X") == RationalVector{Rational(1), Rational(2)});
  CHECK(ok.class_of("b") == RationalVector{Rational(0), Rational(1)});
  CHECK_THROWS_AS(ok.class_of("nope"), Error);
}
