#include <doctest.h>

#include <vector>

#include "folcan/error.hpp"
#include "folcan/linalg.hpp"
#include "support/random.hpp"

using namespace folcan;

namespace {

// Characteristic polynomial by Faddeev-LeVerrier, coefficients of
// x^n + c1 x^{n-1} + ... + cn (stored highest degree first).
std::vector<Rational> char_poly(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  RationalMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[k - 1];
    m = next;
    const RationalMatrix am = a * m;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

int sign_changes(const std::vector<Rational>& coeffs) {
  int changes = 0;
  int last = 0;
  for (const auto& x : coeffs) {
    if (x.sign() == 0) continue;
    if (last != 0 && x.sign() != last) ++changes;
    last = x.sign();
  }
  return changes;
}

// Symmetric matrices have real spectra, so Descartes' rule of signs on the
// characteristic polynomial counts positive and negative eigenvalues exactly.
Inertia inertia_oracle(const SymmetricPairing& a) {
  const std::vector<Rational> p = char_poly(a.gram());
  const std::size_t n = p.size() - 1;
  Inertia out;
  std::size_t zero = 0;
  while (zero < n && p[n - zero].is_zero()) ++zero;
  out.zeros = static_cast<int>(zero);
  out.positives = sign_changes(p);
  std::vector<Rational> flipped = p;
  for (std::size_t i = 0; i <= n; ++i) {
    if ((n - i) % 2 == 1) flipped[i] = -flipped[i];
  }
  out.negatives = sign_changes(flipped);
  return out;
}

SymmetricPairing form(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto& row : rows) r.emplace_back(row.begin(), row.end());
  return SymmetricPairing::from_rows(r);
}

}  // namespace

TEST_CASE("solve_linear examples") {
  CHECK(solve_linear(form({{-2}}), {Rational(-1)}) == RationalVector{Rational(1, 2)});
  CHECK(solve_linear(SymmetricPairing(RationalMatrix::identity(3)), {Rational(1), Rational(2), Rational(3)}) ==
        RationalVector{Rational(1), Rational(2), Rational(3)});
  const RationalVector x = solve_linear(form({{-2, 1}, {1, -2}}), {Rational(-1), Rational(0)});
  CHECK(x == RationalVector{Rational(2, 3), Rational(1, 3)});
}

TEST_CASE("solve_linear needs row exchanges and detects singularity") {
  CHECK(solve_linear(form({{0, 1}, {1, 0}}), {Rational(3), Rational(5)}) == RationalVector{Rational(5), Rational(3)});
  try {
    solve_linear(form({{-2, 2}, {2, -2}}), {Rational(1), Rational(0)});
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
  CHECK_THROWS_AS(solve_linear(form({{1, 0}, {0, 1}}), {Rational(1)}), Error);
}

TEST_CASE("solve_linear property: A x = b on random invertible forms") {
  testing::Generator gen(101);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    const SymmetricPairing a = gen.symmetric(n);
    if (determinant(a.gram()).is_zero()) continue;
    const RationalVector b = gen.vector(n);
    REQUIRE(a.gram().apply(solve_linear(a, b)) == b);
    ++solved;
  }
  CHECK(solved > 250);
}

TEST_CASE("signature examples") {
  CHECK(signature(form({{-2, 1}, {1, -2}})) == Inertia{0, 2, 0});
  CHECK(signature(form({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  CHECK(signature(form({{0, 0}, {0, 0}})) == Inertia{0, 0, 2});
  CHECK(signature(SymmetricPairing()) == Inertia{0, 0, 0});
  // zero diagonal with a nonzero off-diagonal deep in the block
  CHECK(signature(form({{1, 0, 0}, {0, 0, 3}, {0, 3, 0}})) == Inertia{2, 1, 0});
}

TEST_CASE("signature agrees with the Descartes oracle") {
  testing::Generator gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    SymmetricPairing a = gen.symmetric(n, 4);
    if (trial % 3 == 0) {
      // force degeneracy: low-rank B^T D B
      const RationalMatrix b = gen.integer_matrix(1 + n / 2, n, 3);
      RationalMatrix d(b.rows(), b.rows());
      for (std::size_t i = 0; i < b.rows(); ++i) d(i, i) = Rational(gen.integer(0, 1) ? 1 : -1);
      a = SymmetricPairing(b.transpose() * d * b);
    }
    const Inertia got = signature(a);
    REQUIRE(got.positives + got.negatives + got.zeros == static_cast<int>(n));
    REQUIRE(got == inertia_oracle(a));
  }
}

TEST_CASE("signature is a congruence invariant") {
  testing::Generator gen(23);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const SymmetricPairing a = gen.symmetric(n, 5);
    const RationalMatrix p = gen.integer_matrix(n, n, 3);
    if (determinant(p).is_zero()) continue;
    REQUIRE(signature(a) == signature(a.congruent(p)));
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite(form({{-2, 1}, {1, -2}})));
  CHECK_FALSE(is_negative_definite(form({{-2, 2}, {2, -2}})));
  CHECK(is_negative_definite(SymmetricPairing()));
  testing::Generator gen(5);
  for (int i = 0; i < 50; ++i) {
    CHECK(is_negative_definite(gen.negative_definite(static_cast<std::size_t>(gen.integer(1, 6)))));
  }
}

TEST_CASE("hodge_check examples") {
  const auto hyperbolic = form({{0, 1}, {1, 0}});
  auto v = hodge_check(hyperbolic, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}, 1, 1);
  CHECK(v.hypothesis_met);
  CHECK(v.inequality_holds);
  CHECK_FALSE(v.equality);

  const auto lorentz = SymmetricPairing::diagonal({Rational(1), Rational(-1)});
  v = hodge_check(lorentz, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}, 1, 0);
  CHECK(v.hypothesis_met);
  CHECK(v.inequality_holds);
  CHECK(v.equality);

  const auto negative = SymmetricPairing::diagonal({Rational(-1), Rational(-1)});
  testing::Generator gen(3);
  for (int i = 0; i < 20; ++i) {
    CHECK_FALSE(hodge_check(negative, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}, gen.rational(),
                            gen.rational())
                    .hypothesis_met);
  }
}

TEST_CASE("symmetry is enforced") {
  CHECK_THROWS_AS(form({{1, 2}, {3, 4}}), Error);
  CHECK_THROWS_AS(SymmetricPairing(RationalMatrix(2, 3)), Error);
}
