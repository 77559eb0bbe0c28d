#include "folcan/constructions.hpp"

#include <string>

#include "folcan/error.hpp"

namespace folcan {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidInput, what);
}

void check_identity(const Rational& got, const Rational& want, const std::string& what) {
  if (got != want) {
    throw Error(ErrorCode::InternalInconsistency, what + " failed", got.str() + " != " + want.str());
  }
}

}  // namespace

SurfaceModel ruled_surface_lattice(long k, long q) {
  auto pairing = SymmetricPairing::from_rows({{Rational(-k), Rational(1)}, {Rational(1), Rational(0)}});
  RationalVector kp{Rational(-2), Rational(2 * q - 2 - k)};
  return SurfaceModel({"C0", "F"}, std::move(pairing), kp,
                      {{"C0", {Rational(1), Rational(0)}}, {"F", {Rational(0), Rational(1)}}});
}

SurfaceModel abelian_surface_lattice(long n) {
  const Rational n2(n * n);
  auto pairing = SymmetricPairing::from_rows({{Rational(0), Rational(1), Rational(1)},
                                              {Rational(1), Rational(0), n2},
                                              {Rational(1), n2, Rational(0)}});
  return SurfaceModel({"f1", "f2", "Gamma"}, std::move(pairing), RationalVector(3));
}

Rational double_cover_pair(const SurfaceModel& base, const RationalVector& w, const RationalVector& v) {
  return Rational(2) * base.intersect(w, v);
}

ConstructionReport ruled_double_cover(const RuledCoverInput& in) {
  require(in.k > 0 && in.k % 2 == 0, "k must be a positive even integer");
  require(in.g >= 2, "fiber genus g must be at least 2");
  require(in.q >= 0, "base genus q must be nonnegative");

  const SurfaceModel p = ruled_surface_lattice(in.k, in.q);
  const RationalVector c0 = p.class_of("C0");
  const RationalVector f = p.class_of("F");
  const RationalVector& kp = *p.canonical_class();

  // adjunction on P: F is a rational fibre, C0 is a copy of the base curve
  check_identity(p.intersect(kp + f, f), Rational(-2), "adjunction on F");
  check_identity(p.intersect(kp + c0, c0), Rational(2 * in.q - 2), "adjunction on C0");

  const RationalVector branch = Rational(2 * in.g + 2) * c0 + Rational((2 * in.g + 1) * in.k) * f;
  const RationalVector half_branch = Rational(1, 2) * branch;
  const RationalVector ks_down = kp + half_branch;  // K_S = s^*(K_P + R/2)
  const RationalVector kc_down = Rational(2 * in.q - 2) * f;  // pullback of K_C along P -> C
  const RationalVector kf_down = ks_down - kc_down;  // K_F = K_{S/C}

  ConstructionReport r;
  r.kf2 = double_cover_pair(p, kf_down, kf_down);
  r.kf_dot_kx = double_cover_pair(p, kf_down, ks_down);

  const Rational branch_on_fibre = p.intersect(branch, f);
  r.fiber_genus = riemann_hurwitz(0, 2, branch_on_fibre.to_integer().get_si());

  r.auxiliary = {
      {"R.F", branch_on_fibre},
      {"R^2", p.intersect(branch, branch)},
      {"R.C0", p.intersect(branch, c0)},
      {"K_P^2", p.intersect(kp, kp)},
      {"K_S^2", double_cover_pair(p, ks_down, ks_down)},
      {"K_F.C0_coeff", kf_down[0]},
      {"K_F.F_coeff", kf_down[1]},
  };
  r.assumptions = {"|(2g+1)C1| is basepoint free and contains a smooth member B disjoint from C0",
                   "R = B + C0 is smooth and reduced"};
  return r;
}

ConstructionReport abelian_double_cover(const AbelianCoverInput& in) {
  require(in.d >= 2, "degree d must be at least 2");
  require(in.n >= 0, "multiplication parameter n must be nonnegative");

  const SurfaceModel p = abelian_surface_lattice(in.n);
  const RationalVector f1 = p.class_of("f1");
  const RationalVector f2 = p.class_of("f2");
  const RationalVector gamma = p.class_of("Gamma");

  const RationalVector a = Rational(2 * in.d) * f1 + Rational(2 * in.d) * f2;
  const RationalVector half_a = Rational(1, 2) * a;  // K_P and K_E are trivial

  ConstructionReport r;
  r.kf2 = double_cover_pair(p, half_a, half_a);
  r.kf_dot_kx = r.kf2;
  const Rational a_dot_fibre = p.intersect(a, gamma);
  r.fiber_genus = riemann_hurwitz(1, 2, a_dot_fibre.to_integer().get_si());

  r.auxiliary = {
      {"A^2", p.intersect(a, a)},
      {"A.F", a_dot_fibre},
      {"Gamma^2", p.intersect(gamma, gamma)},
      {"K_S^2", r.kf2},
  };
  r.assumptions = {"A is smooth, reduced and irreducible (Bertini)",
                   "translates of Gamma_n are pairwise disjoint, so Gamma_n^2 = 0"};
  return r;
}

long riemann_hurwitz(long g_base, long degree, long ram_degree) {
  require(g_base >= 0 && degree >= 1 && ram_degree >= 0, "riemann_hurwitz: invalid arguments");
  const long twice = degree * (2 * g_base - 2) + ram_degree + 2;
  if (twice % 2 != 0) {
    throw Error(ErrorCode::NonIntegralGenus, "2g - 2 is odd", std::to_string(twice - 2));
  }
  const long g = twice / 2;
  if (g < 0) throw Error(ErrorCode::NegativeGenus, "genus would be negative", std::to_string(g));
  return g;
}

FibrationIdentities fibration_identities(const Rational& kx2, long g_fiber, long g_base) {
  const Rational t = Rational(g_fiber - 1) * Rational(g_base - 1);
  FibrationIdentities out;
  out.kxc2 = kx2 - Rational(8) * t;
  out.kf_dot_kx = kx2 - Rational(4) * t;
  out.kx2_back = Rational(2) * out.kf_dot_kx - out.kxc2;
  check_identity(out.kx2_back, kx2, "K_X^2 round trip");
  return out;
}

ModelNumerics to_model_numerics(const ConstructionReport& report, long chi) {
  ModelNumerics num{report.kf2, report.kf_dot_kx, chi, Basket{}, std::nullopt};
  if (auto it = report.auxiliary.find("K_S^2"); it != report.auxiliary.end()) num.kx2 = it->second;
  return num;
}

}  // namespace folcan
